"""Reduced simplicial homology dimensions over GF(p) or the rationals."""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from ._linalg import bareiss_rank, columns_to_dense, rank_mod_p_sparse
from .complexes import SimplicialComplex

DEFAULT_MODULUS = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``modulus == 0`` is exact rationals, else GF(modulus)."""

    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        m = self.modulus
        if m == 0:
            return
        if m == 2 or not _is_prime(m):
            raise ValueError(f"field modulus must be 0 or an odd prime, got {m}")
        if m >= 1 << 31:
            raise ValueError("field modulus must be below 2**31")

    @property
    def exact(self) -> bool:
        return self.modulus == 0

    def __str__(self):
        return "QQ" if self.exact else f"GF({self.modulus})"


RATIONALS = FieldSpec(0)
DEFAULT_FIELD = FieldSpec()


@dataclass(frozen=True)
class BoundaryMatrix:
    """Column-sparse matrix of a boundary map; ``columns[j]`` holds (row, coefficient)."""

    n_rows: int
    n_cols: int
    columns: tuple[tuple[tuple[int, int], ...], ...]

    def to_dense(self) -> list[list[int]]:
        return columns_to_dense(self.n_rows, self.columns)


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[k]`` is the dimension of reduced homology in degree ``k - 1``."""

    dims: tuple[int, ...]

    def at(self, degree: int) -> int:
        k = degree + 1
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def nonzero(self) -> dict[int, int]:
        return {k - 1: h for k, h in enumerate(self.dims) if h}

    @property
    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic, sum of (-1)^d dim H_d."""
        return sum((-1) ** (k - 1) * h for k, h in enumerate(self.dims))


def boundary_matrix(c: SimplicialComplex, d: int) -> BoundaryMatrix:
    """Matrix of the d-th boundary map in sorted face bases.

    ``d == 0`` maps every vertex to the augmentation generator; ``d`` may be
    one past the top dimension, giving a matrix with no columns.
    """
    if not 0 <= d <= c.top_dim + 1:
        raise ValueError(f"boundary degree {d} out of range 0..{c.top_dim + 1}")
    if d == 0:
        cols = tuple(((0, 1),) for _ in range(c.n))
        return BoundaryMatrix(1, c.n, cols)
    lower = c.faces[d - 1]
    upper = c.faces[d] if d <= c.top_dim else ()
    index = {f: i for i, f in enumerate(lower)}
    cols = tuple(
        tuple((index[f[:k] + f[k + 1:]], -1 if k & 1 else 1) for k in range(d + 1))
        for f in upper
    )
    return BoundaryMatrix(len(lower), len(cols), cols)


def rank(m: BoundaryMatrix, field: FieldSpec = DEFAULT_FIELD) -> int:
    if m.n_rows == 0 or m.n_cols == 0:
        return 0
    if field.exact:
        return bareiss_rank(m.to_dense())
    if _backend.COMPILED and m.n_cols < _backend.DENSE_COLUMN_LIMIT:
        return _backend.kernels.rank_mod_p(m.to_dense(), field.modulus)
    return rank_mod_p_sparse(m.columns, field.modulus)[0]


def reduced_homology_dims(c: SimplicialComplex, field: FieldSpec = DEFAULT_FIELD) -> HomologyProfile:
    """Reduced Betti numbers of ``c`` in degrees -1..top_dim.

    Ranks are taken from the top dimension down so that, over GF(p), the
    pivot rows of each reduced boundary map let the next map skip columns
    that are already known to be cycles.
    """
    top = c.top_dim
    if top < 0:
        return HomologyProfile((1,))
    ranks = [0] * (top + 2)
    cleared: set[int] = set()
    for d in range(top, 0, -1):
        m = boundary_matrix(c, d)
        if field.exact or (_backend.COMPILED and m.n_cols < _backend.DENSE_COLUMN_LIMIT):
            ranks[d] = rank(m, field)
            cleared = set()
        else:
            ranks[d], cleared = rank_mod_p_sparse(m.columns, field.modulus, cleared)
    ranks[0] = 1
    f = (1,) + c.f_vector
    # f[k] counts faces of dimension k - 1; ranks[d] is the rank of the d-th boundary map
    dims = [0] * (top + 2)
    dims[0] = f[0] - ranks[0]
    for d in range(0, top + 1):
        dims[d + 1] = f[d + 1] - ranks[d] - ranks[d + 1]
    return HomologyProfile(tuple(dims))
