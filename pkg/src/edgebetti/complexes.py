"""Simplicial complexes on vertices 0..n-1, flag closures and retriangulations."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .graphs import Graph, build_graph, complement

Face = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces grouped by dimension: ``faces[d]`` is the sorted list of d-faces.

    ``cap`` records the ``max_dim`` truncation a clique complex was built
    with, or ``None`` for a complete complex.
    """

    n: int
    faces: tuple[tuple[Face, ...], ...]
    cap: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        _audit(self)

    @property
    def top_dim(self) -> int:
        return len(self.faces) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fs) for fs in self.faces)

    def face_set(self) -> set[Face]:
        return {f for fs in self.faces for f in fs}

    def facets(self) -> list[Face]:
        """Maximal faces, sorted by dimension then lexicographically."""
        out = []
        for d, fs in enumerate(self.faces):
            above = set()
            if d + 1 < len(self.faces):
                for f in self.faces[d + 1]:
                    for k in range(len(f)):
                        above.add(f[:k] + f[k + 1:])
            out.extend(f for f in fs if f not in above)
        return out

    def skeleton_graph(self) -> Graph:
        """The 1-skeleton as a :class:`Graph`."""
        edges = self.faces[1] if len(self.faces) > 1 else ()
        return build_graph(self.n, edges)

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, f_vector={self.f_vector})"


def _audit(c: SimplicialComplex):
    faces = c.faces
    if faces and len(faces[0]) != c.n:
        raise ValueError("every vertex must be listed as a 0-face")
    if not faces and c.n:
        raise ValueError("every vertex must be listed as a 0-face")
    if faces and not faces[-1]:
        raise ValueError("top dimension has no faces")
    for d, fs in enumerate(faces):
        prev = None
        for f in fs:
            if len(f) != d + 1:
                raise ValueError(f"face {f} stored in dimension {d}")
            if any(f[k] >= f[k + 1] for k in range(d)) or not (0 <= f[0] and f[-1] < c.n):
                raise ValueError(f"face {f} is not a strictly increasing in-range tuple")
            if prev is not None and f <= prev:
                raise ValueError(f"faces of dimension {d} not sorted or duplicated")
            prev = f
    for d in range(1, len(faces)):
        lower = set(faces[d - 1])
        for f in faces[d]:
            for k in range(d + 1):
                if f[:k] + f[k + 1:] not in lower:
                    raise ValueError(f"face {f} is missing its boundary face")


def from_faces(n: int, faces: Iterable[Sequence[int]], cap: Optional[int] = None) -> SimplicialComplex:
    """Complex from an explicit, already downward closed, face list."""
    by_dim: dict[int, set[Face]] = {}
    for f in faces:
        t = tuple(sorted(f))
        if t:
            by_dim.setdefault(len(t) - 1, set()).add(t)
    top = max(by_dim, default=-1)
    return SimplicialComplex(n, tuple(tuple(sorted(by_dim.get(d, ()))) for d in range(top + 1)), cap)


def from_facets(n: int, facets: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Downward closure of ``facets``; isolated vertices must appear as singletons."""
    faces: set[Face] = set()
    for f in facets:
        t = tuple(sorted(set(f)))
        for r in range(1, len(t) + 1):
            faces.update(combinations(t, r))
    return from_faces(n, faces)


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex(0, ())


def clique_complex(g: Graph, max_dim: Optional[int] = None) -> SimplicialComplex:
    """Flag complex of ``g``; faces above ``max_dim`` are omitted."""
    if max_dim is not None and max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    limit = g.n if max_dim is None else max_dim + 1
    nbrs = g.nbrs
    by_size: list[list[Face]] = [[] for _ in range(min(limit, g.n))]

    def extend(clique: Face, cand: int):
        by_size[len(clique) - 1].append(clique)
        if len(clique) == limit:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(clique + (v,), cand & nbrs[v])

    for v in range(g.n):
        extend((v,), nbrs[v] & ~((2 << v) - 1))
    while by_size and not by_size[-1]:
        by_size.pop()
    # depth-first ordered extension already emits each size class in lex order
    return SimplicialComplex(g.n, tuple(tuple(fs) for fs in by_size), max_dim)


def stanley_reisner_complex(g: Graph, max_dim: Optional[int] = None) -> SimplicialComplex:
    """Stanley-Reisner complex of the edge ideal of ``g``."""
    return clique_complex(complement(g), max_dim)


def induced_subcomplex(c: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    ws = sorted(set(int(v) for v in w))
    for v in ws:
        if not 0 <= v < c.n:
            raise ValueError(f"vertex {v} out of range for n={c.n}")
    pos = {v: i for i, v in enumerate(ws)}
    kept = []
    for fs in c.faces:
        layer = tuple(tuple(pos[v] for v in f) for f in fs if all(v in pos for v in f))
        if not layer:
            break
        kept.append(layer)
    return SimplicialComplex(len(ws), tuple(kept), c.cap)


def join_complex(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of ``a`` and ``b``; vertices of ``b`` are shifted by ``a.n``."""
    fa = [()] + [f for fs in a.faces for f in fs]
    fb = [()] + [tuple(v + a.n for v in f) for fs in b.faces for f in fs]
    return from_faces(a.n + b.n, (s + t for s in fa for t in fb))


def cross_polytope_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional cross polytope on vertex pairs (2i, 2i+1)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    choices = [(None, 2 * i, 2 * i + 1) for i in range(k)]
    faces = (tuple(v for v in pick if v is not None) for pick in product(*choices))
    return from_faces(2 * k, faces)


def is_flag(c: SimplicialComplex) -> bool:
    return clique_complex(c.skeleton_graph(), c.cap) == c


def sd4(c: SimplicialComplex) -> SimplicialComplex:
    """Flag retriangulation of a pure 2-complex, one 10-triangle patch per facet.

    Vertex layout of the result: original vertices first, then one midpoint
    per edge (sorted edge order), then three interior vertices per facet
    (sorted facet order).  Within a facet ``u < v < w`` the interior
    vertices ``a, b, c`` sit next to ``u, v, w`` respectively.
    """
    if c.top_dim != 2:
        raise ValueError("sd4 needs a pure 2-dimensional complex")
    tris = c.faces[2]
    in_tri = {}
    for t in tris:
        for e in combinations(t, 2):
            in_tri[e] = in_tri.get(e, 0) + 1
    covered = {v for t in tris for v in t}
    if len(covered) != c.n or len(in_tri) != len(c.faces[1]):
        raise ValueError("sd4 needs every vertex and edge to lie in a triangle")
    if any(k > 2 for k in in_tri.values()):
        raise ValueError("an edge lies in more than two triangles")

    mid = {e: c.n + i for i, e in enumerate(c.faces[1])}
    base = c.n + len(mid)
    edges = []
    for idx, (u, v, w) in enumerate(tris):
        a, b, cc = base + 3 * idx, base + 3 * idx + 1, base + 3 * idx + 2
        muv, muw, mvw = mid[(u, v)], mid[(u, w)], mid[(v, w)]
        edges += [(u, muv), (muv, v), (v, mvw), (mvw, w), (w, muw), (muw, u)]
        edges += [(a, b), (b, cc), (a, cc)]
        edges += [(u, a), (v, b), (w, cc)]
        # each interior vertex sees the two midpoints on its corner's edges
        edges += [(a, muv), (a, muw), (b, muv), (b, mvw), (cc, muw), (cc, mvw)]
    return clique_complex(build_graph(base + 3 * len(tris), edges))


def boundary_of_simplex(k: int) -> SimplicialComplex:
    """Boundary of the k-simplex on k+1 vertices (a (k-1)-sphere)."""
    return from_facets(k + 1, combinations(range(k + 1), k))


def connected_components(c: SimplicialComplex) -> int:
    g = c.skeleton_graph()
    seen = 0
    count = 0
    for v in range(c.n):
        if seen >> v & 1:
            continue
        count += 1
        stack = 1 << v
        while stack:
            low = stack & -stack
            u = low.bit_length() - 1
            stack ^= low
            if seen >> u & 1:
                continue
            seen |= low
            stack |= g.nbrs[u] & ~seen
    return count


__all__ = [
    "SimplicialComplex",
    "boundary_of_simplex",
    "clique_complex",
    "connected_components",
    "cross_polytope_boundary",
    "empty_complex",
    "from_faces",
    "from_facets",
    "induced_subcomplex",
    "is_flag",
    "join_complex",
    "sd4",
    "stanley_reisner_complex",
]
