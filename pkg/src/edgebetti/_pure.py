"""Pure-Python versions of the hot kernels in ``_kernels.pyx``.

Same call signatures and results as the compiled module; also the only
route for exact rational arithmetic (``p == 0``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from ._linalg import bareiss_rank, columns_to_dense, rank_mod_p_dense, rank_mod_p_sparse


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _local_graph(cnbrs: Sequence[int], mask: int) -> tuple[int, ...]:
    """Neighbour bitsets of the subgraph on ``mask``, relabelled to 0..j-1."""
    verts = list(_bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for u in _bits(cnbrs[v] & mask):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def flag_profile(nb: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Reduced homology of the flag complex of ``nb`` in degrees 0..j-2.

    ``nb`` is a tuple of neighbour bitsets on vertices 0..j-1; ``p == 0``
    selects exact rational ranks.  Cached on the exact adjacency, so
    repeated induced subgraphs across many parent graphs cost one call.
    """
    j = len(nb)
    full = (1 << j) - 1
    for v in range(j):
        if nb[v] | (1 << v) == full:
            return (0,) * (j - 1)

    layers: list[list[int]] = []

    def extend(clique: int, size: int, cand: int):
        if len(layers) < size:
            layers.append([])
        layers[size - 1].append(clique)
        while cand:
            low = cand & -cand
            cand ^= low
            extend(clique | low, size + 1, cand & nb[low.bit_length() - 1])

    for v in range(j):
        extend(1 << v, 1, nb[v] & ~((2 << v) - 1))

    top = len(layers) - 1
    f = [len(layer) for layer in layers]
    ranks = [0] * (top + 2)
    ranks[0] = 1
    cleared: set[int] = set()
    for d in range(top, 0, -1):
        index = {m: i for i, m in enumerate(layers[d - 1])}
        columns = []
        for face in layers[d]:
            col = []
            for k, v in enumerate(_bits(face)):
                col.append((index[face ^ (1 << v)], -1 if k & 1 else 1))
            columns.append(col)
        if p:
            ranks[d], cleared = rank_mod_p_sparse(columns, p, cleared)
        else:
            ranks[d] = bareiss_rank(columns_to_dense(f[d - 1], columns))
    ranks.extend([0] * j)
    f.extend([0] * j)
    return tuple(f[d] - ranks[d] - ranks[d + 1] for d in range(j - 1))


def subset_profile(cnbrs: Sequence[int], mask: int, p: int) -> Optional[tuple[int, ...]]:
    return flag_profile(_local_graph(cnbrs, mask), p)


def hochster_scan(cnbrs: Sequence[int], n: int, start: int, stop: int, p: int):
    """Accumulate ``table[i][j]`` over vertex subsets with masks in [start, stop).

    Returns ``(table, failed)``; ``failed`` is always empty here and exists
    to mirror the compiled kernel, which hands oversized subsets back.
    """
    cnbrs = [int(x) for x in cnbrs]
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for mask in range(max(start, 1), stop):
        j = mask.bit_count()
        for d, h in enumerate(flag_profile(_local_graph(cnbrs, mask), p)):
            if h:
                table[j - d - 1][j] += h
    return table, []


def rank_mod_p(rows, p: int) -> int:
    return rank_mod_p_dense([list(map(int, r)) for r in rows], p)
