"""Pure-Python rank routines over GF(p) and over the rationals."""

from __future__ import annotations

from typing import Iterable, Sequence


def rank_mod_p_sparse(
    columns: Sequence[Iterable[tuple[int, int]]],
    p: int,
    skip: frozenset[int] | set[int] = frozenset(),
) -> tuple[int, set[int]]:
    """Rank of a column-sparse matrix over GF(p) by left-to-right column reduction.

    ``columns[j]`` lists ``(row, coefficient)`` pairs.  Columns whose index is
    in ``skip`` are known to reduce to zero and are not touched.  Returns the
    rank and the set of pivot rows (lowest nonzero row of each reduced column).
    """
    pivots: dict[int, dict[int, int]] = {}
    for j, col in enumerate(columns):
        if j in skip:
            continue
        c = {}
        for r, v in col:
            v %= p
            if v:
                c[r] = v
        while c:
            low = max(c)
            other = pivots.get(low)
            if other is None:
                inv = pow(c[low], p - 2, p)
                pivots[low] = {r: v * inv % p for r, v in c.items()}
                break
            f = c[low]
            for r, v in other.items():
                nv = (c.get(r, 0) - f * v) % p
                if nv:
                    c[r] = nv
                else:
                    c.pop(r, None)
    return len(pivots), set(pivots)


def rank_mod_p_dense(rows: Sequence[Sequence[int]], p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, m) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        inv = pow(pr[c], p - 2, p)
        for k in range(c, ncols):
            pr[k] = pr[k] * inv % p
        for i in range(rank + 1, m):
            f = a[i][c]
            if f:
                ai = a[i]
                for k in range(c, ncols):
                    ai[k] = (ai[k] - f * pr[k]) % p
        rank += 1
        if rank == m:
            break
    return rank


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, m) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        pc = pr[c]
        for i in range(rank + 1, m):
            ai = a[i]
            aic = ai[c]
            for k in range(c + 1, ncols):
                ai[k] = (pc * ai[k] - aic * pr[k]) // prev
            ai[c] = 0
        prev = pc
        rank += 1
        if rank == m:
            break
    return rank


def columns_to_dense(n_rows: int, columns: Sequence[Iterable[tuple[int, int]]]) -> list[list[int]]:
    a = [[0] * len(columns) for _ in range(n_rows)]
    for j, col in enumerate(columns):
        for r, v in col:
            a[r][j] = v
    return a
