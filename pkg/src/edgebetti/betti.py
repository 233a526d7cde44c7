"""Graded Betti tables of edge ideals from Hochster's formula, and what is read off them.

Tables use the quotient-ring convention throughout: ``beta[0, 0] == 1`` and
``beta[i, j]`` for ``i >= 1`` sums the reduced homology
``H_{j-i-1}`` of the Stanley-Reisner complex restricted to ``j`` vertices.
Row ``r`` of the displayed diagram holds the entries with ``j - i == r``.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _backend, _pure
from .graphs import Graph, complement, mask_of
from .homology import DEFAULT_FIELD, FieldSpec

DEFAULT_MAX_N = 24
THREADS_ENV = "EDGEBETTI_THREADS"


class CapExceeded(ValueError):
    """Raised when a graph is too large for the exhaustive subset loop."""


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- tables ------------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Sparse graded Betti numbers ``entries[(i, j)] > 0`` of R/I_G."""

    n: int
    entries: dict = field(hash=False)
    modulus: int = DEFAULT_FIELD.modulus

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if v < 0:
                raise ValueError(f"negative Betti number at ({i}, {j})")
            if v:
                clean[(int(i), int(j))] = int(v)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    @property
    def max_index(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def max_row(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def totals(self) -> list[int]:
        out = [0] * (self.max_index + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def row(self, r: int) -> list[int]:
        """Entries with ``j - i == r`` indexed by ``i``."""
        return [self.get(i, i + r) for i in range(self.max_index + 1)]

    def to_m2(self) -> str:
        """Macaulay2-style diagram: columns are ``i``, rows are ``j - i``."""
        cols = self.max_index + 1
        header = [str(i) for i in range(cols)]
        totals = [str(v) for v in self.totals()]
        body = [[str(v) if v else "." for v in self.row(r)] for r in range(self.max_row + 1)]
        widths = [max(len(header[c]), len(totals[c]), *(len(b[c]) for b in body)) for c in range(cols)]
        labels = ["", "total:"] + [f"{r}:" for r in range(len(body))]
        lw = max(len(s) for s in labels)
        lines = []
        for label, cells in zip(labels, [header, totals] + body):
            lines.append(" ".join([label.rjust(lw)] + [s.rjust(w) for s, w in zip(cells, widths)]).rstrip())
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "field": self.modulus,
                "entries": [[i, j, v] for (i, j), v in self.entries.items()],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        obj = json.loads(text)
        return cls(obj["n"], {(i, j): v for i, j, v in obj["entries"]}, obj["field"])

    def to_csv(self) -> str:
        rows = ["i,j,value"] + [f"{i},{j},{v}" for (i, j), v in self.entries.items()]
        return "\n".join(rows) + "\n"


def trivial_table(n: int = 0, modulus: int = DEFAULT_FIELD.modulus) -> BettiTable:
    return BettiTable(n, {(0, 0): 1}, modulus)


# -- Hochster's formula --------------------------------------------------------


def multigraded_betti(g: Graph, w: Iterable[int], field: FieldSpec = DEFAULT_FIELD) -> list[int]:
    """Betti numbers in the squarefree multidegree supported on ``w``, indexed by ``i``."""
    ws = sorted(set(int(v) for v in w))
    if not ws:
        raise ValueError("multidegree support must be nonempty")
    for v in ws:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    mask = mask_of(ws)
    cn = complement(g).nbrs
    dims = None
    if _backend.COMPILED and not field.exact and g.n <= 64:
        dims = _backend.kernels.subset_profile(np.array(cn, dtype=np.uint64), mask, field.modulus)
    if dims is None:
        dims = _pure.subset_profile(cn, mask, field.modulus)
    j = len(ws)
    out = [0] * (j + 1)
    for d, h in enumerate(dims):
        out[j - d - 1] = h
    return out


def hochster_table(
    g: Graph,
    field: FieldSpec = DEFAULT_FIELD,
    max_n: int = DEFAULT_MAX_N,
    threads: Optional[int] = None,
) -> BettiTable:
    """Graded Betti table of R/I_G, summing Hochster's formula over all vertex subsets.

    Over GF(p) with the compiled kernels the 2^n subsets are split into
    contiguous mask ranges scanned on a thread pool; the merge is an
    integer sum, so the result does not depend on the thread count.
    """
    if g.n > max_n:
        raise CapExceeded(
            f"graph has {g.n} vertices, above the Hochster cap of {max_n}; "
            f"raise it with --max-n (2^{g.n} subsets)"
        )
    n = g.n
    cn = complement(g).nbrs
    stop = 1 << n
    acc = np.zeros((n + 1, n + 1), dtype=np.int64)
    if _backend.COMPILED and not field.exact and n <= 64:
        kern = _backend.kernels
        arr = np.array(cn, dtype=np.uint64)
        threads = threads or default_threads()
        pieces = max(1, min(threads * 4, stop >> 8)) if threads > 1 else 1
        bounds = [stop * k // pieces for k in range(pieces + 1)]
        jobs = list(zip(bounds[:-1], bounds[1:]))

        def run(span):
            return kern.hochster_scan(arr, n, span[0], span[1], field.modulus)

        if len(jobs) == 1:
            results = [run(jobs[0])]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(run, jobs))
        for table, failed in results:
            acc += np.asarray(table, dtype=np.int64)
            for mask in failed:
                j = mask.bit_count()
                for d, h in enumerate(_pure.subset_profile(cn, mask, field.modulus)):
                    acc[j - d - 1, j] += h
    else:
        table, _ = _pure.hochster_scan(cn, n, 1, stop, field.modulus)
        acc += np.asarray(table, dtype=object).astype(np.int64)
    entries = {(i, j): int(acc[i, j]) for i in range(1, n + 1) for j in range(n + 1) if acc[i, j]}
    entries[(0, 0)] = 1
    return BettiTable(n, entries, field.modulus)


def regularity_and_pd(t: BettiTable) -> tuple[int, int]:
    """``(reg(I_G), pd(I_G))``; both 0 for the zero ideal."""
    ideal = [(i, j) for i, j in t.entries if i >= 1]
    if not ideal:
        return 0, 0
    reg = max(j - i for i, j in ideal) + 1
    pd = max(i for i, _ in ideal) - 1
    return reg, pd


# -- jump sequences --------------------------------------------------------------


def _fmt(k: int, entries: Sequence[int]) -> str:
    return f"[{k};{','.join(map(str, entries)) if entries else '∅'}]"


@dataclass(frozen=True)
class JumpSequence:
    """``[k; a_1, ..., a_{k-1}]``: row ``r + 1`` of the diagram starts at column ``a_r + 1``."""

    k: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        if self.k < 1:
            raise ValueError("jump sequence length parameter must be positive")
        if len(self.entries) != self.k - 1:
            raise ValueError(f"[{self.k}; ...] needs {self.k - 1} entries, got {len(self.entries)}")
        if self.entries and self.entries[0] < 1:
            raise ValueError("jump sequence entries must be positive")
        if any(b <= a for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"jump sequence {_fmt(self.k, self.entries)} is not strictly increasing")

    def __str__(self):
        return _fmt(self.k, self.entries)

    def relative(self) -> "RelativeJumpSequence":
        return relative_jump_sequence(self)


@dataclass(frozen=True)
class RelativeJumpSequence:
    """``[k; r_1, ..., r_{k-1}]`` with ``r_1 = a_1`` and ``r_i = a_i - a_{i-1}``."""

    k: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(r) for r in self.entries))
        if len(self.entries) != self.k - 1:
            raise ValueError(f"[{self.k}; ...] needs {self.k - 1} entries")
        if any(r < 1 for r in self.entries):
            raise ValueError("relative jumps must be at least 1")

    def __str__(self):
        return _fmt(self.k, self.entries)

    def to_jump(self) -> JumpSequence:
        acc, out = 0, []
        for r in self.entries:
            acc += r
            out.append(acc)
        return JumpSequence(self.k, tuple(out))


def jump_sequence(t: BettiTable) -> JumpSequence:
    """Jump sequence of the ideal; a linear resolution (or the zero ideal) gives ``[1;∅]``."""
    ideal = [(i, j) for i, j in t.entries if i >= 1]
    if not ideal:
        return JumpSequence(1, ())
    k = max(j - i for i, j in ideal)
    entries = []
    for r in range(1, k):
        starts = [i for i, j in ideal if j - i == r + 1]
        if not starts:
            raise ValueError(f"row {r + 1} of the Betti diagram is empty below a nonempty row")
        entries.append(min(starts) - 1)
    return JumpSequence(k, tuple(entries))


def relative_jump_sequence(a: JumpSequence) -> RelativeJumpSequence:
    prev = 0
    out = []
    for x in a.entries:
        out.append(x - prev)
        prev = x
    return RelativeJumpSequence(a.k, tuple(out))


def corner_sum(a: JumpSequence, b: JumpSequence) -> JumpSequence:
    """Elementwise minimum where both sequences have an entry; the longer one's tail survives."""
    if a.k > b.k:
        a, b = b, a
    head = [min(x, y) for x, y in zip(a.entries, b.entries)]
    return JumpSequence(b.k, tuple(head) + b.entries[len(head):])


# -- table arithmetic ----------------------------------------------------------


def table_product(ts: Sequence[BettiTable]) -> BettiTable:
    """Graded convolution of tables: the table of a disjoint union of graphs."""
    if not ts:
        raise ValueError("need at least one table")
    acc = {(0, 0): 1}
    n = 0
    for t in ts:
        nxt: dict[tuple[int, int], int] = {}
        for (i1, j1), v1 in acc.items():
            for (i2, j2), v2 in t.entries.items():
                key = (i1 + i2, j1 + j2)
                nxt[key] = nxt.get(key, 0) + v1 * v2
        acc = nxt
        n += t.n
    return BettiTable(n, acc, ts[0].modulus)


def sum_formula_table(tg: BettiTable, th: BettiTable) -> BettiTable:
    """Table of the join graph of G and H (Stanley-Reisner complex = disjoint union),
    computed only from the tables of G (on n vertices) and H (on m vertices)."""
    n, m = tg.n, th.n
    bg, bh = tg.get, th.get
    out = {(0, 0): 1}
    for i in range(1, n + m + 1):
        # linear strand, with the reduced-H_0 correction for split supports
        v = bg(i, i + 1) + bh(i, i + 1)
        for j in range(1, i + 1):
            v += comb(m, i - j + 1) * bg(j - 1, j) + comb(n, j) * bh(i - j, i - j + 1)
        v += comb(m + n, i + 1) - comb(m, i + 1) - comb(n, i + 1)
        out[(i, i + 1)] = v
        for s in range(2, n + m - i + 1):
            v = bg(i, i + s) + bh(i, i + s)
            for j in range(1, i + s):
                v += comb(m, i - j + s) * bg(j - s, j) + comb(n, j) * bh(i - j, i - j + s)
            out[(i, i + s)] = v
    return BettiTable(n + m, out, tg.modulus)
