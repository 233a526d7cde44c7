"""Time the compiled subset scan against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--max-n 16]

Both kernels run the full Hochster loop over the same graphs and their
tables are compared before timings are reported.  The pure kernel's
per-subgraph cache is cleared before every run so it starts cold.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from edgebetti import _pure
from edgebetti.constructions import anticycle_graph, drum_graph, icosahedron_graph
from edgebetti.graphs import complement
from edgebetti.verify import random_c4_free_graph, random_graph

try:
    from edgebetti import _kernels
except ImportError:  # pragma: no cover
    _kernels = None

P = 32003


def workloads(max_n: int):
    rng = random.Random(1)
    cases = [
        ("anticycle(10)", anticycle_graph(10).graph),
        ("icosahedron", icosahedron_graph().graph),
        ("drum(6)", drum_graph(6).graph),
        ("drum(7)", drum_graph(7).graph),
        ("ER(14, 0.5)", random_graph(rng, 14, 0.5)),
        ("C4-free complement, 16", complement(random_c4_free_graph(rng, 16))),
    ]
    return [(name, g) for name, g in cases if g.n <= max_n]


def run_pure(g):
    _pure.flag_profile.cache_clear()
    cn = complement(g).nbrs
    table, _ = _pure.hochster_scan(cn, g.n, 1, 1 << g.n, P)
    return np.asarray(table, dtype=np.int64)


def run_compiled(g):
    cn = np.array(complement(g).nbrs, dtype=np.uint64)
    table, failed = _kernels.hochster_scan(cn, g.n, 1, 1 << g.n, P)
    assert not failed
    return table


def best_of(fn, g, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(g)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=16)
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'graph':<26}{'n':>4}{'subsets':>10}{'pure s':>10}{'compiled s':>12}{'speedup':>9}")
    for name, g in workloads(args.max_n):
        tp, a = best_of(run_pure, g, args.repeat)
        tc, b = best_of(run_compiled, g, args.repeat)
        if not np.array_equal(a, b):
            raise SystemExit(f"kernels disagree on {name}")
        print(f"{name:<26}{g.n:>4}{1 << g.n:>10}{tp:>10.3f}{tc:>12.4f}{tp / tc:>8.0f}x")


if __name__ == "__main__":
    main()
