from __future__ import annotations

from itertools import combinations

import hypothesis.strategies as st
from hypothesis import settings

from edgebetti.graphs import Graph, build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


def brute_induced_matching(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for r in range(1, len(edges) + 1):
        found = False
        for pick in combinations(edges, r):
            verts = [v for e in pick for v in e]
            if len(set(verts)) < 2 * r:
                continue
            induced = {(u, v) for u, v in edges if u in verts and v in verts}
            if induced == set(pick):
                found = True
                break
        if not found:
            break
        best = r
    return best


def brute_matching(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for r in range(1, g.n // 2 + 1):
        if any(len({v for e in pick for v in e}) == 2 * r for pick in combinations(edges, r)):
            best = r
        else:
            break
    return best


def brute_min_induced_cycle(g: Graph, floor: int = 4):
    for size in range(floor, g.n + 1):
        for s in combinations(range(g.n), size):
            degs = [sum(g.has_edge(u, v) for v in s) for u in s]
            if all(d == 2 for d in degs):
                # 2-regular; connected iff a walk from s[0] covers all of s
                seen, stack = {s[0]}, [s[0]]
                while stack:
                    u = stack.pop()
                    for v in s:
                        if g.has_edge(u, v) and v not in seen:
                            seen.add(v)
                            stack.append(v)
                if len(seen) == size:
                    return size
    return None
