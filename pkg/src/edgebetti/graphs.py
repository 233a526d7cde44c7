"""Simple graphs on vertices 0..n-1 stored as per-vertex neighbour bitsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


def _bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``nbrs[v]`` is an integer bitset of the neighbours of ``v``.  Use
    :func:`build_graph` to construct from an edge list.
    """

    n: int
    nbrs: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.nbrs) != self.n:
            raise ValueError("need one neighbour bitset per vertex")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.nbrs):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(nb):
                if not self.nbrs[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbrs[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.nbrs[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.nbrs[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u, nb in enumerate(self.nbrs):
            for v in _bits(nb >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.nbrs) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicates collapse."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    nbrs = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        nbrs[u] |= 1 << v
        nbrs[v] |= 1 << u
    return Graph(n, tuple(nbrs))


def edgeless_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full ^ nb ^ (1 << v) for v, nb in enumerate(g.nbrs)))


def _check_subset(g: Graph, w: Iterable[int]) -> list[int]:
    ws = sorted(set(int(v) for v in w))
    for v in ws:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return ws


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    """Subgraph induced on ``w``, relabelled 0..|w|-1 in ascending order."""
    ws = _check_subset(g, w)
    pos = {v: i for i, v in enumerate(ws)}
    wmask = mask_of(ws)
    nbrs = []
    for v in ws:
        nbrs.append(mask_of(pos[u] for u in _bits(g.nbrs[v] & wmask)))
    return Graph(len(ws), tuple(nbrs))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.nbrs + tuple(nb << shift for nb in h.nbrs))


def join_graph(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex blocks."""
    gmask = g.vertex_mask
    hmask = h.vertex_mask << g.n
    nbrs = tuple(nb | hmask for nb in g.nbrs) + tuple((nb << g.n) | gmask for nb in h.nbrs)
    return Graph(g.n + h.n, nbrs)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# -- matchings ---------------------------------------------------------------


def matching_number(g: Graph) -> int:
    """Size of a maximum matching, by exact branch and bound."""
    nbrs = g.nbrs
    best = 0

    def search(avail: int, size: int):
        nonlocal best
        live = 0
        for v in _bits(avail):
            if nbrs[v] & avail:
                live |= 1 << v
        if size + live.bit_count() // 2 <= best:
            return
        if not live:
            best = size
            return
        v = (live & -live).bit_length() - 1
        for u in _bits(nbrs[v] & live):
            search(live & ~(1 << v) & ~(1 << u), size + 1)
        search(live & ~(1 << v), size)

    search(g.vertex_mask, 0)
    return best


def induced_matching_number(g: Graph) -> int:
    """Largest set of edges whose endpoints induce exactly those edges."""
    nbrs = g.nbrs
    best = 0

    def search(avail: int, size: int):
        nonlocal best
        live = 0
        for v in _bits(avail):
            if nbrs[v] & avail:
                live |= 1 << v
        if size + live.bit_count() // 2 <= best:
            return
        if not live:
            best = size
            return
        v = (live & -live).bit_length() - 1
        for u in _bits(nbrs[v] & live):
            closed = nbrs[v] | nbrs[u] | (1 << v) | (1 << u)
            search(live & ~closed, size + 1)
        search(live & ~(1 << v), size)

    search(g.vertex_mask, 0)
    return best


# -- cycles --------------------------------------------------------------------


def is_induced_c4_free(g: Graph) -> bool:
    nbrs = g.nbrs
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if nbrs[u] >> v & 1:
                continue
            common = nbrs[u] & nbrs[v]
            for a in _bits(common):
                # a second common neighbour not adjacent to a closes a chordless square
                if common & ~nbrs[a] & ~(1 << a):
                    return False
    return True


def min_induced_cycle_length(g: Graph, floor: int = 4) -> Optional[int]:
    """Length of the shortest chordless cycle of length >= ``floor``.

    Breadth-first over induced paths rooted at the smallest vertex of the
    cycle; a path only grows by vertices that are not adjacent to any
    earlier path vertex, so every closure is chordless.  Returns ``None``
    when no such cycle exists.
    """
    if floor < 4:
        raise ValueError("floor must be at least 4")
    nbrs = g.nbrs
    best: Optional[int] = None
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        closed_s = nbrs[s] | (1 << s)
        # (last path vertex, union of closed neighbourhoods of p1..p_{k-1})
        frontier = [(p1, 0) for p1 in _bits(nbrs[s] & above)]
        n_path = 2
        while frontier and (best is None or n_path + 1 < best):
            found = False
            nxt = []
            for last, inner in frontier:
                cand = nbrs[last] & above & ~inner
                if n_path + 1 >= floor and cand & nbrs[s]:
                    found = True
                    break
                grown = inner | nbrs[last] | (1 << last)
                for v in _bits(cand & ~closed_s):
                    nxt.append((v, grown))
            if found:
                best = n_path + 1
                break
            frontier = nxt
            n_path += 1
    return best
