"""Named graph families with their claimed jump sequences and structural facts.

Each constructor returns the graph ``G`` whose edge ideal is studied; the
simplicial complex it is built from (the Stanley-Reisner complex of ``G``)
travels along, so structural claims can be checked even when the Betti
table is out of reach.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .betti import BettiTable, JumpSequence, RelativeJumpSequence, corner_sum
from .complexes import (
    SimplicialComplex,
    boundary_of_simplex,
    clique_complex,
    cross_polytope_boundary,
    from_facets,
    join_complex,
    sd4,
)
from .graphs import Graph, build_graph, complement, cycle_graph, disjoint_union, join_graph


@dataclass(frozen=True)
class NamedConstruction:
    """A graph plus the values it is claimed to produce.

    ``expected_homology`` maps degree to reduced Betti number of the whole
    complex (absent degrees are zero).  ``c4_free`` and ``min_cycle`` are
    claims about the complement graph, i.e. the 1-skeleton of the complex;
    ``None`` means no claim.
    """

    name: str
    params: tuple[int, ...]
    graph: Graph
    complex: SimplicialComplex
    labels: tuple[str, ...]
    expected_jump: Optional[JumpSequence] = None
    expected_relative: Optional[RelativeJumpSequence] = None
    expected_homology: dict = field(default_factory=dict, hash=False)
    expected_table: Optional[BettiTable] = field(default=None, hash=False)
    c4_free: Optional[bool] = None
    min_cycle: Optional[int] = None
    min_cycle_at_least: bool = False
    sphere_like: bool = False

    def metadata(self) -> dict:
        meta = {
            "name": self.name,
            "params": list(self.params),
            "labels": {lab: v for v, lab in enumerate(self.labels)},
        }
        if self.expected_jump is not None:
            meta["expected_jump"] = str(self.expected_jump)
        if self.expected_relative is not None:
            meta["expected_relative"] = str(self.expected_relative)
        return meta

    def to_edge_list(self) -> str:
        lines = [f"# {json.dumps(self.metadata(), ensure_ascii=False)}"]
        edges = self.graph.edges()
        lines.append(f"{self.graph.n} {len(edges)}")
        lines.extend(f"{u} {v}" for u, v in edges)
        return "\n".join(lines) + "\n"


def _jump_pair(j: JumpSequence) -> tuple[JumpSequence, RelativeJumpSequence]:
    return j, j.relative()


def _from_complex(c: SimplicialComplex) -> Graph:
    return complement(c.skeleton_graph())


# the printed 12-vertex example; pairs use the example's 1-based names x1..x12
_ICOSAHEDRON_EDGES = (
    (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (4, 6),
    (3, 7), (4, 7), (5, 7), (1, 8), (4, 8), (5, 8), (6, 8),
    (1, 9), (2, 9), (5, 9), (6, 9), (7, 9),
    (1, 10), (2, 10), (3, 10), (7, 10), (8, 10),
    (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
    (1, 12), (2, 12), (3, 12), (4, 12), (5, 12), (11, 12),
)

ICOSAHEDRON_TABLE = BettiTable(
    12,
    {
        (0, 0): 1,
        **{(i, i + 1): v for i, v in zip(range(1, 7), (36, 160, 315, 300, 112, 12))},
        **{(i, i + 2): v for i, v in zip(range(3, 9), (12, 112, 300, 315, 160, 36))},
        (9, 12): 1,
    },
)


def anticycle_graph(n: int) -> NamedConstruction:
    """Complement of the n-cycle; its complex is the cycle itself."""
    if n < 5:
        raise ValueError("anticycle needs n >= 5 (n = 4 has a linear resolution)")
    h = cycle_graph(n)
    j, r = _jump_pair(JumpSequence(2, (n - 3,)))
    return NamedConstruction(
        "anticycle", (n,), complement(h), clique_complex(h), tuple(f"x{i + 1}" for i in range(n)),
        j, r, {1: 1}, c4_free=True, min_cycle=n,
    )


def torus_product_graph(ns: Sequence[int]) -> NamedConstruction:
    """Disjoint union of anticycles; the complex is the join of the cycles."""
    ns = tuple(int(x) for x in ns)
    if not ns:
        raise ValueError("torus product needs at least one cycle")
    if any(x < 4 for x in ns):
        raise ValueError("every cycle length must be at least 4")
    if list(ns) != sorted(ns):
        raise ValueError("cycle lengths must be sorted ascending")
    r = len(ns)
    g = complement(cycle_graph(ns[0]))
    c = clique_complex(cycle_graph(ns[0]))
    labels = [f"x{1}_{v + 1}" for v in range(ns[0])]
    for t, x in enumerate(ns[1:], start=2):
        g = disjoint_union(g, complement(cycle_graph(x)))
        c = join_complex(c, clique_complex(cycle_graph(x)))
        labels += [f"x{t}_{v + 1}" for v in range(x)]
    rel = RelativeJumpSequence(2 * r, (1,) * (r - 1) + tuple(x - 3 for x in ns))
    return NamedConstruction(
        "torus", ns, g, c, tuple(labels), rel.to_jump(), rel, {2 * r - 1: 1},
        c4_free=(r == 1) and ns[0] >= 5,
    )


def corner_sum_graph(g: Graph, h: Graph) -> Graph:
    """Join of the two graphs; its Stanley-Reisner complex is the disjoint union of theirs."""
    return join_graph(g, h)


def corner_sum_construction(a: NamedConstruction, b: NamedConstruction) -> NamedConstruction:
    """Corner-sum graph of two constructions, expecting the corner sum of their sequences."""
    if a.expected_jump is None or b.expected_jump is None:
        raise ValueError("both constructions need expected jump sequences")
    j = corner_sum(a.expected_jump, b.expected_jump)
    la = tuple(f"G.{s}" for s in a.labels)
    lb = tuple(f"H.{s}" for s in b.labels)
    shifted = [tuple(v + a.graph.n for v in f) for f in b.complex.facets()]
    c = from_facets(a.graph.n + b.graph.n, list(a.complex.facets()) + shifted)
    hom = {}
    for part in (a.expected_homology, b.expected_homology):
        for d, v in part.items():
            hom[d] = hom.get(d, 0) + v
    # two nonempty pieces add one connected component
    hom[0] = hom.get(0, 0) + 1
    return NamedConstruction(
        "corner", a.params + b.params, corner_sum_graph(a.graph, b.graph), c, la + lb,
        j, j.relative(), hom,
    )


def drum_graph(n: int) -> NamedConstruction:
    """Two n-gon caps coned off at z1 and z2, joined by an antiprism band.

    Vertices x1..xn (top ring), y1..yn (bottom ring), z1, z2.  Both rings
    carry their cycle edges, and the band edges are x_i y_i and x_i y_{i+1}
    with indices mod n (the last of these is y1 xn).
    """
    if n < 5:
        raise ValueError("drum needs n >= 5")
    x = lambda i: i % n
    y = lambda i: n + i % n
    z1, z2 = 2 * n, 2 * n + 1
    facets = []
    for i in range(n):
        facets.append((x(i), x(i + 1), z1))
        facets.append((y(i), y(i + 1), z2))
        facets.append((x(i), y(i), y(i + 1)))
        facets.append((x(i), x(i + 1), y(i + 1)))
    c = from_facets(2 * n + 2, [tuple(sorted(f)) for f in facets])
    labels = tuple([f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)] + ["z1", "z2"])
    j, r = _jump_pair(JumpSequence(3, (2, 2 * n - 2)))
    return NamedConstruction(
        "drum", (n,), _from_complex(c), c, labels, j, r, {2: 1},
        expected_table=ICOSAHEDRON_TABLE if n == 5 else None,
        c4_free=True, min_cycle=5, sphere_like=True,
    )


def icosahedron_graph() -> NamedConstruction:
    g = build_graph(12, [(a - 1, b - 1) for a, b in _ICOSAHEDRON_EDGES])
    j, r = _jump_pair(JumpSequence(3, (2, 8)))
    return NamedConstruction(
        "icosahedron", (), g, clique_complex(complement(g)), tuple(f"x{i + 1}" for i in range(12)),
        j, r, {2: 1}, expected_table=ICOSAHEDRON_TABLE, c4_free=True, min_cycle=5, sphere_like=True,
    )


def grid_torus_graph(n: int, m: int) -> NamedConstruction:
    """The n-by-m grid on a torus, each square cut along the same diagonal.

    Vertex x_{i,j} (0-based i < n, j < m) is ``i * m + j``.  Row neighbours
    wrap mod m, column neighbours mod n, and the diagonal joins x_{i,j} to
    x_{i+1,j+1} with both wraps, so every vertex has degree 6.
    """
    if n < 6 or m < 6:
        raise ValueError("grid torus needs n, m >= 6")
    v = lambda i, j: (i % n) * m + (j % m)
    facets = []
    for i in range(n):
        for j in range(m):
            facets.append(tuple(sorted((v(i, j), v(i, j + 1), v(i + 1, j + 1)))))
            facets.append(tuple(sorted((v(i, j), v(i + 1, j), v(i + 1, j + 1)))))
    c = from_facets(n * m, facets)
    labels = tuple(f"x{i + 1},{j + 1}" for i in range(n) for j in range(m))
    jmp, r = _jump_pair(JumpSequence(3, (3, n * m - 4)))
    return NamedConstruction(
        "grid-torus", (n, m), _from_complex(c), c, labels, jmp, r, {1: 2, 2: 1},
        c4_free=True, min_cycle=6,
    )


def cross_polytope_graph(r: int) -> NamedConstruction:
    """r disjoint edges; the complex is the boundary of the r-dimensional cross polytope."""
    if r < 1:
        raise ValueError("cross polytope needs r >= 1")
    g = build_graph(2 * r, [(2 * i, 2 * i + 1) for i in range(r)])
    j, rel = _jump_pair(JumpSequence(r, tuple(range(1, r))))
    labels = tuple(s for i in range(r) for s in (f"x{i + 1}", f"y{i + 1}"))
    return NamedConstruction(
        "cross-polytope", (r,), g, cross_polytope_boundary(r), labels, j, rel, {r - 1: 1},
        c4_free=(r == 1), sphere_like=True,
    )


def sd4_tetrahedron() -> NamedConstruction:
    """sd4 applied to the boundary of a tetrahedron: a flag 2-sphere on 22 vertices."""
    c = sd4(boundary_of_simplex(3))
    return NamedConstruction(
        "sd4-tetrahedron", (), _from_complex(c), c, tuple(f"v{i}" for i in range(c.n)),
        expected_homology={2: 1}, c4_free=True, min_cycle=5, min_cycle_at_least=True,
        sphere_like=True,
    )


REGISTRY = {
    "anticycle": (anticycle_graph, 1),
    "torus": (lambda *ns: torus_product_graph(ns), None),
    "drum": (drum_graph, 1),
    "icosahedron": (icosahedron_graph, 0),
    "grid-torus": (grid_torus_graph, 2),
    "cross-polytope": (cross_polytope_graph, 1),
    "sd4-tetrahedron": (sd4_tetrahedron, 0),
}


def by_name(name: str, params: Sequence[int] = ()) -> NamedConstruction:
    """Look up a construction by its CLI name and call it with integer parameters."""
    try:
        fn, arity = REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown construction {name!r}; choose from {', '.join(REGISTRY)}") from None
    if arity is not None and len(params) != arity:
        raise ValueError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)
