"""Text formats: edge lists, graph6, and facet lists."""

from __future__ import annotations

from typing import Iterable

from .complexes import SimplicialComplex, from_facets
from .graphs import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _ints(line: str, count: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} integers in {what}, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"non-integer token in {what}: {line!r}") from None


def parse_edge_list(text: str) -> Graph:
    """``n m`` on the first data line, then ``m`` lines of 0-based ``u v``."""
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    n, m = _ints(lines[0], 2, "header")
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, found {len(body)}")
    edges = [_ints(line, 2, "edge") for line in body]
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def _g6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        chunk, start = data[2:8], 8
    else:
        chunk, start = data[1:4], 4
    n = 0
    for b in chunk:
        n = (n << 6) | (b - 63)
    return n, start


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii", "replace")
    if not data or any(b < 63 or b > 126 for b in data):
        raise FormatError(f"not a graph6 string: {line!r}")
    n, start = _g6_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def read_graph(text: str) -> Graph:
    """Edge list or graph6, whichever the first data line looks like."""
    lines = _data_lines(text)
    if not lines:
        raise FormatError("no graph data")
    first = lines[0]
    if first.startswith(GRAPH6_HEADER):
        return parse_graph6(first)
    if len(first.split()) == 1:
        if len(lines) > 1:
            raise FormatError("graph6 input must be a single line")
        return parse_graph6(first)
    return parse_edge_list(text)


def parse_facets(text: str) -> SimplicialComplex:
    """``n f`` on the first data line, then ``f`` lines of 0-based vertex lists."""
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty facet list")
    n, f = _ints(lines[0], 2, "header")
    body = lines[1:]
    if len(body) != f:
        raise FormatError(f"header promises {f} facets, found {len(body)}")
    facets = []
    for line in body:
        try:
            facets.append(tuple(int(p) for p in line.split()))
        except ValueError:
            raise FormatError(f"non-integer token in facet: {line!r}") from None
    try:
        return from_facets(n, facets)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_facets(c: SimplicialComplex) -> str:
    facets = c.facets()
    lines = [f"{c.n} {len(facets)}"] + [" ".join(map(str, f)) for f in facets]
    return "\n".join(lines) + "\n"
