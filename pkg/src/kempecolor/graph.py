"""Undirected simple graph with one color slot per edge.

Vertices are dense integers 0..n-1.  Each unordered edge {u, v} owns a
single canonical color slot, so both orientations always read the same
color.  ``None`` means "uncolored"; only the pre-coloring routines should
ever observe it.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or query."""


class UncoloredEdgeError(GraphError):
    """An operation required a colored edge but found an uncolored one."""


class Graph:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._adj: list[dict[int, int]] = [{} for _ in range(n)]
        self._edges: list[tuple[int, int]] = []
        self._colors: list[int | None] = []
        for u, v in edges:
            self._add_edge(u, v)

    def _add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.n) or not (0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        idx = len(self._edges)
        self._edges.append((min(u, v), max(u, v)))
        self._colors.append(None)
        self._adj[u][v] = idx
        self._adj[v][u] = idx

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> Iterator[int]:
        self._check_vertex(v)
        return iter(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs, in insertion order."""
        return list(self._edges)

    def edge_index(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        try:
            return self._adj[u][v]
        except KeyError:
            raise GraphError(f"edge ({u}, {v}) does not exist") from None

    def edge_color(self, u: int, v: int) -> int | None:
        return self._colors[self.edge_index(u, v)]

    def set_edge_color(self, u: int, v: int, color: int | None) -> None:
        """Raw color write, bypassing conflict tracking."""
        self._colors[self.edge_index(u, v)] = color

    def color_of_index(self, idx: int) -> int | None:
        return self._colors[idx]

    def clear_colors(self) -> None:
        self._colors = [None] * len(self._colors)

    def incident_colors(self, v: int) -> list[int]:
        """Colors on the edges incident to v; raises if any is unset."""
        self._check_vertex(v)
        out = []
        for idx in self._adj[v].values():
            c = self._colors[idx]
            if c is None:
                u, w = self._edges[idx]
                raise UncoloredEdgeError(f"edge ({u}, {w}) incident to {v} is uncolored")
            out.append(c)
        return out

    def distinct_incident_colors(self, v: int) -> int:
        return len(set(self.incident_colors(v)))

    def is_fully_colored(self) -> bool:
        return all(c is not None for c in self._colors)

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} outside [0, {self.n})")


class ParseError(ValueError):
    """Malformed edge-list or coloring text."""


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: line 1 is `n m`, then m lines `u v`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"header must be two integers, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"edge line must be two integers, got {ln!r}") from None
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def format_coloring(graph: Graph) -> str:
    """Coloring output format: m lines `u v c`, edge insertion order."""
    lines = []
    for u, v in graph.edges():
        c = graph.edge_color(u, v)
        if c is None:
            raise UncoloredEdgeError(f"edge ({u}, {v}) is uncolored")
        lines.append(f"{u} {v} {c}")
    return "\n".join(lines) + ("\n" if lines else "")


def write_coloring(graph: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_coloring(graph))


def parse_coloring(text: str) -> list[tuple[int, int, int]]:
    """Parse `u v c` lines into (u, v, color) triples."""
    triples = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"coloring line must be 'u v c', got {ln!r}")
        try:
            triples.append((int(parts[0]), int(parts[1]), int(parts[2])))
        except ValueError:
            raise ParseError(f"coloring line must be three integers, got {ln!r}") from None
    return triples


def read_coloring(path: str) -> list[tuple[int, int, int]]:
    with open(path, encoding="ascii") as fh:
        return parse_coloring(fh.read())
