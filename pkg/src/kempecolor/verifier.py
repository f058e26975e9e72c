"""Independent correctness checks and a tiny-graph exact oracle.

These never consult the conflict dictionary, so they can vouch for it.
"""

from __future__ import annotations

from .graph import Graph, GraphError


def properly_colored(graph: Graph, v: int, num_colors: int) -> bool:
    """True iff v's incident colors are pairwise distinct and all in range."""
    incident = graph.incident_colors(v)
    return len(set(incident)) == graph.degree(v) and all(
        0 <= c < num_colors for c in incident
    )


def check_edge_coloring(graph: Graph, num_colors: int) -> bool:
    """True iff every vertex is properly colored."""
    return all(properly_colored(graph, v, num_colors) for v in range(graph.n))


def brute_force_chromatic_index(graph: Graph, max_edges: int = 16) -> int:
    """Exact chromatic index by backtracking; only for tiny graphs.

    Tries max-degree colors first, then max-degree + 1 (one of the two
    always works for a simple graph).  Colors are assigned to edges in a
    fixed order, ascending, with the first edge pinned to color 0.
    """
    if graph.m > max_edges:
        raise GraphError(f"graph has {graph.m} edges, brute-force cap is {max_edges}")
    if graph.m == 0:
        return 0
    delta = graph.max_degree()
    if _edge_colorable(graph, delta):
        return delta
    assert _edge_colorable(graph, delta + 1), "simple graph exceeded max degree + 1"
    return delta + 1


def _edge_colorable(graph: Graph, num_colors: int) -> bool:
    edges = sorted(graph.edges())
    used = [set() for _ in range(graph.n)]

    def backtrack(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        limit = 1 if i == 0 else num_colors
        for c in range(limit):
            if c not in used[u] and c not in used[v]:
                used[u].add(c)
                used[v].add(c)
                if backtrack(i + 1):
                    return True
                used[u].remove(c)
                used[v].remove(c)
        return False

    return backtrack(0)
