"""Conflict levels and the level -> vertex-set dictionary.

The conflict level of a vertex is its degree minus the number of distinct
colors on its incident edges (0 means locally proper).  The dictionary
buckets every vertex with level >= 1 by its level and keeps the total
conflictivity (sum of all levels) cached, so the search loop gets O(1)
reads and O(1) expected updates per recoloring.
"""

from __future__ import annotations

import random

from .graph import Graph, GraphError


def conflict_level(graph: Graph, v: int) -> int:
    """degree(v) minus the number of distinct incident colors; 0 if isolated."""
    deg = graph.degree(v)
    if deg == 0:
        return 0
    return deg - graph.distinct_incident_colors(v)


class _RandomSet:
    """Set with O(1) insert/remove and uniform member sampling."""

    __slots__ = ("_items", "_pos")

    def __init__(self):
        self._items: list[int] = []
        self._pos: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, x: int) -> bool:
        return x in self._pos

    def __iter__(self):
        return iter(self._items)

    def add(self, x: int) -> None:
        if x not in self._pos:
            self._pos[x] = len(self._items)
            self._items.append(x)

    def remove(self, x: int) -> None:
        i = self._pos.pop(x)
        last = self._items.pop()
        if i < len(self._items):
            self._items[i] = last
            self._pos[last] = i

    def sample(self, rng: random.Random) -> int:
        return self._items[rng.randrange(len(self._items))]


class ConflictDictionary:
    """Levels and buckets for a totally colored graph."""

    def __init__(self, graph: Graph, colors: int):
        self.graph = graph
        self.colors = colors
        self._level: list[int] = [conflict_level(graph, v) for v in range(graph.n)]
        self._buckets: dict[int, _RandomSet] = {}
        self.total = 0
        for v, lvl in enumerate(self._level):
            if lvl > 0:
                self._bucket(lvl).add(v)
                self.total += lvl

    def _bucket(self, level: int) -> _RandomSet:
        b = self._buckets.get(level)
        if b is None:
            b = self._buckets[level] = _RandomSet()
        return b

    def level(self, v: int) -> int:
        return self._level[v]

    def bucket_members(self, level: int) -> set[int]:
        b = self._buckets.get(level)
        return set(b) if b is not None else set()

    def max_level(self) -> int:
        """Largest level with a nonempty bucket; error if none."""
        best = 0
        for lvl, b in self._buckets.items():
            if len(b) > 0 and lvl > best:
                best = lvl
        if best == 0:
            raise GraphError("no conflicting vertices (check total > 0 first)")
        return best

    def sample_max_level(self, rng: random.Random) -> int:
        return self._buckets[self.max_level()].sample(rng)

    def color_edge(self, u: int, v: int, color: int) -> int:
        """Recolor edge {u, v} and update both endpoints.

        Returns the conflict-level change at v, the second endpoint.
        """
        if not (0 <= color < self.colors):
            raise GraphError(f"color {color} outside [0, {self.colors})")
        graph = self.graph
        graph.edge_index(u, v)  # raises on a nonexistent edge
        graph.set_edge_color(u, v, color)
        self._update(u)
        return self._update(v)

    def _update(self, v: int) -> int:
        old = self._level[v]
        # inlined conflict_level: this is the hot path of every recoloring
        graph = self.graph
        adj = graph._adj[v]
        colors = graph._colors
        new = len(adj) - len({colors[idx] for idx in adj.values()}) if adj else 0
        if new != old:
            if old > 0:
                self._buckets[old].remove(v)
            if new > 0:
                self._bucket(new).add(v)
            self._level[v] = new
            self.total += new - old
        return new - old

    def recomputed_total(self) -> int:
        """From-scratch conflictivity; must always equal the cached total."""
        return sum(conflict_level(self.graph, v) for v in range(self.graph.n))

    def check_consistency(self) -> None:
        """Debug assertion: cached state equals a from-scratch rebuild."""
        fresh = ConflictDictionary(self.graph, self.colors)
        assert self._level == fresh._level, "stale conflict level"
        assert self.total == fresh.total == self.recomputed_total(), "stale total"
        levels = set(self._nonempty_levels()) | set(fresh._nonempty_levels())
        for lvl in levels:
            assert self.bucket_members(lvl) == fresh.bucket_members(lvl), (
                f"bucket {lvl} out of sync"
            )

    def _nonempty_levels(self) -> list[int]:
        return [lvl for lvl, b in self._buckets.items() if len(b) > 0]
