"""Integral gain graphs, their circles, and broken circuits.

An edge ``g(i, j)`` with ``i < j`` stands for the hyperplane ``x_j - x_i = g``.
Walking it from ``j`` back to ``i`` contributes ``-g`` to the gain of a walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class GainEdge:
    tail: int
    head: int
    gain: int

    def __post_init__(self):
        if self.tail == self.head:
            raise ValueError("loops are not allowed")
        if self.tail > self.head:
            # store canonically with tail < head; reversing negates the gain
            t, h = self.head, self.tail
            object.__setattr__(self, "tail", t)
            object.__setattr__(self, "head", h)
            object.__setattr__(self, "gain", -self.gain)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.tail, self.head)

    def gain_from(self, start: int) -> int:
        """Gain when traversed starting at vertex ``start``."""
        if start == self.tail:
            return self.gain
        if start == self.head:
            return -self.gain
        raise ValueError(f"vertex {start} is not an endpoint of {self}")

    def other(self, v: int) -> int:
        return self.head if v == self.tail else self.tail

    def __str__(self):
        return f"{self.gain}({self.tail},{self.head})"

    def as_list(self) -> list[int]:
        return [self.tail, self.head, self.gain]


@dataclass(frozen=True)
class Circle:
    """A closed walk visiting distinct vertices, as ``(edge, start_vertex)`` steps."""

    steps: tuple[tuple[GainEdge, int], ...]

    def __post_init__(self):
        steps = self.steps
        if len(steps) < 2:
            raise ValueError("a circle needs at least two edges")
        for k, (edge, start) in enumerate(steps):
            nxt_start = steps[(k + 1) % len(steps)][1]
            if edge.other(start) != nxt_start:
                raise ValueError("steps do not form a closed walk")
        starts = [s for _, s in steps]
        if len(set(starts)) != len(starts):
            raise ValueError("a circle visits each vertex once")
        if len({e for e, _ in steps}) != len(steps):
            raise ValueError("a circle uses each edge once")

    @classmethod
    def through(cls, vertices: Sequence[int], edges: Sequence[GainEdge]) -> Circle:
        """Circle visiting ``vertices`` in order, ``edges[k]`` joining vertex k to k+1."""
        return cls(tuple(zip(edges, vertices)))

    @property
    def edges(self) -> frozenset[GainEdge]:
        return frozenset(e for e, _ in self.steps)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.steps)


def circle_gain(c: Circle) -> int:
    return sum(edge.gain_from(start) for edge, start in c.steps)


class GainGraph:
    """A gain graph on vertices ``1..n`` with a total order on its edges.

    The order is the order of ``edges``; ``position(e)`` gives the rank of ``e``.
    """

    def __init__(self, n: int, edges: Iterable[GainEdge], order: Sequence[GainEdge] | None = None):
        if n < 1:
            raise ValueError("n must be >= 1")
        edges = [e if isinstance(e, GainEdge) else GainEdge(*e) for e in edges]
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        for e in edges:
            if not (1 <= e.tail <= n and 1 <= e.head <= n):
                raise ValueError(f"edge {e} leaves the vertex set [1, {n}]")
        if order is None:
            ordered = sorted(edges)
        else:
            ordered = [e if isinstance(e, GainEdge) else GainEdge(*e) for e in order]
            if sorted(ordered) != sorted(edges) or len(set(ordered)) != len(ordered):
                raise ValueError("order must be a permutation of the edges")
        self.n = n
        self.edges: tuple[GainEdge, ...] = tuple(ordered)
        self._pos = {e: i for i, e in enumerate(self.edges)}

    def position(self, e: GainEdge) -> int:
        return self._pos[e]

    def reordered(self, order: Sequence[GainEdge]) -> GainGraph:
        return GainGraph(self.n, self.edges, order)

    def min_edge(self, edges: Iterable[GainEdge]) -> GainEdge:
        return min(edges, key=self._pos.__getitem__)

    def sort_edges(self, edges: Iterable[GainEdge]) -> tuple[GainEdge, ...]:
        return tuple(sorted(edges, key=self._pos.__getitem__))

    @cached_property
    def parallel_classes(self) -> dict[tuple[int, int], tuple[GainEdge, ...]]:
        classes: dict[tuple[int, int], list[GainEdge]] = {}
        for e in sorted(self.edges):
            classes.setdefault(e.pair, []).append(e)
        return {k: tuple(v) for k, v in classes.items()}

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.parallel_classes:
            adj[i].add(j)
            adj[j].add(i)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __repr__(self):
        return f"GainGraph(n={self.n}, edges={len(self.edges)})"


def complete_interval(n: int, a: int, b: int, order: Sequence[GainEdge] | None = None) -> GainGraph:
    """``K_n^[a,b]``: every pair ``i < j`` joined by edges of gains ``a..b``."""
    if a > b:
        raise ValueError(f"empty gain interval [{a}, {b}]")
    edges = [GainEdge(i, j, g) for i, j in combinations(range(1, n + 1), 2) for g in range(a, b + 1)]
    return GainGraph(n, edges, order)


def _vertex_cycles(n: int, pairs: set[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Simple cycles (length >= 3) of the underlying simple graph, each once.

    A cycle is listed starting at its smallest vertex, with the second vertex
    smaller than the last one.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in sorted(pairs):
        adj[i].append(j)
        adj[j].append(i)
    out = []

    def extend(path: list[int], on_path: set[int]):
        v = path[-1]
        for w in adj[v]:
            if w == path[0] and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
            elif w > path[0] and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

    for s in range(1, n + 1):
        extend([s], {s})
    return out


def all_circles(G: GainGraph) -> list[Circle]:
    """Every circle of the underlying multigraph, including parallel 2-circles."""
    classes = G.parallel_classes
    circles = []
    for (i, j), par in sorted(classes.items()):
        for e, f in combinations(par, 2):
            circles.append(Circle(((e, i), (f, j))))
    for cyc in _vertex_cycles(G.n, set(classes)):
        hops = [(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]
        options = [classes[(min(u, v), max(u, v))] for u, v in hops]
        for choice in product(*options):
            circles.append(Circle.through(cyc, choice))
    return circles


def balanced_circles(G: GainGraph) -> list[Circle]:
    return [c for c in all_circles(G) if circle_gain(c) == 0]


def broken_circuits(G: GainGraph) -> list[frozenset[GainEdge]]:
    """Balanced circles minus their order-minimal edge, without duplicates."""
    seen = set()
    out = []
    for c in balanced_circles(G):
        bc = c.edges - {G.min_edge(c.edges)}
        if bc not in seen:
            seen.add(bc)
            out.append(bc)
    return out


def fundamental_circle(G: GainGraph, tree: Iterable[GainEdge], e: GainEdge) -> Circle:
    """The unique circle in ``tree + e`` for a forest ``tree`` and ``e`` closing a cycle."""
    adj: dict[int, list[GainEdge]] = {}
    for f in tree:
        if f == e:
            raise ValueError("edge already in the forest")
        adj.setdefault(f.tail, []).append(f)
        adj.setdefault(f.head, []).append(f)
    # path in the forest from e.head to e.tail
    prev: dict[int, tuple[int, GainEdge] | None] = {e.head: None}
    stack = [e.head]
    while stack:
        v = stack.pop()
        for f in adj.get(v, ()):
            w = f.other(v)
            if w not in prev:
                prev[w] = (v, f)
                stack.append(w)
    if e.tail not in prev:
        raise ValueError(f"{e} does not close a cycle")
    verts = [e.tail]
    path_edges = []
    v = e.tail
    while prev[v] is not None:
        u, f = prev[v]
        path_edges.append(f)
        verts.append(u)
        v = u
    # walk: tail -> ... -> head along the forest, then head -> tail along e
    return Circle.through(verts, path_edges + [e])


def to_json_edges(edges: Iterable[GainEdge]) -> list[list[int]]:
    return [e.as_list() for e in edges]
