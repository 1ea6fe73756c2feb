"""Colored labeled rooted forests and the (k1, k2) classes.

A forest on ``[n]`` is stored as a parent array (``0`` marks a root) plus the
color of the edge from each non-root vertex to its parent.  Colors run over
``1..k``; the last ``k2`` of them are *free* and never constrain anything.

For an internal vertex ``v`` let ``c_v`` be the smallest color on its child
edges.  When ``c_v <= k1`` the children reached by color ``c_v`` are checked:

* decreasing: every such child is smaller than ``v``
* increasing: every such child is larger than ``v``
* non-increasing: at least one such child is smaller than ``v``
* non-decreasing: at least one such child is larger than ``v``

The "non-increasing" reading is the one that reproduces the three trees on
``[3]`` counted by the Linial arrangement (stars at 2 and 3, path 3-2-1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator

from .covering import CoveringSystem
from .polycount import ActivityVector

MODES = ("unrestricted", "decreasing", "increasing", "non-decreasing", "non-increasing")
STATISTICS = ("children-of-n", "consecutive", "consecutive-smallest-child")


@dataclass(frozen=True, order=True)
class ColoredForest:
    n: int
    k: int
    parent: tuple[int, ...]  # parent[v-1], 0 for roots
    color: tuple[int, ...]  # color of edge (parent[v-1], v), 0 for roots

    def __post_init__(self):
        if len(self.parent) != self.n or len(self.color) != self.n:
            raise ValueError("parent/color arrays must have length n")
        for v, (p, c) in enumerate(zip(self.parent, self.color), start=1):
            if p == 0:
                if c != 0:
                    raise ValueError(f"root {v} carries a color")
                continue
            if not 1 <= p <= self.n or p == v:
                raise ValueError(f"bad parent {p} for vertex {v}")
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} of edge ({p},{v}) outside [1,{self.k}]")
        if _has_cycle(self.parent):
            raise ValueError("parent relation has a cycle")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple], k: int = 1) -> ColoredForest:
        """Build from ``(parent, child)`` or ``(parent, child, color)`` tuples."""
        parent = [0] * n
        color = [0] * n
        for e in edges:
            p, c = e[0], e[1]
            col = e[2] if len(e) > 2 else 1
            if parent[c - 1]:
                raise ValueError(f"vertex {c} has two parents")
            parent[c - 1] = p
            color[c - 1] = col
        return cls(n, k, tuple(parent), tuple(color))

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """``(parent, child, color)`` triples sorted by child."""
        return tuple((p, v, c) for v, (p, c) in enumerate(zip(self.parent, self.color), start=1) if p)

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parent, start=1) if p == 0)

    @property
    def is_tree(self) -> bool:
        return len(self.roots) == 1

    @cached_property
    def children(self) -> dict[int, list[tuple[int, int]]]:
        """``v -> [(child, color), ...]`` for internal vertices."""
        out: dict[int, list[tuple[int, int]]] = {}
        for p, v, c in self.edges:
            out.setdefault(p, []).append((v, c))
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "colors": self.k, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> ColoredForest:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]], int(data.get("colors", 1)))


def _has_cycle(parent: tuple[int, ...]) -> bool:
    n = len(parent)
    state = [0] * (n + 1)  # 0 unseen, 1 on current walk, 2 known acyclic
    for start in range(1, n + 1):
        walk = []
        v = start
        while v and state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = parent[v - 1]
        if v and state[v] == 1:
            return True
        for w in walk:
            state[w] = 2
    return False


@dataclass(frozen=True)
class ForestClass:
    mode: str
    k1: int
    k2: int = 0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.k1 < 0 or self.k2 < 0:
            raise ValueError("k1 and k2 must be nonnegative")

    @property
    def k(self) -> int:
        return self.k1 + self.k2


def classify(F: ColoredForest, cls: ForestClass) -> bool:
    if cls.k != F.k:
        raise ValueError(f"class uses {cls.k} colors but forest has {F.k}")
    if cls.mode == "unrestricted":
        return True
    for v, kids in F.children.items():
        cv = min(c for _, c in kids)
        if cv > cls.k1:
            continue
        checked = [w for w, c in kids if c == cv]
        if cls.mode == "decreasing":
            good = all(w < v for w in checked)
        elif cls.mode == "increasing":
            good = all(w > v for w in checked)
        elif cls.mode == "non-increasing":
            good = any(w < v for w in checked)
        else:
            good = any(w > v for w in checked)
        if not good:
            return False
    return True


def _parent_arrays(n: int, spanning_only: bool) -> Iterator[tuple[int, ...]]:
    """Acyclic parent arrays in lexicographic order."""
    parent = [0] * n

    def reaches(v: int, target: int) -> bool:
        # follows assigned parent links from v; vertices > current are unassigned
        while v:
            if v == target:
                return True
            v = parent[v - 1]
        return False

    def rec(v: int, roots: int):
        if v > n:
            if not spanning_only or roots == 1:
                yield tuple(parent)
            return
        for p in range(0, n + 1):
            if p == v:
                continue
            if p == 0:
                if spanning_only and roots == 1:
                    continue
                parent[v - 1] = 0
                yield from rec(v + 1, roots + 1)
            else:
                if reaches(p, v):
                    continue
                parent[v - 1] = p
                yield from rec(v + 1, roots)
        parent[v - 1] = 0

    # unassigned entries hold 0, so cycle checks only see already-fixed links
    yield from rec(1, 0)


def enumerate_forests(n: int, k: int, cls: ForestClass, spanning_only: bool = False) -> list[ColoredForest]:
    """All colored forests (or spanning trees) on ``[n]`` with ``k`` colors in ``cls``.

    Ordered by parent array, then by color array, both lexicographically.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if cls.k != k:
        raise ValueError(f"class uses {cls.k} colors, asked for {k}")
    out = []
    for parent in _parent_arrays(n, spanning_only):
        slots = [v for v in range(n) if parent[v]]
        for cols in product(range(1, k + 1), repeat=len(slots)):
            color = [0] * n
            for v, c in zip(slots, cols):
                color[v] = c
            F = ColoredForest.__new__(ColoredForest)
            object.__setattr__(F, "n", n)
            object.__setattr__(F, "k", k)
            object.__setattr__(F, "parent", parent)
            object.__setattr__(F, "color", tuple(color))
            if classify(F, cls):
                out.append(F)
    return out


def tree_activity(T: ColoredForest) -> tuple[frozenset, int]:
    """Color-1 edges hanging from vertex ``n``, and how many there are."""
    if not T.is_tree:
        raise ValueError("tree_activity needs a spanning tree")
    active = frozenset(e for e in T.edges if e[0] == T.n and e[2] == 1)
    return active, len(active)


def losing_activity(T: ColoredForest) -> int:
    """Number of edges ``(i+1, i)``."""
    return sum(1 for p, v, _ in T.edges if p == v + 1)


def consecutive_smallest_child(T: ColoredForest) -> int:
    """Number of vertices whose smallest child is the vertex just below them."""
    return sum(1 for v, kids in T.children.items() if min(w for w, _ in kids) == v - 1)


def children_of_top(T: ColoredForest) -> int:
    return tree_activity(T)[1]


_STAT_FUNCS = {
    "children-of-n": children_of_top,
    "consecutive": losing_activity,
    "consecutive-smallest-child": consecutive_smallest_child,
}


def statistic(name: str):
    try:
        return _STAT_FUNCS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}; expected one of {STATISTICS}") from None


def distribution(trees: Iterable[ColoredForest], stat, length: int) -> ActivityVector:
    counts = [0] * length
    for T in trees:
        counts[stat(T)] += 1
    return tuple(counts)


def tree_statistic_vector(n: int, k: int, cls: ForestClass, stat_name: str = "children-of-n") -> ActivityVector:
    trees = enumerate_forests(n, k, cls, spanning_only=True)
    return distribution(trees, statistic(stat_name), n)


def cover_tree(F: ColoredForest) -> ColoredForest:
    """Hang every component root other than ``n``'s onto ``n`` with color 1."""
    parent = list(F.parent)
    color = list(F.color)
    top_root = F.n
    while parent[top_root - 1]:
        top_root = parent[top_root - 1]
    for r in F.roots:
        if r != top_root:
            parent[r - 1] = F.n
            color[r - 1] = 1
    return ColoredForest(F.n, F.k, tuple(parent), tuple(color))


def remove_edges(T: ColoredForest, edges: Iterable[tuple[int, int, int]]) -> ColoredForest:
    parent = list(T.parent)
    color = list(T.color)
    for p, v, c in edges:
        if parent[v - 1] != p or color[v - 1] != c:
            raise ValueError(f"edge {(p, v, c)} not in forest")
        parent[v - 1] = 0
        color[v - 1] = 0
    return ColoredForest(T.n, T.k, tuple(parent), tuple(color))


def decreasing_involution(T: ColoredForest) -> ColoredForest:
    """Swap edges ``(n, i)`` and ``(i+1, i)``; the edge ``(n, n-1)`` stays put."""
    if T.k != 1 or not T.is_tree or not classify(T, ForestClass("decreasing", 1)):
        raise ValueError("decreasing_involution needs a 1-colored decreasing spanning tree")
    n = T.n
    parent = list(T.parent)
    for i in range(1, n):
        p = T.parent[i - 1]
        if i + 1 == n:
            continue
        if p == n:
            parent[i - 1] = i + 1
        elif p == i + 1:
            parent[i - 1] = n
    return ColoredForest(n, 1, tuple(parent), T.color)


def forest_covering_system(n: int, k: int, cls: ForestClass):
    """Class forests as a covering system with the color-1-children-of-n activity.

    Ground elements are ``(parent, child, color)`` triples.
    """
    forests = enumerate_forests(n, k, cls)
    ground = [(p, v, c) for p in range(1, n + 1) for v in range(1, n + 1) if p != v for c in range(1, k + 1)]
    family = frozenset(frozenset(F.edges) for F in forests)
    sys = CoveringSystem(tuple(ground), family, n - 1)
    act = {frozenset(T.edges): tree_activity(T)[0] for T in forests if T.is_tree}
    return sys, act
