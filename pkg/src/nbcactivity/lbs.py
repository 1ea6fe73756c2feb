"""Local binary search trees and the rotation onto non-increasing trees.

In an LBS tree every left child is smaller and every right child is larger
than its parent; a *left* LBS tree has no right child at the root.  The
rotation replaces each right edge ``(v, r)`` by ``(x, r)`` where ``x`` is the
first left ancestor of ``v``: climb from ``v`` while the climbed edge is a
right edge, and take the parent end of the first left edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .forest import ColoredForest, ForestClass, consecutive_smallest_child, distribution, enumerate_forests
from .forest import children_of_top as forest_children_of_top


@dataclass(frozen=True)
class LbsTree:
    n: int
    root: int
    left: tuple[int, ...]  # left[v-1], 0 if none
    right: tuple[int, ...]

    def __post_init__(self):
        seen = {self.root}
        stack = [self.root]
        while stack:
            v = stack.pop()
            l, r = self.left[v - 1], self.right[v - 1]
            if l:
                if l >= v:
                    raise ValueError(f"left child {l} of {v} is not smaller")
                stack.append(l)
            if r:
                if r <= v:
                    raise ValueError(f"right child {r} of {v} is not larger")
                stack.append(r)
            for c in (l, r):
                if c:
                    if c in seen:
                        raise ValueError(f"vertex {c} reached twice")
                    seen.add(c)
        if seen != set(range(1, self.n + 1)):
            raise ValueError("tree does not span [n]")

    @classmethod
    def from_children(cls, n: int, root: int, nodes: Mapping[int, tuple[int | None, int | None]]) -> LbsTree:
        left = [0] * n
        right = [0] * n
        for v, (l, r) in nodes.items():
            left[v - 1] = l or 0
            right[v - 1] = r or 0
        return cls(n, root, tuple(left), tuple(right))

    @property
    def is_left(self) -> bool:
        return self.right[self.root - 1] == 0

    @property
    def edges(self) -> tuple[tuple[int, int, str], ...]:
        """``(parent, child, side)`` with side ``"L"`` or ``"R"``, sorted by child."""
        out = []
        for v in range(1, self.n + 1):
            if self.left[v - 1]:
                out.append((v, self.left[v - 1], "L"))
            if self.right[v - 1]:
                out.append((v, self.right[v - 1], "R"))
        return tuple(sorted(out, key=lambda e: e[1]))

    def parent_links(self) -> dict[int, tuple[int, str]]:
        return {c: (p, side) for p, c, side in self.edges}

    def to_json(self) -> dict:
        nodes = {
            str(v): {"left": self.left[v - 1] or None, "right": self.right[v - 1] or None}
            for v in range(1, self.n + 1)
        }
        return {"n": self.n, "nodes": nodes, "root": self.root}

    @classmethod
    def from_json(cls, data) -> LbsTree:
        if isinstance(data, str):
            data = json.loads(data)
        nodes = {int(v): (d.get("left"), d.get("right")) for v, d in data["nodes"].items()}
        return cls.from_children(int(data["n"]), int(data["root"]), nodes)


@lru_cache(maxsize=None)
def _shapes(labels: frozenset) -> tuple:
    """All LBS trees on ``labels`` as nested ``(root, left, right)`` tuples."""
    out = []
    for v in sorted(labels):
        rest = sorted(labels - {v})
        for r in range(len(rest) + 1):
            for left_set in combinations(rest, r):
                left_set = frozenset(left_set)
                right_set = frozenset(rest) - left_set
                lefts = [t for t in _shapes(left_set) if t[0] < v] if left_set else [None]
                rights = [t for t in _shapes(right_set) if t[0] > v] if right_set else [None]
                for lt in lefts:
                    for rt in rights:
                        out.append((v, lt, rt))
    return tuple(out)


def _flatten(n: int, shape) -> LbsTree:
    left = [0] * n
    right = [0] * n
    stack = [shape]
    while stack:
        v, lt, rt = stack.pop()
        if lt:
            left[v - 1] = lt[0]
            stack.append(lt)
        if rt:
            right[v - 1] = rt[0]
            stack.append(rt)
    return LbsTree(n, shape[0], tuple(left), tuple(right))


def enumerate_lbs(n: int, left_only: bool = False) -> list[LbsTree]:
    """All LBS trees on ``[n]`` (or only the left ones), sorted."""
    if n < 1:
        raise ValueError("n must be >= 1")
    trees = (_flatten(n, s) for s in _shapes(frozenset(range(1, n + 1))))
    if left_only:
        trees = (t for t in trees if t.is_left)
    return sorted(trees, key=lambda t: (t.root, t.left, t.right))


def first_left_ancestor(T: LbsTree, v: int) -> int:
    links = T.parent_links()
    w = v
    while w in links:
        p, side = links[w]
        if side == "L":
            return p
        w = p
    return w


def rotation_rewiring(T: LbsTree) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """``[((v, r), (x, r)), ...]`` for every right edge, ordered by ``r``."""
    return [((v, r), (first_left_ancestor(T, v), r)) for v, r, side in T.edges if side == "R"]


def rotate_to_nonincreasing(T: LbsTree) -> ColoredForest:
    if not T.is_left:
        raise ValueError("rotation needs a left LBS tree")
    edges = [(v, c) for v, c, side in T.edges if side == "L"]
    edges += [new for _, new in rotation_rewiring(T)]
    return ColoredForest.from_edges(T.n, edges, 1)


def lbs_consecutive(T: LbsTree) -> int:
    return sum(1 for p, c, _ in T.edges if p == c + 1)


def lbs_top(T: LbsTree) -> int:
    return sum(1 for p, _, _ in T.edges if p == T.n)


def conjecture_report(n: int, variant: str) -> dict:
    """Compare the two statistics behind the left-LBS conjecture; never asserts it.

    ``literal``: over left LBS trees, edges ``(i+1, i)`` against edges ``(n, i)``.
    ``restricted``: over non-increasing trees, vertices whose smallest child is
    one less than themselves against children of ``n``.

    The literal report also carries ``dist_top_rotated``, the children of ``n``
    after rotating each left LBS tree onto its non-increasing tree.
    """
    if variant == "literal":
        trees = enumerate_lbs(n, left_only=True)
        dist_consecutive = distribution(trees, lbs_consecutive, n)
        dist_top = distribution(trees, lbs_top, n)
        rotated = [rotate_to_nonincreasing(t) for t in trees]
        extra = {"dist_top_rotated": list(distribution(rotated, forest_children_of_top, n))}
    elif variant == "restricted":
        trees = enumerate_forests(n, 1, ForestClass("non-increasing", 1), spanning_only=True)
        dist_consecutive = distribution(trees, consecutive_smallest_child, n)
        dist_top = distribution(trees, forest_children_of_top, n)
        extra = {}
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return {
        "n": n,
        "variant": variant,
        "dist_consecutive": list(dist_consecutive),
        "dist_top": list(dist_top),
        "equal": dist_consecutive == dist_top,
        **extra,
    }
