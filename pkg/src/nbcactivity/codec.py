"""Word codes for rooted labeled trees: the rooted Prüfer code and the Blue code.

Both encoders strip the smallest leaf ``n - 1`` times and emit one letter per
removal, so a word has length ``n - 1``.  The Prüfer letter is the leaf's
parent.  The Blue letter is ``b`` when the parent is ``leaf + 1``, ``parent - 1``
when the parent is larger otherwise, and ``parent`` when it is smaller.

Decoding processes vertices ``1, 2, ...`` in turn.  Vertex ``i`` was removed
at the first still-unclaimed position after the last position where ``i``
occurs as a parent; the letter there yields ``i``'s parent.

Trees are plain ``(root, parent)`` pairs where ``parent`` maps each non-root
vertex to its parent.  Use ``forest.ColoredForest`` for colored trees.
"""

from __future__ import annotations

import heapq
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence, Union

B = "b"
Token = Union[int, str]
Word = tuple


class RootedTree:
    """A rooted tree on ``[n]`` given by its parent map."""

    __slots__ = ("n", "root", "parent")

    def __init__(self, n: int, parent: Mapping[int, int]):
        parent = dict(parent)
        roots = [v for v in range(1, n + 1) if v not in parent]
        if len(roots) != 1 or len(parent) != n - 1:
            raise ValueError("a rooted tree has exactly one parentless vertex")
        for v, p in parent.items():
            if not (1 <= v <= n and 1 <= p <= n) or v == p:
                raise ValueError(f"bad edge ({p},{v})")
        self.n = n
        self.root = roots[0]
        self.parent = parent
        for v in range(1, n + 1):
            seen = set()
            w = v
            while w in parent:
                if w in seen:
                    raise ValueError("parent map has a cycle")
                seen.add(w)
                w = parent[w]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> RootedTree:
        parent = {}
        for e in edges:
            p, c = e[0], e[1]
            if c in parent:
                raise ValueError(f"vertex {c} has two parents")
            parent[c] = p
        return cls(n, parent)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((self.parent[v], v) for v in sorted(self.parent))

    def children_of(self, v: int) -> list[int]:
        return sorted(c for c, p in self.parent.items() if p == v)

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.n == other.n and self.parent == other.parent

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.parent.items()))))

    def __repr__(self):
        return f"RootedTree(n={self.n}, root={self.root}, edges={list(self.edges)})"

    def to_json(self) -> dict:
        return {"n": self.n, "colors": 1, "root": self.root, "edges": [[p, c, 1] for p, c in self.edges]}

    @classmethod
    def from_json(cls, data) -> RootedTree:
        return cls.from_edges(int(data["n"]), [e[:2] for e in data["edges"]])


def all_rooted_trees(n: int) -> Iterator[RootedTree]:
    """Every rooted tree on ``[n]``, via the Prüfer bijection."""
    for w in product(range(1, n + 1), repeat=n - 1):
        yield pruefer_decode(w, n)


def _leaf_removals(T: RootedTree) -> Iterator[tuple[int, int]]:
    """Yield ``(leaf, parent)`` for the ``n - 1`` smallest-leaf removals."""
    n_children = {v: 0 for v in range(1, T.n + 1)}
    for p in T.parent.values():
        n_children[p] += 1
    heap = [v for v in range(1, T.n + 1) if n_children[v] == 0]
    heapq.heapify(heap)
    for _ in range(T.n - 1):
        leaf = heapq.heappop(heap)
        p = T.parent[leaf]
        yield leaf, p
        n_children[p] -= 1
        if n_children[p] == 0:
            heapq.heappush(heap, p)


def pruefer_encode(T: RootedTree) -> Word:
    if T.n < 2:
        raise ValueError("Prüfer code needs n >= 2")
    return tuple(p for _, p in _leaf_removals(T))


def blue_encode(T: RootedTree) -> Word:
    if T.n < 2:
        raise ValueError("Blue code needs n >= 2")
    word = []
    for leaf, p in _leaf_removals(T):
        if p == leaf + 1:
            word.append(B)
        elif p > leaf:
            word.append(p - 1)
        else:
            word.append(p)
    return tuple(word)


def _check_word(word: Sequence[Token], n: int, blue: bool) -> tuple:
    word = tuple(word)
    if n < 2:
        raise ValueError("need n >= 2")
    if len(word) != n - 1:
        raise ValueError(f"word has length {len(word)}, expected {n - 1}")
    top = n - 1 if blue else n
    for t in word:
        if t == B and blue:
            continue
        if isinstance(t, bool) or not isinstance(t, int) or not 1 <= t <= top:
            raise ValueError(f"token {t!r} outside the alphabet")
    return word


def _decode(word: tuple, n: int, resolve) -> RootedTree:
    """Shared decoding loop.

    ``resolve(letter, i)`` gives the parent of ``i`` if the letter at ``i``'s
    removal position is ``letter``.  Positions not yet claimed hold raw letters;
    for both codes an unclaimed letter equal to ``i`` means parent ``i``.
    """
    m = len(word)
    owner_parent: list[int | None] = [None] * m  # resolved parent at claimed positions
    parent: dict[int, int] = {}
    root = None
    for i in range(1, n + 1):
        last = -1
        for pos in range(m):
            if owner_parent[pos] == i or (owner_parent[pos] is None and word[pos] == i):
                last = pos
        pos = next((j for j in range(last + 1, m) if owner_parent[j] is None), None)
        if pos is None:
            if root is not None:
                raise ValueError(f"word {word} has no free position for vertex {i}")
            root = i
            continue
        p = resolve(word[pos], i)
        owner_parent[pos] = p
        parent[i] = p
    return RootedTree(n, parent)


def pruefer_decode(word: Sequence[Token], n: int | None = None) -> RootedTree:
    if n is None:
        n = len(word) + 1
    word = _check_word(word, n, blue=False)
    T = _decode(word, n, lambda x, i: x)
    if T.root != word[-1]:
        raise ValueError(f"decoded root {T.root} is not the last letter of {word}")
    return T


def _blue_parent(x: Token, i: int) -> int:
    if x == B:
        return i + 1
    if x > i:
        return x + 1
    if x < i:
        return x
    raise ValueError(f"letter {x} cannot encode the parent of {i}")


def blue_decode(word: Sequence[Token], n: int | None = None) -> RootedTree:
    if n is None:
        n = len(word) + 1
    word = _check_word(word, n, blue=True)
    return _decode(word, n, _blue_parent)


def swap_bijection(T: RootedTree) -> RootedTree:
    """Prüfer-encode, turn every letter ``n`` into ``b``, Blue-decode.

    Children of ``n`` become edges of the form ``(i+1, i)``.
    """
    word = tuple(B if x == T.n else x for x in pruefer_encode(T))
    return blue_decode(word, T.n)


def children_of_top(T: RootedTree) -> int:
    return sum(1 for p in T.parent.values() if p == T.n)


def consecutive_edges(T: RootedTree) -> int:
    return sum(1 for v, p in T.parent.items() if p == v + 1)


# wire format: comma-separated tokens, b literal

def format_word(word: Iterable[Token]) -> str:
    return ",".join(str(t) for t in word)


def parse_word(text: str) -> Word:
    tokens = []
    for raw in text.split(","):
        raw = raw.strip()
        if raw == B:
            tokens.append(B)
        else:
            try:
                tokens.append(int(raw))
            except ValueError:
                raise ValueError(f"bad token {raw!r}") from None
    return tuple(tokens)
