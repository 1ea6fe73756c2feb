"""Covering systems and their activities.

A covering system of rank ``r`` is a family of subsets of a ground set, all of
size at most ``r``, in which every member ``I`` sits below some ``r``-set ``B``
of the family with the whole interval ``[I, B]`` inside the family.  An
activity picks ``a(B) ⊆ B`` for every basis so that the intervals
``[B - a(B), B]`` partition the family.

Families are stored extensionally as frozensets of frozensets.  Ground
elements only need to be hashable and mutually orderable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Any, Hashable, Iterable, Iterator, Mapping, NamedTuple

from .polycount import ActivityVector, IntPolynomial, activity_poly_from_vector

Element = Hashable
Subset = frozenset


def _sort_key(s: frozenset) -> tuple:
    return (len(s), sorted(s))


def _canon(sets: Iterable[Iterable[Element]]) -> frozenset[frozenset]:
    return frozenset(frozenset(s) for s in sets)


def subsets(s: Iterable[Element]) -> Iterator[frozenset]:
    items = sorted(s)
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            yield frozenset(combo)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check.  Truthy iff the check passed.

    ``reason`` names the failure kind and ``witness`` holds the offending
    object (the first one found in deterministic order).
    """

    ok: bool
    reason: str | None = None
    witness: Any = None

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls) -> Verdict:
        return cls(True)

    @classmethod
    def failed(cls, reason: str, witness: Any = None) -> Verdict:
        return cls(False, reason, witness)


@dataclass(frozen=True)
class CoveringSystem:
    ground: tuple
    family: frozenset
    rank: int
    _bases: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(sorted(set(self.ground))))
        object.__setattr__(self, "family", _canon(self.family))
        bases = sorted((s for s in self.family if len(s) == self.rank), key=_sort_key)
        object.__setattr__(self, "_bases", tuple(bases))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[Element]], rank: int, ground: Iterable[Element] | None = None):
        family = _canon(sets)
        if ground is None:
            ground = set().union(*family) if family else set()
        return cls(tuple(ground), family, rank)

    @property
    def bases(self) -> tuple[frozenset, ...]:
        """Rank-sized members, sorted by their sorted element lists."""
        return self._bases

    def sorted_family(self) -> list[frozenset]:
        return sorted(self.family, key=_sort_key)


Assignment = Mapping[frozenset, frozenset]


def make_assignment(pairs: Mapping[Iterable[Element], Iterable[Element]]) -> dict[frozenset, frozenset]:
    return {frozenset(b): frozenset(a) for b, a in pairs.items()}


def verify_covering(sys: CoveringSystem) -> Verdict:
    for s in sys.sorted_family():
        if len(s) > sys.rank:
            return Verdict.failed("oversized", s)
        if not s <= set(sys.ground):
            return Verdict.failed("outside-ground", s)
    family = sys.family
    for s in sys.sorted_family():
        for b in sys.bases:
            if s <= b and all((s | extra) in family for extra in subsets(b - s)):
                break
        else:
            return Verdict.failed("uncoverable", s)
    return Verdict.passed()


def verify_activity(sys: CoveringSystem, act: Assignment) -> Verdict:
    """Check that the intervals ``[B - a(B), B]`` partition the family.

    Raises ``ValueError`` when an assignment key is not a basis.
    """
    basis_set = set(sys.bases)
    for key in act:
        if frozenset(key) not in basis_set:
            raise ValueError(f"assignment key {sorted(key)} is not a basis")
    covered: set[frozenset] = set()
    for b in sys.bases:
        if b not in act:
            return Verdict.failed("unassigned-basis", b)
        active = frozenset(act[b])
        if not active <= b:
            return Verdict.failed("bad-interval", b)
        for removed in subsets(active):
            z = b - removed
            if z not in sys.family:
                return Verdict.failed("bad-interval", b)
            if z in covered:
                return Verdict.failed("doubly-covered", z)
            covered.add(z)
    if len(covered) != len(sys.family):
        for s in sys.sorted_family():
            if s not in covered:
                return Verdict.failed("uncovered", s)
    return Verdict.passed()


def cardinality_vector(sys: CoveringSystem) -> ActivityVector:
    counts = [0] * (sys.rank + 1)
    for s in sys.family:
        counts[len(s)] += 1
    return tuple(counts)


def activity_vector(sys: CoveringSystem, act: Assignment) -> ActivityVector:
    """Count bases by the size of their active set."""
    counts = [0] * (sys.rank + 1)
    for b in sys.bases:
        counts[len(act[b])] += 1
    return tuple(counts)


class ActivityDerivation(NamedTuple):
    vector: ActivityVector
    feasible: bool


def activity_vector_from_cardinality(card: Iterable[int], rank: int) -> ActivityDerivation:
    """Recover the activity vector from the cardinality vector.

    Uses ``a_r = c_0`` and ``a_{r-i} = c_i - sum_{j>r-i} a_j C(j, r-i)``.  A
    negative entry means the system admits no activity; the computed vector
    is still returned with ``feasible=False``.
    """
    card = tuple(card)
    if len(card) != rank + 1:
        raise ValueError(f"cardinality vector has {len(card)} entries, expected {rank + 1}")
    a = [0] * (rank + 1)
    a[rank] = card[0]
    for i in range(1, rank + 1):
        k = rank - i
        a[k] = card[i] - sum(a[j] * comb(j, k) for j in range(k + 1, rank + 1))
    return ActivityDerivation(tuple(a), all(v >= 0 for v in a))


def check_cardinality_identity(sys: CoveringSystem, act: Assignment) -> Verdict:
    """Compare ``card(x)`` with ``x**r alpha(1/x + 1)``.

    The right side is expanded as ``sum_i a_i x**(r-i) (1 + x)**i`` so no
    rational functions appear.
    """
    card = IntPolynomial(cardinality_vector(sys))
    a = activity_vector(sys, act)
    x = IntPolynomial.x()
    rhs = IntPolynomial()
    for i, ai in enumerate(a):
        rhs = rhs + ai * x ** (sys.rank - i) * (1 + x) ** i
    if card == rhs:
        return Verdict.passed()
    return Verdict.failed("cardinality-identity", (card, rhs))


def activity_polynomial(sys: CoveringSystem, act: Assignment) -> IntPolynomial:
    return activity_poly_from_vector(activity_vector(sys, act))


def all_activities(sys: CoveringSystem) -> Iterator[dict[frozenset, frozenset]]:
    """Yield every valid activity by brute force over all choices ``a(B) ⊆ B``."""
    choices = [list(subsets(b)) for b in sys.bases]
    for combo in product(*choices):
        act = dict(zip(sys.bases, combo))
        if verify_activity(sys, act):
            yield act


def restrict_to_bases(sys: CoveringSystem, act: Assignment, chosen: Iterable[Iterable[Element]]):
    chosen = [frozenset(b) for b in chosen]
    if not chosen:
        raise ValueError("need at least one basis")
    basis_set = set(sys.bases)
    for b in chosen:
        if b not in basis_set:
            raise ValueError(f"{sorted(b)} is not a basis")
    family = {b - removed for b in chosen for removed in subsets(act[b])}
    new_sys = CoveringSystem(sys.ground, frozenset(family), sys.rank)
    return new_sys, {b: frozenset(act[b]) for b in chosen}


def disjoint_union(sys1: CoveringSystem, act1: Assignment, sys2: CoveringSystem, act2: Assignment):
    if sys1.rank != sys2.rank:
        raise ValueError("systems must have the same rank")
    if set(sys1.ground) != set(sys2.ground):
        raise ValueError("systems must share a ground set")
    overlap = sys1.family & sys2.family
    if overlap:
        raise ValueError(f"families intersect, e.g. {sorted(min(overlap, key=_sort_key))}")
    new_sys = CoveringSystem(sys1.ground, sys1.family | sys2.family, sys1.rank)
    act = {b: frozenset(act1[b]) for b in sys1.bases}
    act.update({b: frozenset(act2[b]) for b in sys2.bases})
    return new_sys, act


def filter_above(sys: CoveringSystem, act: Assignment, x: Iterable[Element]):
    """Members containing ``x``, with activity ``a(B) - x`` on bases containing ``x``."""
    x = frozenset(x)
    if x not in sys.family:
        raise ValueError(f"{sorted(x)} is not in the family")
    family = frozenset(s for s in sys.family if x <= s)
    new_sys = CoveringSystem(sys.ground, family, sys.rank)
    return new_sys, {b: frozenset(act[b]) - x for b in new_sys.bases}


# JSON wire format -----------------------------------------------------------

def basis_key(b: Iterable[Element]) -> str:
    return ",".join(str(e) for e in sorted(b))


def to_json(sys: CoveringSystem, act: Assignment | None = None) -> dict:
    out = {
        "rank": sys.rank,
        "ground": list(sys.ground),
        "family": [sorted(s) for s in sys.sorted_family()],
    }
    if act is not None:
        out["activity"] = {basis_key(b): sorted(act[b]) for b in sys.bases if b in act}
    return out


def from_json(data: Mapping | str) -> tuple[CoveringSystem, dict[frozenset, frozenset] | None]:
    if isinstance(data, str):
        data = json.loads(data)
    sys = CoveringSystem(tuple(data["ground"]), _canon(data["family"]), int(data["rank"]))
    raw = data.get("activity")
    if raw is None:
        return sys, None
    by_key = {basis_key(b): b for b in sys.bases}
    act = {}
    for key, active in raw.items():
        if key not in by_key:
            raise ValueError(f"activity key {key!r} is not a basis")
        act[by_key[key]] = frozenset(active)
    return sys, act
