"""No-broken-circuit sets of a gain graph and their interior activity.

An NBC set here is a forest of the underlying multigraph that contains no
broken circuit.  Forests are exactly the independent sets of the semimatroid
of the arrangement: an unbalanced circle has empty intersection and a balanced
one is dependent (and contains a broken circuit anyway).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .covering import CoveringSystem, Verdict
from .gaingraph import GainEdge, GainGraph, broken_circuits, circle_gain, fundamental_circle
from .polycount import ActivityVector, IntPolynomial, activity_poly_from_vector


@dataclass(frozen=True)
class NbcBasisRecord:
    basis: tuple[GainEdge, ...]
    interior_active: frozenset[GainEdge]
    exterior_active: frozenset[GainEdge] = frozenset()

    @property
    def activity(self) -> int:
        return len(self.interior_active)


def _nbc_index_sets(G: GainGraph) -> list[tuple[int, ...]]:
    """NBC sets as sorted tuples of edge positions, in lexicographic order."""
    m = len(G.edges)
    ends = [(e.tail - 1, e.head - 1) for e in G.edges]
    by_max: list[list[int]] = [[] for _ in range(m)]
    for bc in broken_circuits(G):
        idx = [G.position(e) for e in bc]
        mask = 0
        for i in idx:
            mask |= 1 << i
        by_max[max(idx)].append(mask)

    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(start: int, mask: int, comp: list[int]):
        out.append(tuple(chosen))
        for e in range(start, m):
            u, v = ends[e]
            cu, cv = comp[u], comp[v]
            if cu == cv:
                continue
            new_mask = mask | (1 << e)
            if any(bc & new_mask == bc for bc in by_max[e]):
                continue
            new_comp = [cu if c == cv else c for c in comp]
            chosen.append(e)
            extend(e + 1, new_mask, new_comp)
            chosen.pop()

    extend(0, 0, list(range(G.n)))
    return out


def enumerate_nbc_sets(G: GainGraph) -> list[tuple[GainEdge, ...]]:
    """All NBC sets (including the empty set), each as an order-sorted tuple."""
    return [tuple(G.edges[i] for i in s) for s in _nbc_index_sets(G)]


def _components(n: int, edges: Iterable[GainEdge]) -> list[int]:
    comp = list(range(n + 1))
    for e in edges:
        a, b = comp[e.tail], comp[e.head]
        if a != b:
            comp = [a if c == b else c for c in comp]
    return comp


def _require_spanning_tree(G: GainGraph, B: Iterable[GainEdge]) -> tuple[GainEdge, ...]:
    B = tuple(B)
    if len(B) != G.n - 1 or len(set(B)) != len(B):
        raise ValueError("not a spanning tree: wrong number of edges")
    comp = _components(G.n, B)
    if len({comp[v] for v in range(1, G.n + 1)}) != 1:
        raise ValueError("not a spanning tree: disconnected")
    return B


def interior_activity(G: GainGraph, B: Iterable[GainEdge]) -> frozenset[GainEdge]:
    """Edges of ``B`` that are order-minimal in their fundamental cocircuit.

    The cocircuit of ``e`` in ``B`` is every edge of ``G`` that reconnects the
    two components of ``B - e``.
    """
    B = _require_spanning_tree(G, B)
    active = set()
    for e in B:
        comp = _components(G.n, (f for f in B if f != e))
        side = comp[e.tail]
        cocircuit = [f for f in G.edges if (comp[f.tail] == side) != (comp[f.head] == side)]
        if G.min_edge(cocircuit) == e:
            active.add(e)
    return frozenset(active)


def _require_connected(G: GainGraph):
    if not G.is_connected():
        raise ValueError("underlying graph is disconnected")


def nbc_bases(G: GainGraph, nbc_sets: list[tuple[GainEdge, ...]] | None = None) -> list[NbcBasisRecord]:
    _require_connected(G)
    if nbc_sets is None:
        nbc_sets = enumerate_nbc_sets(G)
    return [NbcBasisRecord(B, interior_activity(G, B)) for B in nbc_sets if len(B) == G.n - 1]


def nbc_activity_vector(G: GainGraph) -> ActivityVector:
    counts = [0] * G.n
    for rec in nbc_bases(G):
        counts[rec.activity] += 1
    return tuple(counts)


def characteristic_poly(G: GainGraph, nbc_sets=None) -> tuple[IntPolynomial, IntPolynomial]:
    """``(chi, chi / t)`` from the NBC expansion ``sum_A (-1)^|A| t^(n-|A|)``."""
    _require_connected(G)
    if nbc_sets is None:
        nbc_sets = enumerate_nbc_sets(G)
    coeffs = [0] * (G.n + 1)
    for A in nbc_sets:
        coeffs[G.n - len(A)] += (-1) ** len(A)
    full = IntPolynomial(coeffs)
    return full, full.shift_down(1)


def activity_from_characteristic(G: GainGraph, nbc_sets=None) -> IntPolynomial:
    """``(-1)^(n-1) chi_reduced(1 - x)``, which should equal the activity polynomial."""
    _, reduced = characteristic_poly(G, nbc_sets)
    one_minus_x = IntPolynomial((1, -1))
    return (-1) ** (G.n - 1) * reduced.compose(one_minus_x)


def region_counts(G: GainGraph) -> tuple[int, int]:
    """``(alpha(2), alpha(0))``: numbers of regions and of bounded regions."""
    alpha = activity_poly_from_vector(nbc_activity_vector(G))
    return alpha(2), alpha(0)


def exterior_activity(G: GainGraph, B: Iterable[GainEdge]) -> frozenset[GainEdge]:
    """Non-basis edges that are minimal in a balanced fundamental circle of ``B``."""
    B = _require_spanning_tree(G, B)
    members = set(B)
    active = set()
    for e in G.edges:
        if e in members:
            continue
        c = fundamental_circle(G, B, e)
        if circle_gain(c) == 0 and G.min_edge(c.edges) == e:
            active.add(e)
    return frozenset(active)


def check_exterior_inactive(G: GainGraph, B: Iterable[GainEdge]) -> Verdict:
    ext = exterior_activity(G, B)
    if ext:
        return Verdict.failed("exterior-active", G.min_edge(ext))
    return Verdict.passed()


def is_nbc(G: GainGraph, A: Iterable[GainEdge]) -> bool:
    A = set(A)
    comp = _components(G.n, ())
    for e in G.sort_edges(A):
        if comp[e.tail] == comp[e.head]:
            return False
        a, b = comp[e.tail], comp[e.head]
        comp = [a if c == b else c for c in comp]
    return not any(bc <= A for bc in broken_circuits(G))


def nbc_covering_system(G: GainGraph):
    """NBC sets with interior activity, cast as a covering system and its activity."""
    sets = enumerate_nbc_sets(G)
    bases = nbc_bases(G, sets)
    sys = CoveringSystem(G.edges, frozenset(frozenset(s) for s in sets), G.n - 1)
    act = {frozenset(rec.basis): rec.interior_active for rec in bases}
    return sys, act


def nbc_report(G: GainGraph) -> dict:
    sets = enumerate_nbc_sets(G)
    bases = nbc_bases(G, sets)
    vector = [0] * G.n
    for rec in bases:
        vector[rec.activity] += 1
    alpha = activity_poly_from_vector(vector)
    full, reduced = characteristic_poly(G, sets)
    return {
        "n": G.n,
        "nbc_count": len(sets),
        "basis_count": len(bases),
        "activity_vector": vector,
        "alpha": list(alpha.coeffs),
        "chi_full": list(full.coeffs),
        "chi_reduced": list(reduced.coeffs),
        "regions": alpha(2),
        "bounded": alpha(0),
    }
