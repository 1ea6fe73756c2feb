from itertools import combinations

import pytest

from nbcactivity import covering
from nbcactivity.covering import (
    CoveringSystem,
    activity_vector,
    activity_vector_from_cardinality,
    all_activities,
    cardinality_vector,
    check_cardinality_identity,
    disjoint_union,
    filter_above,
    make_assignment,
    restrict_to_bases,
    verify_activity,
    verify_covering,
)
from nbcactivity.polycount import IntPolynomial
from nbcactivity.verify import worked_example, two_pure_counterexample


def fs(*xs):
    return frozenset(xs)


@pytest.fixture
def worked():
    return worked_example()


def boolean_system(b):
    b = frozenset(b)
    fam = [frozenset(c) for r in range(len(b) + 1) for c in combinations(sorted(b), r)]
    return CoveringSystem(tuple(b), frozenset(fam), len(b))


def test_worked_is_covering(worked):
    sys, _ = worked
    assert verify_covering(sys)
    assert len(sys.family) == 17
    assert len(sys.bases) == 4


def test_trivial_coverings():
    assert verify_covering(CoveringSystem((), frozenset([fs()]), 0))
    assert verify_covering(CoveringSystem((1, 2), frozenset([fs(1, 2), fs(1)]), 2))


def test_covering_failures():
    v = verify_covering(CoveringSystem((1, 2), frozenset([fs(1, 2), fs(2), fs()]), 2))
    assert not v and v.reason == "uncoverable" and v.witness == fs()
    v = verify_covering(CoveringSystem((1, 2, 3), frozenset([fs(1, 2, 3), fs(1, 2)]), 2))
    assert not v and v.reason == "oversized"


def test_worked_activity(worked):
    sys, act = worked
    assert verify_activity(sys, act)
    assert activity_vector(sys, act) == (1, 0, 2, 1, 0)
    assert covering.activity_polynomial(sys, act) == IntPolynomial([1, 0, 2, 1])


def test_two_pure_has_no_activity():
    sys = two_pure_counterexample()
    assert verify_covering(sys)
    assert list(all_activities(sys)) == []


def test_boolean_interval_activity():
    sys = boolean_system({1, 2, 3})
    assert verify_activity(sys, {fs(1, 2, 3): fs(1, 2, 3)})


def test_activity_failure_kinds(worked):
    sys, act = worked
    bad = dict(act)
    bad[fs(2, 3, 4, 5)] = fs(2)  # {3,4,5} is not in the family
    v = verify_activity(sys, bad)
    assert not v and v.reason == "bad-interval"
    bad = dict(act)
    bad[fs(1, 2, 3, 4)] = fs(1)
    v = verify_activity(sys, bad)
    assert not v and v.reason == "uncovered"
    bad = dict(act)
    bad[fs(1, 3, 4, 5)] = fs(3, 4, 5, 1)
    assert not verify_activity(sys, bad)
    with pytest.raises(ValueError):
        verify_activity(sys, {fs(9): fs()})


def test_doubly_covered():
    sys = CoveringSystem((1, 2, 3), frozenset([fs(1, 2), fs(1, 3), fs(1), fs(2), fs(3), fs()]), 2)
    v = verify_activity(sys, {fs(1, 2): fs(1, 2), fs(1, 3): fs(1, 3)})
    assert not v and v.reason == "doubly-covered" and v.witness in (fs(), fs(1))


def test_cardinality_vectors(worked):
    assert cardinality_vector(worked[0]) == (0, 1, 5, 7, 4)
    assert cardinality_vector(CoveringSystem((), frozenset([fs()]), 0)) == (1,)
    assert cardinality_vector(two_pure_counterexample()) == (1, 4, 2)


def test_activity_from_cardinality():
    assert activity_vector_from_cardinality((0, 1, 5, 7, 4), 4) == ((1, 0, 2, 1, 0), True)
    assert activity_vector_from_cardinality((1, 4, 2), 2) == ((-1, 2, 1), False)
    assert activity_vector_from_cardinality((1,), 0) == ((1,), True)
    with pytest.raises(ValueError):
        activity_vector_from_cardinality((1, 2), 2)


def test_cardinality_identity(worked):
    sys, act = worked
    assert check_cardinality_identity(sys, act)
    # x^4 (1 + 2(1/x+1)^2 + (1/x+1)^3) expanded by hand
    x = IntPolynomial.x()
    hand = x**4 + 2 * x**2 * (1 + x) ** 2 + x * (1 + x) ** 3
    assert hand == IntPolynomial([0, 1, 5, 7, 4])
    assert check_cardinality_identity(CoveringSystem((), frozenset([fs()]), 0), {fs(): fs()})


def test_restrict_to_bases(worked):
    sys, act = worked
    s2, a2 = restrict_to_bases(sys, act, [fs(2, 3, 4, 5)])
    assert s2.family == frozenset([fs(2, 3, 4, 5)])
    assert a2 == {fs(2, 3, 4, 5): fs()}
    assert activity_vector(s2, a2) == (1, 0, 0, 0, 0)
    s3, a3 = restrict_to_bases(sys, act, [fs(1, 2, 3, 4)])
    assert s3.family == frozenset([fs(1, 2, 3, 4), fs(2, 3, 4), fs(1, 2, 4), fs(2, 4)])
    assert verify_activity(s3, a3)
    s4, a4 = restrict_to_bases(sys, act, sys.bases)
    assert s4 == sys and a4 == act
    with pytest.raises(ValueError):
        restrict_to_bases(sys, act, [])
    with pytest.raises(ValueError):
        restrict_to_bases(sys, act, [fs(1, 2, 3)])


def test_disjoint_union_roundtrip(worked):
    sys, act = worked
    half1, half2 = sys.bases[:2], sys.bases[2:]
    s1, a1 = restrict_to_bases(sys, act, half1)
    s2, a2 = restrict_to_bases(sys, act, half2)
    u, au = disjoint_union(s1, a1, s2, a2)
    assert u == sys and au == act
    assert verify_activity(u, au)
    assert [x + y for x, y in zip(activity_vector(s1, a1), activity_vector(s2, a2))] == list(activity_vector(sys, act))
    with pytest.raises(ValueError):
        disjoint_union(sys, act, s1, a1)


def test_disjoint_union_with_empty(worked):
    sys, act = worked
    empty = CoveringSystem(sys.ground, frozenset(), sys.rank)
    u, au = disjoint_union(sys, act, empty, {})
    assert u == sys and au == act


def test_filter_above(worked):
    sys, act = worked
    sx, ax = filter_above(sys, act, fs(2, 4))
    assert sx.family == frozenset([fs(2, 4), fs(1, 2, 4), fs(2, 3, 4), fs(1, 2, 3, 4), fs(2, 3, 4, 5)])
    assert verify_activity(sx, ax)
    with pytest.raises(ValueError):
        filter_above(sys, act, fs())
    s13, a13 = filter_above(sys, act, fs(1, 3))
    assert set(s13.bases) == {fs(1, 2, 3, 4), fs(1, 2, 3, 5), fs(1, 3, 4, 5)}
    assert a13 == {fs(1, 2, 3, 4): fs(), fs(1, 2, 3, 5): fs(5), fs(1, 3, 4, 5): fs(4, 5)}
    assert verify_activity(s13, a13)
    with pytest.raises(ValueError):
        filter_above(sys, act, fs(5))


def test_filter_above_every_member(worked):
    sys, act = worked
    for x in sys.family:
        assert verify_activity(*filter_above(sys, act, x))


def small_systems():
    worked, _ = worked_example()
    forests_k3 = [fs(), fs("a"), fs("b"), fs("c"), fs("a", "b"), fs("a", "c"), fs("b", "c")]
    yield CoveringSystem(("a", "b", "c"), frozenset(forests_k3), 2)
    yield boolean_system({1, 2, 3})
    yield CoveringSystem((1, 2, 3), frozenset([fs(1, 2), fs(1, 3), fs(1), fs(2), fs(3)]), 2)
    yield CoveringSystem((1, 2, 3, 4), frozenset([fs(1, 2), fs(3, 4), fs(1), fs(3), fs(4)]), 2)
    yield worked


@pytest.mark.parametrize("sys", list(small_systems()))
def test_all_activities_share_vector(sys):
    """Every activity of a system has the same vector, and it is the one derived from C."""
    vectors = {activity_vector(sys, a) for a in all_activities(sys)}
    derived = activity_vector_from_cardinality(cardinality_vector(sys), sys.rank)
    if vectors:
        assert vectors == {derived.vector}
        for act in all_activities(sys):
            alpha = covering.activity_polynomial(sys, act)
            assert alpha(1) == len(sys.bases)
            assert alpha(2) == len(sys.family)
            assert alpha(0) == sum(1 for b in sys.bases if not act[b])
            assert check_cardinality_identity(sys, act)
    else:
        assert not derived.feasible or verify_covering(sys)


def test_forest_system_has_many_activities():
    sys = next(small_systems())
    assert len(list(all_activities(sys))) > 1


def test_json_roundtrip(worked):
    sys, act = worked
    data = covering.to_json(sys, act)
    assert data["activity"]["1,2,3,4"] == [1, 3]
    s2, a2 = covering.from_json(data)
    assert s2 == sys and a2 == act
    with pytest.raises(ValueError):
        covering.from_json({"rank": 1, "ground": [1], "family": [[1]], "activity": {"2": []}})


def test_make_assignment():
    assert make_assignment({(1, 2): [1]}) == {fs(1, 2): fs(1)}
