import pytest

from nbcactivity.forest import ForestClass, classify, enumerate_forests
from nbcactivity.gaingraph import complete_interval
from nbcactivity.lbs import (
    LbsTree,
    conjecture_report,
    enumerate_lbs,
    first_left_ancestor,
    lbs_consecutive,
    lbs_top,
    rotate_to_nonincreasing,
    rotation_rewiring,
)
from nbcactivity.nbc import nbc_activity_vector, region_counts

NONINC = ForestClass("non-increasing", 1)

BIG = LbsTree.from_children(
    10, 7, {7: (2, None), 2: (None, 5), 5: (4, 9), 9: (1, None), 1: (None, 8), 4: (3, 6), 6: (None, 10)}
)


def test_counts():
    assert [len(enumerate_lbs(n)) for n in range(1, 7)] == [1, 2, 7, 36, 246, 2104]
    assert [len(enumerate_lbs(n, left_only=True)) for n in range(1, 7)] == [1, 1, 3, 14, 90, 738]


@pytest.mark.parametrize("n", range(1, 6))
def test_lbs_count_is_linial_region_count(n):
    assert len(enumerate_lbs(n)) == region_counts(complete_interval(n, 1, 1))[0]


def test_validation():
    with pytest.raises(ValueError):
        LbsTree.from_children(2, 1, {1: (2, None)})
    with pytest.raises(ValueError):
        LbsTree.from_children(2, 2, {2: (None, 1)})
    with pytest.raises(ValueError):
        LbsTree.from_children(3, 2, {2: (1, None)})


def test_rewiring_example():
    assert BIG.is_left
    assert sorted(rotation_rewiring(BIG)) == [((1, 8), (9, 8)), ((2, 5), (7, 5)), ((4, 6), (5, 6)),
                                      ((5, 9), (7, 9)), ((6, 10), (5, 10))]
    assert first_left_ancestor(BIG, 10) == 5
    assert first_left_ancestor(BIG, 7) == 7
    F = rotate_to_nonincreasing(BIG)
    assert F.is_tree and classify(F, NONINC)


@pytest.mark.parametrize("n", range(1, 7))
def test_rotation_is_bijection(n):
    left = enumerate_lbs(n, left_only=True)
    images = {rotate_to_nonincreasing(T) for T in left}
    assert images == set(enumerate_forests(n, 1, NONINC, spanning_only=True))


def test_rotation_needs_left_tree():
    T = LbsTree.from_children(2, 1, {1: (None, 2)})
    with pytest.raises(ValueError):
        rotate_to_nonincreasing(T)


def test_statistics():
    T = LbsTree.from_children(3, 3, {3: (2, None), 2: (1, None)})
    assert lbs_consecutive(T) == 2
    assert lbs_top(T) == 1


def test_json_roundtrip():
    assert LbsTree.from_json(BIG.to_json()) == BIG
    assert BIG.to_json()["nodes"]["7"] == {"left": 2, "right": None}


def test_conjecture_n3():
    lit = conjecture_report(3, "literal")
    assert lit["dist_consecutive"] == [1, 1, 1]
    assert lit["dist_top"] == [1, 2, 0]
    assert not lit["equal"]
    res = conjecture_report(3, "restricted")
    assert res["dist_consecutive"] == res["dist_top"] == [1, 1, 1]
    assert res["equal"]


@pytest.mark.parametrize("n", range(2, 7))
def test_restricted_variant_holds(n):
    rep = conjecture_report(n, "restricted")
    assert rep["equal"]
    if n <= 5:
        assert rep["dist_top"] == list(nbc_activity_vector(complete_interval(n, 1, 1)))


@pytest.mark.parametrize("n", range(2, 7))
def test_literal_consecutive_matches_rotated_top(n):
    rep = conjecture_report(n, "literal")
    assert rep["dist_consecutive"] == rep["dist_top_rotated"]


def test_unknown_variant():
    with pytest.raises(ValueError):
        conjecture_report(3, "loose")
