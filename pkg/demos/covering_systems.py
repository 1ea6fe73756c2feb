"""A small covering system, its activity, and a system that has none.

The cardinality vector alone determines the activity vector through a
triangular recursion.  When the recursion produces a negative entry no
activity can exist, which is the case for the second system below.
"""

from nbcactivity import covering
from nbcactivity.verify import two_pure_counterexample, worked_example


def show(name, sys, act=None):
    card = covering.cardinality_vector(sys)
    derived = covering.activity_vector_from_cardinality(card, sys.rank)
    print(f"{name}: {len(sys.family)} members, {len(sys.bases)} bases")
    print(f"  cardinality vector       {card}")
    print(f"  activity from cardinality {derived.vector} feasible={derived.feasible}")
    if act is not None:
        print(f"  assignment valid?        {bool(covering.verify_activity(sys, act))}")
        print(f"  activity polynomial      {covering.activity_polynomial(sys, act)}")
    found = sum(1 for _ in covering.all_activities(sys))
    print(f"  activities found by brute force: {found}\n")


def main():
    sys, act = worked_example()
    show("five-element example", sys, act)
    for b in sys.bases:
        print(f"    a({sorted(b)}) = {sorted(act[b])}")
    print()
    show("two-pure system", two_pure_counterexample())


if __name__ == "__main__":
    main()
