"""Local binary search trees and two statistics that may or may not agree.

Left LBS trees rotate onto non-increasing trees.  On left LBS trees, edges
(i+1, i) are compared with edges (n, i); on non-increasing trees, vertices
whose smallest child sits right below them are compared with children of n.
"""

from nbcactivity import lbs


def main():
    for n in range(1, 7):
        print(f"n={n}: {len(lbs.enumerate_lbs(n))} LBS trees, {len(lbs.enumerate_lbs(n, left_only=True))} left")
    print()
    for variant in ("literal", "restricted"):
        for n in range(3, 7):
            rep = lbs.conjecture_report(n, variant)
            mark = "equal" if rep["equal"] else "DIFFER"
            print(f"{variant:>10} n={n}: {rep['dist_consecutive']} vs {rep['dist_top']}  {mark}")
        print()


if __name__ == "__main__":
    main()
