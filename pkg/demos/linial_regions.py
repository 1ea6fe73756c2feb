"""Count regions of the Linial arrangement x_j - x_i = 1 without any geometry.

The NBC sets of K_n^[1,1] are enumerated, each basis gets its interior
activity, and the activity polynomial alpha(x) is read off.  alpha(2) is the
number of regions, alpha(0) the number of bounded ones.  The same vector then
shows up as the children-of-n statistic on non-increasing trees, and the
bounded count matches a closed formula.
"""

from nbcactivity import (
    ForestClass,
    IntPolynomial,
    athanasiadis_bounded,
    complete_interval,
    enumerate_nbc_sets,
    nbc_activity_vector,
    tree_statistic_vector,
)


def main():
    print(f"{'n':>2} {'NBC sets':>9} {'activity vector':<24} {'regions':>8} {'bounded':>8} {'formula':>8}")
    for n in range(2, 6):
        G = complete_interval(n, 1, 1)
        vector = nbc_activity_vector(G)
        alpha = IntPolynomial(vector)
        print(
            f"{n:>2} {len(enumerate_nbc_sets(G)):>9} {str(vector):<24} "
            f"{alpha(2):>8} {alpha(0):>8} {athanasiadis_bounded(n):>8}"
        )

    print("\nnon-increasing trees, distribution of color-1 children of n:")
    for n in range(2, 7):
        print(f"  n={n}: {tree_statistic_vector(n, 1, ForestClass('non-increasing', 1))}")


if __name__ == "__main__":
    main()
