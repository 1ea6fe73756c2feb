"""Prüfer and Blue codes of a rooted tree, and the statistic they exchange.

Letters equal to n in the Prüfer word count children of n.  Letters b in the
Blue word count edges (i+1, i).  Replacing n by b and decoding with the Blue
decoder is therefore a bijection trading one statistic for the other.
"""

from collections import Counter

from nbcactivity import codec


def main():
    T = codec.RootedTree.from_edges(7, [(2, 1), (6, 3), (5, 4), (2, 7), (5, 2), (6, 5)])
    print("tree edges (parent, child):", T.edges, "root", T.root)
    print("Prüfer word:", codec.format_word(codec.pruefer_encode(T)))
    print("Blue word:  ", codec.format_word(codec.blue_encode(T)))
    S = codec.swap_bijection(T)
    print("swap image: ", S.edges)
    print(f"children of 7 in T: {codec.children_of_top(T)}, (i+1,i) edges in image: {codec.consecutive_edges(S)}")

    n = 5
    top = Counter(codec.children_of_top(t) for t in codec.all_rooted_trees(n))
    cons = Counter(codec.consecutive_edges(t) for t in codec.all_rooted_trees(n))
    print(f"\nall {n ** (n - 1)} rooted trees on [{n}]:")
    print("  children of n:", [top[k] for k in range(n)])
    print("  (i+1,i) edges:", [cons[k] for k in range(n)])


if __name__ == "__main__":
    main()
