"""Brute-force oracles that share no code with the package's algorithms."""

from itertools import combinations, product


def edge_triples(n, a, b):
    return [(i, j, g) for i in range(1, n + 1) for j in range(i + 1, n + 1) for g in range(a, b + 1)]


def is_forest(n, edges):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i, j, _ in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


def circle_gain_by_walk(edges):
    """Gain of an edge set that forms a single cycle, or None if it is not one."""
    deg = {}
    for i, j, _ in edges:
        deg[i] = deg.get(i, 0) + 1
        deg[j] = deg.get(j, 0) + 1
    if any(d != 2 for d in deg.values()):
        return None
    remaining = list(edges)
    start = remaining[0][0]
    v = start
    total = 0
    while remaining:
        for k, (i, j, g) in enumerate(remaining):
            if i == v:
                total += g
                v = j
                break
            if j == v:
                total -= g
                v = i
                break
        else:
            return None
        remaining.pop(k)
    return total if v == start else None


def brute_balanced_circles(n, edges):
    out = []
    for size in range(2, n + 1):
        for sub in combinations(edges, size):
            g = circle_gain_by_walk(sub)
            if g == 0:
                out.append(frozenset(sub))
    return out


def brute_nbc_sets(n, edges, order=None):
    """NBC sets by testing every edge subset.  ``order`` ranks edges (default: list order)."""
    rank = {e: k for k, e in enumerate(order or edges)}
    bcs = [c - {min(c, key=rank.__getitem__)} for c in brute_balanced_circles(n, edges)]
    out = []
    for size in range(n):
        for sub in combinations(edges, size):
            s = frozenset(sub)
            if is_forest(n, sub) and not any(bc <= s for bc in bcs):
                out.append(s)
    return out


def finite_field_chi(n, edges, q):
    """Points of (Z/q)^n off every hyperplane x_j - x_i = g (mod q)."""
    count = 0
    for x in product(range(q), repeat=n):
        if all((x[j - 1] - x[i - 1] - g) % q for i, j, g in edges):
            count += 1
    return count


def brute_rooted_forests(n):
    """All parent maps on [n] without cycles, as dicts child -> parent."""
    out = []
    for choice in product(range(n + 1), repeat=n):
        if any(choice[v - 1] == v for v in range(1, n + 1)):
            continue
        ok = True
        for v in range(1, n + 1):
            seen = set()
            w = v
            while w:
                if w in seen:
                    ok = False
                    break
                seen.add(w)
                w = choice[w - 1]
            if not ok:
                break
        if ok:
            out.append({v: choice[v - 1] for v in range(1, n + 1) if choice[v - 1]})
    return out
