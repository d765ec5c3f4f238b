"""Independent oracles the tests compare the engine against.

Everything here is deliberately naive: brute-force filters, literal
walk-the-circle predicates, unpivoted clique search.  None of it shares
code with the package.
"""

from fractions import Fraction
from itertools import combinations
from math import comb


def cycle_size(n, d):
    return n + 2 * d + 1


def brute_force_objects(n, d):
    """All (d+1)-subsets of the cycle with no neighbouring pair."""
    N = cycle_size(n, d)
    out = []
    for sub in combinations(range(1, N + 1), d + 1):
        ok = True
        for a, b in combinations(sub, 2):
            gap = (b - a) % N
            if gap in (1, N - 1):
                ok = False
                break
        if ok:
            out.append(sub)
    return tuple(out)


def count_formula(n, d):
    N = cycle_size(n, d)
    value = Fraction(N, N - d - 1) * comb(N - d - 1, d + 1)
    assert value.denominator == 1
    return int(value)


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def rotations(seq):
    return [seq[i:] + seq[:i] for i in range(len(seq))]


def intertwines_oracle(x, y, N):
    """Strict alternating chain x_0 < y_0 < x_1 < ... < x_d < y_d < x_0,
    tried over every pair of rotations of the two labellings."""
    if set(x) & set(y):
        return False
    for xs in rotations(tuple(x)):
        base = xs[0]
        for ys in rotations(tuple(y)):
            offsets = []
            for xi, yi in zip(xs, ys):
                offsets.append((xi - base) % N)
                offsets.append((yi - base) % N)
            if all(a < b for a, b in zip(offsets, offsets[1:])):
                return True
    return False


def hom_oracle(x, y, n, d):
    """Nonzero maps go to the one-step-clockwise translate's intertwiner."""
    N = cycle_size(n, d)
    back = tuple(sorted(v % N + 1 for v in y))
    return 1 if intertwines_oracle(x, back, N) else 0


def maximal_cliques_simple(neighbors):
    """Every maximal clique, by unpivoted recursive extension."""
    found = set()
    vertices = range(len(neighbors))

    def grow(clique, candidates):
        extended = False
        for v in candidates:
            extended = True
            grow(clique | {v}, candidates & neighbors[v] & set(range(v + 1, len(neighbors))))
        if not extended:
            full = clique
            if all(
                not (neighbors[u] >= full)
                for u in vertices
                if u not in full
            ):
                found.add(tuple(sorted(full)))

    grow(frozenset(), set(vertices))
    return sorted(found)
