"""Independent root-based oracle for the Igusa-Clebsch invariants.

Evaluates the classical symmetric sums over projective root pairs
directly: 15 pair-partitions for the degree-2 invariant, 10 triple
splits for degree 4, 60 split+matching terms for degree 6, and the full
product of squared differences for the discriminant.  Slow but written
straight from the definitions, with no shared code with the package.
"""

import itertools
from fractions import Fraction


def _pair_partitions(idx):
    seen = set()
    for p in itertools.permutations(idx):
        key = tuple(sorted(tuple(sorted((p[2 * i], p[2 * i + 1])))
                           for i in range(3)))
        if key not in seen:
            seen.add(key)
            yield key


def _triple_splits(idx):
    seen = set()
    for comb in itertools.combinations(idx, 3):
        rest = tuple(sorted(set(idx) - set(comb)))
        key = tuple(sorted([comb, rest]))
        if key not in seen:
            seen.add(key)
            yield comb, rest


def invariants_from_root_pairs(pairs, lead):
    """(I2, I4, I6, I10) from six projective roots (alpha_i : beta_i)."""
    idx = tuple(range(6))

    def d(i, j):
        (a1, b1), (a2, b2) = pairs[i], pairs[j]
        return a1 * b2 - a2 * b1

    def tri(t):
        i, j, k = t
        return d(i, j) ** 2 * d(j, k) ** 2 * d(k, i) ** 2

    I2 = lead**2 * sum(
        d(i, j) ** 2 * d(k, l) ** 2 * d(m, n) ** 2
        for (i, j), (k, l), (m, n) in _pair_partitions(idx))
    I4 = lead**4 * sum(tri(t1) * tri(t2) for t1, t2 in _triple_splits(idx))
    I6 = lead**6 * sum(
        tri(t1) * tri(t2)
        * d(t1[0], p[0]) ** 2 * d(t1[1], p[1]) ** 2 * d(t1[2], p[2]) ** 2
        for t1, t2 in _triple_splits(idx)
        for p in itertools.permutations(t2))
    I10 = lead**10
    for i, j in itertools.combinations(idx, 2):
        I10 *= d(i, j) ** 2
    return I2, I4, I6, I10


def rosenhain_root_pairs(l1, l2, l3):
    """Projective roots of X(X-1)(X-l1)(X-l2)(X-l3) as a binary sextic."""
    finite = [Fraction(0), Fraction(1), Fraction(l1), Fraction(l2), Fraction(l3)]
    pairs = [(v, Fraction(1)) for v in finite] + [(Fraction(1), Fraction(0))]
    return pairs, Fraction(-1)
