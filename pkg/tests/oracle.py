"""Deliberately naive reference implementations used to derive frozen test values.

Nothing here shares code with the package beyond QPolynomial construction.
"""
import itertools

from signed_mahonian.cycring import QPolynomial


def f_chain(r, n):
    """All colored integers of [n] listed in increasing F-order."""
    return [(v, c) for c in range(r - 1, -1, -1) for v in range(1, n + 1)]


def f_rank(r, n):
    return {e: i for i, e in enumerate(f_chain(r, n))}


def naive_inv(w):
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def naive_maj(w):
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def naive_majF(values, colors, r):
    n = max(values, default=0)
    rank = f_rank(r, n)
    ent = list(zip(values, colors))
    return sum(i for i in range(1, len(ent)) if rank[ent[i - 1]] > rank[ent[i]])


def naive_fmaj(values, colors, r):
    return r * naive_majF(values, colors, r) + sum(colors)


def group(r, n):
    for sigma in itertools.permutations(range(1, n + 1)):
        for z in itertools.product(range(r), repeat=n):
            yield sigma, z


def as_function(sigma, z, r):
    """The colored permutation as a map on pairs (value, color)."""
    return lambda x: (sigma[x[0] - 1], (z[x[0] - 1] + x[1]) % r)


def naive_product(a, b, r):
    """Window notation of a o b, read off by applying the maps to (i, 0)."""
    fa, fb = as_function(*a, r), as_function(*b, r)
    out = [fa(fb((i, 0))) for i in range(1, len(a[0]) + 1)]
    return tuple(v for v, _ in out), tuple(c for _, c in out)


def contains(values, colors, word):
    """Colored word (list of (v, c)) occurs as a subsequence."""
    it = iter(zip(values, colors))
    return all(any(e == w for e in it) for w in word)


def signed_sum(r, n, members, epsilon, h, stat=None):
    hist = {}
    for sigma, z in members:
        e = stat(sigma, z) if stat else naive_fmaj(sigma, z, r)
        key = (e, (h * sum(z)) % r)
        hist[key] = hist.get(key, 0) + epsilon ** naive_inv(sigma)
    return QPolynomial.from_histogram(r, hist)


def naive_dmaj(sigma, z, r):
    zz = tuple(z[:-1]) + (0,)
    return naive_fmaj(sigma, zz, r)
