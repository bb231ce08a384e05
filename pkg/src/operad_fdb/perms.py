"""Permutations as tuples: p[i] is the image of slot i (0-indexed).

Actions are right actions throughout: (x . p) . q == x . pcomp(p, q).
"""
from functools import lru_cache
from itertools import permutations


def identity(n):
    return tuple(range(n))


def pcomp(p, q):
    """Function composition p o q (apply q first when read as slot lookup)."""
    return tuple(p[i] for i in q)


def pinv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


@lru_cache(maxsize=None)
def all_perms(n):
    return tuple(permutations(range(n)))


def transpositions(n):
    """Adjacent transpositions; generators of the symmetric group."""
    out = []
    for i in range(n - 1):
        t = list(range(n))
        t[i], t[i + 1] = t[i + 1], t[i]
        out.append(tuple(t))
    return tuple(out)


def block_perm(sigma, hs, ms):
    """Block permutation <sigma; h_1..h_k> on sum(ms) slots.

    ms are the source block sizes.  Target block i is the source block
    sigma[i] rearranged by hs[i] (so hs[i] must be a permutation of
    ms[sigma[i]] slots).  Pinned so that operad equivariance reads
    compose(b . sigma; a_{sigma(i)} . h_i) == compose(b; a) . block_perm.
    """
    offs = [0]
    for m in ms:
        offs.append(offs[-1] + m)
    out = []
    for i in range(len(ms)):
        src = sigma[i]
        for j in range(ms[src]):
            out.append(offs[src] + hs[i][j])
    return tuple(out)
