"""Slow, independent reference implementations used only by the tests.

Nothing here uses the bitmask grid, the exact-cover search or the canonical
form search of the library.
"""
from __future__ import annotations

import random
from itertools import permutations, product

STAR = 32


def _cells_of(w, k):
    """Explicit cells covered by ``w`` when every position splits into 2**k atoms."""
    axes = []
    for x in w:
        if x == STAR:
            axes.append(range(1 << k))
        else:
            p, primed = x >> 1, x & 1
            axes.append([a for a in range(1 << k) if ((a >> p) & 1) == primed])
    return product(*axes)


def cover_count(words, dim, k):
    """Map cell -> number of words covering it on the generic grid with ``k`` pairs."""
    cnt = {}
    for w in words:
        for cell in _cells_of(w, k):
            cnt[cell] = cnt.get(cell, 0) + 1
    return cnt


def is_partition_oracle(words, dim):
    k = 1 + max((x >> 1 for w in words for x in w if x != STAR), default=0)
    cnt = cover_count(words, dim, k)
    return len(cnt) == (1 << k) ** dim and all(n == 1 for n in cnt.values())


def random_realization(words_list, dim, rng: random.Random, size: int = 5):
    """Unions of a random dichotomy-preserving realization of several codes.

    Every pair at every position gets a random nonempty proper subset of
    ``range(size)``, its complement goes to the primed letter, the star gets
    the whole set.  The same realization is used for all codes.
    """
    pairs = 1 + max((x >> 1 for ws in words_list for w in ws for x in w if x != STAR),
                    default=0)
    f = []
    for _ in range(dim):
        tab = {}
        for p in range(pairs):
            a = set(rng.sample(range(size), rng.randint(1, size - 1)))
            tab[2 * p], tab[2 * p + 1] = a, set(range(size)) - a
        tab[STAR] = set(range(size))
        f.append(tab)
    out = []
    for ws in words_list:
        pts = set()
        for w in ws:
            pts.update(product(*(sorted(f[i][x]) for i, x in enumerate(w))))
        out.append(pts)
    return out


def ball_partition(centers, dim, r):
    """True iff the max-metric balls of radius ``r`` around ``centers`` tile Z^dim_{4r+2}."""
    n = 4 * r + 2
    seen = {}
    for c in centers:
        for off in product(range(-r, r + 1), repeat=dim):
            pt = tuple((x + o) % n for x, o in zip(c, off))
            seen[pt] = seen.get(pt, 0) + 1
    return len(seen) == n ** dim and all(v == 1 for v in seen.values())


def group_elements(dim, pairs):
    """Every (position permutation, per-position signed pair permutation)."""
    signed = []
    for perm in permutations(range(pairs)):
        for flips in product((0, 1), repeat=pairs):
            tab = {}
            for p, (q, f) in enumerate(zip(perm, flips)):
                tab[2 * p], tab[2 * p + 1] = 2 * q + f, 2 * q + 1 - f
            tab[STAR] = STAR
            signed.append(tab)
    for pos in permutations(range(dim)):
        for tabs in product(signed, repeat=dim):
            yield pos, tabs


def apply_element(g, words):
    pos, tabs = g
    return frozenset(tuple(tabs[i][w[pos[i]]] for i in range(len(pos))) for w in words)


def brute_orbit(words, dim, pairs):
    return {apply_element(g, words) for g in group_elements(dim, pairs)}


def brute_isomorphic(v, u, dim, pairs):
    target = frozenset(u)
    return any(apply_element(g, v) == target for g in group_elements(dim, pairs))


def brute_classes(codes, dim, pairs):
    """Number of orbits among ``codes`` under the full group."""
    left = {frozenset(c) for c in codes}
    n = 0
    while left:
        c = left.pop()
        left -= brute_orbit(c, dim, pairs)
        n += 1
    return n
