"""Twin-pair-free partition codes in dimension four over {a, a', b, b', *}.

Every such code contains, up to isomorphism, one of two parity seeds: a pair
of proper words or a pair of one-star words that are dichotomous at every
non-star position but the last.  We fix a seed, then complete it to an exact
cover of the generic two-pair grid, using a prescribed number of words per
star count and never placing a word that forms a twin pair.
"""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, product

from .core import STAR, AtomGrid, Code, Word, code, format_word, is_partition_code, twin_pairs
from .cover import exact_covers
from .iso import IsoClass, canonical_key, classify
from .parallel import pmap

DIM = 4
PAIRS = 2

SEEDS: dict[int, Code] = {
    0: code("aaaa AAAa"),
    1: code("aaa* AAA*"),
}


def compositions(k: int, d: int = DIM) -> list[tuple[int, ...]]:
    """Vectors ``x`` with ``sum(x) == k`` and ``sum(x[i] * 2**i) == 2**d``.

    ``x[i]`` counts the words with ``i`` stars; a word with ``i`` stars has
    measure ``2**i``.  Words with ``d`` stars are excluded.
    """
    out = []

    def rec(i, left_k, left_m, acc):
        if i < 0:
            if left_k == 0 and left_m == 0:
                out.append(tuple(reversed(acc)))
            return
        w = 1 << i
        for n in range(min(left_k, left_m // w) + 1):
            acc.append(n)
            rec(i - 1, left_k - n, left_m - n * w, acc)
            acc.pop()

    rec(d - 1, k, 1 << d, [])
    return sorted(out, reverse=True)


def words_with_stars(star_count: int, pairs: int | range = PAIRS, d: int = DIM) -> list[Word]:
    """All words of length ``d`` with exactly ``star_count`` stars."""
    pairs = range(pairs) if isinstance(pairs, int) else pairs
    letters = sorted(x for p in pairs for x in (2 * p, 2 * p + 1))
    out = []
    for stars in combinations(range(d), star_count):
        rest = [i for i in range(d) if i not in stars]
        for fill in product(letters, repeat=len(rest)):
            w = [STAR] * d
            for i, x in zip(rest, fill):
                w[i] = x
            out.append(tuple(w))
    return sorted(out)


def _twin(w: Word, present) -> bool:
    for i, x in enumerate(w):
        if x != STAR and w[:i] + (x ^ 1,) + w[i + 1:] in present:
            return True
    return False


def _complete(seed: Code, x: tuple[int, ...]) -> list[Code]:
    """Twin-pair-free exact covers containing ``seed`` with star profile ``x``."""
    grid = AtomGrid([range(PAIRS)] * DIM)
    need = list(x)
    for w in seed.words:
        need[w.count(STAR)] -= 1
    if min(need) < 0:
        return []
    full = (1 << grid.ncells) - 1
    rest = full & ~grid.code_mask(seed.words)
    items = []
    for s, n in enumerate(need):
        if n:
            items.extend((grid.word_mask(w), w) for w in words_with_stars(s)
                         if w not in seed.words)
    seeded = set(seed.words)
    quota = list(need)

    def allow(chosen, w):
        s = w.count(STAR)
        if sum(1 for u in chosen if u.count(STAR) == s) >= quota[s]:
            return False
        return not _twin(w, seeded.union(chosen))

    out = []
    for ws in exact_covers(rest, items, allow):
        counts = [0] * DIM
        for w in ws:
            counts[w.count(STAR)] += 1
        if counts == need:
            out.append(Code(list(seed.words) + ws, DIM))
    return out


def _job(args) -> list[Code]:
    j, x = args
    return _complete(SEEDS[j], x)


def enumerate_k(k: int, workers: int | None = None) -> list[Code]:
    """All ``k``-word twin-pair-free partition codes of dimension 4 containing a seed."""
    jobs = [(j, x) for x in compositions(k) for j in SEEDS if x[j] >= 2]
    found = set()
    for batch in pmap(_job, jobs, workers, chunksize=1):
        found.update(batch)
    out = sorted(found)
    for c in out:
        assert is_partition_code(c) and not twin_pairs(c) and len(c) == k
    return out


@dataclass
class PartitionRecord:
    k: int
    code: Code
    canonical: str

    def record(self) -> dict:
        return {"dim": DIM, "k": self.k, "code": [format_word(w) for w in self.code.words],
                "canonical": self.canonical}


def enumerate_all(workers: int | None = None) -> Iterator[PartitionRecord]:
    for k in range(2, (1 << DIM) + 1):
        for c in enumerate_k(k, workers):
            yield PartitionRecord(k, c, canonical_key(c))


def all_twin_pair_free(workers: int | None = None) -> list[IsoClass]:
    """Isomorphism classes of twin-pair-free partition codes of dimension 4.

    Only codes with at least two words are listed, so the one-word code
    ``****`` is left out.
    """
    codes = [c for k in range(2, (1 << DIM) + 1) for c in enumerate_k(k, workers)]
    return classify(codes, workers)
