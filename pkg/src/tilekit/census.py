"""Isomorphism classes of cube tiling codes, built dimension by dimension.

Every tiling code ``U`` of dimension ``d`` splits along its last coordinate
into ``V^i a_i`` and ``W^i a_i'`` where ``V = U V^i`` and ``W = U W^i`` are
tiling codes of dimension ``d-1`` and ``V^i`` is equivalent to ``W^i``.
Moving a position with the most pairs to the end and mapping ``V`` to its
class representative loses nothing, so the candidates are: a representative
``V``, a partition of it into ``m`` blocks, and for each block any equivalent
proper code, keeping only results whose other positions carry at most ``m``
pairs.
"""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence
from itertools import permutations, product

from .core import Code, position_pairs
from .cover import equivalent_proper_codes
from .iso import IsoClass, classify

log = logging.getLogger(__name__)


def set_partitions(items: Sequence, m: int) -> Iterator[list[list]]:
    """Unordered partitions of ``items`` into exactly ``m`` nonempty blocks."""
    n = len(items)
    if m < 1 or m > n:
        return

    def rec(i: int, blocks: list[list]):
        if n - i < m - len(blocks):
            return
        if i == n:
            yield [list(b) for b in blocks]
            return
        x = items[i]
        for b in blocks:
            b.append(x)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < m:
            blocks.append([x])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


class _Equivalents:
    """Cache of equivalent proper codes per block, over ``range(m)`` at each position.

    Letters outside the block's own pairs are interchangeable for the block,
    so the search runs with a few placeholder pairs and the placeholders are
    then renamed injectively into the remaining pairs.
    """

    def __init__(self, pairs: int):
        self.pairs = pairs
        self._cache: dict[tuple, list[Code]] = {}

    def __call__(self, block: Code, m: int) -> list[Code]:
        width = min(m, self.pairs)
        key = (block, width)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._compute(block, width)
        return hit

    def _compute(self, block: Code, width: int) -> list[Code]:
        if len(block) == 1:
            return [block]
        own = position_pairs(block)
        if any(max(s) >= width for s in own):
            return []
        others = [[p for p in range(width) if p not in s] for s in own]
        extra = [others[i][:len(block) // 2] for i in range(block.dim)]
        alph = [sorted(s) + e for s, e in zip(own, extra)]
        out = set()
        for q in equivalent_proper_codes(block, alph):
            used = [sorted({w[i] >> 1 for w in q.words} - own[i]) for i in range(block.dim)]
            for names in product(*(permutations(others[i], len(used[i]))
                                   for i in range(block.dim))):
                ren = [dict(zip(u, nm)) for u, nm in zip(used, names)]
                out.add(Code(tuple(2 * ren[i].get(x >> 1, x >> 1) + (x & 1)
                                   for i, x in enumerate(w)) for w in q.words))
        return sorted(out)


def extension_candidates(reps: Sequence[Code], pairs: int,
                         max_blocks: int | None = None) -> Iterator[Code]:
    """Candidate tiling codes of dimension ``d`` from class representatives of ``d-1``."""
    eq = _Equivalents(pairs)
    for v in reps:
        n = len(v)
        top = min(pairs, n) if max_blocks is None else min(pairs, n, max_blocks)
        for m in range(1, top + 1):
            for parts in set_partitions(v.words, m):
                blocks = [Code(b) for b in parts]
                options = [eq(b, m) for b in blocks]
                base = [set().union(*map(set, s)) for s in zip(*(position_pairs(b) for b in blocks))]
                for choice in product(*options):
                    if any(len(base[i].union(*(position_pairs(c)[i] for c in choice))) > m
                           for i in range(v.dim)):
                        continue
                    words = []
                    for j, (a, b) in enumerate(zip(blocks, choice)):
                        words.extend(w + (2 * j,) for w in a.words)
                        words.extend(w + (2 * j + 1,) for w in b.words)
                    yield Code(words)


_BASE = Code([(0,), (1,)])


def extend_classes(reps: Sequence[Code], pairs: int, workers: int | None = None,
                   start: dict[str, IsoClass] | None = None, skip: int = 0,
                   progress: Callable[[int, dict], None] | None = None) -> list[IsoClass]:
    """Classes of dimension ``d`` from all class representatives of dimension ``d-1``.

    Candidates are generated and classified one representative at a time so
    memory stays bounded.  ``start``/``skip`` resume a partial run and
    ``progress(n, classes)`` is called after representative ``n``.
    """
    classes: dict[str, IsoClass] = dict(start or {})
    for n, v in enumerate(reps):
        if n < skip:
            continue
        cands = set(extension_candidates([v], pairs))
        for cls in classify(cands, workers):
            hit = classes.get(cls.key)
            if hit is None:
                classes[cls.key] = cls
            else:
                hit.count += cls.count
        log.info("representative %d/%d: %d candidates, %d classes so far",
                 n + 1, len(reps), len(cands), len(classes))
        if progress is not None:
            progress(n, classes)
    return [classes[k] for k in sorted(classes)]


def tiling_classes(dim: int, pairs: int, workers: int | None = None) -> list[IsoClass]:
    """All isomorphism classes of cube tiling codes over ``pairs`` letter pairs."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    classes = classify([_BASE])
    for _ in range(2, dim + 1):
        classes = extend_classes([c.representative for c in classes], pairs, workers)
    return classes
