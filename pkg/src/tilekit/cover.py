"""Exact cover over bitmask cells, plus the enumerations built on it."""
from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from functools import lru_cache
from itertools import product

from .core import STAR, AtomGrid, Code, Word, position_pairs


def exact_covers(target: int, items: Sequence[tuple[int, object]],
                 allow: Callable[[list, object], bool] | None = None) -> Iterator[list]:
    """Yield every list of payloads whose masks partition ``target``.

    Branches on the lowest uncovered cell.  ``allow(chosen, payload)`` can veto
    a payload given the payloads already chosen.
    """
    by_cell: dict[int, list[tuple[int, object]]] = {}
    for mask, payload in items:
        if mask & ~target or not mask:
            continue
        low = (mask & -mask).bit_length() - 1
        # an item is only ever chosen for its own lowest cell
        by_cell.setdefault(low, []).append((mask, payload))
    chosen: list = []

    def rec(rest: int):
        if not rest:
            yield list(chosen)
            return
        cell = (rest & -rest).bit_length() - 1
        for mask, payload in by_cell.get(cell, ()):
            if mask & ~rest:
                continue
            if allow is not None and not allow(chosen, payload):
                continue
            chosen.append(payload)
            yield from rec(rest ^ mask)
            chosen.pop()

    yield from rec(target)


def proper_words(alphabets: Sequence[Iterable[int]]) -> Iterator[Word]:
    """All proper words whose letter at each position comes from the given pairs."""
    axes = [sorted(x for p in a for x in (2 * p, 2 * p + 1)) for a in alphabets]
    return product(*axes)


def equivalent_proper_codes(p: Code, alphabets: Sequence[Iterable[int]]) -> list[Code]:
    """Every proper code over the per-position ``alphabets`` equivalent to ``p``.

    ``alphabets`` must contain the pairs of ``p`` at each position.
    """
    alph = [set(a) for a in alphabets]
    for i, s in enumerate(position_pairs(p)):
        if not s <= alph[i]:
            raise ValueError(f"alphabet at position {i} misses pairs {sorted(s - alph[i])}")
    grid = AtomGrid(alph)
    target = grid.code_mask(p.words)
    items = [(grid.word_mask(w), w) for w in proper_words(alph)]
    return sorted(Code(ws, p.dim) for ws in exact_covers(target, items))


@lru_cache(maxsize=None)
def all_tiling_codes(dim: int, pairs: int | tuple[int, ...]) -> tuple[Code, ...]:
    """Every cube tiling code of dimension ``dim`` over pairs ``0..pairs-1``
    (or over the given tuple of pair indices)."""
    if dim == 0:
        return (Code([()], 0),)
    alph = [range(pairs) if isinstance(pairs, int) else tuple(pairs)] * dim
    grid = AtomGrid(alph)
    items = [(grid.word_mask(w), w) for w in proper_words(alph)]
    full = (1 << grid.ncells) - 1
    return tuple(sorted(Code(ws, dim) for ws in exact_covers(full, items)))


def graft(w: Word, t: Code) -> Code:
    """Replace the stars of ``w`` (in order) by the words of ``t``."""
    stars = [i for i, x in enumerate(w) if x == STAR]
    if len(stars) != t.dim:
        raise ValueError("graft dimension does not match the number of stars")
    out = []
    for u in t.words:
        v = list(w)
        for i, x in zip(stars, u):
            v[i] = x
        out.append(tuple(v))
    return Code(out, len(w))
