"""Gluing and cutting twin pairs, switches, and paths between codes."""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from .core import (STAR, SYMBOLS, Code, CodeError, DimensionMismatch, DuplicateWord,
                   Word, format_word, parse_word, twin_pairs)
from .iso import canonical_key

find_twin_pairs = twin_pairs


class NotTwinPair(CodeError):
    pass


class NoStarAtPosition(CodeError):
    pass


class PathNotFound(CodeError):
    def __init__(self, budget: int):
        super().__init__(f"no path found within {budget} visited codes")
        self.budget = budget


def glue(c: Code, v: Word, u: Word) -> Code:
    """Replace the twin pair ``v, u`` by the word with a star where they differ."""
    diff = [i for i, (x, y) in enumerate(zip(v, u)) if x != y]
    if (v not in c or u not in c or len(diff) != 1
            or v[diff[0]] == STAR or v[diff[0]] ^ 1 != u[diff[0]]):
        raise NotTwinPair(f"{format_word(v)} and {format_word(u)} are not a twin pair of the code")
    i = diff[0]
    return c.replace((v, u), (v[:i] + (STAR,) + v[i + 1:],))


def cut(c: Code, w: Word, i: int, pair: int) -> Code:
    """Replace the star of ``w`` at position ``i`` by the two letters of ``pair``."""
    if w not in c:
        raise CodeError(f"{format_word(w)} is not in the code")
    if not 0 <= i < len(w) or w[i] != STAR:
        raise NoStarAtPosition(f"{format_word(w)} has no star at position {i + 1}")
    return c.replace((w,), (w[:i] + (2 * pair,) + w[i + 1:], w[:i] + (2 * pair + 1,) + w[i + 1:]))


def reduce(c: Code) -> Code:
    """Glue twin pairs until none is left, always taking the smallest pair."""
    while True:
        tp = twin_pairs(c)
        if not tp:
            return c
        v, u, _ = tp[0]
        c = glue(c, v, u)


def reduce_all(c: Code) -> set[Code]:
    """Every twin-pair-free code reachable from ``c`` by gluing (in any order)."""

    @lru_cache(maxsize=None)
    def rec(x: Code) -> frozenset:
        tp = twin_pairs(x)
        if not tp:
            return frozenset([x])
        out = set()
        for v, u, _ in tp:
            out |= rec(glue(x, v, u))
        return frozenset(out)

    return set(rec(c))


@dataclass(frozen=True)
class Move:
    """A glue, cut or switch.  ``position`` is 0-based; text form is 1-based."""
    kind: str
    position: int
    words: tuple[Word, ...]
    pair: int | None = None

    def apply(self, c: Code) -> Code:
        if self.kind == "glue":
            return glue(c, *self.words)
        if self.kind == "cut":
            return cut(c, self.words[0], self.position, self.pair)
        if self.kind == "switch":
            v, u = self.words
            return cut(glue(c, v, u), v[:self.position] + (STAR,) + v[self.position + 1:],
                       self.position, self.pair)
        raise ValueError(f"unknown move kind {self.kind!r}")

    def __str__(self) -> str:
        ws = " ".join(format_word(w) for w in self.words)
        s = f"{self.kind.upper()} {self.position + 1} {ws}"
        if self.pair is not None:
            s += f" {SYMBOLS[2 * self.pair]}{SYMBOLS[2 * self.pair + 1]}"
        return s

    @classmethod
    def parse(cls, line: str) -> "Move":
        parts = line.split()
        try:
            kind, pos = parts[0].lower(), int(parts[1]) - 1
            if kind == "glue" and len(parts) == 4:
                return cls(kind, pos, (parse_word(parts[2]), parse_word(parts[3])))
            if kind == "cut" and len(parts) == 4:
                return cls(kind, pos, (parse_word(parts[2]),), _pair(parts[3]))
            if kind == "switch" and len(parts) == 5:
                return cls(kind, pos, (parse_word(parts[2]), parse_word(parts[3])), _pair(parts[4]))
        except (IndexError, ValueError) as e:
            raise ValueError(f"bad move line {line!r}") from e
        raise ValueError(f"bad move line {line!r}")


def _pair(s: str) -> int:
    if len(s) != 2 or s[0] not in SYMBOLS[:-1] or SYMBOLS.index(s[1]) != SYMBOLS.index(s[0]) + 1 \
            or SYMBOLS.index(s[0]) % 2:
        raise ValueError(f"bad letter pair {s!r}")
    return SYMBOLS.index(s[0]) // 2


def replay(c: Code, moves: Iterable[Move]) -> Code:
    for m in moves:
        c = m.apply(c)
    return c


def switch_neighbors(c: Code, pairs: int) -> Iterator[tuple[Move, Code]]:
    """Glue one twin pair and cut the star again with a different pair."""
    for v, u, i in twin_pairs(c):
        w = v[:i] + (STAR,) + v[i + 1:]
        glued = c.replace((v, u), (w,))
        for t in range(pairs):
            if t == v[i] >> 1:
                continue
            try:
                yield Move("switch", i, (v, u), t), cut(glued, w, i, t)
            except DuplicateWord:
                continue


def gluecut_neighbors(c: Code, pairs: int) -> Iterator[tuple[Move, Code]]:
    """Single glue moves and single cut moves (at any star, with any pair)."""
    for v, u, i in twin_pairs(c):
        yield Move("glue", i, (v, u)), glue(c, v, u)
    for w in c.words:
        for i, x in enumerate(w):
            if x != STAR:
                continue
            for t in range(pairs):
                try:
                    yield Move("cut", i, (w,), t), cut(c, w, i, t)
                except DuplicateWord:
                    continue


_NEIGHBORS = {"switch": switch_neighbors, "gluecut": gluecut_neighbors}


def _alphabet(*codes: Code) -> int:
    return 1 + max((x >> 1 for c in codes for w in c.words for x in w if x != STAR), default=0)


def find_path(v: Code, u: Code, budget: int = 10**6, pairs: int | None = None,
              mode: str = "switch", up_to_iso: bool = False) -> list[Move]:
    """Shortest move sequence from ``v`` to ``u`` by breadth-first search.

    ``pairs`` bounds the letters a cut may introduce (default: those of the
    two codes).  With ``up_to_iso`` the search stops at any code isomorphic to
    ``u``.  The returned path is replayed and checked before returning.
    """
    if v.dim != u.dim:
        raise DimensionMismatch(f"dimensions differ: {v.dim} != {u.dim}")
    pairs = pairs if pairs is not None else _alphabet(v, u)
    step = _NEIGHBORS[mode]
    goal = canonical_key(u) if up_to_iso else u

    def done(c):
        return (canonical_key(c) if up_to_iso else c) == goal

    parent: dict[Code, tuple[Code, Move] | None] = {v: None}
    queue = deque([v])
    end = v if done(v) else None
    while queue and end is None:
        c = queue.popleft()
        for move, nxt in step(c, pairs):
            if nxt in parent:
                continue
            parent[nxt] = (c, move)
            if done(nxt):
                end = nxt
                break
            if len(parent) >= budget:
                raise PathNotFound(budget)
            queue.append(nxt)
    if end is None:
        raise PathNotFound(budget)
    path = []
    while parent[end] is not None:
        end, move = parent[end]
        path.append(move)
    path.reverse()
    got = replay(v, path)
    assert (canonical_key(got) == goal) if up_to_iso else got == u
    return path


def closure(codes: Iterable[Code], pairs: int, budget: int = 10**7,
            mode: str = "switch") -> dict[Code, int]:
    """Component label of every code reachable from ``codes``."""
    step = _NEIGHBORS[mode]
    comp: dict[Code, int] = {}
    label = 0
    for start in codes:
        if start in comp:
            continue
        comp[start] = label
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for _, nxt in step(c, pairs):
                if nxt not in comp:
                    comp[nxt] = label
                    if len(comp) > budget:
                        raise PathNotFound(budget)
                    queue.append(nxt)
        label += 1
    return comp


def connectivity(codes: Iterable[Code], pairs: int | None = None, budget: int = 10**7,
                 mode: str = "switch") -> list[list[Code]]:
    """Partition ``codes`` by connected component of the move graph."""
    codes = sorted(set(codes))
    if not codes:
        return []
    pairs = pairs if pairs is not None else _alphabet(*codes)
    comp = closure(codes, pairs, budget, mode)
    groups: dict[int, list[Code]] = {}
    for c in codes:
        groups.setdefault(comp[c], []).append(c)
    return sorted(groups.values())
