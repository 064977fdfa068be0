"""Orbit sizes and aggregate counts of cube tiling codes.

The minimal orbit of ``V`` is its image set under position permutations that
preserve the per-position letter sets, combined with letter bijections that
fix each of those sets.  For a compressed code the letter sets are
``{0..k_i-1}``, so the group is a product of symmetric and hyperoctahedral
groups and orbit-stabilizer gives the size directly.  The full orbit over an
alphabet of ``k`` pairs then scales by position choices and letter choices.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, prod

from .core import STAR, Code, CodeError, position_pairs
from .iso import canonical_form, compress


class AlphabetTooSmall(CodeError):
    pass


class IncompleteInput(CodeError):
    pass


def position_alphabets(c: Code) -> list[set[int]]:
    """Letters occurring at each position (both members of every occurring pair)."""
    return [{x for p in s for x in (2 * p, 2 * p + 1)} for s in position_pairs(c)]


def sigma_group(c: Code) -> list[tuple[int, ...]]:
    """Position permutations ``s`` with ``S_i == S_s(i)`` wherever ``s(i) != i``."""
    alph = position_alphabets(c)
    out = [p for p in permutations(range(c.dim))
           if all(alph[i] == alph[p[i]] for i in range(c.dim) if p[i] != i)]
    group = set(out)
    for p in out:
        for q in out:
            if tuple(p[q[i]] for i in range(c.dim)) not in group:
                raise AssertionError("position group is not closed")
    return out


@dataclass(frozen=True)
class OrbitStats:
    k: tuple[int, ...]
    sigma_size: int
    o_min: int
    o_full: int | None = None
    automorphisms: int = 1

    @property
    def cylinders(self) -> tuple[int, ...]:
        return self.k


def _pair_counts(c: Code) -> tuple[int, ...]:
    return tuple(len(s) for s in position_pairs(c))


def minimal_orbit_size(c: Code) -> int:
    return orbit_stats(c).o_min


def orbit_stats(c: Code, k_alphabet: int | None = None) -> OrbitStats:
    if any(STAR in w for w in c.words):
        raise CodeError("orbit sizes are defined for proper codes")
    v, _ = compress(c)
    ks = _pair_counts(v)
    sigma = len(sigma_group(v))
    aut = canonical_form(v).automorphisms
    order = sigma * prod(factorial(k) * 2 ** k for k in ks)
    o_min, rem = divmod(order, aut)
    assert rem == 0, "automorphism count does not divide the group order"
    full = None
    if k_alphabet is not None:
        full = _scale(v.dim, ks, sigma, o_min, k_alphabet)
    return OrbitStats(ks, sigma, o_min, full, aut)


def _scale(d: int, ks: Sequence[int], sigma: int, o_min: int, k: int) -> int:
    if k < max(ks):
        raise AlphabetTooSmall(f"alphabet of {k} pairs is smaller than {max(ks)}")
    return factorial(d) // sigma * prod(comb(k, ki) for ki in ks) * o_min


def orbit_size(c: Code, k_alphabet: int) -> int:
    """Number of distinct codes isomorphic to ``c`` over ``k_alphabet`` pairs."""
    return orbit_stats(c, k_alphabet).o_full


def group_order(d: int, k: int) -> int:
    """Order of the full group acting on words of length ``d`` over ``k`` pairs."""
    return factorial(d) * (factorial(k) * 2 ** k) ** d


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def c_number(n: int) -> int:
    """Ordered partitions of an ``n``-set into at least two blocks, each labelled by a pair choice."""
    return sum(comb(n, k) * stirling2(n, k) * factorial(k) for k in range(2, n + 1))


def layered_lower_bound(d: int, m_prev: int) -> int:
    """Codes of dimension ``d`` built from two codes of dimension ``d-1`` over ``S``.

    ``m_prev`` is the number of cube tiling codes of dimension ``d-1`` over the
    alphabet ``S``.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    half = 1 << (d - 1)
    return half * m_prev ** 2 + m_prev * c_number(half)


def is_lamination(ks: Sequence[int]) -> bool:
    """Every direction carries the largest possible number of cylinders."""
    return sum(ks) == (1 << len(ks)) - 1


def is_balanced(ks: Sequence[int]) -> bool:
    return len(set(ks)) == 1


@dataclass
class CountReport:
    d: int
    k_alphabet: int
    n: int = 0
    m: int = 0
    m_min: int = 0
    orbits: Counter = field(default_factory=Counter)
    cylinders: Counter = field(default_factory=Counter)
    letters: Counter = field(default_factory=Counter)

    @property
    def laminations(self) -> int:
        return sum(n for c, n in self.cylinders.items() if is_lamination(c))

    @property
    def balanced(self) -> int:
        return sum(n for c, n in self.cylinders.items() if is_balanced(c))

    def add(self, stats: OrbitStats) -> None:
        self.n += 1
        self.m += stats.o_full
        self.m_min += stats.o_min
        self.orbits[stats.o_full] += 1
        self.cylinders[tuple(sorted(stats.k))] += 1
        self.letters[max(stats.k)] += 1

    def summary(self) -> dict:
        # big integers as decimal strings
        return {"dim": self.d, "pairs": self.k_alphabet, "N": self.n, "M": str(self.m),
                "M_min": str(self.m_min), "laminations": self.laminations,
                "balanced": self.balanced}

    def csv(self, report: str) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if report == "orbits":
            w.writerow(["orbit_size", "count"])
            for o in sorted(self.orbits):
                w.writerow([o, self.orbits[o]])
        elif report == "cylinders":
            w.writerow(["cylinders", "count", "lamination", "balanced"])
            for c in sorted(self.cylinders):
                w.writerow([" ".join(map(str, c)), self.cylinders[c],
                            int(is_lamination(c)), int(is_balanced(c))])
        elif report == "letters":
            w.writerow(["k", "count"])
            for k in sorted(self.letters, reverse=True):
                w.writerow([k, self.letters[k]])
        else:
            raise ValueError(f"unknown report {report!r}")
        return buf.getvalue()


def aggregate(reps: Iterable[Code], d: int, k_alphabet: int,
              keys: Iterable[str] | None = None) -> CountReport:
    """Fold orbit statistics of class representatives into a report.

    ``keys`` are the canonical keys of ``reps``; when omitted they are
    computed.  A repeated key means the input is not a set of classes.
    """
    reps = list(reps)
    keys = list(keys) if keys is not None else [canonical_form(c).key for c in reps]
    dup = [k for k, n in Counter(keys).items() if n > 1]
    if dup:
        raise IncompleteInput(f"{len(dup)} classes occur more than once")
    report = CountReport(d, k_alphabet)
    for c in reps:
        if c.dim != d:
            raise CodeError("representative of the wrong dimension")
        report.add(orbit_stats(c, k_alphabet))
    return report
