"""Letters, words and codes over a complemented alphabet.

Letters are small integers.  Pair ``j`` (0-based, ``j < 16``) contributes the
letter ``2*j`` (unprimed) and ``2*j + 1`` (its complement); ``STAR`` is the
full-axis letter and is its own complement.  The integer order of letters is
the symbol order of the text format: ``a < A < b < B < ... < p < P < *``.

Words are plain tuples of letters.  Positions are 0-based everywhere in the
library; only human-facing text (move logs, CLI reports) uses 1-based
positions.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations, product
from math import prod

MAX_PAIRS = 16
STAR = 2 * MAX_PAIRS
SYMBOLS = "".join(c + c.upper() for c in "abcdefghijklmnop") + "*"
_RANK = {c: i for i, c in enumerate(SYMBOLS)}

Word = tuple[int, ...]


class CodeError(ValueError):
    """Base class for invalid-input errors raised by tilekit."""


class DimensionMismatch(CodeError):
    pass


class BadPosition(CodeError):
    pass


class NotPolybox(CodeError):
    pass


class NotTilingCode(CodeError):
    pass


class DuplicateWord(CodeError):
    pass


class ParseError(CodeError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# -- letters -----------------------------------------------------------------

def letter(pair: int, primed: bool = False) -> int:
    if not 0 <= pair < MAX_PAIRS:
        raise CodeError(f"pair index {pair} out of range")
    return 2 * pair + int(primed)


def complement(x: int) -> int:
    return x if x == STAR else x ^ 1


def pair_of(x: int) -> int | None:
    return None if x == STAR else x >> 1


def is_proper(w: Word) -> bool:
    return STAR not in w


# -- codes -------------------------------------------------------------------

class Code:
    """An immutable set of words of a common dimension.

    Words are stored sorted, so equality and hashing are structural.
    """

    __slots__ = ("words", "dim", "_hash")

    def __init__(self, words: Iterable[Sequence[int]] = (), dim: int | None = None):
        ws = [tuple(w) for w in words]
        uniq = sorted(set(ws))
        if len(uniq) != len(ws):
            raise DuplicateWord("code contains a repeated word")
        dims = {len(w) for w in uniq}
        if len(dims) > 1:
            raise DimensionMismatch(f"words of different lengths: {sorted(dims)}")
        if dims:
            (n,) = dims
            if dim is not None and dim != n:
                raise DimensionMismatch(f"expected dimension {dim}, words have {n}")
            dim = n
        self.words: tuple[Word, ...] = tuple(uniq)
        self.dim: int = 0 if dim is None else dim
        self._hash = hash((self.dim, self.words))

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.words)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.dim == other.dim and self.words == other.words

    def __lt__(self, other: "Code") -> bool:
        return (self.dim, self.words) < (other.dim, other.words)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Code({' '.join(format_word(w) for w in self.words)!r})"

    def replace(self, remove: Iterable[Word] = (), add: Iterable[Word] = ()) -> "Code":
        out = set(self.words)
        for w in remove:
            out.remove(tuple(w))
        for w in add:
            w = tuple(w)
            if w in out:
                raise DuplicateWord(f"word {format_word(w)} already present")
            out.add(w)
        return Code(out, self.dim)


def code(text: str | Iterable[str]) -> Code:
    """Shorthand: ``code("aa aA Ab AB")`` or a list of word strings."""
    if isinstance(text, str):
        text = text.split()
    return Code(parse_word(t) for t in text)


# -- text format ---------------------------------------------------------------

def format_word(w: Word) -> str:
    return "".join(SYMBOLS[x] for x in w)


def parse_word(s: str, line: int = 1) -> Word:
    out = []
    for col, ch in enumerate(s, start=1):
        r = _RANK.get(ch)
        if r is None:
            raise ParseError(f"invalid symbol {ch!r}", line, col)
        out.append(r)
    return tuple(out)


def parse(text: str, dim: int | None = None) -> Code:
    words = []
    seen = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        w = parse_word(s, lineno)
        if dim is None:
            dim = len(w)
        elif len(w) != dim:
            raise ParseError(f"word has length {len(w)}, expected {dim}", lineno, min(len(w), dim) + 1)
        if w in seen:
            raise ParseError(f"duplicate word (first on line {seen[w]})", lineno, 1)
        seen[w] = lineno
        words.append(w)
    return Code(words, dim)


def serialize(c: Code) -> str:
    return "".join(format_word(w) + "\n" for w in c.words)


# -- basic predicates ------------------------------------------------------------

def _check_dims(v: Sequence, u: Sequence) -> None:
    if len(v) != len(u):
        raise DimensionMismatch(f"dimensions differ: {len(v)} != {len(u)}")


def is_dichotomous(v: Word, u: Word) -> bool:
    _check_dims(v, u)
    return any(x != STAR and x ^ 1 == y for x, y in zip(v, u))


def validate_polybox(c: Code) -> list[tuple[Word, Word]]:
    """Return the non-dichotomous pairs of ``c``; an empty list means polybox."""
    return [(v, u) for v, u in combinations(c.words, 2) if not is_dichotomous(v, u)]


def is_polybox(c: Code) -> bool:
    return all(is_dichotomous(v, u) for v, u in combinations(c.words, 2))


def word_measure(w: Word) -> int:
    return 1 << sum(1 for x in w if x == STAR)


def measure(c: Code) -> int:
    return sum(word_measure(w) for w in c.words)


def is_partition_code(c: Code) -> bool:
    if not is_polybox(c):
        raise NotPolybox("code has non-dichotomous words")
    return measure(c) == 1 << c.dim


def is_tiling_code(c: Code) -> bool:
    return (len(c) == 1 << c.dim and all(is_proper(w) for w in c.words)
            and is_polybox(c))


def _check_position(c: Code, i: int) -> None:
    if not 0 <= i < c.dim:
        raise BadPosition(f"position {i} outside 0..{c.dim - 1}")


def subcode(c: Code, i: int, x: int) -> Code:
    _check_position(c, i)
    return Code((w for w in c.words if w[i] == x), c.dim)


def project(c: Code, i: int) -> Code:
    _check_position(c, i)
    return Code({w[:i] + w[i + 1:] for w in c.words}, c.dim - 1)


def is_layered(c: Code) -> tuple[int, int] | None:
    """First ``(position, pair)`` such that every word uses that pair there."""
    for i in range(c.dim):
        ps = {pair_of(w[i]) for w in c.words}
        if len(ps) == 1 and None not in ps:
            return i, ps.pop()
    return None


def twin_pairs(c: Code) -> list[tuple[Word, Word, int]]:
    """All twin pairs ``(v, u, i)`` with ``v < u``; they differ only at ``i``."""
    present = set(c.words)
    out = []
    for v in c.words:
        for i, x in enumerate(v):
            if x != STAR and not x & 1:
                u = v[:i] + (x ^ 1,) + v[i + 1:]
                if u in present:
                    out.append((v, u, i))
    return sorted(out)


def position_pairs(c: Code) -> list[set[int]]:
    """Pairs occurring at each position (stars ignored)."""
    out = [set() for _ in range(c.dim)]
    for w in c.words:
        for i, x in enumerate(w):
            if x != STAR:
                out[i].add(x >> 1)
    return out


# -- generic atom realization ----------------------------------------------------

class AtomGrid:
    """Generic realization of words over fixed per-position pair alphabets.

    At a position whose alphabet has ``k`` pairs the axis is split into ``2**k``
    atoms (bit vectors); pair ``j`` covers the atoms whose ``j``-th bit is 0 and
    its complement those whose bit is 1.  Every Boolean atom is nonempty, so two
    codes have equal realizations here iff they do under every
    dichotomy-preserving map.  Cells are indexed in mixed radix, first
    position most significant.
    """

    def __init__(self, alphabets: Sequence[Iterable[int]]):
        self.alphabets = [tuple(sorted(a)) for a in alphabets]
        self.dim = len(self.alphabets)
        self.sizes = [1 << len(a) for a in self.alphabets]
        self.ncells = prod(self.sizes)
        self._strides = [prod(self.sizes[i + 1:]) for i in range(self.dim)]
        self._letter = []
        for alph, size in zip(self.alphabets, self.sizes):
            table = {STAR: (1 << size) - 1}
            for j, p in enumerate(alph):
                m = 0
                for x in range(size):
                    if not (x >> j) & 1:
                        m |= 1 << x
                table[2 * p] = m
                table[2 * p + 1] = ((1 << size) - 1) ^ m
            self._letter.append(table)
        self._cache: dict[Word, int] = {}

    @classmethod
    def for_codes(cls, *codes: Code) -> "AtomGrid":
        dim = codes[0].dim
        alph = [set() for _ in range(dim)]
        for c in codes:
            if c.dim != dim:
                raise DimensionMismatch("codes of different dimension")
            for i, s in enumerate(position_pairs(c)):
                alph[i] |= s
        return cls(alph)

    def atoms(self, i: int, x: int) -> int:
        return self._letter[i][x]

    def word_mask(self, w: Word) -> int:
        m = self._cache.get(w)
        if m is not None:
            return m
        m = 1
        for i in range(self.dim):
            m = _kron(m, self._letter[i][w[i]], self.sizes[i])
        self._cache[w] = m
        return m

    def code_mask(self, c: Iterable[Word]) -> int:
        out = 0
        for w in c:
            out |= self.word_mask(w)
        return out

    def cells(self, w: Word) -> Iterator[tuple[int, ...]]:
        """Explicit cell coordinates covered by ``w`` (slow path, for checks)."""
        axes = [[x for x in range(size) if (self._letter[i][w[i]] >> x) & 1]
                for i, size in enumerate(self.sizes)]
        return product(*axes)

    def cell_index(self, cell: Sequence[int]) -> int:
        return sum(x * s for x, s in zip(cell, self._strides))


def _kron(m: int, atoms: int, size: int) -> int:
    """Mask of the product box: every set bit ``b`` of ``m`` becomes the block
    ``atoms << (b*size)``."""
    # spread m's bits to stride `size`, then multiply; blocks never overlap
    spread = 0
    b = m
    while b:
        low = b & -b
        spread |= 1 << ((low.bit_length() - 1) * size)
        b ^= low
    return spread * atoms


def equivalent(v: Code, u: Code) -> bool:
    """True iff the two codes have equal unions under every realization."""
    if v.dim != u.dim:
        raise DimensionMismatch(f"dimensions differ: {v.dim} != {u.dim}")
    return _equiv_slices(frozenset(v.words), frozenset(u.words), {})


def _equiv_slices(vs: frozenset, us: frozenset, memo: dict) -> bool:
    if not vs or not us:
        return not vs and not us
    if next(iter(vs)) == ():
        return True
    key = (vs, us)
    hit = memo.get(key)
    if hit is not None:
        return hit
    alph = sorted({w[0] >> 1 for w in vs | us if w[0] != STAR})
    # slice position 0 by atom, grouping atoms with identical covering sets
    groups = set()
    for atom in range(1 << len(alph)):
        cover = {STAR}
        for j, p in enumerate(alph):
            cover.add(2 * p + ((atom >> j) & 1))
        groups.add((frozenset(w[1:] for w in vs if w[0] in cover),
                    frozenset(w[1:] for w in us if w[0] in cover)))
    ok = all(_equiv_slices(a, b, memo) for a, b in groups)
    memo[key] = ok
    return ok


# -- perfect codes in the maximum metric --------------------------------------------

def realize_perfect_code(c: Code, r: int) -> list[tuple[int, ...]]:
    """Centers of an ``r``-perfect code in ``Z_{4r+2}^d`` (maximum metric).

    At each position the occurring pairs, in increasing order, get offsets
    0, 1, 2, ...; pair ``j`` maps to the ``2r+1`` residues starting at its
    offset and its complement to the other half.
    """
    if r < 1:
        raise CodeError("radius must be at least 1")
    if not is_tiling_code(c):
        raise NotTilingCode("not a cube tiling code")
    n = 4 * r + 2
    offsets = [{p: j for j, p in enumerate(sorted(ps))} for ps in position_pairs(c)]
    centers = []
    for w in c.words:
        center = []
        for i, x in enumerate(w):
            start = offsets[i][x >> 1] + (2 * r + 1) * (x & 1)
            center.append((start + r) % n)
        centers.append(tuple(center))
    return sorted(centers)
