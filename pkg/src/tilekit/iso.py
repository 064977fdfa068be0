"""Isomorphism of codes: count matrices, compressed forms, canonical forms.

The isomorphism group acts on ``d``-letter words by permuting positions and,
independently at every position, permuting letter pairs and swapping the
letters inside a pair.  The star is fixed.
"""
from __future__ import annotations

import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import permutations, product

from .core import (MAX_PAIRS, STAR, Code, CodeError, DimensionMismatch, Word,
                   format_word, is_polybox, position_pairs, project, subcode,
                   twin_pairs)
from .parallel import pmap


class ShapeMismatch(CodeError):
    pass


_NLETTERS = 2 * MAX_PAIRS


@dataclass(frozen=True)
class CandidateMap:
    """An element ``h o sigma`` of the isomorphism group.

    Target position ``i`` reads source position ``perm[i]`` and relabels it
    with ``letters[i]``, a table of the images of the 32 proper letters.
    """

    perm: tuple[int, ...]
    letters: tuple[tuple[int, ...], ...]

    @classmethod
    def identity(cls, dim: int) -> "CandidateMap":
        return cls(tuple(range(dim)), (tuple(range(_NLETTERS)),) * dim)

    @classmethod
    def from_partial(cls, perm, partial) -> "CandidateMap":
        """Complete per-position partial letter maps to signed pair permutations.

        ``partial[i]`` maps source letters to target letters and must respect
        complementation on the letters it names.
        """
        tables = []
        for pm in partial:
            img = [None] * _NLETTERS
            for x, y in pm.items():
                img[x] = y
                img[x ^ 1] = y ^ 1
            used = {y >> 1 for y in img if y is not None}
            free = iter(p for p in range(MAX_PAIRS) if p not in used)
            for p in range(MAX_PAIRS):
                if img[2 * p] is None:
                    q = next(free)
                    img[2 * p], img[2 * p + 1] = 2 * q, 2 * q + 1
            tables.append(tuple(img))
        return cls(tuple(perm), tuple(tables))

    @property
    def dim(self) -> int:
        return len(self.perm)

    def apply_word(self, w: Word) -> Word:
        return tuple(STAR if (x := w[p]) == STAR else tab[x]
                     for p, tab in zip(self.perm, self.letters))

    def apply(self, c: Code) -> Code:
        if c.dim != self.dim:
            raise DimensionMismatch("map and code dimensions differ")
        return Code((self.apply_word(w) for w in c.words), c.dim)

    def compose(self, other: "CandidateMap") -> "CandidateMap":
        """``self o other``: apply ``other`` first."""
        perm = tuple(other.perm[p] for p in self.perm)
        letters = tuple(tuple(tab[y] for y in other.letters[p])
                        for p, tab in zip(self.perm, self.letters))
        return CandidateMap(perm, letters)

    def inverse(self) -> "CandidateMap":
        d = self.dim
        perm = [0] * d
        letters = [None] * d
        for i, p in enumerate(self.perm):
            perm[p] = i
            inv = [0] * _NLETTERS
            for x, y in enumerate(self.letters[i]):
                inv[y] = x
            letters[p] = tuple(inv)
        return CandidateMap(tuple(perm), tuple(letters))


# -- count matrix --------------------------------------------------------------

def profile(c: Code, width: int | None = None) -> tuple[tuple[tuple[int, int], ...], ...]:
    """The matrix of count pairs ``(|V^{i,a_j}|, |V^{i,a_j'}|)``."""
    cnt = Counter((i, x) for w in c.words for i, x in enumerate(w) if x != STAR)
    if width is None:
        width = max((x >> 1 for _, x in cnt), default=-1) + 1
    return tuple(tuple((cnt[i, 2 * j], cnt[i, 2 * j + 1]) for j in range(width))
                 for i in range(c.dim))


def _row_signature(row) -> tuple:
    # entries are compared up to swapping inside a pair; that swap is an isomorphism too
    return tuple(sorted((tuple(sorted(e, reverse=True)) for e in row if e != (0, 0)),
                        reverse=True))


def profile_equal(p, q) -> bool:
    """Equality up to row permutations and entry permutations within rows."""
    if len(p) != len(q):
        raise ShapeMismatch(f"{len(p)} rows versus {len(q)} rows")
    return sorted(map(_row_signature, p)) == sorted(map(_row_signature, q))


def twin_vector(c: Code) -> tuple[int, ...]:
    t = [0] * c.dim
    for _, _, i in twin_pairs(c):
        t[i] += 1
    return tuple(t)


def is_compressed(c: Code) -> bool:
    rows = profile(c)
    supports = []
    for row in rows:
        nz = [e != (0, 0) for e in row]
        if any(nz[j + 1] and not nz[j] for j in range(len(nz) - 1)):
            return False
        supports.append(sum(nz))
    return supports == sorted(supports)


def compress(c: Code) -> tuple[Code, CandidateMap]:
    """An isomorphic code in compressed form, with the map producing it.

    Pairs at a position are ordered by decreasing count, then by first
    occurrence in sorted word order; a pair is oriented so that the letter of
    the smallest word containing it becomes unprimed.  Positions are then
    ordered by (support, row entries, original index).  Codes already in
    compressed form are returned unchanged.
    """
    if is_compressed(c):
        return c, CandidateMap.identity(c.dim)
    partial = []
    keys = []
    for i in range(c.dim):
        first: dict[int, int] = {}
        orient: dict[int, int] = {}
        total: Counter = Counter()
        for n, w in enumerate(c.words):
            x = w[i]
            if x == STAR:
                continue
            p = x >> 1
            total[p] += 1
            if p not in first:
                first[p] = n
                orient[p] = x
        order = sorted(total, key=lambda p: (-total[p], first[p]))
        pm = {orient[p]: 2 * j for j, p in enumerate(order)}
        partial.append(pm)
    relabeled = CandidateMap.from_partial(range(c.dim), partial).apply(c)
    rows = profile(relabeled)
    for i, row in enumerate(rows):
        nz = tuple(sorted((e for e in row if e != (0, 0)), reverse=True))
        keys.append((len(nz), nz, i))
    perm = [k[2] for k in sorted(keys)]
    g = CandidateMap.from_partial(perm, [partial[p] for p in perm])
    return g.apply(c), g


# -- canonical form ----------------------------------------------------------------

def _position_invariants(c: Code) -> list[tuple]:
    cnt = Counter((i, x) for w in c.words for i, x in enumerate(w))
    t = twin_vector(c)
    out = []
    for i in range(c.dim):
        pairs = sorted({x >> 1 for (j, x) in cnt if j == i and x != STAR})
        entries = tuple(sorted(tuple(sorted((cnt[i, 2 * p], cnt[i, 2 * p + 1])))
                               for p in pairs))
        out.append((cnt[i, STAR], entries, t[i]))
    return out


def _admissible_perms(c: Code) -> list[tuple[int, ...]]:
    inv = _position_invariants(c)
    order = sorted(range(c.dim), key=lambda i: inv[i])
    groups = []
    for i in order:
        if groups and inv[groups[-1][0]] == inv[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    out = []
    for choice in product(*(permutations(g) for g in groups)):
        out.append(tuple(p for g in choice for p in g))
    return out


@dataclass(frozen=True)
class CanonicalForm:
    code: Code
    map: CandidateMap
    automorphisms: int

    @property
    def key(self) -> str:
        return ",".join(format_word(w) for w in self.code.words)


def canonical_form(c: Code) -> CanonicalForm:
    """Lexicographically least sorted word list over the isomorphism class.

    The search builds the image word by word: under the letters labelled so
    far, every remaining word has a least possible image (an unlabelled letter
    takes the next free pair, unprimed), the least of these is the next word
    of the form, and ties branch.  Positions are restricted to orderings that
    sort an isomorphism invariant.  The number of leaves attaining the minimum
    equals the order of the automorphism group (on the occurring letters).
    """
    if not c.words:
        return CanonicalForm(c, CandidateMap.identity(c.dim), 1)
    d = c.dim
    best: list | None = None
    count = 0
    witness = None
    path: list = []

    def rec(ws, rem, labs, fresh, perm):
        nonlocal best, count, witness
        if not rem:
            if best is None or path < best:
                best, count, witness = list(path), 1, (perm, labs)
            elif path == best:
                count += 1
            return
        t = len(path)
        m = None
        ties = []
        for k in rem:
            w = ws[k]
            img = tuple(x if x == STAR else labs[i].get(x, fresh[i])
                        for i, x in enumerate(w))
            if m is None or img < m:
                m, ties = img, [k]
            elif img == m:
                ties.append(k)
        if best is not None and m > best[t] and path == best[:t]:
            return
        path.append(m)
        for k in ties:
            w = ws[k]
            labs2 = labs
            fresh2 = fresh
            for i, x in enumerate(w):
                if x != STAR and x not in labs[i]:
                    if labs2 is labs:
                        labs2, fresh2 = list(labs), list(fresh)
                    f = fresh[i]
                    nd = dict(labs[i])
                    nd[x] = f
                    nd[x ^ 1] = f + 1
                    labs2[i] = nd
                    fresh2[i] = f + 2
            rec(ws, [j for j in rem if j != k], labs2, fresh2, perm)
        path.pop()

    for perm in _admissible_perms(c):
        ws = [tuple(w[p] for p in perm) for w in c.words]
        rec(ws, list(range(len(ws))), [{}] * d, [0] * d, perm)

    perm, labs = witness
    g = CandidateMap.from_partial(perm, labs)
    form = Code(best, d)
    assert g.apply(c) == form
    return CanonicalForm(form, g, count)


def canonical_key(c: Code) -> str:
    return canonical_form(c).key


def isomorphic(v: Code, u: Code) -> CandidateMap | None:
    """A verified isomorphism taking ``v`` to ``u``, or ``None``."""
    if v.dim != u.dim:
        raise DimensionMismatch(f"dimensions differ: {v.dim} != {u.dim}")
    if len(v) != len(u):
        return None
    if not profile_equal(profile(v), profile(u)):
        return None
    if sorted(twin_vector(v)) != sorted(twin_vector(u)):
        return None
    fv, fu = canonical_form(v), canonical_form(u)
    if fv.code != fu.code:
        return None
    g = fu.map.inverse().compose(fv.map)
    if g.apply(v) != u:
        raise AssertionError("isomorphism witness failed verification")
    return g


# -- the elementary-operations route --------------------------------------------

def elementary_maps(v: Code, u: Code, cap: int = 10**6):
    """Maps carrying the count matrix of ``u`` onto that of ``v``, except at one
    position ``p`` (the fullest row of ``v``) which is left to :func:`el`.

    Yields ``(perm, partial, p)``.  Both codes should be compressed.
    """
    pv, pu = profile(v, MAX_PAIRS), profile(u, MAX_PAIRS)
    d = v.dim
    sig_v = [_row_signature(r) for r in pv]
    sig_u = [_row_signature(r) for r in pu]
    p = max(range(d), key=lambda i: (len(sig_v[i]), i))
    options = []
    for i in range(d):
        options.append([j for j in range(d) if sig_u[j] == sig_v[i]])
    total = 0
    for perm in product(*options):
        if len(set(perm)) != d:
            continue
        per_pos = []
        for i, j in enumerate(perm):
            if i == p:
                per_pos.append([{}])
                continue
            src = [(q, pu[j][q]) for q in range(MAX_PAIRS) if pu[j][q] != (0, 0)]
            dst = [(q, pv[i][q]) for q in range(MAX_PAIRS) if pv[i][q] != (0, 0)]
            maps = []
            for order in permutations(dst):
                for flips in product((0, 1), repeat=len(src)):
                    ok = True
                    pm = {}
                    for (qs, es), (qd, ed), f in zip(src, order, flips):
                        if (es if not f else es[::-1]) != ed:
                            ok = False
                            break
                        pm[2 * qs] = 2 * qd + f
                    if ok:
                        maps.append(pm)
            per_pos.append(maps)
        n = 1
        for m in per_pos:
            n *= len(m)
        total += n
        if total > cap:
            raise RuntimeError(f"more than {cap} candidate maps")
        for choice in product(*per_pos):
            yield perm, choice, p


def el(v: Code, u: Code) -> bool:
    """Decide isomorphism of cube tiling codes by elementary operations.

    Position ``p`` of ``v`` is handled through the cylinder structure: a map
    of the other positions works iff it carries the unordered pairs of
    slices ``{u^{p,s}, u^{p,s'}}`` onto those of ``v``.
    """
    if v.dim != u.dim:
        raise DimensionMismatch("dimensions differ")
    if len(v) != len(u) or not profile_equal(profile(v), profile(u)):
        return False
    if sorted(twin_vector(v)) != sorted(twin_vector(u)):
        return False
    v, _ = compress(v)
    u, _ = compress(u)

    def slice_pairs(c, i, g=None):
        out = Counter()
        for q in sorted(position_pairs(c)[i]):
            a, b = (project(subcode(c, i, 2 * q + s), i) for s in (0, 1))
            if g is not None:
                a, b = g.apply(a), g.apply(b)
            out[frozenset((a, b))] += 1
        return out

    for perm, partial, p in elementary_maps(v, u):
        rest = [i for i in range(v.dim) if i != p]
        j = perm[p]
        # map on the remaining d-1 coordinates
        sub = CandidateMap.from_partial(
            [perm[i] - (perm[i] > j) for i in rest], [partial[i] for i in rest])
        if slice_pairs(u, j, sub) == slice_pairs(v, p):
            return True
    return False


# -- classification ---------------------------------------------------------------

@dataclass
class IsoClass:
    representative: Code
    key: str
    count: int = 0
    tp: tuple[int, ...] = ()
    profile: tuple = ()
    members: list = field(default_factory=list, repr=False)

    def record(self) -> dict:
        return {
            "representative": [format_word(w) for w in self.representative.words],
            "class_size_in_input": self.count,
            "canonical": self.key,
            "tp": list(self.tp),
            "profile": [[list(e) for e in row] for row in self.profile],
        }


def _bucket(c: Code) -> tuple:
    return (len(c), tuple(sorted(map(_row_signature, profile(c)))))


def _keyed(c: Code) -> tuple[str, Code]:
    f = canonical_form(c)
    return f.key, f.code


def classify(codes, workers: int | None = None, keep_members: bool = False) -> list[IsoClass]:
    """Partition ``codes`` into isomorphism classes.

    Codes are first split by their count-matrix bucket (a necessary
    condition), then identified by canonical form within a bucket.  Classes
    come back sorted by canonical key.
    """
    codes = list(codes)
    buckets: dict[tuple, list[int]] = defaultdict(list)
    for n, c in enumerate(codes):
        buckets[_bucket(c)].append(n)
    keyed = pmap(_keyed, codes, workers)
    classes: dict[str, IsoClass] = {}
    for b in sorted(buckets):
        for n in buckets[b]:
            key, form = keyed[n]
            cls = classes.get(key)
            if cls is None:
                cls = classes[key] = IsoClass(form, key, 0, tuple(sorted(twin_vector(form))),
                                              _compressed_profile(form))
            cls.count += 1
            if keep_members:
                cls.members.append(codes[n])
    return [classes[k] for k in sorted(classes)]


def _compressed_profile(c: Code):
    return profile(compress(c)[0])


def default_workers() -> int:
    return int(os.environ.get("TILEKIT_WORKERS", "1"))
