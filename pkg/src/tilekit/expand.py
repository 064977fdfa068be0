"""From partition codes to cube tiling codes, and from dimension d-1 to d.

Two constructions live here: replacing improper words by equivalent proper
codes (``star_expansions``/``expand_code``), and stacking two (d-1)-dimensional
tiling codes along a new coordinate block by block (``cylinder_extend``).
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations, product

from .core import (STAR, Code, CodeError, NotTilingCode, Word, equivalent,
                   is_tiling_code, twin_pairs)
from .cover import all_tiling_codes, graft
from .iso import IsoClass, canonical_key, classify


class EmptySupply(CodeError):
    pass


class BlocksNotEquivalent(CodeError):
    def __init__(self, index: int):
        super().__init__(f"block {index} of the two partitions is not equivalent")
        self.index = index


def star_expansions(w: Word, supply: Sequence[int]) -> list[Code]:
    """All proper codes equivalent to ``{w}`` with star letters from ``supply``.

    These are exactly the grafts of a tiling code of dimension ``#stars`` into
    the star positions.
    """
    m = sum(1 for x in w if x == STAR)
    if m == 0:
        return [Code([w])]
    supply = tuple(sorted(set(supply)))
    if not supply:
        raise EmptySupply("no letter pairs to expand stars with")
    return [graft(w, t) for t in all_tiling_codes(m, supply)]


def expand_code(c: Code, supply: Sequence[int], dedup: bool = False) -> Iterator[Code]:
    """Cube tiling codes made on the plane of the partition code ``c``.

    Every improper word is replaced independently by one of its star
    expansions.  With ``dedup`` only the first code of each isomorphism class
    is yielded.
    """
    proper = [w for w in c.words if STAR not in w]
    options = [star_expansions(w, supply) for w in c.words if STAR in w]
    seen = set()
    for choice in product(*options):
        words = list(proper)
        for part in choice:
            words.extend(part.words)
        out = Code(words, c.dim)
        if dedup:
            key = canonical_key(out)
            if key in seen:
                continue
            seen.add(key)
        yield out


def cylinder_extend(v_blocks: Sequence[Code], w_blocks: Sequence[Code],
                    pairs: Sequence[int]) -> Code:
    """Stack two block partitions along a new last coordinate.

    Block ``i`` of the first partition gets the letter ``2*pairs[i]`` appended
    and block ``i`` of the second gets its complement.
    """
    if not (len(v_blocks) == len(w_blocks) == len(pairs)):
        raise CodeError("partitions and letter list must have equal length")
    if len(set(pairs)) != len(pairs):
        raise CodeError("letter pairs must be distinct")
    dim = v_blocks[0].dim
    for blocks in (v_blocks, w_blocks):
        union = Code((w for b in blocks for w in b.words), dim)
        if not is_tiling_code(union):
            raise NotTilingCode("blocks do not form a cube tiling code")
    for i, (a, b) in enumerate(zip(v_blocks, w_blocks)):
        if not equivalent(a, b):
            raise BlocksNotEquivalent(i)
    return _stack(v_blocks, w_blocks, pairs)


def _stack(v_blocks, w_blocks, pairs) -> Code:
    words = []
    for a, b, p in zip(v_blocks, w_blocks, pairs):
        words.extend(w + (2 * p,) for w in a.words)
        words.extend(w + (2 * p + 1,) for w in b.words)
    return Code(words)


def _singletons(c: Code) -> list[Code]:
    return [Code([w]) for w in c.words]


def build_n4_8(n3: Iterable[Code]) -> list[Code]:
    """Codes with eight pairs at one position: every block a single word."""
    out = []
    for v in n3:
        blocks = _singletons(v)
        out.append(_stack(blocks, blocks, range(len(blocks))))
    return out


def n4_7_families(n3: Iterable[Code], pairs: int = 8) -> tuple[list[Code], list[Code]]:
    """The two candidate families for codes with seven pairs at one position.

    Seven blocks of an 8-word code means one block of two words.  Family A
    keeps both partitions equal with a block that is not a twin pair; family B
    uses a twin pair block, replaced on the primed side by every twin pair
    differing at the same position.
    """
    fam_a, fam_b = [], []
    for v in n3:
        twins = {(x, y): i for x, y, i in twin_pairs(v)}
        for x, y in combinations(v.words, 2):
            rest = [Code([w]) for w in v.words if w not in (x, y)]
            block = Code([x, y])
            if (x, y) not in twins:
                blocks = [block] + rest
                fam_a.append(_stack(blocks, blocks, range(7)))
                continue
            i = twins[x, y]
            for t in range(pairs):
                alt = Code([x[:i] + (2 * t,) + x[i + 1:], x[:i] + (2 * t + 1,) + x[i + 1:]])
                fam_b.append(_stack([block] + rest, [alt] + rest, range(7)))
    return fam_a, fam_b


def build_n4_7(n3: Iterable[Code], pairs: int = 8,
               workers: int | None = None) -> tuple[list[IsoClass], list[IsoClass]]:
    fam_a, fam_b = n4_7_families(n3, pairs)
    return classify(set(fam_a), workers), classify(set(fam_b), workers)
