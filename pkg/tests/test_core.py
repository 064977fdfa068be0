import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import ball_partition, is_partition_oracle, random_realization
from conftest import partition_codes, polybox_codes, tiling_codes
from tilekit.core import (STAR, SYMBOLS, AtomGrid, Code, DimensionMismatch, DuplicateWord,
                          NotPolybox, NotTilingCode, ParseError, code, complement,
                          equivalent, is_dichotomous, is_layered, is_partition_code,
                          is_polybox, is_tiling_code, measure, parse, parse_word,
                          project, realize_perfect_code, serialize, subcode, twin_pairs,
                          validate_polybox)
from tilekit.cover import all_tiling_codes


def test_complement_is_involution_with_star_fixed():
    for x in range(len(SYMBOLS)):
        assert complement(complement(x)) == x
        assert (complement(x) == x) == (x == STAR)


def test_parse_word_symbols():
    assert parse_word("aA*b") == (0, 1, STAR, 2)


def test_parse_rejects_bad_symbol():
    with pytest.raises(ParseError) as e:
        parse("aa\naZ9\n")
    assert e.value.line == 2 and e.value.column == 2


def test_parse_skips_comments_and_blank_lines():
    c = parse("# a code\naa\n\naA\n")
    assert c == code("aa aA")


def test_parse_duplicate_and_dimension_errors():
    with pytest.raises(ParseError) as e:
        parse("aa\naa\n")
    assert e.value.line == 2
    with pytest.raises(ParseError):
        parse("aa\naaa\n")
    with pytest.raises(DuplicateWord):
        Code([(0, 0), (0, 0)])
    with pytest.raises(DimensionMismatch):
        Code([(0, 0), (0,)])


def test_serialize_canonical_order():
    assert serialize(code("Aa *a ab aA")) == "aA\nab\nAa\n*a\n"


@given(partition_codes())
def test_parse_serialize_round_trip(c):
    assert parse(serialize(c)) == c


def test_dichotomy_examples():
    assert is_dichotomous(parse_word("aaa"), parse_word("aaA"))
    assert not is_dichotomous(parse_word("a*a"), parse_word("aba"))
    assert not is_dichotomous(parse_word("*a"), parse_word("*b"))


def test_validate_polybox_lists_offenders():
    c = code("aa ab AA")
    assert validate_polybox(c) == [((0, 0), (0, 2))]
    assert not is_polybox(c)


def test_partition_code_examples():
    assert is_partition_code(code("aa aA Ab AB"))
    assert is_partition_code(code("a** A**"))
    assert not is_partition_code(code("aa aA"))
    with pytest.raises(NotPolybox):
        is_partition_code(code("aa ab"))


def test_tiling_code_requires_proper_words():
    assert is_tiling_code(code("aa aA Ab AB"))
    assert not is_tiling_code(code("a* A*"))


def test_subcode_and_project():
    c = code("aa aA Ab AB")
    assert subcode(c, 0, 1) == code("Ab AB")
    assert project(subcode(c, 0, 1), 0) == code("b B")


def test_layered():
    assert is_layered(code("a*** A***")) == (0, 0)
    assert is_layered(code("aa aA Aa AA")) == (0, 0)
    assert is_layered(code("a*aa a**A A*a* A*AA **Aa")) is None


def test_twin_pairs_simple_code():
    assert len(twin_pairs(code("aa aA Aa AA"))) == 4
    assert twin_pairs(code("aaa aab")) == []


def test_equivalence_examples():
    assert equivalent(code("**a aaA"), code("aa* A*a aAa"))
    assert equivalent(code("a*"), code("ab aB"))
    assert not equivalent(code("a"), code("A"))


@given(partition_codes())
def test_measure_matches_exact_cover_oracle(c):
    assert measure(c) == 1 << c.dim
    assert is_partition_oracle(c.words, c.dim)


@given(polybox_codes())
def test_partition_criterion_agrees_with_oracle(c):
    assert is_partition_code(c) == is_partition_oracle(c.words, c.dim)


def test_partition_criterion_randomized_thousand_cases():
    # random pairwise dichotomous word sets over up to three pairs, d <= 4
    rng = random.Random(7)
    mismatches = checked = 0
    while checked < 1000:
        d = rng.randint(1, 4)
        k = rng.randint(1, 3)
        letters = list(range(2 * k)) + [STAR]
        words = []
        for _ in range(rng.randint(1, 2 ** d)):
            w = tuple(rng.choice(letters) for _ in range(d))
            if w not in words and all(is_dichotomous(w, u) for u in words):
                words.append(w)
        c = Code(words, d)
        checked += 1
        mismatches += is_partition_code(c) != is_partition_oracle(c.words, d)
    assert mismatches == 0


@given(polybox_codes(), st.randoms(use_true_random=False))
def test_equivalence_matches_random_realizations(c, rng):
    # a code and one obtained by gluing have the same union under any realization
    other = c
    tp = twin_pairs(c)
    if tp:
        v, u, i = tp[0]
        other = c.replace((v, u), (v[:i] + (STAR,) + v[i + 1:],))
    assert equivalent(c, other)
    a, b = random_realization([c.words, other.words], c.dim, rng)
    assert a == b


@given(polybox_codes(), polybox_codes(), st.randoms(use_true_random=False))
def test_non_equivalence_is_witnessed(v, u, rng):
    # the generic grid is a realization, so "not equivalent" means the unions differ there
    if v.dim != u.dim:
        return
    grid = AtomGrid.for_codes(v, u)
    assert equivalent(v, u) == (grid.code_mask(v.words) == grid.code_mask(u.words))
    if equivalent(v, u):
        a, b = random_realization([v.words, u.words], v.dim, rng)
        assert a == b


@given(polybox_codes(), polybox_codes(), polybox_codes())
def test_equivalence_is_an_equivalence_relation(a, b, c):
    assert equivalent(a, a)
    if a.dim == b.dim:
        assert equivalent(a, b) == equivalent(b, a)
    if a.dim == b.dim == c.dim and equivalent(a, b) and equivalent(b, c):
        assert equivalent(a, c)


@given(partition_codes())
def test_cylindrical_structure(c):
    for i in range(c.dim):
        for p in {w[i] >> 1 for w in c.words if w[i] != STAR}:
            lo = project(subcode(c, i, 2 * p), i)
            hi = project(subcode(c, i, 2 * p + 1), i)
            assert equivalent(lo, hi)


def test_perfect_code_figure_example():
    centers = realize_perfect_code(code("aa aA Ab AB"), 1)
    assert len(centers) == 4
    assert len(centers) * 3 ** 2 == 6 ** 2
    assert ball_partition(centers, 2, 1)


def test_perfect_code_one_dimension():
    assert ball_partition(realize_perfect_code(code("a A"), 1), 1, 1)


def test_perfect_code_rejects_non_tiling():
    with pytest.raises(NotTilingCode):
        realize_perfect_code(code("a* A*"), 1)


@pytest.mark.parametrize("d,r", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_perfect_codes_small(d, r):
    for c in all_tiling_codes(d, 2):
        assert ball_partition(realize_perfect_code(c, r), d, r)


@given(tiling_codes(max_dim=3, pairs=3), st.integers(1, 2))
def test_perfect_codes_three_pairs(c, r):
    assert ball_partition(realize_perfect_code(c, r), c.dim, r)


def test_perfect_codes_dimension_four():
    rng = random.Random(3)
    from tilekit.census import tiling_classes
    reps = [c.representative for c in tiling_classes(3, 4)]
    from tilekit.expand import build_n4_8
    for c in build_n4_8(reps) + rng.sample(all_tiling_codes(4, 1) + tuple(build_n4_8(reps)), 3):
        assert ball_partition(realize_perfect_code(c, 1), 4, 1)
