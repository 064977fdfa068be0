import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partition_codes, tiling_codes
from tilekit.core import (STAR, DuplicateWord, code, equivalent, parse_word, project,
                          twin_pairs)
from tilekit.cover import all_tiling_codes
from tilekit.gluecut import (Move, NoStarAtPosition, NotTwinPair, PathNotFound, closure,
                             connectivity, cut, find_path, glue, gluecut_neighbors, reduce,
                             reduce_all, replay, switch_neighbors)
from tilekit.iso import isomorphic
from tilekit.planes import FIVE_DIM_FORMS, GLUE_EXAMPLE, GLUE_EXAMPLE_REDUCT


def test_glue_example():
    c = code("aa aA Ab AB")
    assert glue(c, parse_word("aa"), parse_word("aA")) == code("a* Ab AB")
    with pytest.raises(NotTwinPair):
        glue(c, parse_word("aa"), parse_word("AB"))


def test_cut_errors():
    c = code("a* Ab AB")
    with pytest.raises(NoStarAtPosition):
        cut(c, parse_word("a*"), 0, 1)
    with pytest.raises(DuplicateWord):
        cut(code("a* ab"), parse_word("a*"), 1, 1)


@given(partition_codes(), st.data())
def test_glue_cut_round_trip(c, data):
    tp = twin_pairs(c)
    if not tp:
        return
    v, u, i = data.draw(st.sampled_from(tp))
    g = glue(c, v, u)
    assert equivalent(g, c)
    assert cut(g, v[:i] + (STAR,) + v[i + 1:], i, v[i] >> 1) == c


@given(partition_codes(), st.integers(0, 2))
def test_cut_glue_round_trip(c, pair):
    for w in c.words:
        if STAR in w:
            i = w.index(STAR)
            try:
                after = cut(c, w, i, pair)
            except DuplicateWord:
                return
            assert equivalent(after, c)
            assert glue(after, w[:i] + (2 * pair,) + w[i + 1:],
                        w[:i] + (2 * pair + 1,) + w[i + 1:]) == c
            return


@given(tiling_codes(max_dim=3, pairs=2))
def test_every_move_preserves_equivalence(c):
    for _, nxt in switch_neighbors(c, 3):
        assert equivalent(nxt, c)
    for _, nxt in gluecut_neighbors(c, 3):
        assert equivalent(nxt, c)


def test_reduce_glue_example():
    assert reduce(GLUE_EXAMPLE) == GLUE_EXAMPLE_REDUCT
    assert GLUE_EXAMPLE_REDUCT in reduce_all(GLUE_EXAMPLE)
    assert all(not twin_pairs(r) for r in reduce_all(GLUE_EXAMPLE))


def test_switch_neighbors_symmetric():
    codes = all_tiling_codes(2, 2)
    for c in codes:
        for _, n in switch_neighbors(c, 2):
            assert c in {x for _, x in switch_neighbors(n, 2)}


def test_move_text_round_trip():
    for m in (Move("glue", 1, (parse_word("aa"), parse_word("aA"))),
              Move("cut", 0, (parse_word("*a"),), 1),
              Move("switch", 2, (parse_word("aaa"), parse_word("aaA")), 3)):
        assert Move.parse(str(m)) == m
    assert str(Move("cut", 0, (parse_word("*a"),), 1)) == "CUT 1 *a bB"
    for bad in ("JUMP 1 aa", "CUT x *a bB", "CUT 1 *a Bb", "GLUE 1 aa"):
        with pytest.raises(ValueError):
            Move.parse(bad)


def test_find_path_and_replay():
    v = code("aa aA Aa AA")
    u = code("aa aA Ab AB")
    path = find_path(v, u)
    assert len(path) == 1 and replay(v, path) == u
    assert find_path(v, v) == []


def test_find_path_budget():
    with pytest.raises(PathNotFound):
        find_path(code("aaa aaA aAa aAA Aaa AaA AAa AAA"),
                  code("aaa aaA aAa aAA Abb AbB ABb ABB"), budget=2)


def test_find_path_up_to_isomorphism():
    v = code("aa aA Ab AB")
    u = code("ba bA Bb BB")
    path = find_path(v, u, up_to_iso=True)
    assert isomorphic(replay(v, path), u) is not None


def test_switching_graph_d2_connected():
    codes = all_tiling_codes(2, 2)
    comps = connectivity(codes, 2)
    assert len(comps) == 1 and len(comps[0]) == 12
    assert len(closure(codes[:1], 2)) == 12


def test_gluecut_graph_d2_reaches_partition_codes():
    comp = closure([code("aa aA Aa AA")], 2, mode="gluecut")
    assert code("**") in comp and code("a* A*") in comp


@pytest.mark.parametrize("i,length", [(1, 3), (2, 5), (3, 4), (4, 5), (5, 3), (6, 2)])
def test_five_dimensional_forms(i, length):
    # the two halves of each form, with the first letter dropped, are
    # equivalent and joined by glue and cut moves
    f1, f2 = FIVE_DIM_FORMS[i]
    p1, p2 = project(f1, 0), project(f2, 0)
    assert equivalent(p1, p2)
    path = find_path(p1, p2, mode="gluecut")
    assert len(path) == length
    assert replay(p1, path) == p2
