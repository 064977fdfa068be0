from itertools import product
from math import factorial

import pytest

from oracles import brute_orbit
from tilekit.census import tiling_classes
from tilekit.core import code
from tilekit.cover import all_tiling_codes
from tilekit.iso import classify
from tilekit.orbits import (AlphabetTooSmall, CountReport, IncompleteInput, aggregate,
                            c_number, group_order, is_balanced, is_lamination,
                            layered_lower_bound, minimal_orbit_size, orbit_size,
                            orbit_stats, sigma_group, stirling2)

SIMPLE2 = code("aa aA Aa AA")


def test_simple_code_orbits():
    assert orbit_size(SIMPLE2, 2) == 4
    assert minimal_orbit_size(SIMPLE2) == 1
    simple4 = code(" ".join("".join(t) for t in product("aA", repeat=4)))
    assert orbit_size(simple4, 8) == 4096
    assert minimal_orbit_size(simple4) == 1


@pytest.mark.parametrize("d,pairs", [(2, 2), (2, 3), (3, 2)])
def test_orbit_formula_matches_full_group(d, pairs):
    for cls in classify(all_tiling_codes(d, pairs)):
        assert orbit_size(cls.representative, pairs) == len(
            brute_orbit(cls.representative.words, d, pairs))


@pytest.mark.parametrize("d,pairs,total", [(2, 2, 12), (3, 2, 744), (3, 3, 17793)])
def test_orbits_sum_to_exhaustive_count(d, pairs, total):
    assert len(all_tiling_codes(d, pairs)) == total
    reps = [c.representative for c in classify(all_tiling_codes(d, pairs))]
    assert aggregate(reps, d, pairs).m == total


def test_class_sizes_equal_orbit_sizes():
    for cls in classify(all_tiling_codes(3, 2)):
        assert cls.count == orbit_size(cls.representative, 2)


def test_alphabet_too_small():
    c = code("aa aA Ab AB")
    with pytest.raises(AlphabetTooSmall):
        orbit_size(c, 1)


def test_improper_codes_rejected():
    with pytest.raises(Exception):
        orbit_stats(code("a* A*"))


def test_duplicate_classes_rejected():
    with pytest.raises(IncompleteInput):
        aggregate([SIMPLE2, code("aA aa AA Aa")], 2, 2)


def test_sigma_group_closed_and_contains_identity():
    for cls in tiling_classes(3, 4):
        g = sigma_group(cls.representative)
        assert tuple(range(3)) in g
        assert len(g) in (1, 2, 6)


def test_group_order():
    assert group_order(4, 8) == factorial(4) * (factorial(8) * 2 ** 8) ** 4
    assert group_order(2, 2) == 128


def test_stirling_and_c_number():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1
    assert c_number(4) == 252
    assert layered_lower_bound(2, 2) == 12


def test_lamination_and_balance():
    assert is_lamination((4, 2, 1)) and is_lamination((3, 3, 1))
    assert not is_lamination((2, 2, 2))
    assert is_balanced((2, 2, 2)) and not is_balanced((4, 2, 1))


def test_d3_report():
    report = aggregate([c.representative for c in tiling_classes(3, 4)], 3, 4)
    assert report.n == 17
    assert report.laminations == 2
    assert report.balanced == 2
    assert sum(report.orbits.values()) == 17
    assert sum(report.letters.values()) == 17


def test_csv_reports():
    report = aggregate([c.representative for c in tiling_classes(2, 2)], 2, 2)
    assert report.csv("orbits") == "orbit_size,count\n4,1\n8,1\n"
    assert report.csv("letters").splitlines()[0] == "k,count"
    assert "lamination" in report.csv("cylinders")
    with pytest.raises(ValueError):
        report.csv("nope")
    s = report.summary()
    assert s["M"] == "12" and s["N"] == 2


def test_report_add_is_additive():
    r = CountReport(2, 2)
    for cls in tiling_classes(2, 2):
        r.add(orbit_stats(cls.representative, 2))
    assert r.m == 12
