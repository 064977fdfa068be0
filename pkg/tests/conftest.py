import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tilekit.core import STAR, Code, twin_pairs
from tilekit.cover import all_tiling_codes
from tilekit.iso import CandidateMap

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("TILEKIT_EXTENDED") == "1":
        return
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(pytest.mark.skip(reason="set TILEKIT_EXTENDED=1 to run"))


# -- acceptance summary lines --------------------------------------------------------

ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


# -- strategies ------------------------------------------------------------------------

@st.composite
def tiling_codes(draw, max_dim=3, pairs=2):
    d = draw(st.integers(1, max_dim))
    codes = all_tiling_codes(d, pairs)
    return codes[draw(st.integers(0, len(codes) - 1))]


@st.composite
def partition_codes(draw, max_dim=3):
    """A tiling code with some random twin pairs glued."""
    c = draw(tiling_codes(max_dim))
    for _ in range(draw(st.integers(0, 2 ** c.dim))):
        tp = twin_pairs(c)
        if not tp:
            break
        v, u, i = tp[draw(st.integers(0, len(tp) - 1))]
        c = c.replace((v, u), (v[:i] + (STAR,) + v[i + 1:],))
    return c


@st.composite
def polybox_codes(draw, max_dim=3):
    """A nonempty subset of a partition code."""
    c = draw(partition_codes(max_dim))
    keep = draw(st.lists(st.booleans(), min_size=len(c), max_size=len(c)))
    words = [w for w, k in zip(c.words, keep) if k] or [c.words[0]]
    return Code(words, c.dim)


@st.composite
def group_maps(draw, dim, pairs=4):
    perm = draw(st.permutations(range(dim)))
    partial = []
    for _ in range(dim):
        targets = draw(st.permutations(range(pairs)))
        flips = draw(st.lists(st.integers(0, 1), min_size=pairs, max_size=pairs))
        partial.append({2 * p: 2 * q + f for p, (q, f) in enumerate(zip(targets, flips))})
    return CandidateMap.from_partial(perm, partial)
