import itertools

import pytest

from ramsey_stars.checker import coloring_arrives, max_matching
from ramsey_stars.constructions import (
    ConstructionInfeasible,
    build_witness,
    lowerstar_witness,
    star_matching_2s_witness,
    star_matching_partition_witness,
    stars_case1_witness,
    stars_case2_witness,
)
from ramsey_stars.core import Coloring, Parameters, normalize, targets_for
from ramsey_stars.formulas import ramsey_value, star_ramsey
from ramsey_stars.io import format_coloring

import brute


def degrees(c):
    return c.color_degrees()


def test_lowerstar_examples():
    w = lowerstar_witness(normalize(3, [3, 3, 3]), 4)
    assert w.n == 4
    for d in degrees(w):
        assert d[1] >= 1 and d[2] >= 1
    assert lowerstar_witness(normalize(2, [1, 1]), 0) == Coloring(0, 2, ())
    w = lowerstar_witness(normalize(3, [2, 3, 3]), 2)
    assert w.n == 2 and coloring_arrives(w, targets_for(normalize(3, [2, 3, 3]))).avoids


def test_lowerstar_rejects_odd_order():
    with pytest.raises(ConstructionInfeasible):
        lowerstar_witness(normalize(3, [3, 3, 3]), 3)


def test_case1_examples():
    w = stars_case1_witness(normalize(3, [2, 3, 3]))
    assert w.n == 3
    # enumeration also finds an avoiding coloring of K_3 (R = 4 > 3)
    assert brute.ramsey(3, (2, 3, 3), n_max=4) == 4
    w = stars_case1_witness(normalize(4, [3, 3, 3, 3]))
    assert w.n == 3


def test_case1_precondition():
    with pytest.raises(ConstructionInfeasible):
        stars_case1_witness(normalize(3, [3, 3, 3]))  # x even


def test_case2_examples():
    w = stars_case2_witness(normalize(3, [1, 3, 3]))
    assert w.n == 3
    assert [tuple(d[1:]) for d in degrees(w)] == [(2, 0, 0)] * 3
    w = stars_case2_witness(normalize(3, [5, 5, 5]))
    assert w.n == 7
    assert all(tuple(d[1:]) == (2, 2, 2) for d in degrees(w))


def test_case2_precondition():
    # x = 3 with h = 2: the slack layout applies instead
    with pytest.raises(ConstructionInfeasible):
        stars_case2_witness(normalize(5, [3, 3, 3, 3, 3]))


def test_matching_2s_examples():
    w = star_matching_2s_witness(normalize(3, [3, 3], 2))
    assert w.n == 3 and set(w.colors) <= {1, 2}
    w = star_matching_2s_witness(normalize(3, [4, 4], 3))
    assert w.n == 5
    with pytest.raises(ConstructionInfeasible):
        star_matching_2s_witness(normalize(3, [2, 2], 2))


def test_partition_examples():
    w = star_matching_partition_witness(normalize(3, [3, 4], 2))
    assert w.n == 4 and max_matching(w, {1, 2})[0] <= 1
    w = star_matching_partition_witness(normalize(3, [5, 5], 3))
    assert w.n == 6 and max_matching(w, {1, 2})[0] <= 2
    assert ramsey_value(normalize(4, [3, 3, 3], 2))[1].rule == "matching-2s"


@pytest.mark.parametrize("t, stars, s, n, label", [
    (3, [3, 3, 3], None, 4, "x-even"),
    (3, [3, 4, 4], None, 4, "x-odd-parity"),
    (3, [2, 2], 2, 2, "matching-inherits"),
])
def test_build_witness_examples(t, stars, s, n, label):
    params = normalize(t, stars, s)
    w, rule = build_witness(params)
    assert (w.n, rule) == (n, label)
    assert coloring_arrives(w, targets_for(params)).avoids


def _sweep():
    for t in range(2, 5):
        for stars in itertools.combinations_with_replacement(range(1, 8), t):
            yield Parameters(t, stars)
    for t in (3, 4):
        for stars in itertools.combinations_with_replacement(range(1, 8), t - 1):
            for s in range(1, 5):
                yield Parameters(t, stars, s)


def test_witness_sweep_properties():
    for params in _sweep():
        value, _ = ramsey_value(params)
        w, rule = build_witness(params)
        assert w.n == value - 1
        assert coloring_arrives(w, targets_for(params)).avoids
        if params.has_matching:
            assert max_matching(w, range(1, params.t))[0] <= params.matching_size - 1
        elif rule == "x-odd-all-odd":
            for d in degrees(w):
                assert all(d[i] == w.n - m for i, m in enumerate(params.stars, 1))


def test_witnesses_deterministic():
    for params in [normalize(3, [5, 5, 5]), normalize(4, [2, 5, 7], 3), normalize(5, [3, 4, 5, 6, 7])]:
        a = format_coloring(build_witness(params)[0])
        b = format_coloring(build_witness(Parameters(params.t, params.stars, params.matching_size))[0])
        assert a == b


def test_reduction_witness_leaves_top_color_unused():
    params = normalize(3, [2, 2, 5])
    assert star_ramsey(params)[1].rule == "reduction-equality"
    w, _ = build_witness(params)
    assert 3 not in w.colors
