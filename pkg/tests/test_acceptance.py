"""Acceptance suite.

Each criterion prints one ``PASS``/``FAIL`` line (visible even under pytest's
output capture) and then asserts. Run standalone with
``python3 tests/test_acceptance.py`` or via ``pytest -m acceptance``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from collections import Counter
from contextlib import contextmanager
from pathlib import Path

import pytest

from ramsey_stars.checker import coloring_arrives, max_matching, star_missing_color
from ramsey_stars.cli import main as cli_main
from ramsey_stars.constructions import build_witness
from ramsey_stars.core import Coloring, Parameters, normalize, targets_for
from ramsey_stars.formulas import (
    _sandwich_value,
    derived_quantities,
    ramsey_value,
    star_matching_ramsey,
    star_ramsey,
    star_ramsey_base,
)
from ramsey_stars.io import format_coloring, parse_coloring, read_coloring
from ramsey_stars.oracle import Status, exists_avoiding_coloring, oracle_ramsey

sys.path.insert(0, str(Path(__file__).parent))
import brute  # noqa: E402

pytestmark = pytest.mark.acceptance

LOWERSTAR_RULES = {"x-even", "x-odd-parity"}
SANDWICH_RULES = {"x-odd-slack", "x-odd-all-odd", "x-odd-parity"}


@pytest.fixture
def report(request):
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def emit(line: str) -> None:
        if capman is not None:
            with capman.global_and_fixture_disabled():
                print(line, flush=True)
        else:
            print(line, flush=True)

    return emit


@contextmanager
def criterion(report, number: int, title: str, limit: float | None):
    """Time the block and print its verdict line; re-raise failures."""
    start = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    if failure is None and limit is not None and elapsed >= limit:
        failure = AssertionError(f"runtime {elapsed:.1f}s exceeds {limit:.0f}s")
    verdict = "PASS" if failure is None else "FAIL"
    budget = f" (limit {limit:.0f}s)" if limit is not None else ""
    detail = "" if failure is None else f": {str(failure).splitlines()[0]}"
    report(f"\n[acceptance] criterion {number} {verdict} {title} in {elapsed:.2f}s{budget}{detail}")
    if failure is not None:
        raise failure


def star_grid(t_max=5, m_max=9):
    for t in range(2, t_max + 1):
        for stars in itertools.combinations_with_replacement(range(1, m_max + 1), t):
            yield Parameters(t, stars)


def matching_grid(t_max=4, m_max=9, s_max=6):
    for t in range(3, t_max + 1):
        for stars in itertools.combinations_with_replacement(range(1, m_max + 1), t - 1):
            for s in range(1, s_max + 1):
                yield Parameters(t, stars, s)


def sweep():
    yield from star_grid()
    yield from matching_grid()


def _oracle_agrees(params, value):
    res = oracle_ramsey(params, n_cap=value)
    assert res.exact, f"{params.label()}: oracle inconclusive ({res.status})"
    assert res.value == value, f"{params.label()}: oracle {res.value}, formula {value}"
    return res


def test_criterion_1_base_grid(report):
    with criterion(report, 1, "t=2 base grid m<=4 matches oracle", 30):
        count = 0
        for m1, m2 in itertools.combinations_with_replacement(range(1, 5), 2):
            value, _ = star_ramsey_base(m1, m2)
            _oracle_agrees(Parameters(2, (m1, m2)), value)
            count += 1
        assert count == 10


def test_criterion_2_three_color_grid(report):
    with criterion(report, 2, "t=3 star grid m<=3 matches oracle", 60):
        rules = set()
        for stars in itertools.combinations_with_replacement(range(1, 4), 3):
            params = Parameters(3, stars)
            value, trace = star_ramsey(params)
            rules.add(trace.rule)
            _oracle_agrees(params, value)
        assert star_ramsey((2, 2, 2))[0] == 3
        assert star_ramsey((3, 3, 3))[0] == 5
        assert {"reduction-equality", "x-even", "x-odd-slack"} <= rules, rules


def test_criterion_3_parity_case(report):
    with criterion(report, 3, "(3,4,4) gives 5 by the parity case; oracle agrees", 60):
        params = Parameters(3, (3, 4, 4))
        value, trace = star_ramsey(params)
        assert (value, trace.rule) == (5, "x-odd-parity")
        targets = targets_for(params)
        found = exists_avoiding_coloring(4, 3, targets, symmetry=2)
        none = exists_avoiding_coloring(5, 3, targets, symmetry=2)
        assert found.status is Status.FOUND and coloring_arrives(found.coloring, targets).avoids
        assert none.status is Status.NONE


def test_criterion_4_matching_grid(report):
    with criterion(report, 4, "t=3 stars+matching grid m<=3 s<=2 matches oracle", 120):
        rules = set()
        for stars in itertools.combinations_with_replacement(range(1, 4), 2):
            for s in (1, 2):
                params = Parameters(3, stars, s)
                value, trace = star_matching_ramsey(params)
                rules.add(trace.rule.removesuffix("-clamped"))
                _oracle_agrees(params, value)
        assert star_matching_ramsey(Parameters(3, (3, 3), 2))[0] == 4
        assert star_matching_ramsey(Parameters(3, (3, 4), 2))[0] == 5
        assert {"matching-inherits", "matching-2s", "matching-degree-count"} <= rules, rules


def _degree_bounds_hold(params, rule, w):
    deg = w.color_degrees()
    if rule in LOWERSTAR_RULES:
        return all(d[i] >= w.n - m for d in deg for i, m in enumerate(params.stars, 1))
    if rule == "x-odd-all-odd":
        x = derived_quantities(params).x
        return w.n == x and all(d[i] == x - m for d in deg for i, m in enumerate(params.stars, 1))
    return True


def test_criterion_5_witness_sweep(report):
    with criterion(report, 5, "witness sweep certified with degree bounds", 300):
        total = 0
        bounded = Counter()
        for params in sweep():
            value, _ = ramsey_value(params)
            w, rule = build_witness(params)
            assert w.n == value - 1, params.label()
            assert coloring_arrives(w, targets_for(params)).avoids, params.label()
            if params.has_matching:
                assert max_matching(w, range(1, params.t))[0] < params.matching_size
            assert _degree_bounds_hold(params, rule, w), f"{params.label()} {rule}"
            if rule in LOWERSTAR_RULES or rule == "x-odd-all-odd":
                bounded[rule] += 1
            total += 1
        assert total == 1992 + 1260
        assert set(bounded) == LOWERSTAR_RULES | {"x-odd-all-odd"}, bounded


def test_criterion_6_invariants(report):
    with criterion(report, 6, "chain, sandwich, monotonicity, boundary", None):
        boundary = 0
        for params in sweep():
            value, trace = ramsey_value(params)
            if params.has_matching:
                prev = star_ramsey(params.stars)[0] if params.t >= 3 else None
                assert value <= prev
                bigger_s = star_matching_ramsey(Parameters(params.t, params.stars,
                                                           params.matching_size + 1))[0]
                assert bigger_s >= value
                for i in range(params.k):
                    grown = list(params.stars)
                    grown[i] += 1
                    assert star_matching_ramsey(normalize(params.t, grown,
                                                          params.matching_size))[0] >= value
                continue
            if params.t >= 3:
                prev = star_ramsey(params.stars[:-1])[0]
                assert value <= prev
                if trace.rule in SANDWICH_RULES:
                    x = derived_quantities(params).x
                    assert x - 1 < value <= x + 1
                if params.stars[-1] + 1 == prev:
                    assert _sandwich_value(params.stars)[1] == prev
                    boundary += 1
            for i in range(params.k):
                grown = list(params.stars)
                grown[i] += 1
                assert star_ramsey(normalize(params.t, grown))[0] >= value
        assert boundary > 20


def test_criterion_7_checker_oracles(report):
    with criterion(report, 7, "checker vs enumeration on 1000+1000 random colorings", 60):
        rng = random.Random(7)
        for _ in range(1000):
            n, t = rng.randint(1, 8), rng.randint(1, 4)
            colors = tuple(rng.randint(1, t) for _ in range(n * (n - 1) // 2))
            c = Coloring(n, t, colors)
            missing, m = rng.randint(1, t), rng.randint(1, 8)
            assert (star_missing_color(c, missing, m) is not None) == \
                brute.star_arrives(n, colors, missing, m)
        for _ in range(1000):
            n, t = rng.randint(1, 10), rng.randint(1, 3)
            colors = tuple(rng.randint(1, t) for _ in range(n * (n - 1) // 2))
            allowed = set(rng.sample(range(1, t + 1), rng.randint(1, t)))
            got = max_matching(Coloring(n, t, colors), allowed)[0]
            assert got == brute.matching_number(n, colors, allowed)


def _instance_args(params: Parameters) -> list[str]:
    args = ["-t", str(params.t), "-m", ",".join(map(str, params.user_stars()))]
    if params.has_matching:
        args += ["-s", str(params.matching_size)]
    return args


def test_criterion_8_pipeline(report, tmp_path, capsys):
    with criterion(report, 8, "witness -> file -> verify over the sweep; byte-identical round trip",
                   None):
        cert = tmp_path / "w.txt"
        count = 0
        rng = random.Random(8)
        for params in sweep():
            # shuffle the user order so the color permutation is exercised too
            user = list(params.stars)
            rng.shuffle(user)
            inst = normalize(params.t, user, params.matching_size)
            args = _instance_args(inst)
            assert cli_main(["witness", *args, "-o", str(cert)]) == 0, args
            assert cli_main(["verify", str(cert), *args]) == 0, args
            text = cert.read_text()
            assert format_coloring(parse_coloring(text)) == text
            assert format_coloring(read_coloring(cert)) == text
            count += 1
            capsys.readouterr()
        assert count == 1992 + 1260


def test_beyond_desk_scale_spot_checks(report):
    """Instances whose search was expected to be out of reach; symmetry pruning settles them."""
    with criterion(report, 9, "extra: oracle confirms (5,5,5)=8 and (5,7,7)=10", 120):
        for stars, expected in [((5, 5, 5), 8), ((5, 7, 7), 10)]:
            params = Parameters(3, stars)
            value, trace = star_ramsey(params)
            assert (value, trace.rule) == (expected, "x-odd-all-odd")
            _oracle_agrees(params, value)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", *sys.argv[1:]]))
