"""Closed-form values of the (t-1)-chromatic Ramsey numbers.

``star_ramsey`` handles ``t`` stars, ``star_matching_ramsey`` handles
``t - 1`` stars plus one matching. Both return the value and a
:class:`DerivationTrace` recording which rule fired and the quantities it used.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import DerivationTrace, MatchingWithTLessThan3, ParameterError, Parameters, Step

BASE = "two-star-base"
REDUCTION = "reduction-equality"
X_EVEN = "x-even"
ODD_SLACK = "x-odd-slack"
ODD_REGULAR = "x-odd-all-odd"
ODD_PARITY = "x-odd-parity"
M_INHERIT = "matching-inherits"
M_2S = "matching-2s"
M_COUNT = "matching-degree-count"
M_COUNT_CLAMPED = "matching-degree-count-clamped"

STAR_RULES = (BASE, REDUCTION, X_EVEN, ODD_SLACK, ODD_REGULAR, ODD_PARITY)
MATCHING_RULES = (M_INHERIT, M_2S, M_COUNT, M_COUNT_CLAMPED)
# Rules whose value comes from the x-sandwich rather than a smaller instance.
SANDWICH_RULES = (X_EVEN, ODD_SLACK, ODD_REGULAR, ODD_PARITY)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class DerivedQuantities:
    sigma: int
    x: int
    h: int
    q: int
    # x_j for j = 2..t, computed on the prefix m_1..m_j
    x_chain: tuple[int, ...]


def derived_quantities(params: Parameters) -> DerivedQuantities:
    """Intermediate symbols of an all-stars instance.

    ``sigma`` is the sum of ``m_i - 1``, ``x = floor((sigma + t - 1) / (t - 1))``
    and ``sigma = q (t - 1) + h``.
    """
    if params.has_matching:
        raise ParameterError("derived_quantities expects an all-stars instance")
    return _derived(params.stars)


def _derived(stars: tuple[int, ...]) -> DerivedQuantities:
    t = len(stars)
    sigma = sum(m - 1 for m in stars)
    x = (sigma + t - 1) // (t - 1)
    q, h = divmod(sigma, t - 1)
    chain = tuple((sum(stars[:j]) - 1) // (j - 1) for j in range(2, t + 1))
    assert chain[-1] == x, "x must equal floor((sum m_i - 1)/(t - 1))"
    return DerivedQuantities(sigma, x, h, q, chain)


def star_ramsey_base(m1: int, m2: int) -> tuple[int, DerivationTrace]:
    """Two-color star value ``m1 + m2 - eps`` with ``eps = 1`` iff both are even."""
    if m1 < 1 or m2 < 1:
        raise ParameterError(f"star sizes must be >= 1, got ({m1}, {m2})")
    trace = DerivationTrace()
    eps = 1 if m1 % 2 == 0 and m2 % 2 == 0 else 0
    trace.add(BASE, m1 + m2 - eps, stars=(m1, m2), eps=eps)
    return trace.result, trace


@lru_cache(maxsize=None)
def _star_steps(stars: tuple[int, ...]) -> tuple[Step, ...]:
    t = len(stars)
    if t == 2:
        return tuple(star_ramsey_base(*stars)[1].steps)
    prefix = _star_steps(stars[:-1])
    r_prev = prefix[-1].value
    m_t = stars[-1]
    trace = DerivationTrace(list(prefix))
    if m_t + 1 >= r_prev:
        trace.add(REDUCTION, r_prev, t=t, m_t=m_t, R_prev=r_prev)
        if m_t + 1 == r_prev:
            # boundary: the sandwich formula also applies and must agree
            assert _sandwich_value(stars)[1] == r_prev, f"boundary disagreement at {stars}"
        return tuple(trace.steps)
    rule, value, d = _sandwich_value(stars)
    trace.add(rule, value, t=t, stars=stars, sigma=d.sigma, x=d.x, h=d.h, q=d.q, R_prev=r_prev)
    return tuple(trace.steps)


def _sandwich_value(stars: tuple[int, ...]) -> tuple[str, int, DerivedQuantities]:
    d = _derived(stars)
    if d.x % 2 == 0:
        return X_EVEN, d.x + 1, d
    if d.h >= 1:
        return ODD_SLACK, d.x + 1, d
    if all(m % 2 == 1 for m in stars):
        return ODD_REGULAR, d.x + 1, d
    return ODD_PARITY, d.x, d


def star_ramsey(params: Parameters | tuple[int, ...]) -> tuple[int, DerivationTrace]:
    """Value for ``t`` stars; accepts normalized Parameters or a tuple of star sizes."""
    if isinstance(params, Parameters):
        if params.has_matching:
            raise ParameterError("star_ramsey expects an all-stars instance")
        stars = params.stars
    else:
        stars = tuple(sorted(params))
        if len(stars) < 2 or stars[0] < 1:
            raise ParameterError(f"need at least two positive star sizes, got {params}")
    trace = DerivationTrace(list(_star_steps(stars)))
    return trace.result, trace


def _clamped_threshold(stars: tuple[int, ...], s: int) -> int:
    """Least ``n`` with ``sum_i max(0, n - m_i) >= s``."""
    n = 1
    while sum(max(0, n - m) for m in stars) < s:
        n += 1
    return n


def star_matching_ramsey(params: Parameters) -> tuple[int, DerivationTrace]:
    """Value for ``t - 1`` stars plus a matching of size ``s`` (``t >= 3``).

    When ``2s >= R_{t-1}`` the value is inherited from the stars alone.
    Otherwise it is ``2s`` when the star degrees are small relative to ``s`` and
    ``ceil((sigma + s)/(t - 1)) + 1`` when they are large. The last formula
    assumes ``l - m_i >= 0`` for every star; when some star exceeds ``l`` the
    color-degree count is taken with negative terms dropped instead.
    """
    if not params.has_matching:
        raise ParameterError("star_matching_ramsey expects a matching")
    t, s = params.t, params.matching_size
    if t < 3:
        raise MatchingWithTLessThan3(f"t must be >= 3, got {t}")
    stars = params.stars
    r_prev, trace = star_ramsey(stars)
    sigma = sum(m - 1 for m in stars)
    threshold = (2 * t - 3) * s - t + 2
    common = dict(t=t, stars=stars, s=s, sigma=sigma, R_prev=r_prev)
    if 2 * s >= r_prev:
        trace.add(M_INHERIT, r_prev, **common)
    elif sigma < threshold:
        trace.add(M_2S, 2 * s, threshold=threshold, **common)
    else:
        l = _ceil_div(sigma + s, t - 1)
        if l >= stars[-1]:
            trace.add(M_COUNT, l + 1, threshold=threshold, l=l, **common)
        else:
            n_star = _clamped_threshold(stars, s)
            value = min(r_prev, max(2 * s, n_star))
            trace.add(M_COUNT_CLAMPED, value, threshold=threshold, l=l, n_star=n_star, **common)
    return trace.result, trace


def ramsey_value(params: Parameters) -> tuple[int, DerivationTrace]:
    if params.has_matching:
        return star_matching_ramsey(params)
    return star_ramsey(params)


def replay(trace: DerivationTrace) -> int:
    """Recompute every step from its recorded symbols and return the final value.

    Raises ``AssertionError`` if a recorded value or symbol is inconsistent.
    """
    prev: int | None = None
    for step in trace.steps:
        sym = step.symbols
        rule = step.rule
        if rule == BASE:
            m1, m2 = sym["stars"]
            eps = 1 if m1 % 2 == 0 and m2 % 2 == 0 else 0
            assert eps == sym["eps"]
            value = m1 + m2 - eps
        elif rule == REDUCTION:
            assert sym["R_prev"] == prev and sym["m_t"] + 1 >= prev
            value = prev
        elif rule in SANDWICH_RULES:
            assert sym["R_prev"] == prev and sym["stars"][-1] + 1 < prev
            expected_rule, value, d = _sandwich_value(tuple(sym["stars"]))
            assert expected_rule == rule
            assert (d.sigma, d.x, d.h, d.q) == (sym["sigma"], sym["x"], sym["h"], sym["q"])
        elif rule in MATCHING_RULES:
            assert sym["R_prev"] == prev
            t, s, stars = sym["t"], sym["s"], tuple(sym["stars"])
            assert sym["sigma"] == sum(m - 1 for m in stars)
            if rule == M_INHERIT:
                assert 2 * s >= prev
                value = prev
            elif rule == M_2S:
                assert 2 * s < prev and sym["sigma"] < (2 * t - 3) * s - t + 2
                value = 2 * s
            else:
                assert 2 * s < prev and sym["sigma"] >= (2 * t - 3) * s - t + 2
                l = _ceil_div(sym["sigma"] + s, t - 1)
                assert l == sym["l"]
                if rule == M_COUNT:
                    assert l >= stars[-1]
                    value = l + 1
                else:
                    assert l < stars[-1]
                    value = min(prev, max(2 * s, _clamped_threshold(stars, s)))
        else:
            raise AssertionError(f"unknown rule {rule!r}")
        assert value == step.value, f"step {rule} recorded {step.value}, replay gives {value}"
        prev = value
    assert prev == trace.result
    return prev
