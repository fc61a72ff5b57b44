"""Extremal colorings certifying the lower bound ``R > R - 1``.

Every builder returns a coloring that has been run through the checker.
A rejected coloring is a defect and raises ``ConstructionInvariantViolated``.
"""

from __future__ import annotations

from functools import lru_cache

from .checker import coloring_arrives
from .core import Coloring, Parameters, ParameterError, TargetSpec, targets_for
from .factorization import near_one_factorization, one_factorization, regular_circulant
from .formulas import (
    BASE,
    M_2S,
    M_COUNT,
    M_COUNT_CLAMPED,
    M_INHERIT,
    ODD_PARITY,
    ODD_REGULAR,
    ODD_SLACK,
    REDUCTION,
    X_EVEN,
    _derived,
    star_matching_ramsey,
    star_ramsey,
)


class ConstructionError(RuntimeError):
    pass


class ConstructionInfeasible(ConstructionError):
    pass


class ConstructionInvariantViolated(ConstructionError):
    pass


class WitnessUnavailable(ConstructionError):
    pass


def _certify(coloring: Coloring, targets: TargetSpec, what: str) -> Coloring:
    verdict = coloring_arrives(coloring, targets)
    if verdict.arrives:
        pattern, missing = targets.entries[verdict.index]
        raise ConstructionInvariantViolated(
            f"{what}: {pattern} missing color {missing} embeds ({verdict.embedding})")
    return coloring


def _require_stars(params: Parameters) -> None:
    if params.has_matching:
        raise ParameterError("expected an all-stars instance")


def _paint(n: int, t: int, painted: dict[tuple[int, int], int], fill: int) -> Coloring:
    def fn(u: int, v: int) -> int:
        return painted.get((u, v), fill)

    return Coloring.from_function(n, t, fn)


def _set(painted: dict[tuple[int, int], int], a: int, b: int, color: int) -> None:
    painted[(min(a, b), max(a, b))] = color


# ---------------------------------------------------------------------------
# All-stars constructions
# ---------------------------------------------------------------------------


def base_witness(m1: int, m2: int) -> Coloring:
    """Two-color coloring of ``K_{m1+m2-1-eps}``: color 1 is a circulant of degree ``p - m1``."""
    eps = 1 if m1 % 2 == 0 and m2 % 2 == 0 else 0
    p = m1 + m2 - 1 - eps
    ones = regular_circulant(p, p - m1)
    coloring = Coloring.from_function(p, 2, lambda u, v: 1 if (u, v) in ones else 2)
    return _certify(coloring, targets_for(Parameters(2, (m1, m2))), "two-star base")


def lowerstar_witness(params: Parameters, p: int) -> Coloring:
    """Coloring of ``K_p`` (``p`` even) grouped from a 1-factorization.

    With ``r`` the number of stars of size at most ``p`` (capped at ``t - 1``),
    color ``i <= r`` receives ``p - m_i`` perfect matchings and color ``r + 1``
    the rest, so every vertex has at least ``p - m_i`` edges of color ``i``.
    """
    _require_stars(params)
    t, stars = params.t, params.stars
    if p == 0:
        return Coloring(0, t, ())
    if p < 0 or p % 2:
        raise ConstructionInfeasible(f"order must be even and >= 0, got {p}")
    r = min(sum(1 for m in stars if m <= p), t - 1)
    counts = [max(0, p - stars[i]) for i in range(r)]
    if sum(counts) > p - 1:
        raise ConstructionInfeasible(
            f"need {sum(counts)} matchings for colors 1..{r}, only {p - 1} exist")
    painted: dict[tuple[int, int], int] = {}
    classes = iter(one_factorization(p).classes)
    for color, count in enumerate(counts, start=1):
        for _ in range(count):
            for a, b in next(classes):
                _set(painted, a, b, color)
    coloring = _paint(p, t, painted, fill=r + 1)
    deg = coloring.color_degrees()
    for i in range(1, r + 1):
        if min(d[i] for d in deg) < p - stars[i - 1]:
            raise ConstructionInvariantViolated(f"color {i} degree below {p - stars[i - 1]}")
    return _certify(coloring, targets_for(params), "lower-star grouping")


def _lex_members(sizes: list[int]) -> list[tuple[int, int]]:
    """Members ``(i, j)`` of classes ``T_i = {u_i1..u_i,n_i}`` in lexicographic order."""
    return [(i, j) for i, n_i in enumerate(sizes, start=1) for j in range(1, n_i + 1)]


def stars_case1_witness(params: Parameters) -> Coloring:
    """Coloring of ``K_x`` for ``x`` odd with remainder ``h >= 1``.

    Vertices sit on a cycle: ``v_1`` at 0, then the members ``u_ij`` of
    ``T_1, ..., T_{x-m_1}`` in lexicographic order, then ``v_r`` and the other
    ``v``. Each ``u_ij`` paints its near-1-factor with ``j``. The factors of
    ``v_1`` and ``v_r`` repay the one missing edge of color ``j`` at each
    ``u_ij``: an edge ``u-v`` takes the color of its ``u``, an edge ``u-u``
    takes the color of the lexicographically smaller member for ``v_1`` and
    of the larger one for ``v_r``.
    """
    _require_stars(params)
    t, stars = params.t, params.stars
    d = _derived(stars)
    if d.x % 2 == 0 or d.h < 1:
        raise ConstructionInfeasible(f"needs x odd and h >= 1, got x={d.x}, h={d.h}")
    x = d.x
    r = d.sigma + t - (t - 1) * x
    if x == 1:
        return _certify(Coloring(1, t, ()), targets_for(params), "odd-slack layout")
    width = max(0, x - stars[0])
    sizes = [sum(1 for m in stars if x - m >= i) for i in range(1, width + 1)]
    members = _lex_members(sizes)
    if len(members) + r != x:
        raise ConstructionInfeasible(f"layout needs {len(members) + r} vertices, K_{x} has {x}")
    # position -> (i, j); v vertices are absent from the map
    member_at = {pos: ij for pos, ij in enumerate(members, start=1)}
    v_first, v_last = 0, len(members) + 1
    factors = near_one_factorization(x).classes
    painted: dict[tuple[int, int], int] = {}
    for pos, (_, j) in member_at.items():
        for a, b in factors[pos]:
            _set(painted, a, b, j)
    for owner, pick in ((v_first, min), (v_last, max)):
        for a, b in factors[owner]:
            ua, ub = member_at.get(a), member_at.get(b)
            if ua and ub:
                _set(painted, a, b, pick(ua, ub)[1])
            elif ua or ub:
                _set(painted, a, b, (ua or ub)[1])
    coloring = _paint(x, t, painted, fill=t)
    deg = coloring.color_degrees()
    for i, m in enumerate(stars, start=1):
        if min(dv[i] for dv in deg) < x - m:
            raise ConstructionInvariantViolated(f"color {i} degree below {x - m}")
    return _certify(coloring, targets_for(params), "odd-slack layout")


def stars_case2_witness(params: Parameters) -> Coloring:
    """Coloring of ``K_x`` for ``x`` odd, ``h = 0`` and every star odd.

    ``v_x`` sits at 0 with ``T_1, T_2, ...`` on one side and mirror copies
    ``T'_1, T'_2, ...`` on the other; ``u_ij`` and ``u'_ij`` paint their
    near-1-factors with ``j`` and the factor of ``v_x`` joins each ``u_ij`` to
    ``u'_ij`` in color ``j``. Every color ``i`` is then exactly
    ``(x - m_i)``-regular.
    """
    _require_stars(params)
    t, stars = params.t, params.stars
    d = _derived(stars)
    if d.x % 2 == 0 or d.h != 0 or any(m % 2 == 0 for m in stars):
        raise ConstructionInfeasible(f"needs x odd, h = 0 and all stars odd, got x={d.x}, h={d.h}")
    x = d.x
    if x == 1:
        return _certify(Coloring(1, t, ()), targets_for(params), "odd-regular layout")
    half = (x - stars[0]) // 2
    sizes = [sum(1 for m in stars if x - m >= 2 * i) for i in range(1, half + 1)]
    members = _lex_members(sizes)
    if 2 * len(members) + 1 != x:
        raise ConstructionInfeasible(f"layout needs {2 * len(members) + 1} vertices, K_{x} has {x}")
    factors = near_one_factorization(x).classes
    painted: dict[tuple[int, int], int] = {}
    for pos, (_, j) in enumerate(members, start=1):
        for owner in (pos, x - pos):
            for a, b in factors[owner]:
                _set(painted, a, b, j)
        _set(painted, pos, x - pos, j)
    if len(painted) != x * (x - 1) // 2:
        raise ConstructionInvariantViolated("odd-regular layout left edges unpainted")
    coloring = _paint(x, t, painted, fill=t)
    deg = coloring.color_degrees()
    for i, m in enumerate(stars, start=1):
        if any(dv[i] != x - m for dv in deg):
            raise ConstructionInvariantViolated(f"color {i} is not {x - m}-regular")
    return _certify(coloring, targets_for(params), "odd-regular layout")


@lru_cache(maxsize=None)
def _star_witness(stars: tuple[int, ...]) -> tuple[Coloring, str]:
    t = len(stars)
    params = Parameters(t, stars)
    value, trace = star_ramsey(stars)
    rule = trace.rule
    if rule == BASE:
        coloring = base_witness(*stars)
    elif rule == REDUCTION:
        inner, _ = _star_witness(stars[:-1])
        coloring = _certify(inner.with_palette(t), targets_for(params), "reduction")
    elif rule == X_EVEN:
        coloring = lowerstar_witness(params, value - 1)
    elif rule == ODD_SLACK:
        coloring = stars_case1_witness(params)
    elif rule == ODD_REGULAR:
        coloring = stars_case2_witness(params)
    elif rule == ODD_PARITY:
        coloring = lowerstar_witness(params, value - 1)
    else:
        raise WitnessUnavailable(f"no construction for rule {rule!r}")
    if coloring.n != value - 1:
        raise ConstructionInvariantViolated(f"witness has {coloring.n} vertices, expected {value - 1}")
    return coloring, rule


# ---------------------------------------------------------------------------
# Stars plus one matching
# ---------------------------------------------------------------------------


def _matching_setup(params: Parameters):
    if not params.has_matching:
        raise ParameterError("expected a stars-plus-matching instance")
    t, s, stars = params.t, params.matching_size, params.stars
    r_prev, _ = star_ramsey(stars)
    sigma = sum(m - 1 for m in stars)
    return t, s, stars, r_prev, sigma


def star_matching_2s_witness(params: Parameters) -> Coloring:
    """Coloring of ``K_{2s-1}`` induced from the witness of the stars alone; color ``t`` unused."""
    t, s, stars, r_prev, _ = _matching_setup(params)
    if 2 * s >= r_prev:
        raise ConstructionInfeasible(f"needs 2s < R_(t-1) = {r_prev}, got s={s}")
    inner, _ = _star_witness(stars)
    coloring = inner.restrict(2 * s - 1).with_palette(t)
    return _certify(coloring, targets_for(params), "2s restriction")


def star_matching_partition_witness(params: Parameters, n: int | None = None) -> Coloring:
    """Coloring of ``K_n`` (default ``n = l``) from blocks ``X_i`` of size ``n_i = max(0, n - m_i)``.

    The blocks plus one anchor (two when ``z = sum n_i`` is even) carry a
    1-factorization whose factors are grouped ``n_i`` per color ``i``; with two
    anchors, color 1 takes one extra factor (the one through the anchor edge)
    and the anchor edge itself is recolored ``t``. Block ``X_i`` is joined to
    the other free vertices in color ``i``; everything else is color ``t``.
    Every non-``t`` edge meets a block, so the matching number in colors
    ``1..t-1`` is at most ``z``.
    """
    t, s, stars, _, sigma = _matching_setup(params)
    if n is None:
        n = -(-(sigma + s) // (t - 1))
    sizes = [max(0, n - m) for m in stars]
    z = sum(sizes)
    if z > s - 1:
        raise ConstructionInfeasible(f"blocks total {z} vertices, must be <= s - 1 = {s - 1}")
    anchors = 0 if z == 0 else (1 if z % 2 else 2)
    if z + anchors > n:
        raise ConstructionInfeasible(f"K_{n} too small for {z} block vertices and {anchors} anchors")
    block_of: dict[int, int] = {}
    v = 0
    for color, size in enumerate(sizes, start=1):
        for _ in range(size):
            block_of[v] = color
            v += 1
    core = list(range(z + anchors))
    free = list(range(z + anchors, n))
    painted: dict[tuple[int, int], int] = {}
    if z:
        factors = list(one_factorization(z + anchors).classes)
        if anchors == 2:
            xy = (z, z + 1)
            k = next(i for i, cls in enumerate(factors) if xy in cls or xy[::-1] in cls)
            factors.insert(0, factors.pop(k))
            sizes_used = [sizes[0] + 1] + sizes[1:]
        else:
            sizes_used = sizes
        it = iter(factors)
        for color, count in enumerate(sizes_used, start=1):
            for _ in range(count):
                for a, b in next(it):
                    _set(painted, core[a], core[b], color)
        if anchors == 2:
            _set(painted, z, z + 1, t)
    for u, color in block_of.items():
        for w in free:
            _set(painted, u, w, color)
    coloring = _paint(n, t, painted, fill=t)
    return _certify(coloring, targets_for(params), "block partition")


@lru_cache(maxsize=None)
def _matching_witness(t: int, stars: tuple[int, ...], s: int) -> tuple[Coloring, str]:
    params = Parameters(t, stars, s)
    value, trace = star_matching_ramsey(params)
    rule = trace.rule
    if rule == M_INHERIT:
        inner, _ = _star_witness(stars)
        coloring = _certify(inner.with_palette(t), targets_for(params), "inherited")
    elif rule == M_2S:
        coloring = star_matching_2s_witness(params)
    elif rule == M_COUNT:
        coloring = star_matching_partition_witness(params)
    elif rule == M_COUNT_CLAMPED:
        if value == 2 * s:
            coloring = star_matching_2s_witness(params)
        else:
            coloring = star_matching_partition_witness(params, value - 1)
    else:
        raise WitnessUnavailable(f"no construction for rule {rule!r}")
    if coloring.n != value - 1:
        raise ConstructionInvariantViolated(f"witness has {coloring.n} vertices, expected {value - 1}")
    return coloring, rule


def build_witness(params: Parameters) -> tuple[Coloring, str]:
    """Checker-validated coloring of ``K_{R-1}`` for a normalized instance, plus the rule label."""
    if params.has_matching:
        return _matching_witness(params.t, params.stars, params.matching_size)
    return _star_witness(params.stars)
