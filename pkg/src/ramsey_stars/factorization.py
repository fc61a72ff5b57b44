"""Matching decompositions of complete graphs and circulant regular graphs."""

from __future__ import annotations

from .core import MatchingDecomposition


class OddOrder(ValueError):
    pass


class EvenOrder(ValueError):
    pass


class ParityInfeasible(ValueError):
    pass


def near_one_factorization(x: int) -> MatchingDecomposition:
    """Near-1-factorization of ``K_x`` for odd ``x >= 3``.

    Class ``v`` holds the edges ``{a, b}`` with ``a + b = 2v (mod x)``, listed
    outward from ``v`` as ``(v+1, v-1), (v+2, v-2), ...``. It misses only ``v``.
    """
    if x % 2 == 0:
        raise EvenOrder(f"near-1-factorization needs odd order, got {x}")
    if x < 3:
        raise EvenOrder(f"near-1-factorization needs order >= 3, got {x}")
    classes = tuple(
        tuple(((v + k) % x, (v - k) % x) for k in range(1, (x - 1) // 2 + 1))
        for v in range(x)
    )
    return MatchingDecomposition(x, classes, tuple(range(x)))


def one_factorization(p: int) -> MatchingDecomposition:
    """Round-robin 1-factorization of ``K_p`` for even ``p >= 2``.

    Vertex ``p - 1`` is fixed; round ``k`` pairs it with ``k`` and pairs the
    remaining vertices by reflection about ``k`` modulo ``p - 1``.
    """
    if p % 2 == 1 or p < 2:
        raise OddOrder(f"1-factorization needs even order >= 2, got {p}")
    if p == 2:
        return MatchingDecomposition(2, (((0, 1),),))
    inner = near_one_factorization(p - 1)
    classes = tuple(((k, p - 1),) + cls for k, cls in enumerate(inner.classes))
    return MatchingDecomposition(p, classes)


def regular_circulant(p: int, d: int) -> set[tuple[int, int]]:
    """A ``d``-regular graph on ``p`` vertices as a set of ``(u, v)`` with ``u < v``.

    Uses differences ``±1..±floor(d/2)``, plus ``p/2`` when ``d`` is odd.
    """
    if not 0 <= d <= max(p - 1, 0):
        raise ParityInfeasible(f"degree {d} impossible on {p} vertices")
    if (d * p) % 2:
        raise ParityInfeasible(f"no {d}-regular graph on {p} vertices (odd degree sum)")
    diffs = list(range(1, d // 2 + 1))
    if d % 2:
        diffs.append(p // 2)
    edges = set()
    for u in range(p):
        for k in diffs:
            v = (u + k) % p
            edges.add((min(u, v), max(u, v)))
    return edges
