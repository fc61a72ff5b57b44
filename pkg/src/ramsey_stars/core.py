"""Shared domain types: problem instances, edge colorings, targets and traces.

Colors are 1-based (``1..t``); vertices are 0-based (``0..n-1``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence


class ParameterError(ValueError):
    """Raised when a problem instance is malformed."""


class NonPositiveStar(ParameterError):
    pass


class MatchingWithTLessThan3(ParameterError):
    pass


class TooFewColors(ParameterError):
    pass


class StarCountMismatch(ParameterError):
    pass


class ColoringError(ValueError):
    """Raised when a coloring violates totality or palette bounds."""


# ---------------------------------------------------------------------------
# Instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Parameters:
    """A normalized instance.

    ``stars`` is sorted non-decreasing. ``perm[i]`` is the 1-based position in
    the user's input of the star stored at sorted position ``i + 1``.
    When ``matching_size`` is set the instance has ``t - 1`` stars and the
    matching is the target that misses color ``t``.
    """

    t: int
    stars: tuple[int, ...]
    matching_size: int | None = None
    perm: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.perm:
            object.__setattr__(self, "perm", tuple(range(1, len(self.stars) + 1)))
        _validate(self.t, self.stars, self.matching_size)
        if list(self.stars) != sorted(self.stars):
            raise ParameterError(f"stars must be sorted, got {self.stars}")
        if sorted(self.perm) != list(range(1, len(self.stars) + 1)):
            raise ParameterError(f"perm {self.perm} is not a permutation of 1..{len(self.stars)}")

    @property
    def has_matching(self) -> bool:
        return self.matching_size is not None

    @property
    def k(self) -> int:
        return len(self.stars)

    def prefix(self, j: int) -> Parameters:
        """The all-stars instance on the first ``j`` stars with ``j`` colors."""
        return Parameters(t=j, stars=self.stars[:j])

    def user_stars(self) -> tuple[int, ...]:
        out = [0] * self.k
        for sorted_pos, user_pos in enumerate(self.perm):
            out[user_pos - 1] = self.stars[sorted_pos]
        return tuple(out)

    def color_to_user(self) -> dict[int, int]:
        """Map normalized colors to user-ordered colors (color t is fixed for matchings)."""
        mapping = {i + 1: p for i, p in enumerate(self.perm)}
        for c in range(1, self.t + 1):
            mapping.setdefault(c, c)
        return mapping

    def denormalize_coloring(self, coloring: Coloring) -> Coloring:
        return coloring.recolor(self.color_to_user())

    def label(self) -> str:
        stars = "-".join(str(m) for m in self.stars)
        if self.has_matching:
            return f"t={self.t} m={stars} s={self.matching_size}"
        return f"t={self.t} m={stars}"


def _validate(t: int, stars: Sequence[int], s: int | None) -> None:
    if any(m < 1 for m in stars):
        raise NonPositiveStar(f"every star size must be >= 1, got {list(stars)}")
    if s is not None:
        if t < 3:
            raise MatchingWithTLessThan3(f"stars plus a matching requires t >= 3, got t={t}")
        if s < 1:
            raise ParameterError(f"matching size must be >= 1, got {s}")
        if len(stars) != t - 1:
            raise StarCountMismatch(
                f"with a matching, expected t-1={t - 1} stars, got {len(stars)}")
    else:
        if t < 2:
            raise TooFewColors(f"need at least 2 colors, got t={t}")
        if len(stars) != t:
            raise StarCountMismatch(f"expected t={t} stars, got {len(stars)}")


def normalize(t: int, stars: Sequence[int], s: int | None = None) -> Parameters:
    """Validate raw user parameters and sort the stars (stable)."""
    stars = [int(m) for m in stars]
    _validate(int(t), stars, s)
    order = sorted(range(len(stars)), key=lambda i: stars[i])
    return Parameters(
        t=int(t),
        stars=tuple(stars[i] for i in order),
        matching_size=None if s is None else int(s),
        perm=tuple(i + 1 for i in order),
    )


# ---------------------------------------------------------------------------
# Colorings
# ---------------------------------------------------------------------------


def edge_index(n: int, u: int, v: int) -> int:
    """Position of edge ``{u, v}`` in lexicographic order of ``K_n``."""
    if u > v:
        u, v = v, u
    if u == v or u < 0 or v >= n:
        raise IndexError(f"no edge ({u}, {v}) in K_{n}")
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def lex_edges(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Coloring:
    """A total edge coloring of ``K_n`` with palette ``1..t``.

    ``colors`` lists edge colors in lexicographic order ``(0,1), (0,2), ...``.
    """

    n: int
    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ColoringError(f"vertex count must be >= 0, got {self.n}")
        if self.t < 1:
            raise ColoringError(f"palette size must be >= 1, got {self.t}")
        expected = self.n * (self.n - 1) // 2
        if len(self.colors) != expected:
            raise ColoringError(f"K_{self.n} has {expected} edges, got {len(self.colors)} colors")
        for c in self.colors:
            if not 1 <= c <= self.t:
                raise ColoringError(f"color {c} outside 1..{self.t}")

    @classmethod
    def from_function(cls, n: int, t: int, fn: Callable[[int, int], int]) -> Coloring:
        return cls(n, t, tuple(fn(u, v) for u, v in combinations(range(n), 2)))

    @classmethod
    def from_mapping(cls, n: int, t: int, edge_color: Mapping[tuple[int, int], int]) -> Coloring:
        colors = []
        for u, v in combinations(range(n), 2):
            if (u, v) in edge_color:
                colors.append(edge_color[(u, v)])
            elif (v, u) in edge_color:
                colors.append(edge_color[(v, u)])
            else:
                raise ColoringError(f"edge ({u}, {v}) has no color")
        return cls(n, t, tuple(colors))

    def color(self, u: int, v: int) -> int:
        return self.colors[edge_index(self.n, u, v)]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for (u, v), c in zip(combinations(range(self.n), 2), self.colors):
            yield u, v, c

    @property
    def edge_color(self) -> dict[tuple[int, int], int]:
        return {(u, v): c for u, v, c in self.edges()}

    def color_degrees(self) -> list[list[int]]:
        """``deg[v][c]`` = number of edges at ``v`` with color ``c`` (index 0 unused)."""
        deg = [[0] * (self.t + 1) for _ in range(self.n)]
        for u, v, c in self.edges():
            deg[u][c] += 1
            deg[v][c] += 1
        return deg

    def with_palette(self, t: int) -> Coloring:
        return Coloring(self.n, t, self.colors)

    def restrict(self, k: int) -> Coloring:
        """Induced coloring on the first ``k`` vertices."""
        if not 0 <= k <= self.n:
            raise ColoringError(f"cannot restrict K_{self.n} to {k} vertices")
        return Coloring.from_function(k, self.t, self.color)

    def recolor(self, mapping: Mapping[int, int]) -> Coloring:
        return Coloring(self.n, self.t, tuple(mapping[c] for c in self.colors))

    def add_vertex(self, colors_to_new: Sequence[int]) -> Coloring:
        """Extend to ``K_{n+1}``; ``colors_to_new[v]`` colors edge ``{v, n}``."""
        if len(colors_to_new) != self.n:
            raise ColoringError("need one color per existing vertex")
        n = self.n + 1

        def fn(u: int, v: int) -> int:
            return colors_to_new[u] if v == self.n else self.color(u, v)

        return Coloring.from_function(n, self.t, fn)


# ---------------------------------------------------------------------------
# Targets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Star:
    m: int

    def __str__(self) -> str:
        return f"K_1,{self.m}"


@dataclass(frozen=True)
class Matching:
    s: int

    def __str__(self) -> str:
        return f"{self.s}P_2"


Pattern = Star | Matching


@dataclass(frozen=True)
class TargetSpec:
    """Entries ``(pattern, missing_color)``: the pattern must appear avoiding that color."""

    entries: tuple[tuple[Pattern, int], ...]

    def __post_init__(self) -> None:
        missing = [c for _, c in self.entries]
        if len(set(missing)) != len(missing):
            raise ParameterError(f"missing colors must be distinct, got {missing}")
        for pattern, c in self.entries:
            if c < 1:
                raise ParameterError(f"missing color must be >= 1, got {c}")
            size = pattern.m if isinstance(pattern, Star) else pattern.s
            if size < 1:
                raise ParameterError(f"pattern size must be >= 1, got {pattern}")

    def check_palette(self, t: int) -> None:
        for _, c in self.entries:
            if c > t:
                raise ParameterError(f"missing color {c} outside palette 1..{t}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def targets_for(params: Parameters, user_order: bool = False) -> TargetSpec:
    """Targets of an instance: star ``i`` misses color ``i``, the matching misses ``t``."""
    stars = params.user_stars() if user_order else params.stars
    entries: list[tuple[Pattern, int]] = [(Star(m), i) for i, m in enumerate(stars, start=1)]
    if params.has_matching:
        entries.append((Matching(params.matching_size), params.t))
    return TargetSpec(tuple(entries))


# ---------------------------------------------------------------------------
# Traces and decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    rule: str
    symbols: dict[str, Any]
    value: int


@dataclass
class DerivationTrace:
    steps: list[Step] = field(default_factory=list)
    result: int | None = None

    def __post_init__(self) -> None:
        if self.result is None and self.steps:
            self.result = self.steps[-1].value

    def add(self, rule: str, value: int, **symbols: Any) -> int:
        self.steps.append(Step(rule, dict(symbols), value))
        self.result = value
        return value

    def extend(self, other: DerivationTrace) -> None:
        self.steps.extend(other.steps)
        self.result = other.result

    @property
    def rule(self) -> str:
        return self.steps[-1].rule if self.steps else ""

    def lines(self) -> list[str]:
        out = []
        for depth, step in enumerate(self.steps):
            sym = " ".join(f"{k}={_fmt(v)}" for k, v in step.symbols.items())
            out.append(f'{depth}: "{step.rule}" {sym} -> {step.value}')
        return out


def _fmt(v: Any) -> str:
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


@dataclass(frozen=True)
class MatchingDecomposition:
    """Partition of ``E(K_p)`` into matchings.

    Even ``p``: ``p - 1`` perfect matchings. Odd ``p``: ``p`` matchings, where
    class ``v`` covers every vertex except ``missing_vertex[v]``.
    """

    order: int
    classes: tuple[tuple[tuple[int, int], ...], ...]
    missing_vertex: tuple[int, ...] | None = None

    def edge_sets(self) -> list[set[frozenset[int]]]:
        return [{frozenset(e) for e in cls} for cls in self.classes]


def all_colorings(n: int, t: int) -> Iterable[Coloring]:
    """Every coloring of ``K_n`` with ``t`` colors (for brute-force checks only)."""
    from itertools import product

    for colors in product(range(1, t + 1), repeat=n * (n - 1) // 2):
        yield Coloring(n, t, colors)
