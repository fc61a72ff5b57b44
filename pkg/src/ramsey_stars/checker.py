"""Decide whether a coloring contains a target pattern avoiding a given color."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Coloring, Matching, Star, TargetSpec
from .matching import maximum_matching


@dataclass(frozen=True)
class StarEmbedding:
    center: int
    leaves: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(self.center, v) for v in self.leaves]

    def __str__(self) -> str:
        return f"center={self.center} leaves=" + ",".join(map(str, self.leaves))


@dataclass(frozen=True)
class MatchingEmbedding:
    pairs: tuple[tuple[int, int], ...]

    def edges(self) -> list[tuple[int, int]]:
        return list(self.pairs)

    def __str__(self) -> str:
        return "edges=" + ",".join(f"{u}-{v}" for u, v in self.pairs)


Embedding = StarEmbedding | MatchingEmbedding


@dataclass(frozen=True)
class Verdict:
    """``arrives`` is True when some target embeds; ``index`` is 0-based into the TargetSpec."""

    arrives: bool
    index: int | None = None
    embedding: Embedding | None = None

    @property
    def avoids(self) -> bool:
        return not self.arrives


def star_missing_color(c: Coloring, missing: int, m: int) -> StarEmbedding | None:
    """Find a vertex with ``m`` incident edges whose colors differ from ``missing``."""
    if not 1 <= missing <= c.t:
        raise ValueError(f"missing color {missing} outside 1..{c.t}")
    if m < 1:
        raise ValueError(f"star size must be >= 1, got {m}")
    nbrs: list[list[int]] = [[] for _ in range(c.n)]
    for u, v, col in c.edges():
        if col != missing:
            nbrs[u].append(v)
            nbrs[v].append(u)
    for v in range(c.n):
        if len(nbrs[v]) >= m:
            return StarEmbedding(v, tuple(sorted(nbrs[v])[:m]))
    return None


def max_matching(c: Coloring, allowed: Iterable[int]) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching of the spanning subgraph whose edge colors lie in ``allowed``."""
    allowed = set(allowed)
    if not allowed:
        raise ValueError("allowed color set must be non-empty")
    pairs = maximum_matching(c.n, [(u, v) for u, v, col in c.edges() if col in allowed])
    return len(pairs), pairs


def coloring_arrives(c: Coloring, targets: TargetSpec) -> Verdict:
    """Report the lowest-index target that embeds in ``c``, if any."""
    targets.check_palette(c.t)
    for index, (pattern, missing) in enumerate(targets.entries):
        if isinstance(pattern, Star):
            emb = star_missing_color(c, missing, pattern.m)
            if emb is not None:
                return Verdict(True, index, emb)
        elif isinstance(pattern, Matching):
            allowed = set(range(1, c.t + 1)) - {missing}
            if not allowed:
                continue
            size, pairs = max_matching(c, allowed)
            if size >= pattern.s:
                return Verdict(True, index, MatchingEmbedding(tuple(pairs[: pattern.s])))
        else:
            raise TypeError(f"unsupported pattern {pattern!r}")
    return Verdict(False)


def embedding_is_valid(c: Coloring, pattern, missing: int, emb: Embedding) -> bool:
    """Independently re-check an embedding against the coloring."""
    if isinstance(pattern, Star):
        if not isinstance(emb, StarEmbedding) or len(emb.leaves) != pattern.m:
            return False
        if len(set(emb.leaves)) != pattern.m or emb.center in emb.leaves:
            return False
    else:
        if not isinstance(emb, MatchingEmbedding) or len(emb.pairs) != pattern.s:
            return False
        verts = [x for e in emb.pairs for x in e]
        if len(set(verts)) != len(verts):
            return False
    for u, v in emb.edges():
        if not (0 <= u < c.n and 0 <= v < c.n) or u == v:
            return False
        if c.color(u, v) == missing:
            return False
    return True


def color_degree_bounds(c: Coloring) -> list[tuple[int, int]]:
    """Per color ``1..t``: (min, max) color degree over all vertices."""
    deg = c.color_degrees()
    if c.n == 0:
        return [(0, 0)] * c.t
    return [(min(d[col] for d in deg), max(d[col] for d in deg)) for col in range(1, c.t + 1)]
