"""Exhaustive backtracking search for colorings that avoid every target.

Edges of ``K_n`` are colored in lexicographic order, so the whole fan of
vertex 0 is decided first. A branch is cut as soon as its colored edges
already contain a target; containment only grows under extension, so the
cut never loses a complete avoiding coloring.

Optional vertex-symmetry reduction (``symmetry``):

* level 1: colors on the fan of vertex 0 are non-decreasing;
* level 2: additionally, among vertices ``j >= 2`` that see vertex 0 in the
  same color, colors on the fan of vertex 1 are non-decreasing.

Both levels only discard colorings that a vertex relabeling maps onto a kept
one, and targets are invariant under relabeling, so verdicts are unchanged.
Colors are never permuted: the targets differ per color.
"""

from __future__ import annotations

import enum
import logging
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .checker import coloring_arrives
from .core import Coloring, Matching, Parameters, Star, TargetSpec, targets_for
from .matching import maximum_matching

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
_PROGRESS_EVERY = 1 << 20
_STOP_POLL = 1 << 12


class Status(enum.Enum):
    FOUND = "found"
    NONE = "none"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchResult:
    status: Status
    nodes: int
    coloring: Coloring | None = None

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class _OutOfBudget(Exception):
    pass


class _Stopped(Exception):
    pass


class _Search:
    def __init__(self, n: int, t: int, targets: TargetSpec, budget: int, symmetry: int,
                 stop=None, task_index: int = 0):
        targets.check_palette(t)
        self.n, self.t = n, t
        self.edges = list(combinations(range(n), 2))
        self.stars = [(miss, p.m) for p, miss in targets.entries if isinstance(p, Star)]
        self.matchings = [(miss, p.s) for p, miss in targets.entries if isinstance(p, Matching)]
        self.budget = budget
        self.symmetry = symmetry
        self.nodes = 0
        self.colors = [0] * len(self.edges)
        self.deg = [[0] * (t + 1) for _ in range(n)]
        self.colored = [0] * n
        # per matching target: currently colored edges whose color is allowed
        self.allowed_edges: list[list[tuple[int, int]]] = [[] for _ in self.matchings]
        self.stop = stop
        self.task_index = task_index
        self.started = time.monotonic()

    # -- helpers ---------------------------------------------------------
    def _index(self, u: int, v: int) -> int:
        n = self.n
        return u * (2 * n - u - 1) // 2 + (v - u - 1)

    def lower_color(self, idx: int) -> int:
        if not self.symmetry:
            return 1
        u, v = self.edges[idx]
        if u == 0 and v >= 2:
            return self.colors[idx - 1]
        if self.symmetry >= 2 and u == 1 and v >= 3:
            if self.colors[self._index(0, v)] == self.colors[self._index(0, v - 1)]:
                return self.colors[idx - 1]
        return 1

    def assign(self, idx: int, c: int, sizes: list[int]) -> list[int] | None:
        """Color edge ``idx``; return new matching sizes, or None if a target now embeds.

        State is always fully updated, so ``unassign`` must follow either way.
        """
        u, v = self.edges[idx]
        self.colors[idx] = c
        self.deg[u][c] += 1
        self.deg[v][c] += 1
        self.colored[u] += 1
        self.colored[v] += 1
        for k, (miss, _) in enumerate(self.matchings):
            if miss != c:
                self.allowed_edges[k].append((u, v))
        for miss, m in self.stars:
            if miss != c and (self.colored[u] - self.deg[u][miss] >= m
                              or self.colored[v] - self.deg[v][miss] >= m):
                return None
        # sizes[k] is an upper bound on the current matching number; one new
        # edge raises the matching number by at most one
        new_sizes = sizes
        for k, (miss, s) in enumerate(self.matchings):
            if miss == c:
                continue
            bound = sizes[k] + 1
            if bound >= s:
                bound = len(maximum_matching(self.n, self.allowed_edges[k]))
                if bound >= s:
                    return None
            if bound != sizes[k]:
                if new_sizes is sizes:
                    new_sizes = list(sizes)
                new_sizes[k] = bound
        return new_sizes

    def unassign(self, idx: int) -> None:
        u, v = self.edges[idx]
        c = self.colors[idx]
        self.deg[u][c] -= 1
        self.deg[v][c] -= 1
        self.colored[u] -= 1
        self.colored[v] -= 1
        for k, (miss, _) in enumerate(self.matchings):
            if miss != c:
                self.allowed_edges[k].pop()
        self.colors[idx] = 0

    def _tick(self, idx: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        if self.stop is not None and self.nodes % _STOP_POLL == 0:
            if self.stop.value < self.task_index:
                raise _Stopped
        if self.nodes % _PROGRESS_EVERY == 0:
            log.info("n=%d nodes=%d depth=%d/%d elapsed=%.1fs", self.n, self.nodes,
                     idx, len(self.edges), time.monotonic() - self.started)

    def dfs(self, idx: int, sizes: list[int]) -> bool:
        if idx == len(self.edges):
            return True
        for c in range(self.lower_color(idx), self.t + 1):
            self._tick(idx)
            new_sizes = self.assign(idx, c, sizes)
            if new_sizes is not None and self.dfs(idx + 1, new_sizes):
                return True
            self.unassign(idx)
        return False

    def apply_prefix(self, prefix: tuple[int, ...]) -> list[int] | None:
        sizes = [0] * len(self.matchings)
        for idx, c in enumerate(prefix):
            sizes = self.assign(idx, c, sizes)
            if sizes is None:
                return None
        return sizes

    def result_coloring(self) -> Coloring:
        return Coloring(self.n, self.t, tuple(self.colors))


def _verified(coloring: Coloring, targets: TargetSpec) -> Coloring:
    verdict = coloring_arrives(coloring, targets)
    if verdict.arrives:
        raise AssertionError(f"search returned a coloring that contains target {verdict.index}")
    return coloring


def _prefixes(search: _Search, split: int) -> list[tuple[int, ...]]:
    """Surviving color assignments of the first ``split`` edges, in DFS order."""
    out: list[tuple[int, ...]] = []
    split = min(split, len(search.edges))

    def rec(idx: int, sizes: list[int]) -> None:
        if idx == split:
            out.append(tuple(search.colors[:split]))
            return
        for c in range(search.lower_color(idx), search.t + 1):
            new_sizes = search.assign(idx, c, sizes)
            if new_sizes is not None:
                rec(idx + 1, new_sizes)
            search.unassign(idx)

    rec(0, [0] * len(search.matchings))
    return out


_WORKER_STOP = None


def _init_worker(stop) -> None:
    global _WORKER_STOP
    _WORKER_STOP = stop


def _run_subtree(args):
    n, t, targets, budget, symmetry, index, prefix = args
    search = _Search(n, t, targets, budget, symmetry, stop=_WORKER_STOP, task_index=index)
    sizes = search.apply_prefix(prefix)
    try:
        ok = sizes is not None and search.dfs(len(prefix), sizes)
    except _OutOfBudget:
        return index, Status.BUDGET_EXHAUSTED, search.nodes, None
    except _Stopped:
        return index, None, search.nodes, None
    if ok:
        with _WORKER_STOP.get_lock():
            if index < _WORKER_STOP.value:
                _WORKER_STOP.value = index
        return index, Status.FOUND, search.nodes, tuple(search.colors)
    return index, Status.NONE, search.nodes, None


def exists_avoiding_coloring(n: int, t: int, targets: TargetSpec, budget: int = DEFAULT_BUDGET,
                             symmetry: int = 0, jobs: int = 1, split: int = 2) -> SearchResult:
    """Search for a coloring of ``K_n`` with colors ``1..t`` avoiding every target.

    ``budget`` caps the number of search-tree nodes (one node per tentative
    edge coloring). With ``jobs > 1`` the assignments of the first ``split``
    edges are searched as independent subtrees in worker processes; each
    subtree gets the full budget and the lowest-index witness wins.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    search = _Search(n, t, targets, budget, symmetry)
    if jobs <= 1 or len(search.edges) <= split:
        try:
            ok = search.dfs(0, [0] * len(search.matchings))
        except _OutOfBudget:
            return SearchResult(Status.BUDGET_EXHAUSTED, search.nodes)
        if ok:
            return SearchResult(Status.FOUND, search.nodes,
                                _verified(search.result_coloring(), targets))
        return SearchResult(Status.NONE, search.nodes)
    return _parallel_search(n, t, targets, budget, symmetry, jobs, split)


def _parallel_search(n, t, targets, budget, symmetry, jobs, split) -> SearchResult:
    probe = _Search(n, t, targets, budget, symmetry)
    prefixes = _prefixes(probe, split)
    if not prefixes:
        return SearchResult(Status.NONE, 0)
    ctx = mp.get_context("spawn")
    stop = ctx.Value("i", len(prefixes))
    tasks = [(n, t, targets, budget, symmetry, i, p) for i, p in enumerate(prefixes)]
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx,
                             initializer=_init_worker, initargs=(stop,)) as pool:
        results = sorted(pool.map(_run_subtree, tasks), key=lambda r: r[0])
    nodes = sum(r[2] for r in results)
    for index, status, _, colors in results:
        if status is Status.FOUND:
            return SearchResult(Status.FOUND, nodes, _verified(Coloring(n, t, colors), targets))
        if status is Status.BUDGET_EXHAUSTED:
            return SearchResult(Status.BUDGET_EXHAUSTED, nodes)
    return SearchResult(Status.NONE, nodes)


def symmetry_pruned_search(n: int, t: int, targets: TargetSpec, budget: int = DEFAULT_BUDGET,
                           depth: int = 2, jobs: int = 1) -> SearchResult:
    """Same verdict as :func:`exists_avoiding_coloring`, with vertex-symmetry reduction."""
    if depth not in (0, 1, 2):
        raise ValueError(f"symmetry depth must be 0, 1 or 2, got {depth}")
    return exists_avoiding_coloring(n, t, targets, budget, symmetry=depth, jobs=jobs)


@dataclass
class OracleResult:
    """Outcome of :func:`oracle_ramsey`.

    ``exact`` means ``value`` is the Ramsey number; otherwise ``value`` is a
    lower bound and ``status`` says why the search stopped
    (``cap_reached`` or ``budget_exhausted``).
    """

    value: int
    exact: bool
    status: str
    nodes: int
    per_n: list[tuple[int, Status, int]] = field(default_factory=list)
    witness: Coloring | None = None


def oracle_ramsey(params: Parameters, n_cap: int = 12, budget: int = DEFAULT_BUDGET,
                  symmetry: int = 2, jobs: int = 1) -> OracleResult:
    """Least ``n`` such that every coloring of ``K_n`` contains some target.

    ``budget`` is shared across all orders ``n`` searched.
    """
    return oracle_for_targets(params.t, targets_for(params), n_cap, budget, symmetry, jobs,
                              label=params.label())


def oracle_for_targets(t: int, targets: TargetSpec, n_cap: int = 12,
                       budget: int = DEFAULT_BUDGET, symmetry: int = 2, jobs: int = 1,
                       label: str = "") -> OracleResult:
    last_found = 0
    witness = None
    total = 0
    per_n: list[tuple[int, Status, int]] = []
    for n in range(1, n_cap + 1):
        res = exists_avoiding_coloring(n, t, targets, budget - total, symmetry, jobs)
        total += res.nodes
        per_n.append((n, res.status, res.nodes))
        log.debug("%s n=%d %s nodes=%d", label, n, res.status.value, res.nodes)
        if res.status is Status.NONE:
            return OracleResult(n, True, "exact", total, per_n, witness)
        if res.status is Status.BUDGET_EXHAUSTED:
            return OracleResult(last_found + 1, False, Status.BUDGET_EXHAUSTED.value, total, per_n,
                                witness)
        last_found, witness = n, res.coloring
    return OracleResult(last_found + 1, False, "cap_reached", total, per_n, witness)
