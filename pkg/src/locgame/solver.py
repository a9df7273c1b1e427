"""Exact solver for the distance-probe localization game.

One cop side probes k vertices per turn and learns the vector of hop
distances to an invisible robber.  The cop wins the moment the set of
positions consistent with all answers (the belief) pins the robber to a
single vertex at probe time; otherwise the robber may move to a closed
neighbor and play continues.

A belief S is winning iff some probe set B makes every signature class
C of S with |C| >= 2 lead to a winning belief N[C].  The solver takes
the least fixed point of that rule over beliefs forward-reachable from
the full vertex set, so "winning" means located after finitely many
probes no matter how the robber plays.

Probe sets are enumerated as distinct-vertex sets of size min(k, n).
Duplicated probe vertices are information-free: equal probes contribute
identical signature coordinates, so any multiset probe induces the same
partition as its support, and padding the support back to size k with
further distinct vertices only refines partitions.  Enumerating the
distinct-vertex sets of full size is therefore lossless.

Everything is deterministic: probes are scanned in lexicographic order
and signature classes are ordered by smallest member, so extracted
strategies and reported turn counts are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import LimitExceededError
from .graphs import DistanceMatrix, Graph, all_pairs_distances

DEFAULT_MAX_STATES = 1 << 22
DEFAULT_MAX_PARTITION_EVALS = 10**9


@dataclass(frozen=True)
class SolverBudget:
    max_states: int = DEFAULT_MAX_STATES
    max_partition_evals: int = DEFAULT_MAX_PARTITION_EVALS


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a solve: zeta is None when no tried k wins."""

    zeta: int | None
    turns: int
    strategy: dict[frozenset[int], tuple[int, ...]] = field(default_factory=dict)
    states_explored: int = 0

    def to_json_dict(self) -> dict:
        entries = sorted(
            (sorted(belief), list(probe)) for belief, probe in self.strategy.items()
        )
        return {
            "zeta": self.zeta,
            "turns": self.turns,
            "strategy": [{"belief": b, "probe": p} for b, p in entries],
            "states": self.states_explored,
        }


def partition_by_signature(
    s: frozenset[int], b, d: DistanceMatrix
) -> list[tuple[tuple[float, ...], frozenset[int]]]:
    """Signature classes of belief s under probe b, ordered by smallest member."""
    if not s:
        raise ValueError("empty belief")
    probe = tuple(b)
    classes: dict[tuple[float, ...], list[int]] = {}
    for v in sorted(s):
        sig = tuple(d.rows[p][v] for p in probe)
        classes.setdefault(sig, []).append(v)
    return [(sig, frozenset(vs)) for sig, vs in classes.items()]


def belief_step(s: frozenset[int], cls: frozenset[int], g: Graph) -> frozenset[int]:
    """Belief after the robber's move from a surviving class."""
    if len(cls) < 2:
        raise ValueError("robber located; no step from a class of size < 2")
    if not cls <= s:
        raise ValueError("class is not part of the belief")
    return g.closed_set(cls)


class _GameTable:
    """Solved tables for one (graph, k): win levels, probes, robber replies."""

    def __init__(self, g: Graph, k: int, budget: SolverBudget):
        if k < 1:
            raise ValueError("k must be >= 1")
        if not g.is_connected():
            raise ValueError("graph must be connected")
        self.g = g
        self.k = k
        self.budget = budget
        n = g.n
        self.n = n
        dmat = all_pairs_distances(g)
        self.dist = [list(row) for row in dmat.rows]
        self.closed_mask = [0] * n
        for v in range(n):
            m = 1 << v
            for w in g.adj[v]:
                m |= 1 << w
            self.closed_mask[v] = m
        self.probes = list(itertools.combinations(range(n), min(k, n)))
        self.partition_evals = 0
        self._solve()

    # -- bitmask helpers

    def _bits(self, mask: int):
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            yield v

    def _partition(self, smask: int, probe: tuple[int, ...]) -> list[int]:
        """Class masks ordered by smallest member."""
        self.partition_evals += 1
        if self.partition_evals > self.budget.max_partition_evals:
            raise LimitExceededError("partition evaluation budget exceeded")
        classes: dict[tuple, int] = {}
        for v in self._bits(smask):
            sig = tuple(self.dist[p][v] for p in probe)
            classes[sig] = classes.get(sig, 0) | (1 << v)
        return list(classes.values())

    def _closed_set_mask(self, mask: int) -> int:
        out = 0
        for v in self._bits(mask):
            out |= self.closed_mask[v]
        return out

    # -- fixed point

    def _solve(self) -> None:
        full = (1 << self.n) - 1
        self.full = full
        # forward reachability; instant-win beliefs are not expanded because
        # only their status, never their successors, matters upstream
        succs: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
        instant: dict[int, tuple[int, ...]] = {}
        frontier = [full]
        seen = {full}
        while frontier:
            nxt = []
            for smask in frontier:
                options = []
                found_instant = None
                for probe in self.probes:
                    multi = [
                        c for c in self._partition(smask, probe) if c.bit_count() > 1
                    ]
                    if not multi:
                        found_instant = probe
                        break
                    options.append((probe, tuple(self._closed_set_mask(c) for c in multi)))
                if found_instant is not None:
                    instant[smask] = found_instant
                    continue
                succs[smask] = options
                for _, targets in options:
                    for t in targets:
                        if t not in seen:
                            seen.add(t)
                            if len(seen) > self.budget.max_states:
                                raise LimitExceededError(
                                    "belief state budget exceeded"
                                )
                            nxt.append(t)
            frontier = nxt
        self.states = len(seen)
        # backward win labeling, level by level
        turns: dict[int, int] = {s: 1 for s in instant}
        win_probe: dict[int, tuple[int, ...]] = dict(instant)
        pending = set(succs)
        level = 1
        while True:
            newly = []
            for smask in pending:
                for probe, targets in succs[smask]:
                    if all(turns.get(t, 0) and turns[t] <= level for t in targets):
                        newly.append((smask, probe))
                        break
            if not newly:
                break
            level += 1
            for smask, probe in newly:
                turns[smask] = level
                win_probe[smask] = probe
                pending.discard(smask)
        self.turns = turns
        self.win_probe = win_probe
        self.succs = succs

    # -- public views

    @property
    def cop_wins(self) -> bool:
        return self.full in self.turns

    def strategy_map(self) -> dict[frozenset[int], tuple[int, ...]]:
        """Probe choices on every belief reachable under the strategy itself."""
        if not self.cop_wins:
            return {}
        out: dict[frozenset[int], tuple[int, ...]] = {}
        frontier = [self.full]
        visited = {self.full}
        while frontier:
            smask = frontier.pop()
            probe = self.win_probe[smask]
            out[frozenset(self._bits(smask))] = probe
            for c in self._partition(smask, probe):
                if c.bit_count() > 1:
                    t = self._closed_set_mask(c)
                    if t not in visited:
                        visited.add(t)
                        frontier.append(t)
        return out

    def robber_reply(
        self, belief: frozenset[int], probe
    ) -> frozenset[int] | None:
        """Adversarial class choice; None when every class is a singleton.

        Prefers a class whose successor belief the cop cannot win, then a
        winning class with the largest remaining turn count; ties break to
        the class with the smallest member.
        """
        smask = 0
        for v in belief:
            smask |= 1 << v
        multi = [c for c in self._partition(smask, tuple(probe)) if c.bit_count() > 1]
        if not multi:
            return None
        best = None
        best_key = None
        for c in multi:
            t = self._closed_set_mask(c)
            surv = self.turns.get(t)
            key = (0 if surv is None else 1, surv if surv is not None else 0)
            # losing successors (None) first; then maximal survival
            if best is None or (key[0], -key[1]) < (best_key[0], -best_key[1]):
                best, best_key = c, key
        return frozenset(self._bits(best))


def cop_wins(
    g: Graph, k: int, budget: SolverBudget | None = None
) -> tuple[bool, SolveResult]:
    budget = budget or SolverBudget()
    table = _GameTable(g, k, budget)
    if table.cop_wins:
        result = SolveResult(
            zeta=k,
            turns=table.turns[table.full],
            strategy=table.strategy_map(),
            states_explored=table.states,
        )
        return True, result
    return False, SolveResult(zeta=None, turns=0, states_explored=table.states)


def localization_number(
    g: Graph, max_k: int | None = None, budget: SolverBudget | None = None
) -> SolveResult:
    """Smallest k that wins, with its strategy; zeta None above max_k."""
    budget = budget or SolverBudget()
    if g.n == 1:
        # the only position is known before any probe
        return SolveResult(zeta=0, turns=0, states_explored=0)
    limit = g.n if max_k is None else max_k
    total_states = 0
    for k in range(1, limit + 1):
        won, result = cop_wins(g, k, budget)
        total_states += result.states_explored
        if won:
            return SolveResult(
                zeta=k,
                turns=result.turns,
                strategy=result.strategy,
                states_explored=total_states,
            )
    return SolveResult(zeta=None, turns=0, states_explored=total_states)


def adversarial_robber(
    g: Graph, k: int, budget: SolverBudget | None = None
) -> _GameTable:
    """Solved table usable as a worst-case robber oracle via robber_reply."""
    return _GameTable(g, k, budget or SolverBudget())


def metric_dimension(g: Graph) -> tuple[int, frozenset[int]]:
    """Smallest vertex set whose distance vectors separate all vertices."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    d = all_pairs_distances(g)
    n = g.n
    for size in range(n):
        for w in itertools.combinations(range(n), size):
            vectors = {tuple(d.rows[p][v] for p in w) for v in range(n)}
            if len(vectors) == n:
                return size, frozenset(w)
    return n - 1, frozenset(range(n - 1))
