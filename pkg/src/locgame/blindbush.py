"""Bush-clearing search and the blind variant of the localization game.

Both games share one state dynamic.  A bush state is the vertex set
still suspect; cutting B removes N[B] and everything left regrows to
its closed neighborhood: s -> N[s \\ N[B]].  The team wins the move
that leaves s \\ N[B] empty.  In the blind game the same sets are the
positions still consistent with a no-answer history, so the minimum
team size coincides with the bush number under this formalization.

Cut moves are enumerated as distinct-vertex sets of size min(k, n):
cutting a superset never leaves a larger bush, so smaller cuts are
dominated and can be skipped without losing optimal schedules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import LimitExceededError
from .graphs import Graph, add_universal
from .solver import SolverBudget, localization_number
from .trees import build_subdivided_ary_tree

DEFAULT_BUSH_MAX_STATES = 1 << 21


def bush_step(
    s: frozenset[int], b, g: Graph
) -> tuple[frozenset[int], frozenset[int]]:
    """One cut: returns (cleared survivors, regrown bush)."""
    cut = frozenset(b)
    cleared = frozenset(s) - g.closed_set(cut)
    regrown = g.closed_set(cleared) if cleared else frozenset()
    return cleared, regrown


@dataclass(frozen=True)
class CutSchedule:
    k: int
    moves: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {"k": self.k, "moves": [list(m) for m in self.moves]}


def replay_schedule(g: Graph, schedule: CutSchedule) -> list[frozenset[int]]:
    """Bush states visited by a schedule, starting from the full vertex set."""
    states = [frozenset(range(g.n))]
    for move in schedule.moves:
        _, regrown = bush_step(states[-1], move, g)
        states.append(regrown)
    return states


def domination_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Brute-force minimum dominating set."""
    full = frozenset(range(g.n))
    for size in range(1, g.n + 1):
        for cand in itertools.combinations(range(g.n), size):
            if g.closed_set(cand) == full:
                return size, frozenset(cand)
    raise AssertionError("unreachable: V dominates itself")


def _clearing_schedule(
    g: Graph, k: int, max_states: int
) -> tuple[tuple[int, ...], ...] | None:
    """Shortest k-cutter clearing schedule by BFS over bush states."""
    n = g.n
    closed = [0] * n
    for v in range(n):
        m = 1 << v
        for w in g.adj[v]:
            m |= 1 << w
        closed[v] = m
    moves = list(itertools.combinations(range(n), min(k, n)))
    move_masks = []
    for mv in moves:
        mm = 0
        for v in mv:
            mm |= closed[v]
        move_masks.append(mm)

    full = (1 << n) - 1
    parent: dict[int, tuple[int, int]] = {full: (-1, -1)}
    frontier = [full]
    while frontier:
        nxt = []
        for s in frontier:
            for mi, mm in enumerate(move_masks):
                cleared = s & ~mm
                if cleared == 0:
                    path = [moves[mi]]
                    cur = s
                    while parent[cur][0] != -1:
                        cur, pmi = parent[cur]
                        path.append(moves[pmi])
                    path.reverse()
                    return tuple(path)
                regrown = 0
                c = cleared
                while c:
                    v = (c & -c).bit_length() - 1
                    c &= c - 1
                    regrown |= closed[v]
                if regrown not in parent:
                    if len(parent) >= max_states:
                        raise LimitExceededError("bush state budget exceeded")
                    parent[regrown] = (s, mi)
                    nxt.append(regrown)
        frontier = nxt
    return None


def _min_clearing(
    g: Graph, max_k: int | None, max_states: int
) -> tuple[int, CutSchedule]:
    if not g.is_connected():
        raise ValueError("graph must be connected")
    limit = g.n if max_k is None else max_k
    for k in range(1, limit + 1):
        moves = _clearing_schedule(g, k, max_states)
        if moves is not None:
            return k, CutSchedule(k=k, moves=moves)
    raise LimitExceededError(f"no clearing schedule with k <= {limit}")


def bush_number(
    g: Graph, max_k: int | None = None, max_states: int = DEFAULT_BUSH_MAX_STATES
) -> tuple[int, CutSchedule]:
    """Minimum number of cutters emptying the bush, with a witness schedule."""
    return _min_clearing(g, max_k, max_states)


def blind_localization_number(
    g: Graph, max_k: int | None = None, max_states: int = DEFAULT_BUSH_MAX_STATES
) -> int:
    """Minimum probing team size winning without distance information."""
    k, _ = _min_clearing(g, max_k, max_states)
    return k


@dataclass(frozen=True)
class ChainReport:
    bush: int
    blind: int
    zeta_universal: int
    holds: bool

    def to_json_dict(self) -> dict:
        return {
            "bush": self.bush,
            "blind": self.blind,
            "zeta_universal": self.zeta_universal,
            "holds": self.holds,
        }


def check_chain(
    g: Graph,
    max_states: int = DEFAULT_BUSH_MAX_STATES,
    solver_budget: SolverBudget | None = None,
) -> ChainReport:
    """bush <= blind <= zeta of the graph with a universal vertex added."""
    bush, _ = bush_number(g, max_states=max_states)
    blind = blind_localization_number(g, max_states=max_states)
    zu = localization_number(add_universal(g), budget=solver_budget).zeta
    if zu is None:
        raise LimitExceededError("solver found no winning k for the universal graph")
    return ChainReport(
        bush=bush, blind=blind, zeta_universal=zu, holds=bush <= blind <= zu
    )


@dataclass(frozen=True)
class ExperimentRow:
    arity: int
    height: int
    subdivisions: int
    n: int
    bush: int | None
    schedule_len: int | None
    clean_regular: tuple[int, ...] | None
    status: str  # "ok" | "budget"

    def to_json_dict(self) -> dict:
        return {
            "arity": self.arity,
            "height": self.height,
            "subdivisions": self.subdivisions,
            "n": self.n,
            "bush": self.bush,
            "schedule_len": self.schedule_len,
            "clean_regular": list(self.clean_regular or []),
            "status": self.status,
        }


@dataclass(frozen=True)
class ExperimentTable:
    rows: tuple[ExperimentRow, ...]

    def to_json_dict(self) -> dict:
        complete = [r.bush for r in self.rows if r.bush is not None]
        return {
            "rows": [r.to_json_dict() for r in self.rows],
            "bush_nondecreasing": all(
                a <= b for a, b in zip(complete, complete[1:])
            ),
        }


def bush_scaling_experiment(
    params,
    subdivisions: int = 2,
    max_k: int | None = None,
    max_states: int = DEFAULT_BUSH_MAX_STATES,
) -> ExperimentTable:
    """Bush numbers on twice-subdivided complete ary trees, smallest first.

    Budget exhaustion marks the row instead of aborting the table.  The
    clean_regular trace counts bush-free regular vertices before each cut
    of the witness schedule.
    """
    rows = []
    for arity, height in sorted(params, key=lambda p: (p[0] + 1) ** (p[1] + 1)):
        tree = build_subdivided_ary_tree(arity, height, subdivisions)
        g = tree.graph
        try:
            bush, schedule = bush_number(g, max_k=max_k, max_states=max_states)
        except LimitExceededError:
            rows.append(
                ExperimentRow(
                    arity, height, subdivisions, g.n, None, None, None, "budget"
                )
            )
            continue
        states = replay_schedule(g, schedule)
        clean = tuple(
            len(tree.regular - state) for state in states[:-1]
        )
        rows.append(
            ExperimentRow(
                arity,
                height,
                subdivisions,
                g.n,
                bush,
                len(schedule.moves),
                clean,
                "ok",
            )
        )
    return ExperimentTable(rows=tuple(rows))
