"""Locating and dominating-locating sets, plus graph surgeries that link
their minimum sizes to each other and to the localization number.

A set L is locating when every pair of vertices outside L meets L in
different closed neighborhoods; dominating-locating additionally covers
every vertex.  Brute-force minimizers scan subsets in ascending size,
lexicographically, so witnesses are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import LimitExceededError
from .graphs import Graph, add_isolated
from .solver import SolverBudget, localization_number

BRUTE_FORCE_LIMIT = 20


def is_locating_set(g: Graph, ls) -> bool:
    ls = frozenset(ls)
    outside = [v for v in range(g.n) if v not in ls]
    marks = [g.closed(v) & ls for v in outside]
    return len(set(marks)) == len(outside)


def is_dominating_locating_set(g: Graph, ls) -> bool:
    ls = frozenset(ls)
    if not is_locating_set(g, ls):
        return False
    return all(g.closed(v) & ls or v in ls for v in range(g.n))


def unseen_vertices(g: Graph, ls) -> frozenset[int]:
    """V minus N[L]; at most one vertex for any locating set L."""
    closed = g.closed_set(ls)
    return frozenset(range(g.n)) - closed


def _min_by(g: Graph, accept) -> tuple[int, frozenset[int]]:
    if g.n > BRUTE_FORCE_LIMIT:
        raise LimitExceededError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}")
    for size in range(g.n + 1):
        for cand in itertools.combinations(range(g.n), size):
            if accept(g, cand):
                return size, frozenset(cand)
    raise AssertionError("unreachable: V itself always qualifies")


def min_locating_set(g: Graph) -> tuple[int, frozenset[int]]:
    return _min_by(g, is_locating_set)


def min_dominating_locating_set(g: Graph) -> tuple[int, frozenset[int]]:
    return _min_by(g, is_dominating_locating_set)


# ----------------------------------------------------------------- surgeries


@dataclass(frozen=True)
class ReductionOutput:
    construction: str
    graph: Graph
    added: tuple[tuple[str, int], ...]  # label -> new vertex id


def reduce_add_isolated(g: Graph) -> ReductionOutput:
    """Add one isolated vertex; min dominating-locating of g equals min
    locating of the result."""
    return ReductionOutput(
        construction="isolated", graph=add_isolated(g), added=(("x", g.n),)
    )


def reduce_add_uvw(g: Graph) -> ReductionOutput:
    """Add u universal and an edge {v, w} of two other new vertices; the
    minimum locating size grows by exactly one."""
    u, v, w = g.n, g.n + 1, g.n + 2
    edges = list(g.edges) + [(v, w)] + [(x, u) for x in range(g.n)] + [
        (u, v),
        (u, w),
    ]
    return ReductionOutput(
        construction="uvw",
        graph=Graph.from_edges(g.n + 3, edges),
        added=(("u", u), ("v", v), ("w", w)),
    )


def reduce_multiuniversal(g: Graph) -> ReductionOutput:
    """Add n+1 pairwise non-adjacent vertices adjacent to all of g.

    Requires diameter <= 2 so original distances survive the surgery.
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n > 1 and g.diameter() > 2:
        raise ValueError("graph must have diameter <= 2")
    extras = range(g.n, 2 * g.n + 1)
    edges = list(g.edges) + [(v, x) for x in extras for v in range(g.n)]
    return ReductionOutput(
        construction="multiuniversal",
        graph=Graph.from_edges(2 * g.n + 1, edges),
        added=tuple((f"x{i}", x) for i, x in enumerate(extras)),
    )


@dataclass(frozen=True)
class EquivalenceReport:
    construction: str
    lhs: int
    rhs: int
    witness_lhs: tuple[int, ...]
    witness_rhs: tuple[int, ...]
    equal: bool

    def to_json_dict(self) -> dict:
        return {
            "construction": self.construction,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness_lhs": list(self.witness_lhs),
            "witness_rhs": list(self.witness_rhs),
            "equal": self.equal,
        }


def check_isolated_equivalence(g: Graph) -> EquivalenceReport:
    lhs, wl = min_dominating_locating_set(g)
    out = reduce_add_isolated(g)
    rhs, wr = min_locating_set(out.graph)
    return EquivalenceReport(
        construction="isolated",
        lhs=lhs,
        rhs=rhs,
        witness_lhs=tuple(sorted(wl)),
        witness_rhs=tuple(sorted(wr)),
        equal=lhs == rhs,
    )


def check_uvw_increment(g: Graph) -> EquivalenceReport:
    lhs, wl = min_locating_set(g)
    out = reduce_add_uvw(g)
    rhs, wr = min_locating_set(out.graph)
    return EquivalenceReport(
        construction="uvw",
        lhs=lhs + 1,
        rhs=rhs,
        witness_lhs=tuple(sorted(wl)),
        witness_rhs=tuple(sorted(wr)),
        equal=lhs + 1 == rhs,
    )


def verify_multiuniversal_zeta(
    g: Graph, budget: SolverBudget | None = None
) -> EquivalenceReport:
    """Localization number of the surgery equals min locating size + 1."""
    lhs, wl = min_locating_set(g)
    out = reduce_multiuniversal(g)
    result = localization_number(out.graph, budget=budget)
    if result.zeta is None:
        raise LimitExceededError("solver found no winning k")
    return EquivalenceReport(
        construction="multiuniversal",
        lhs=lhs + 1,
        rhs=result.zeta,
        witness_lhs=tuple(sorted(wl)),
        witness_rhs=(),
        equal=lhs + 1 == result.zeta,
    )
