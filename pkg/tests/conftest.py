"""Shared independent oracles for the test suite.

These deliberately use different algorithms from the package code so
agreement is evidence rather than an identity check.
"""

from __future__ import annotations

import itertools

from locgame.graphs import Graph
from locgame.trees import ColoredTree


def brute_bicolored_matching(t: ColoredTree) -> int:
    """Maximum bicolored matching by branching over the edge list."""
    edges = [e for e in t.graph.edges if t.colors[e[0]] != t.colors[e[1]]]
    best = 0

    def rec(i: int, used: frozenset, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                rec(j + 1, used | {u, v}, size + 1)

    rec(0, frozenset(), 0)
    return best


def vertex_separation_by_orders(g: Graph) -> int:
    """Pathwidth as minimum over all layouts of the max boundary size."""
    n = g.n
    best = n
    for order in itertools.permutations(range(n)):
        placed = set()
        worst = 0
        for v in order:
            placed.add(v)
            boundary = sum(
                1 for u in placed if any(w not in placed for w in g.adj[u])
            )
            worst = max(worst, boundary)
            if worst >= best:
                break
        best = min(best, worst)
    return best


def brute_locating_number(g: Graph, dominating: bool) -> int:
    """Smallest locating (optionally dominating) set by subset scan."""
    n = g.n
    for size in range(n + 1):
        for sub in itertools.combinations(range(n), size):
            chosen = frozenset(sub)
            traces = {}
            ok = True
            for v in range(n):
                if v in chosen:
                    continue
                tr = frozenset(g.closed(v) & chosen)
                if dominating and not tr:
                    ok = False
                    break
                if tr in traces.values():
                    ok = False
                    break
                traces[v] = tr
            if ok:
                return size
    return n
