"""Path decompositions and exact pathwidth via vertex-separation search.

Pathwidth equals the vertex separation number: the best layout v1..vn
minimizing the maximum number of placed vertices that still have an
unplaced neighbor.  The subset DP below memoizes f(S) = best achievable
maximum over orderings that place exactly the set S first, so the whole
search is O(2^n * n) with bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LimitExceededError
from .graphs import Graph


@dataclass(frozen=True)
class PathDecomposition:
    """Sequence of bags; width = largest bag size minus one."""

    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def __len__(self) -> int:
        return len(self.bags)


def decomposition_errors(g: Graph, pd: PathDecomposition) -> list[str]:
    """All reasons pd is not a valid path decomposition of g (empty if valid)."""
    problems = []
    if not pd.bags:
        return ["no bags"]
    occur: dict[int, list[int]] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            if not 0 <= v < g.n:
                problems.append(f"bag {i} contains out-of-range vertex {v}")
            occur.setdefault(v, []).append(i)
    for v in range(g.n):
        if v not in occur:
            problems.append(f"vertex {v} in no bag")
        else:
            idx = occur[v]
            if idx[-1] - idx[0] + 1 != len(idx):
                problems.append(f"vertex {v} occurs non-contiguously")
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in pd.bags):
            problems.append(f"edge ({u},{v}) in no bag")
    return problems


def validate_decomposition(g: Graph, pd: PathDecomposition) -> None:
    problems = decomposition_errors(g, pd)
    if problems:
        raise ValueError("invalid path decomposition: " + "; ".join(problems))


def normalize_decomposition(g: Graph, pd: PathDecomposition) -> PathDecomposition:
    """Drop bags contained in a neighbor bag and prune vertices that have no
    neighbor inside their last bag.  Width never increases; validity is kept.
    """
    validate_decomposition(g, pd)
    bags = [set(b) for b in pd.bags]
    changed = True
    while changed:
        changed = False
        # drop empty bags and bags contained in an adjacent bag
        i = 0
        while i < len(bags) and len(bags) > 1:
            if (
                not bags[i]
                or (i + 1 < len(bags) and bags[i] <= bags[i + 1])
                or (i > 0 and bags[i] <= bags[i - 1])
            ):
                del bags[i]
                changed = True
            else:
                i += 1
        # a vertex whose last bag holds none of its neighbors can leave it
        for i in range(len(bags) - 1):
            for v in sorted(bags[i] - bags[i + 1]):
                if not (g.adj[v] & bags[i]):
                    bags[i].discard(v)
                    changed = True
    out = PathDecomposition(tuple(frozenset(b) for b in bags))
    validate_decomposition(g, out)
    return out


def is_normalized(g: Graph, pd: PathDecomposition) -> bool:
    bags = [set(b) for b in pd.bags]
    for i in range(len(bags) - 1):
        if bags[i] <= bags[i + 1] or bags[i + 1] <= bags[i]:
            return False
        if any(not (g.adj[v] & bags[i]) for v in bags[i] - bags[i + 1]):
            return False
    return True


def pathwidth_exact(
    g: Graph, limit: int = 10
) -> tuple[int, PathDecomposition]:
    """Exact pathwidth with an optimal normalized decomposition.

    Guarded by `limit` since the DP table has 2^n entries.
    """
    n = g.n
    if n > limit:
        raise LimitExceededError(f"pathwidth_exact limited to n <= {limit}, got {n}")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1

    def boundary(mask: int) -> int:
        count = 0
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[v] & ~mask:
                count += 1
        return count

    f = {0: 0}
    choice: dict[int, int] = {}
    by_popcount: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1, full + 1):
        by_popcount[mask.bit_count()].append(mask)
    for size in range(1, n + 1):
        for mask in by_popcount[size]:
            cost = boundary(mask)
            best, best_v = None, -1
            rest = mask
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                prev = f[mask & ~(1 << v)]
                if best is None or prev < best:
                    best, best_v = prev, v
            f[mask] = max(cost, best)
            choice[mask] = best_v

    order: list[int] = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask &= ~(1 << v)
    order.reverse()

    pos = {v: i for i, v in enumerate(order)}
    bags = []
    for i, v in enumerate(order):
        bag = {v}
        for u in order[:i]:
            if any(pos[w] >= i for w in g.adj[u]):
                bag.add(u)
        bags.append(frozenset(bag))
    pd = normalize_decomposition(g, PathDecomposition(tuple(bags)))
    assert pd.width == f[full]
    return f[full], pd
