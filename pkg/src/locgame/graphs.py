"""Simple undirected graphs: construction, generators, distances, text I/O.

Vertices are always 0..n-1.  The generator families fix their numbering so
strategies and tests can rely on it:

* path(n): vertices in path order, edges {i, i+1}.
* cycle(n): path order plus the closing edge {0, n-1}.
* star(n): center 0, leaves 1..n-1.
* complete_bipartite(a, b): part A = 0..a-1, part B = a..a+b-1.
* ary_tree(arity, height): breadth-first order, root 0.
* interval(spans): one vertex per span, in input order; edge iff spans overlap.
* subdivide(g, s): original labels kept, subdivision vertices appended in
  sorted-edge order, s per edge, walking from the smaller endpoint.
* add_universal / add_isolated: the new vertex gets label n.
* random_tree / random_connected: seeded (64-bit ints); identical seeds
  give identical graphs.

Unreachable distances are reported as ``math.inf``, never as a large
integer.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from random import Random

INF = math.inf


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1; build via Graph.from_edges."""

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n <= 0:
            raise ValueError("graph needs at least one vertex")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        buckets: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            buckets[u].add(v)
            buckets[v].add(u)
        return Graph(n, frozenset(norm), tuple(frozenset(b) for b in buckets))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def closed(self, v: int) -> frozenset[int]:
        """Closed neighborhood N[v]."""
        return self.adj[v] | {v}

    def closed_set(self, vs) -> frozenset[int]:
        """Closed neighborhood N[S] of a vertex set."""
        out = set(vs)
        for v in vs:
            out.update(self.adj[v])
        return frozenset(out)

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """Two-coloring (side of vertex 0 first); None if an odd cycle exists."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in self.adj[v]:
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        a = frozenset(v for v in range(self.n) if color[v] == 0)
        b = frozenset(v for v in range(self.n) if color[v] == 1)
        return a, b

    def diameter(self) -> float:
        d = all_pairs_distances(self)
        return max(d.rows[u][v] for u in range(self.n) for v in range(self.n))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; math.inf marks unreachable pairs."""

    rows: tuple[tuple[float, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def dist(self, u: int, v: int) -> float:
        return self.rows[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.rows[u][v] != INF


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        dist: list[float] = [INF] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if dist[w] == INF:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return DistanceMatrix(tuple(rows))


# ---------------------------------------------------------------- generators


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts need at least one vertex")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def ary_tree(arity: int, height: int) -> Graph:
    """Complete arity-ary tree of the given height, breadth-first numbering."""
    if arity < 1 or height < 0:
        raise ValueError("arity must be >= 1 and height >= 0")
    edges = []
    frontier = [0]
    nxt = 1
    for _ in range(height):
        new_frontier = []
        for v in frontier:
            for _ in range(arity):
                edges.append((v, nxt))
                new_frontier.append(nxt)
                nxt += 1
        frontier = new_frontier
    return Graph.from_edges(nxt, edges)


def interval(spans) -> Graph:
    """Interval graph: vertex i is spans[i] = (lo, hi); edge iff spans overlap."""
    spans = [(float(lo), float(hi)) for lo, hi in spans]
    for lo, hi in spans:
        if lo > hi:
            raise ValueError(f"bad interval ({lo}, {hi})")
    n = len(spans)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if spans[u][0] <= spans[v][1] and spans[v][0] <= spans[u][1]:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def add_universal(g: Graph) -> Graph:
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)])


def add_isolated(g: Graph) -> Graph:
    return Graph.from_edges(g.n + 1, g.edges)


def subdivide(g: Graph, s: int) -> Graph:
    """Replace every edge by a path with s new internal vertices."""
    if s < 0:
        raise ValueError("subdivision count must be >= 0")
    if s == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in sorted(g.edges):
        prev = u
        for _ in range(s):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph.from_edges(nxt, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a seeded Pruefer sequence."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return path(2)
    rng = Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_connected(n: int, p: float, seed: int, max_tries: int = 10000) -> Graph:
    """G(n, p) conditioned on connectivity: redraw until connected."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = Random(seed)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g
    raise ValueError(f"no connected sample in {max_tries} draws (n={n}, p={p})")


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "ary_tree": (ary_tree, 2),
    "random_tree": (random_tree, 2),
    "random_connected": (random_connected, 3),
}
_DERIVED = {"add_universal": add_universal, "add_isolated": add_isolated}


def generate(family: str, *params, base: Graph | None = None) -> Graph:
    """Dispatch by family name; derived families take a base graph."""
    if family in _DERIVED:
        if base is None:
            raise ValueError(f"family {family!r} needs a base graph")
        return _DERIVED[family](base)
    if family == "subdivide":
        if base is None:
            raise ValueError("subdivide needs a base graph")
        return subdivide(base, int(params[0]))
    if family == "interval":
        return interval(params[0] if len(params) == 1 else params)
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s)")
    if family == "random_connected":
        return fn(int(params[0]), float(params[1]), int(params[2]))
    return fn(*(int(p) for p in params))


# ------------------------------------------------------------------ text I/O


def parse_graph(text: str) -> Graph:
    """Parse the 'n m' + edge-lines format; '#' starts a comment line."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if n <= 0 or m < 0:
        raise ValueError("header must give n >= 1 and m >= 0")
    if len(lines) - 1 < m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = set()
    for ln in lines[1 : 1 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < v < n):
            raise ValueError(f"edge ({u},{v}) violates 0 <= u < v < n")
        if (u, v) in edges:
            raise ValueError(f"duplicate edge ({u},{v})")
        edges.add((u, v))
    extra = lines[1 + m :]
    if extra:
        raise ValueError(f"unexpected trailing line {extra[0]!r}")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(out) + "\n"
