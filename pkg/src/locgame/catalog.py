"""Isomorph-free catalogues of small graphs and trees.

Graphs are encoded as edge bitmasks (bit index of edge (u,v), u < v, is
v*(v-1)//2 + u).  The canonical form of a graph is the minimum bitmask
image over all vertex permutations consistent with its equitable degree
refinement; since the refinement classes and their order are isomorphism
invariants, this minimum is a true canonical form while scanning far
fewer than n! permutations for most graphs.  Highly symmetric graphs
(one big refinement class) fall back to a numpy-vectorized scan.

Catalogues are grown by vertex augmentation: every graph on n vertices
arises from a graph on n-1 vertices plus one new vertex, and every
connected graph arises this way from a connected one (delete a non-cut
vertex), so augmenting connected representatives with nonempty
neighborhoods is exhaustive.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .graphs import Graph

_NUMPY_THRESHOLD = 3000


def _edge_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges:
        mask |= 1 << _edge_index(u, v)
    return mask


def mask_to_graph(n: int, mask: int) -> Graph:
    edges = []
    for v in range(n):
        for u in range(v):
            if mask >> _edge_index(u, v) & 1:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def _refinement_classes(n: int, adj: list[int]) -> list[list[int]]:
    """Equitable refinement; classes ordered by an isomorphism-invariant key."""
    color = [0] * n
    ncolors = 1
    while True:
        sigs = []
        for v in range(n):
            counts = [0] * ncolors
            m = adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                counts[color[w]] += 1
            sigs.append((color[v], tuple(counts)))
        ordered = sorted(set(sigs))
        new_color = [ordered.index(s) for s in sigs]
        if new_color == color:
            break
        color = new_color
        ncolors = len(ordered)
    classes: list[list[int]] = [[] for _ in range(ncolors)]
    for v in range(n):
        classes[color[v]].append(v)
    return classes


def _apply_perm(n: int, mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for v in range(n):
        for u in range(v):
            if mask >> _edge_index(u, v) & 1:
                out |= 1 << _edge_index(perm[u], perm[v])
    return out


@lru_cache(maxsize=None)
def _perm_arrays(n: int, class_sizes: tuple[int, ...]) -> np.ndarray:
    """All position assignments consistent with the given class blocks."""
    blocks = []
    start = 0
    for size in class_sizes:
        blocks.append(list(itertools.permutations(range(start, start + size))))
        start += size
    rows = []
    for combo in itertools.product(*blocks):
        row = []
        for part in combo:
            row.extend(part)
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def canonical_form(n: int, mask: int) -> int:
    """Minimum edge-bitmask image over refinement-consistent permutations."""
    if n == 1:
        return 0
    adj = [0] * n
    for v in range(n):
        for u in range(v):
            if mask >> _edge_index(u, v) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    classes = _refinement_classes(n, adj)
    total = 1
    for c in classes:
        for i in range(2, len(c) + 1):
            total *= i
    members = [v for c in classes for v in c]
    if total <= _NUMPY_THRESHOLD:
        best = None
        blocks = [list(itertools.permutations(c)) for c in classes]
        for combo in itertools.product(*blocks):
            perm = [0] * n
            pos = 0
            for part in combo:
                for v in part:
                    perm[v] = pos
                    pos += 1
            img = _apply_perm(n, mask, tuple(perm))
            if best is None or img < best:
                best = img
        return best
    # symmetric case: vectorized scan over all block-consistent assignments
    assigns = _perm_arrays(n, tuple(len(c) for c in classes))
    perm_of_vertex = np.empty_like(assigns)
    for col, v in enumerate(members):
        perm_of_vertex[:, v] = assigns[:, col]
    images = np.zeros(len(assigns), dtype=np.int64)
    for v in range(n):
        for u in range(v):
            if mask >> _edge_index(u, v) & 1:
                a = perm_of_vertex[:, u]
                b = perm_of_vertex[:, v]
                lo = np.minimum(a, b)
                hi = np.maximum(a, b)
                images |= np.int64(1) << (hi * (hi - 1) // 2 + lo)
    return int(images.min())


def canonical_graph_key(g: Graph) -> tuple[int, int]:
    return g.n, canonical_form(g.n, graph_to_mask(g))


@lru_cache(maxsize=None)
def _catalogue_masks(n: int, connected: bool) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    prev = _catalogue_masks(n - 1, connected)
    lo = 1 if connected else 0
    seen = set()
    for mask in prev:
        for nb in range(lo, 1 << (n - 1)):
            new = mask
            w = nb
            while w:
                u = (w & -w).bit_length() - 1
                w &= w - 1
                new |= 1 << _edge_index(u, n - 1)
            seen.add(canonical_form(n, new))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, connected: bool = False) -> list[Graph]:
    """All graphs on n vertices up to isomorphism (canonical representatives)."""
    return [mask_to_graph(n, m) for m in _catalogue_masks(n, connected)]


# ---------------------------------------------------------------- free trees


def _ahu_code(g: Graph, root: int, parent: int) -> str:
    subs = sorted(
        _ahu_code(g, w, root) for w in g.adj[root] if w != parent
    )
    return "(" + "".join(subs) + ")"


def tree_canonical_code(g: Graph) -> str:
    """Center-rooted canonical string; equal codes iff isomorphic trees."""
    if not g.is_tree():
        raise ValueError("not a tree")
    # peel leaves to find the center(s)
    degree = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if degree[v] <= 1]
    removed = 0
    alive = [True] * g.n
    while g.n - removed > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            removed += 1
            for w in g.adj[v]:
                if alive[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(g.n) if alive[v]]
    return min(_ahu_code(g, c, -1) for c in centers)


@lru_cache(maxsize=None)
def _tree_reps(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.from_edges(1, []),)
    out = {}
    for t in _tree_reps(n - 1):
        for v in range(t.n):
            bigger = Graph.from_edges(t.n + 1, list(t.edges) + [(v, t.n)])
            out.setdefault(tree_canonical_code(bigger), bigger)
    return tuple(out[k] for k in sorted(out))


def enumerate_trees(n: int) -> list[Graph]:
    """All free trees on n vertices up to isomorphism."""
    return list(_tree_reps(n))
