"""Colored trees, subdivided ary-tree construction, bicolored matchings.

build_subdivided_ary_tree numbers the underlying complete ary tree
breadth-first (root 0) and appends the subdivision vertices afterwards
in sorted-edge order, so the first `regular_count` labels are exactly
the branching-structure vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import LimitExceededError
from .graphs import Graph, ary_tree, format_graph, parse_graph, subdivide

MAX_TREE_VERTICES = 10**8


@dataclass(frozen=True)
class ColoredTree:
    """Tree plus a total 0/1 coloring; `regular` marks non-subdivision vertices."""

    graph: Graph
    root: int
    colors: tuple[int, ...]
    regular: frozenset[int]

    def __post_init__(self):
        if len(self.colors) != self.graph.n:
            raise ValueError("coloring must assign every vertex")
        if any(c not in (0, 1) for c in self.colors):
            raise ValueError("colors must be 0 or 1")
        if not self.graph.is_tree():
            raise ValueError("graph must be a tree")

    def with_colors(self, colors) -> "ColoredTree":
        return replace(self, colors=tuple(colors))

    def ones(self) -> int:
        return sum(self.colors)


def regular_vertex_count(arity: int, height: int) -> int:
    if arity == 1:
        return height + 1
    return (arity ** (height + 1) - 1) // (arity - 1)


def build_subdivided_ary_tree(
    arity: int, height: int, subdivisions: int
) -> ColoredTree:
    """Complete ary tree with every edge subdivided; all colors start at 0."""
    if arity < 1 or height < 0 or subdivisions < 0:
        raise ValueError("need arity >= 1, height >= 0, subdivisions >= 0")
    regular = regular_vertex_count(arity, height)
    total = regular + subdivisions * (regular - 1)
    if total > MAX_TREE_VERTICES:
        raise LimitExceededError(f"tree would have {total} vertices")
    g = subdivide(ary_tree(arity, height), subdivisions)
    assert g.n == total
    return ColoredTree(
        graph=g,
        root=0,
        colors=(0,) * total,
        regular=frozenset(range(regular)),
    )


@dataclass(frozen=True)
class BicoloredMatching:
    size: int
    edges: frozenset[tuple[int, int]]


def max_bicolored_matching(t: ColoredTree) -> BicoloredMatching:
    """Maximum matching using only edges whose endpoints differ in color.

    Tree DP over (vertex matched to a child or not), with edge recovery.
    """
    g = t.graph
    colors = t.colors
    root = t.root
    # iterative post-order to survive deep trees
    parent = [-2] * g.n
    order = []
    stack = [root]
    parent[root] = -1
    while stack:
        v = stack.pop()
        order.append(v)
        for w in g.adj[v]:
            if parent[w] == -2:
                parent[w] = v
                stack.append(w)
    free = [0] * g.n  # best in subtree, v unmatched
    used = [0] * g.n  # best in subtree, v matched to a child
    pick = [-1] * g.n  # child v is matched with, if any
    for v in reversed(order):
        children = [w for w in g.adj[v] if w != parent[v]]
        base = sum(max(free[w], used[w]) for w in children)
        free[v] = base
        used[v] = 0
        for w in children:
            if colors[v] == colors[w]:
                continue
            cand = 1 + free[w] + base - max(free[w], used[w])
            if cand > used[v]:
                used[v] = cand
                pick[v] = w
    edges = set()
    take = [False] * g.n  # whether v must realize its "matched" table entry
    take[root] = used[root] > free[root]
    for v in order:
        if take[v] and pick[v] >= 0:
            w = pick[v]
            edges.add((min(v, w), max(v, w)))
        children = [w for w in g.adj[v] if w != parent[v]]
        for w in children:
            if take[v] and w == pick[v]:
                take[w] = False
            else:
                take[w] = used[w] > free[w]
    best = max(free[root], used[root])
    assert len(edges) == best
    return BicoloredMatching(size=best, edges=frozenset(edges))


# -------------------------------------------------------- occupancy windows


def plain_ary_tree_colored(arity: int, height: int) -> ColoredTree:
    g = ary_tree(arity, height)
    return ColoredTree(
        graph=g, root=0, colors=(0,) * g.n, regular=frozenset(range(g.n))
    )


def occupancy_window(
    k: int, h: int, count_kind: str
) -> tuple[float, float, int]:
    """Half-open bounds [lo, hi) for the color-1 count, plus the count used.

    count_kind "defined" uses (12k+1)^h + 1; "derived" uses the actual
    vertex count of the complete (12k+1)-ary tree of height h.  The two
    agree at h = 1 and diverge for h >= 2.
    """
    arity = 12 * k + 1
    if count_kind == "defined":
        count = arity**h + 1
    elif count_kind == "derived":
        count = regular_vertex_count(arity, h)
    else:
        raise ValueError(f"unknown count kind {count_kind!r}")
    lo = (count + h - 8 * k) / 2
    hi = (count + 6 * k - h) / 2
    return lo, hi, count


def occupancy_satisfied(k: int, h: int, ones: int, count_kind: str) -> bool:
    lo, hi, _ = occupancy_window(k, h, count_kind)
    return lo <= ones < hi


@dataclass(frozen=True)
class BimatchingCheck:
    k: int
    h: int
    ones: int
    window_defined: bool
    window_derived: bool
    matching_size: int
    required: int
    passed: bool
    witness: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "h": self.h,
            "ones": self.ones,
            "window_defined": self.window_defined,
            "window_derived": self.window_derived,
            "matching_size": self.matching_size,
            "required": self.required,
            "passed": self.passed,
            "witness": [list(e) for e in sorted(self.witness)],
        }


def check_bimatching_lemma(k: int, h: int, colors) -> BimatchingCheck:
    """Occupancy-window matching check on the complete (12k+1)-ary tree.

    The coloring must land in the window under at least one vertex-count
    reading; both readings are reported.  Passing means a bicolored
    matching of size >= h exists.
    """
    if k < 1 or h < 1:
        raise ValueError("need k >= 1 and h >= 1")
    tree = plain_ary_tree_colored(12 * k + 1, h)
    colors = tuple(colors)
    if len(colors) != tree.graph.n:
        raise ValueError(
            f"coloring has {len(colors)} entries, tree has {tree.graph.n}"
        )
    ones = sum(colors)
    in_defined = occupancy_satisfied(k, h, ones, "defined")
    in_derived = occupancy_satisfied(k, h, ones, "derived")
    if not (in_defined or in_derived):
        raise ValueError(
            f"{ones} ones satisfies neither occupancy window for k={k}, h={h}"
        )
    matching = max_bicolored_matching(tree.with_colors(colors))
    return BimatchingCheck(
        k=k,
        h=h,
        ones=ones,
        window_defined=in_defined,
        window_derived=in_derived,
        matching_size=matching.size,
        required=h,
        passed=matching.size >= h,
        witness=tuple(sorted(matching.edges)),
    )


# ------------------------------------------------------------------ text I/O


def format_colored_tree(t: ColoredTree) -> str:
    return format_graph(t.graph) + "colors " + " ".join(map(str, t.colors)) + "\n"


def parse_colored_tree(text: str) -> ColoredTree:
    """Graph text format plus a trailing 'colors b_0 ... b_{n-1}' line.

    Regular vertices are recovered as those of degree != 2, which matches
    the construction whenever the root has arity != 2.
    """
    lines = text.splitlines()
    color_lines = [ln for ln in lines if ln.strip().startswith("colors")]
    if len(color_lines) != 1:
        raise ValueError("expected exactly one colors line")
    rest = "\n".join(ln for ln in lines if not ln.strip().startswith("colors"))
    g = parse_graph(rest)
    colors = tuple(int(x) for x in color_lines[0].split()[1:])
    regular = frozenset(v for v in range(g.n) if g.degree(v) != 2)
    return ColoredTree(graph=g, root=0, colors=colors, regular=regular)
