"""Generators, distances, and the text format."""

import math
from random import Random

import pytest

import networkx as nx
from locgame.graphs import (
    Graph,
    add_isolated,
    add_universal,
    all_pairs_distances,
    ary_tree,
    complete,
    complete_bipartite,
    cycle,
    format_graph,
    generate,
    interval,
    parse_graph,
    path,
    random_connected,
    random_tree,
    star,
    subdivide,
)


def to_nx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_from_edges_validates_and_dedupes():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(-1, [])


def test_path_and_cycle_shapes():
    p = path(5)
    assert p.n == 5 and p.m == 4
    assert sorted(p.edges) == [(0, 1), (1, 2), (2, 3), (3, 4)]
    c = cycle(4)
    assert sorted(c.edges) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        cycle(2)


def test_star_and_complete_shapes():
    s = star(6)
    assert s.degree(0) == 5 and all(s.degree(v) == 1 for v in range(1, 6))
    k = complete(5)
    assert k.m == 10 and all(k.degree(v) == 4 for v in range(5))


def test_complete_bipartite_labeling():
    g = complete_bipartite(2, 3)
    assert g.n == 5 and g.m == 6
    assert g.bipartition() == (frozenset({0, 1}), frozenset({2, 3, 4}))
    for a in range(2):
        for b in range(2, 5):
            assert g.has_edge(a, b)


def test_ary_tree_breadth_first_numbering():
    t = ary_tree(2, 2)
    assert t.n == 7
    assert sorted(t.edges) == [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
    assert t.is_tree()


def test_subdivide_appends_in_sorted_edge_order():
    g = subdivide(path(3), 1)
    # edges (0,1) and (1,2) get fresh midpoints 3 and 4
    assert g.n == 5
    assert sorted(g.edges) == [(0, 3), (1, 3), (1, 4), (2, 4)]
    assert subdivide(path(3), 0).edges == path(3).edges


def test_interval_overlap_is_closed():
    g = interval([(0, 2), (2, 4), (5, 6)])
    assert g.has_edge(0, 1)  # touching endpoints overlap
    assert not g.has_edge(1, 2) and not g.has_edge(0, 2)
    with pytest.raises(ValueError):
        interval([(3, 1)])


def test_universal_and_isolated_append_last():
    g = add_universal(path(3))
    assert g.n == 4 and g.degree(3) == 3
    h = add_isolated(path(3))
    assert h.n == 4 and h.degree(3) == 0 and not h.is_connected()


def test_random_tree_is_tree_and_deterministic():
    for n in (2, 5, 9):
        t1 = random_tree(n, seed=4)
        t2 = random_tree(n, seed=4)
        assert t1 == t2
        assert t1.is_tree()
    assert random_tree(8, seed=1) != random_tree(8, seed=2)


def test_random_connected_is_connected_and_deterministic():
    g1 = random_connected(8, 0.3, seed=7)
    g2 = random_connected(8, 0.3, seed=7)
    assert g1 == g2
    assert g1.is_connected()


def test_distances_match_networkx():
    rng = Random(11)
    for trial in range(25):
        n = rng.randint(2, 9)
        g = random_connected(n, rng.uniform(0.25, 0.7), seed=trial)
        d = all_pairs_distances(g)
        expected = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(n):
            for v in range(n):
                assert d.rows[u][v] == expected[u][v]


def test_distance_matrix_marks_unreachable():
    g = add_isolated(path(3))
    d = all_pairs_distances(g)
    assert math.isinf(d.rows[0][3])
    assert not d.reachable(0, 3) and d.reachable(0, 2)


def test_bipartition_and_diameter():
    assert path(4).bipartition() == (frozenset({0, 2}), frozenset({1, 3}))
    assert cycle(5).bipartition() is None
    assert path(5).diameter() == 4
    assert complete(4).diameter() == 1


def test_format_parse_round_trip():
    rng = Random(3)
    for trial in range(20):
        g = random_connected(rng.randint(1, 9), 0.4, seed=trial)
        assert parse_graph(format_graph(g)) == g


def test_parser_rejections():
    for text in (
        "",  # missing header
        "2\n",  # header needs two fields
        "2 1\n0 0\n",  # loop
        "2 1\n1 0\n",  # endpoints must be increasing
        "2 1\n0 2\n",  # out of range
        "3 2\n0 1\n0 1\n",  # duplicate edge
        "2 1\n0 1\n0 1\n",  # trailing line
        "2 2\n0 1\n",  # fewer lines than promised
        "x 1\n0 1\n",  # non-numeric
    ):
        with pytest.raises(ValueError):
            parse_graph(text)


def test_parser_accepts_comments_and_blanks():
    g = parse_graph("# a path\n3 2\n\n0 1\n# interior\n1 2\n")
    assert g == path(3)


def test_generate_dispatch():
    assert generate("path", 4) == path(4)
    assert generate("complete_bipartite", 2, 2) == complete_bipartite(2, 2)
    assert generate("add_universal", base=path(3)) == add_universal(path(3))
    assert generate("subdivide", 2, base=path(2)) == subdivide(path(2), 2)
    with pytest.raises(ValueError):
        generate("mystery", 3)
    with pytest.raises(ValueError):
        generate("path")
    with pytest.raises(ValueError):
        generate("add_universal")
