"""Canonical catalogue of small graphs and free trees."""

from random import Random

import networkx as nx
from locgame.catalog import (
    canonical_form,
    canonical_graph_key,
    enumerate_graphs,
    enumerate_trees,
    graph_to_mask,
    mask_to_graph,
    tree_canonical_code,
)
from locgame.graphs import Graph, random_connected, random_tree


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def test_mask_round_trip():
    rng = Random(2)
    for trial in range(20):
        g = random_connected(rng.randint(1, 8), 0.4, seed=trial)
        assert mask_to_graph(g.n, graph_to_mask(g)) == g


def test_counts_match_published_sequences():
    assert [len(enumerate_graphs(n)) for n in range(1, 7)] == [
        1, 2, 4, 11, 34, 156,
    ]
    assert [len(enumerate_graphs(n, connected=True)) for n in range(1, 7)] == [
        1, 1, 2, 6, 21, 112,
    ]


def test_tree_counts_match_published_sequence():
    assert [len(enumerate_trees(n)) for n in range(1, 11)] == [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106,
    ]
    for g in enumerate_trees(9):
        assert g.is_tree()


def test_canonical_form_is_relabeling_invariant():
    rng = Random(5)
    for trial in range(40):
        n = rng.randint(2, 7)
        g = random_connected(n, rng.uniform(0.3, 0.8), seed=trial)
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_graph_key(g) == canonical_graph_key(h)


def test_catalogue_members_are_pairwise_nonisomorphic():
    reps = enumerate_graphs(5, connected=True)
    keys = {canonical_form(5, graph_to_mask(g)) for g in reps}
    assert len(keys) == len(reps)
    # independent check through VF2 on a sample of pairs
    nxg = []
    for g in reps:
        h = nx.Graph()
        h.add_nodes_from(range(5))
        h.add_edges_from(g.edges)
        nxg.append(h)
    for i in range(len(nxg)):
        for j in range(i + 1, len(nxg)):
            assert not nx.is_isomorphic(nxg[i], nxg[j])


def test_every_isomorphism_class_is_covered():
    # every random graph must hit exactly one catalogue key
    rng = Random(8)
    keys6 = {canonical_form(6, graph_to_mask(g)) for g in enumerate_graphs(6, True)}
    for trial in range(30):
        g = random_connected(6, rng.uniform(0.25, 0.9), seed=trial)
        assert canonical_form(6, graph_to_mask(g)) in keys6


def test_tree_code_invariance_and_distinction():
    rng = Random(13)
    for trial in range(30):
        n = rng.randint(2, 12)
        t = random_tree(n, seed=trial)
        perm = list(range(n))
        rng.shuffle(perm)
        assert tree_canonical_code(t) == tree_canonical_code(relabel(t, perm))
    codes9 = {tree_canonical_code(t) for t in enumerate_trees(9)}
    assert len(codes9) == 47
