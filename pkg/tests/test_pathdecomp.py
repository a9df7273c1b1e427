"""Path decompositions: validation, normal form, exact width."""

from random import Random

import pytest

from conftest import vertex_separation_by_orders
from locgame.errors import LimitExceededError
from locgame.graphs import complete, cycle, path, random_connected, star
from locgame.catalog import enumerate_graphs
from locgame.pathdecomp import (
    PathDecomposition,
    decomposition_errors,
    is_normalized,
    normalize_decomposition,
    pathwidth_exact,
    validate_decomposition,
)


def bags(*seqs) -> PathDecomposition:
    return PathDecomposition(tuple(frozenset(s) for s in seqs))


def test_validation_catches_each_defect():
    g = path(4)
    good = bags({0, 1}, {1, 2}, {2, 3})
    assert decomposition_errors(g, good) == []
    validate_decomposition(g, good)

    missing_edge = bags({0, 1}, {1, 2}, {3})
    assert any("edge" in e for e in decomposition_errors(g, missing_edge))
    missing_vertex = bags({0, 1}, {1, 2}, {2})
    assert any("vertex" in e for e in decomposition_errors(g, missing_vertex))
    gap = bags({0, 1}, {2, 3}, {1, 2})
    assert any("contiguous" in e for e in decomposition_errors(g, gap))
    out_of_range = bags({0, 1}, {1, 2}, {2, 3, 9})
    assert any("range" in e for e in decomposition_errors(g, out_of_range))
    with pytest.raises(ValueError):
        validate_decomposition(g, gap)


def test_normalize_drops_contained_bags_and_dead_vertices():
    g = path(3)
    raw = bags({0, 1}, {0, 1}, {0, 1, 2}, {1, 2}, {2})
    nd = normalize_decomposition(g, raw)
    assert is_normalized(g, nd)
    assert nd.width <= raw.width
    assert decomposition_errors(g, nd) == []
    # already-normal decompositions are fixed points
    again = normalize_decomposition(g, nd)
    assert again.bags == nd.bags


def test_normalized_bags_have_two_vertices_on_connected_graphs():
    rng = Random(9)
    for trial in range(20):
        g = random_connected(rng.randint(2, 8), 0.35, seed=trial)
        _, pd = pathwidth_exact(g)
        assert is_normalized(g, pd)
        assert all(len(b) >= 2 for b in pd.bags)


def test_known_widths():
    assert pathwidth_exact(path(7))[0] == 1
    assert pathwidth_exact(cycle(5))[0] == 2
    assert pathwidth_exact(cycle(8))[0] == 2
    assert pathwidth_exact(star(7))[0] == 1
    assert pathwidth_exact(complete(5))[0] == 4
    assert pathwidth_exact(path(1))[0] == 0


def test_width_matches_layout_oracle_on_catalogue():
    for n in range(2, 6):
        for g in enumerate_graphs(n, connected=True):
            w, pd = pathwidth_exact(g)
            assert w == vertex_separation_by_orders(g), sorted(g.edges)
            assert pd.width == w
            validate_decomposition(g, pd)


def test_width_matches_layout_oracle_on_random_six():
    for seed in range(15):
        g = random_connected(6, 0.4, seed=seed)
        w, _ = pathwidth_exact(g)
        assert w == vertex_separation_by_orders(g), (seed, sorted(g.edges))


def test_size_guard_and_connectivity():
    with pytest.raises(LimitExceededError):
        pathwidth_exact(path(11), limit=10)
    from locgame.graphs import add_isolated

    with pytest.raises(ValueError):
        pathwidth_exact(add_isolated(path(3)))
