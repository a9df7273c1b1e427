"""Subdivided ary trees, bicolored matchings, occupancy windows."""

from random import Random

import pytest
from conftest import brute_bicolored_matching

from locgame.errors import LimitExceededError
from locgame.graphs import complete, random_tree
from locgame.trees import (
    ColoredTree,
    build_subdivided_ary_tree,
    check_bimatching_lemma,
    format_colored_tree,
    max_bicolored_matching,
    occupancy_window,
    parse_colored_tree,
    plain_ary_tree_colored,
    regular_vertex_count,
)


def test_construction_counts():
    t1 = build_subdivided_ary_tree(13, 1, 2)
    assert regular_vertex_count(13, 1) == 14
    assert t1.graph.n == 40
    assert t1.regular == frozenset(range(14))
    assert t1.graph.is_tree()

    t2 = build_subdivided_ary_tree(13, 2, 2)
    assert regular_vertex_count(13, 2) == 183
    assert t2.graph.n == 547
    assert t2.graph.is_tree()

    assert regular_vertex_count(1, 5) == 6
    for arity in (2, 3, 5):
        for height in (0, 1, 2):
            expect = sum(arity**d for d in range(height + 1))
            assert regular_vertex_count(arity, height) == expect


def test_construction_guards():
    with pytest.raises(LimitExceededError):
        build_subdivided_ary_tree(13, 8, 2)
    for bad in ((0, 1, 2), (2, -1, 2), (2, 1, -1)):
        with pytest.raises(ValueError):
            build_subdivided_ary_tree(*bad)


def test_matching_dp_matches_brute_force():
    rng = Random(47)
    for trial in range(60):
        n = rng.randint(1, 10)
        base = random_tree(n, seed=trial)
        colors = tuple(rng.randint(0, 1) for _ in range(n))
        t = ColoredTree(
            graph=base, root=0, colors=colors, regular=frozenset(range(n))
        )
        m = max_bicolored_matching(t)
        assert m.size == brute_bicolored_matching(t), (sorted(base.edges), colors)
        seen = set()
        for u, v in m.edges:
            assert colors[u] != colors[v]
            assert u not in seen and v not in seen
            seen.update((u, v))
        assert len(m.edges) == m.size


def test_matching_on_monochromatic_tree_is_empty():
    t = plain_ary_tree_colored(3, 2)
    assert max_bicolored_matching(t).size == 0


def test_occupancy_windows():
    lo, hi, count = occupancy_window(1, 1, "defined")
    assert count == 14
    assert [x for x in range(count + 1) if lo <= x < hi] == list(range(4, 10))
    lo, hi, count = occupancy_window(1, 1, "derived")
    assert count == 14
    assert [x for x in range(count + 1) if lo <= x < hi] == list(range(4, 10))

    lo, hi, count = occupancy_window(1, 2, "defined")
    assert count == 170
    assert [x for x in range(count + 1) if lo <= x < hi] == list(range(82, 87))
    lo, hi, count = occupancy_window(1, 2, "derived")
    assert count == 183
    assert [x for x in range(count + 1) if lo <= x < hi] == list(range(89, 94))

    with pytest.raises(ValueError):
        occupancy_window(1, 1, "typo")


def test_bimatching_check_pass_and_json():
    colors = [0] * 14
    for v in (1, 2, 3, 4):
        colors[v] = 1
    chk = check_bimatching_lemma(1, 1, colors)
    assert chk.ones == 4
    assert chk.window_defined and chk.window_derived
    assert chk.passed and chk.matching_size >= 1
    tree = plain_ary_tree_colored(13, 1)
    for u, v in chk.witness:
        assert (u, v) in set(tree.graph.edges)
        assert colors[u] != colors[v]
    d = chk.to_json_dict()
    assert set(d) == {
        "k",
        "h",
        "ones",
        "window_defined",
        "window_derived",
        "matching_size",
        "required",
        "passed",
        "witness",
    }


def test_bimatching_check_validation():
    with pytest.raises(ValueError):
        check_bimatching_lemma(0, 1, [0] * 14)
    with pytest.raises(ValueError):
        check_bimatching_lemma(1, 0, [0] * 14)
    with pytest.raises(ValueError):
        check_bimatching_lemma(1, 1, [0] * 13)
    with pytest.raises(ValueError):
        check_bimatching_lemma(1, 1, [0] * 14)


def test_format_parse_roundtrip():
    t = build_subdivided_ary_tree(3, 1, 1)
    colors = tuple(i % 2 for i in range(t.graph.n))
    t = t.with_colors(colors)
    back = parse_colored_tree(format_colored_tree(t))
    assert back.graph.n == t.graph.n
    assert sorted(back.graph.edges) == sorted(t.graph.edges)
    assert back.colors == colors
    assert back.regular == t.regular

    with pytest.raises(ValueError):
        parse_colored_tree(format_colored_tree(t) + "colors 0 1\n")


def test_colored_tree_validation():
    t = build_subdivided_ary_tree(2, 1, 0)
    with pytest.raises(ValueError):
        t.with_colors((0,) * (t.graph.n - 1))
    with pytest.raises(ValueError):
        t.with_colors((2,) * t.graph.n)
    with pytest.raises(ValueError):
        ColoredTree(
            graph=complete(3), root=0, colors=(0, 0, 0), regular=frozenset()
        )
