"""Acceptance suite: twelve end-to-end checks with pinned budgets.

Each test is one acceptance criterion; its pass line in pytest -v is the
criterion's verdict.  Budgets are wall-clock upper bounds on this suite's
reference hardware class and fail the run when exceeded.
"""

import json
import math
import os
import subprocess
import sys
import time
from random import Random

from conftest import brute_bicolored_matching

from locgame.blindbush import (
    bush_number,
    bush_scaling_experiment,
    check_chain,
    domination_number,
)
from locgame.catalog import enumerate_graphs, enumerate_trees
from locgame.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    interval,
    path,
    random_connected,
    random_tree,
    star,
)
from locgame.locating import (
    check_isolated_equivalence,
    check_uvw_increment,
    min_locating_set,
    verify_multiuniversal_zeta,
)
from locgame.pathdecomp import pathwidth_exact
from locgame.plane import (
    Point,
    RandomWalkRobber,
    derive_delta,
    dist,
    greedy_prober,
    make_random_prober,
    one_cop_escape,
    approx_one_cop,
    trilaterate,
    two_cop_play,
)
from locgame.solver import localization_number, metric_dimension
from locgame.strategies import (
    bipartite_parity_strategy,
    complete_bipartite_strategy,
    path_strategy,
    pathwidth_strategy,
    star_strategy,
    verify_strategy,
)
from locgame.trees import (
    ColoredTree,
    build_subdivided_ary_tree,
    max_bicolored_matching,
    occupancy_window,
    plain_ary_tree_colored,
    regular_vertex_count,
)


def zeta(g: Graph) -> int:
    value = localization_number(g).zeta
    assert value is not None
    return value


def test_family_localization_values():
    t0 = time.monotonic()
    for n in range(2, 11):
        assert zeta(path(n)) == 1, f"path({n})"
    for n in range(3, 10):
        assert zeta(star(n)) == 1, f"star({n})"
    for n in range(2, 8):
        assert zeta(complete(n)) == n - 1, f"complete({n})"
    for a in range(1, 5):
        for b in range(a, 5):
            assert zeta(complete_bipartite(a, b)) == a, f"K_{a},{b}"
    assert time.monotonic() - t0 < 60.0


def test_clique_with_attachments_pair():
    t0 = time.monotonic()
    assert zeta(complete(4)) == 3
    widened = Graph.from_edges(
        6,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (1, 5), (2, 5)],
    )
    assert zeta(widened) == 2
    assert time.monotonic() - t0 < 10.0


def test_zeta_dominated_by_dim_partsize_pathwidth():
    t0 = time.monotonic()
    corpus = []
    for n in range(1, 7):
        corpus.extend(enumerate_graphs(n, connected=True))
    rng = Random(101)
    for trial in range(200):
        corpus.append(
            random_connected(7, rng.uniform(0.25, 0.75), seed=trial)
        )
    for g in corpus:
        z = zeta(g)
        dim, _ = metric_dimension(g)
        assert z <= dim, (sorted(g.edges), z, dim)
        parts = g.bipartition()
        if parts is not None and g.n > 1:
            assert z <= min(len(p) for p in parts), sorted(g.edges)
        w, _ = pathwidth_exact(g)
        assert z <= w or (g.n == 1 and z == 0 and w == 0), sorted(g.edges)
    assert time.monotonic() - t0 < 600.0


def test_interval_graphs_achieve_pathwidth():
    t0 = time.monotonic()
    nested = {
        1: [(0, 2), (1, 3)],
        2: [(0, 3), (1, 4), (2, 5)],
        3: [(0, 4), (1, 5), (2, 6), (3, 7)],
    }
    stretched = {
        1: [(0, 1), (1, 2), (2, 3), (3, 4)],
        2: [(0, 2), (1, 3), (2, 4), (4, 5)],
        3: [(0, 4), (0, 4), (0, 4), (0, 6), (5, 8)],
    }
    for w in (1, 2, 3):
        clique = interval(nested[w])
        assert clique.m == clique.n * (clique.n - 1) // 2  # K_{w+1}
        assert zeta(clique) == w and pathwidth_exact(clique)[0] == w
        other = interval(stretched[w])
        assert other.m < other.n * (other.n - 1) // 2
        assert zeta(other) == w, (w, sorted(other.edges))
        assert pathwidth_exact(other)[0] == w
    assert time.monotonic() - t0 < 120.0


def test_scripted_strategies_all_verified():
    t0 = time.monotonic()
    jobs = []
    for n in range(2, 11):
        g = path(n)
        jobs.append((g, path_strategy(g)))
    for n in range(3, 10):
        g = star(n)
        jobs.append((g, star_strategy(g)))
    for a in range(1, 5):
        for b in range(a, 5):
            jobs.append(
                (complete_bipartite(a, b), complete_bipartite_strategy(a, b))
            )
    parity_corpus = [cycle(n) for n in (4, 6, 8, 10)]
    parity_corpus.append(complete_bipartite(2, 3))
    for seed in range(10):
        parity_corpus.append(random_tree(2 + seed % 8, seed=seed))
    for g in parity_corpus:
        jobs.append((g, bipartite_parity_strategy(g)))
    pw_corpus = [cycle(6), complete(5)]
    for n in range(1, 6):
        pw_corpus.extend(enumerate_graphs(n, connected=True))
    for seed in range(6):
        pw_corpus.append(random_connected(6 + seed % 2, 0.4, seed=seed))
    for g in pw_corpus:
        _, pd = pathwidth_exact(g)
        jobs.append((g, pathwidth_strategy(g, pd)))
    for g, strat in jobs:
        report = verify_strategy(g, strat)
        assert report.verdict == "verified", (
            strat.name,
            sorted(g.edges),
            report.to_json_dict(),
        )
    assert time.monotonic() - t0 < 300.0


def test_bush_blind_universal_chain_and_domination():
    t0 = time.monotonic()
    for n in range(1, 7):
        for g in enumerate_graphs(n, connected=True):
            report = check_chain(g)
            assert report.holds, (sorted(g.edges), report.to_json_dict())
    for n in range(1, 9):
        for g in enumerate_graphs(n, connected=True):
            b, _ = bush_number(g)
            gamma, _ = domination_number(g)
            assert b <= gamma, (sorted(g.edges), b, gamma)
    assert time.monotonic() - t0 < 900.0


def test_occupancy_matching_exhaustive_and_sampled():
    t0 = time.monotonic()
    base1 = plain_ary_tree_colored(13, 1)
    lo_def, hi_def, _ = occupancy_window(1, 1, "defined")
    lo_der, hi_der, _ = occupancy_window(1, 1, "derived")
    assert (lo_def, hi_def) == (lo_der, hi_der)
    checked = 0
    for mask in range(1 << 14):
        ones = bin(mask).count("1")
        if not lo_def <= ones < hi_def:
            continue
        colors = tuple((mask >> v) & 1 for v in range(14))
        size = max_bicolored_matching(base1.with_colors(colors)).size
        assert size >= 1, colors
        checked += 1
    assert checked == 14443

    base2 = plain_ary_tree_colored(13, 2)
    total = base2.graph.n
    windows = []
    for kind in ("defined", "derived"):
        lo, hi, _ = occupancy_window(1, 2, kind)
        windows.append(range(math.ceil(lo), math.ceil(hi)))
    rng = Random(211)
    for i in range(10**4):
        ones = rng.choice(windows[i % 2])
        colors = [0] * total
        for v in rng.sample(range(total), ones):
            colors[v] = 1
        size = max_bicolored_matching(base2.with_colors(colors)).size
        assert size >= 2, (i, ones)
    assert time.monotonic() - t0 < 120.0


def test_matching_dp_equals_brute_force():
    t0 = time.monotonic()
    rng = Random(223)
    compared = 0
    for n in range(1, 11):
        for tree in enumerate_trees(n):
            for _ in range(5):
                colors = tuple(rng.randint(0, 1) for _ in range(n))
                t = ColoredTree(
                    graph=tree,
                    root=0,
                    colors=colors,
                    regular=frozenset(range(n)),
                )
                assert max_bicolored_matching(t).size == brute_bicolored_matching(t)
                compared += 1
    assert compared == 5 * sum(
        (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)
    )
    assert time.monotonic() - t0 < 120.0


def test_subdivided_tree_counts_and_trend():
    t0 = time.monotonic()
    assert build_subdivided_ary_tree(13, 1, 2).graph.n == 40
    t2 = build_subdivided_ary_tree(13, 2, 2)
    assert t2.graph.n == 547
    assert len(t2.regular) == 183
    for i in (1, 2):
        assert regular_vertex_count(13, i) == (13 ** (i + 1) - 1) // 12
    assert time.monotonic() - t0 < 1.0

    table = bush_scaling_experiment([(2, 1), (3, 1)])
    assert all(r.status == "ok" for r in table.rows)
    assert table.to_json_dict()["bush_nondecreasing"]


def test_locating_reduction_equivalences():
    t0 = time.monotonic()
    for n in range(1, 6):
        for g in enumerate_graphs(n, connected=False):
            rep = check_isolated_equivalence(g)
            assert rep.equal, (n, sorted(g.edges), rep.to_json_dict())
    for n in range(2, 6):
        for g in enumerate_graphs(n, connected=True):
            rep = check_uvw_increment(g)
            assert rep.equal, (n, sorted(g.edges), rep.to_json_dict())
    c4 = cycle(4)
    assert min_locating_set(c4)[0] == 2
    rep = verify_multiuniversal_zeta(c4)
    assert (rep.lhs, rep.rhs, rep.equal) == (3, 3, True)
    for n in range(1, 5):
        for g in enumerate_graphs(n, connected=True):
            if n > 1 and g.diameter() > 2:
                continue
            rep = verify_multiuniversal_zeta(g)
            assert rep.equal, (n, sorted(g.edges), rep.to_json_dict())
    assert time.monotonic() - t0 < 1200.0


def test_geometry_suite():
    t0 = time.monotonic()
    rng = Random(307)
    for _ in range(10**4):
        target = Point(rng.uniform(-100, 100), rng.uniform(-100, 100))
        while True:
            probes = [
                Point(rng.uniform(-100, 100), rng.uniform(-100, 100))
                for _ in range(3)
            ]
            area = (probes[1][0] - probes[0][0]) * (
                probes[2][1] - probes[0][1]
            ) - (probes[1][1] - probes[0][1]) * (probes[2][0] - probes[0][0])
            if abs(area) > 10.0:
                break
        got = trilaterate(probes, tuple(dist(target, p) for p in probes))
        assert dist(got, target) <= 1e-9

    for seed in range(10**3):
        walker = RandomWalkRobber(
            Point(rng.uniform(-10, 10), rng.uniform(-10, 10)), seed=seed
        )
        result = two_cop_play(walker)
        assert result.rounds <= 2
        assert dist(result.located, walker.position) <= 1e-6, seed

    for prober in (greedy_prober, make_random_prober(17)):
        trace = one_cop_escape(prober, rounds=10**3)
        assert len(trace.rounds) == 10**3
        assert min(r.separation for r in trace.rounds) >= 1e-6

    assert abs(derive_delta(0.1).root - 0.09582) < 5e-6
    for epsilon in (0.5, 0.1, 0.01):
        for seed in range(10**3):
            walker = RandomWalkRobber(
                Point(rng.uniform(-4, 4), rng.uniform(-4, 4)), seed=seed
            )
            result = approx_one_cop(walker, epsilon=epsilon)
            err = dist(result.estimate, walker.position)
            assert err <= result.error_bound + 1e-9, (epsilon, seed)
            assert err <= 1.0 + epsilon
    assert time.monotonic() - t0 < 180.0


def test_solver_performance_and_thread_independence(tmp_path):
    per_instance = []
    for seed in (2, 5, 11):
        g = random_connected(10, 0.5, seed=seed)
        t0 = time.monotonic()
        result = localization_number(g, max_k=3)
        per_instance.append(time.monotonic() - t0)
        assert result.zeta is not None and result.zeta <= 3, seed
    assert all(t < 60.0 for t in per_instance), per_instance

    graph_file = tmp_path / "n10.graph"
    env = os.environ.copy()
    env.pop("LOCGAME_MAX_STATES", None)
    gen = subprocess.run(
        [sys.executable, "-m", "locgame", "graph", "gen",
         "random_connected", "10", "0.5", "2", "-o", str(graph_file)],
        capture_output=True, text=True, env=env,
    )
    assert gen.returncode == 0, gen.stderr
    outputs = []
    for threads in ("1", "8"):
        res = subprocess.run(
            [sys.executable, "-m", "locgame", "--format", "json",
             "--threads", threads, "solve", "zeta", str(graph_file)],
            capture_output=True, text=True, env=env,
        )
        assert res.returncode == 0, res.stderr
        outputs.append(res.stdout)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["zeta"] is not None
