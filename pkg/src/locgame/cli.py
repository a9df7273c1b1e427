"""Command-line surface for the localization game toolkit.

Exit codes: 0 success, 1 usage error or aborted interactive session,
2 invalid input, 3 budget or resource limit, 4 verification failure
(a counterexample was found; its trace is still printed to stdout).
Results go to stdout; prompts and errors go to stderr.  With
--format json, errors are single-line JSON objects on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from random import Random

from .blindbush import blind_localization_number, bush_number, check_chain
from .errors import LimitExceededError
from .graphs import (
    Graph,
    all_pairs_distances,
    format_graph,
    generate,
    parse_graph,
)
from .locating import (
    min_dominating_locating_set,
    min_locating_set,
    reduce_add_isolated,
    reduce_add_uvw,
    reduce_multiuniversal,
    unseen_vertices,
    verify_multiuniversal_zeta,
)
from .pathdecomp import (
    PathDecomposition,
    normalize_decomposition,
    pathwidth_exact,
    validate_decomposition,
)
from .plane import (
    GAME_TOL,
    Point,
    RandomWalkRobber,
    approx_one_cop,
    dist,
    greedy_prober,
    make_random_prober,
    one_cop_escape,
    trilaterate,
    two_cop_play,
)
from .solver import (
    SolverBudget,
    adversarial_robber,
    belief_step,
    localization_number,
    metric_dimension,
    partition_by_signature,
)
from .strategies import (
    bipartite_parity_strategy,
    complete_bipartite_strategy,
    path_strategy,
    pathwidth_strategy,
    star_strategy,
    verify_strategy,
)
from .trees import check_bimatching_lemma, occupancy_window, plain_ary_tree_colored

ENV_MAX_STATES = "LOCGAME_MAX_STATES"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise UsageError(message)


def build_parser() -> _Parser:
    p = _Parser(prog="locgame", description=__doc__.splitlines()[0])
    p.add_argument(
        "--format", choices=("json", "plain"), default="plain", dest="fmt"
    )
    # subcommand flags overwrite same-dest values, so the global seed
    # keeps its own dest and _seed() merges the two
    p.add_argument("--seed", type=int, default=0, dest="global_seed")
    p.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker cap; solvers run sequentially so results never depend on it",
    )
    sub = p.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph").add_subparsers(dest="action", required=True)
    gen = graph.add_parser("gen")
    gen.add_argument("family")
    gen.add_argument("params", nargs="*")
    gen.add_argument("-o", "--output")

    solve = sub.add_parser("solve").add_subparsers(dest="action", required=True)
    for name in ("zeta", "dim", "bush", "blind"):
        sp = solve.add_parser(name)
        sp.add_argument("file")
        if name != "dim":
            sp.add_argument("--max-k", type=int, default=None)
            sp.add_argument("--max-states", type=int, default=None)

    check = sub.add_parser("check").add_subparsers(dest="action", required=True)
    chain = check.add_parser("chain")
    chain.add_argument("file")
    chain.add_argument("--max-states", type=int, default=None)

    strat = sub.add_parser("strategy").add_subparsers(dest="action", required=True)
    sv = strat.add_parser("verify")
    sv.add_argument("file")
    sv.add_argument(
        "--family",
        required=True,
        choices=("path", "star", "cbip", "bipartite", "pathwidth"),
    )
    sv.add_argument("--decomp", default=None)
    sv.add_argument("--max-turns", type=int, default=None)

    locating = sub.add_parser("locating").add_subparsers(dest="action", required=True)
    lm = locating.add_parser("min")
    lm.add_argument("file")
    lm.add_argument("--dominating", action="store_true")

    reduce_p = sub.add_parser("reduce").add_subparsers(dest="action", required=True)
    for name in ("isolated", "uvw", "multiuniversal"):
        rp = reduce_p.add_parser(name)
        rp.add_argument("file")
        rp.add_argument("-o", "--output")

    verify = sub.add_parser("verify").add_subparsers(dest="action", required=True)
    vt = verify.add_parser("thm53")
    vt.add_argument("file")
    vt.add_argument("--max-states", type=int, default=None)

    lemma = sub.add_parser("lemma").add_subparsers(dest="action", required=True)
    lb = lemma.add_parser("bimatching")
    lb.add_argument("--k", type=int, required=True)
    lb.add_argument("--h", type=int, required=True)
    lb.add_argument("--samples", type=int, default=100)

    geom = sub.add_parser("geom").add_subparsers(dest="action", required=True)
    for name in ("trilaterate", "two-cop", "escape", "approx"):
        gp = geom.add_parser(name)
        gp.add_argument("--seed", type=int, default=None)
        if name == "escape":
            gp.add_argument("--rounds", type=int, default=20)
            gp.add_argument("--prober", choices=("greedy", "random"), default="greedy")
        if name == "approx":
            gp.add_argument("--eps", type=float, default=0.1)

    play = sub.add_parser("play")
    play.add_argument("file")
    play.add_argument("--role", required=True, choices=("cop", "robber"))
    play.add_argument("--k", type=int, required=True)
    play.add_argument("--max-turns", type=int, default=None)
    play.add_argument("--transcript", default=None)
    return p


# --------------------------------------------------------------- plumbing


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _resolve_max_states(args) -> int | None:
    value = getattr(args, "max_states", None)
    if value is None:
        raw = os.environ.get(ENV_MAX_STATES)
        if raw is not None:
            try:
                value = int(raw)
            except ValueError as exc:
                raise ValueError(
                    f"{ENV_MAX_STATES} must be an integer, got {raw!r}"
                ) from exc
    if value is not None and value <= 0:
        raise ValueError("state budget must be positive")
    return value


def _budget(args) -> SolverBudget:
    value = _resolve_max_states(args)
    return SolverBudget() if value is None else SolverBudget(max_states=value)


def _seed(args) -> int:
    sub = getattr(args, "seed", None)
    return args.global_seed if sub is None else sub


def _plain_lines(value, prefix=""):
    if isinstance(value, dict):
        for key in value:
            yield from _plain_lines(value[key], f"{prefix}{key}." if prefix else f"{key}.")
        return
    if isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            yield f"{prefix[:-1]}: {' '.join(str(v) for v in value)}"
        else:
            for i, v in enumerate(value):
                yield from _plain_lines(v, f"{prefix}{i}.")
        return
    yield f"{prefix[:-1]}: {value}"


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in _plain_lines(payload):
            print(line)


def _fail(fmt: str, code: int, message: str) -> int:
    if fmt == "json":
        print(json.dumps({"error": message, "code": code}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


# --------------------------------------------------------------- handlers


def _cmd_graph_gen(args):
    params = []
    for tok in args.params:
        try:
            params.append(int(tok))
        except ValueError:
            try:
                params.append(float(tok))
            except ValueError:
                raise ValueError(f"parameter {tok!r} is not a number") from None
    if args.family == "interval":
        if len(params) % 2:
            raise ValueError("interval takes an even number of endpoints")
        params = [tuple(params[i : i + 2]) for i in range(0, len(params), 2)]
    g = generate(args.family, *params)
    text = format_graph(g)
    payload = {"family": args.family, "n": g.n, "m": g.m}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        payload["path"] = args.output
    else:
        payload["graph"] = text
    return payload, 0, text if not args.output else None


def _cmd_solve(args):
    g = _load_graph(args.file)
    if args.action == "zeta":
        result = localization_number(g, max_k=args.max_k, budget=_budget(args))
        payload = result.to_json_dict()
        if result.zeta is None:
            limit = g.n if args.max_k is None else args.max_k
            payload["note"] = f"exceeds max-k {limit}"
        return payload, 0, None
    if args.action == "dim":
        size, witness = metric_dimension(g)
        return {"dim": size, "witness": sorted(witness)}, 0, None
    value = _resolve_max_states(args)
    kwargs = {} if value is None else {"max_states": value}
    if args.action == "bush":
        k, schedule = bush_number(g, max_k=args.max_k, **kwargs)
        return {"bush": k, "schedule": schedule.to_json_dict()}, 0, None
    k = blind_localization_number(g, max_k=args.max_k, **kwargs)
    return {"blind": k}, 0, None


def _cmd_check_chain(args):
    g = _load_graph(args.file)
    value = _resolve_max_states(args)
    kwargs = {} if value is None else {"max_states": value}
    report = check_chain(g, solver_budget=_budget(args), **kwargs)
    return report.to_json_dict(), 0 if report.holds else 4, None


def _parse_decomposition(path: str) -> PathDecomposition:
    bags = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                bags.append(frozenset(int(tok) for tok in line.split()))
            except ValueError as exc:
                raise ValueError(f"bad bag line {line!r}") from exc
    if not bags:
        raise ValueError("decomposition file has no bags")
    return PathDecomposition(bags=tuple(bags))


def _build_family_strategy(g: Graph, args):
    if args.family == "path":
        return path_strategy(g)
    if args.family == "star":
        return star_strategy(g)
    if args.family == "bipartite":
        return bipartite_parity_strategy(g)
    if args.family == "cbip":
        parts = g.bipartition()
        if parts is None:
            raise ValueError("graph is not bipartite")
        first, second = parts
        a, b = len(first), len(second)
        if min(a, b) == 0:
            raise ValueError("both sides must be nonempty")
        if first != frozenset(range(a)) or second != frozenset(range(a, a + b)):
            raise ValueError("expected side labels 0..a-1 and a..a+b-1")
        if g.m != a * b:
            raise ValueError("graph is not complete bipartite")
        return complete_bipartite_strategy(a, b)
    if args.decomp is not None:
        pd = _parse_decomposition(args.decomp)
        validate_decomposition(g, pd)
        pd = normalize_decomposition(g, pd)
    else:
        _, pd = pathwidth_exact(g)
    return pathwidth_strategy(g, pd)


def _cmd_strategy_verify(args):
    g = _load_graph(args.file)
    strategy = _build_family_strategy(g, args)
    report = verify_strategy(g, strategy, max_turns=args.max_turns)
    payload = report.to_json_dict()
    payload["family"] = args.family
    payload["k"] = strategy.k
    return payload, 0 if report.verdict == "verified" else 4, None


def _cmd_locating_min(args):
    g = _load_graph(args.file)
    if args.dominating:
        size, witness = min_dominating_locating_set(g)
    else:
        size, witness = min_locating_set(g)
    return {
        "size": size,
        "witness": sorted(witness),
        "dominating": args.dominating,
        "unseen": sorted(unseen_vertices(g, witness)),
    }, 0, None


def _cmd_reduce(args):
    g = _load_graph(args.file)
    fn = {
        "isolated": reduce_add_isolated,
        "uvw": reduce_add_uvw,
        "multiuniversal": reduce_multiuniversal,
    }[args.action]
    out = fn(g)
    text = format_graph(out.graph)
    payload = {
        "construction": out.construction,
        "n": out.graph.n,
        "m": out.graph.m,
        "added": {label: v for label, v in out.added},
    }
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        payload["path"] = args.output
    else:
        payload["graph"] = text
    return payload, 0, text if not args.output else None


def _cmd_verify_thm53(args):
    g = _load_graph(args.file)
    report = verify_multiuniversal_zeta(g, budget=_budget(args))
    return report.to_json_dict(), 0 if report.equal else 4, None


def _cmd_lemma_bimatching(args):
    k, h = args.k, args.h
    if args.samples < 0:
        raise ValueError("samples must be >= 0")
    tree = plain_ary_tree_colored(12 * k + 1, h)
    total = tree.graph.n
    windows = {}
    viable = []
    for kind in ("defined", "derived"):
        lo, hi, _count = occupancy_window(k, h, kind)
        lo_i = max(0, math.ceil(lo))
        hi_i = min(total, math.ceil(hi) - 1)
        windows[kind] = [lo_i, hi_i]
        if lo_i <= hi_i:
            viable.append((kind, lo_i, hi_i))
    if not viable:
        raise ValueError("no coloring satisfies either occupancy window")
    rng = Random(args.global_seed)
    failures = []
    passed = 0
    for _ in range(args.samples):
        kind, lo_i, hi_i = viable[rng.randrange(len(viable))]
        ones = rng.randint(lo_i, hi_i)
        colors = [0] * total
        for v in rng.sample(range(total), ones):
            colors[v] = 1
        chk = check_bimatching_lemma(k, h, colors)
        if chk.passed:
            passed += 1
        elif len(failures) < 5:
            failures.append(chk.to_json_dict())
    payload = {
        "k": k,
        "h": h,
        "tree_vertices": total,
        "samples": args.samples,
        "passed": passed,
        "windows": windows,
        "all_passed": passed == args.samples,
        "failures": failures,
    }
    return payload, 0 if passed == args.samples else 4, None


def _cmd_geom(args):
    rng = Random(_seed(args))
    if args.action == "trilaterate":
        truth = Point(rng.uniform(-10, 10), rng.uniform(-10, 10))
        while True:
            probes = [
                Point(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(3)
            ]
            ux, uy = probes[1][0] - probes[0][0], probes[1][1] - probes[0][1]
            vx, vy = probes[2][0] - probes[0][0], probes[2][1] - probes[0][1]
            if abs(ux * vy - uy * vx) > 1e-3:
                break
        distances = [dist(truth, p) for p in probes]
        recovered = trilaterate(probes, distances)
        error = dist(recovered, truth)
        return {
            "probes": [list(p) for p in probes],
            "distances": distances,
            "truth": list(truth),
            "recovered": list(recovered),
            "error": error,
        }, 0, None
    if args.action == "two-cop":
        start = Point(rng.uniform(-8, 8), rng.uniform(-8, 8))
        robber = RandomWalkRobber(start, rng.randrange(2**32))
        result = two_cop_play(robber)
        actual = robber.position
        error = dist(result.located, actual)
        payload = result.to_json_dict()
        payload["actual"] = list(actual)
        payload["error"] = error
        return payload, 0 if error <= GAME_TOL else 4, None
    if args.action == "escape":
        if args.prober == "greedy":
            prober = greedy_prober
        else:
            prober = make_random_prober(_seed(args))
        trace = one_cop_escape(prober, args.rounds)
        separations = [r.separation for r in trace.rounds]
        payload = {
            "prober": args.prober,
            "rounds": args.rounds,
            "min_separation": min(separations),
            "survived": True,
        }
        if args.rounds <= 50:
            payload["trace"] = trace.to_json_dict()["rounds"]
        else:
            payload["trace_truncated"] = True
        return payload, 0, None
    start = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
    robber = RandomWalkRobber(start, rng.randrange(2**32))
    result = approx_one_cop(robber, args.eps)
    actual = robber.position
    error = dist(result.estimate, actual)
    ok = result.exact or error <= result.error_bound + GAME_TOL
    payload = result.to_json_dict()
    payload["epsilon"] = args.eps
    payload["actual"] = list(actual)
    payload["error"] = error
    payload["within_bound"] = ok
    return payload, 0 if ok else 4, None


# ----------------------------------------------------------- interactive


def _prompt(message: str) -> str:
    print(message, end="", file=sys.stderr, flush=True)
    return input()


def _show(message: str) -> None:
    print(message, file=sys.stderr)


def _play(args):
    g = _load_graph(args.file)
    k = args.k
    if k < 1:
        raise ValueError("k must be >= 1")
    table = adversarial_robber(g, k, _budget(args))
    dmat = all_pairs_distances(g)
    n = g.n
    max_turns = args.max_turns or 4 * n * n
    belief = frozenset(range(n))
    events = []
    outcome = None
    located = None
    if args.role == "robber":
        strategy = table.strategy_map() if table.cop_wins else {}
        if not strategy:
            _show(f"note: {k} probes cannot force a win; cop plays a fallback")
        seen = set()
        for turn in range(1, max_turns + 1):
            probe = strategy.get(belief) or tuple(sorted(belief))[: min(k, n)]
            classes = partition_by_signature(belief, probe, dmat)
            _show(f"turn {turn}: belief {sorted(belief)}, cop probes {list(probe)}")
            for i, (sig, cls) in enumerate(classes):
                tag = " (robber located)" if len(cls) == 1 else ""
                _show(f"  [{i}] signature {list(sig)} -> {sorted(cls)}{tag}")
            choice = None
            while choice is None:
                raw = _prompt("pick a class index: ").strip()
                if raw.isdigit() and int(raw) < len(classes):
                    choice = int(raw)
                else:
                    _show(f"enter a number between 0 and {len(classes) - 1}")
            cls = classes[choice][1]
            events.append(
                {
                    "turn": turn,
                    "belief": sorted(belief),
                    "probe": list(probe),
                    "class": sorted(cls),
                }
            )
            if len(cls) == 1:
                outcome, located = "cop", min(cls)
                _show(f"cop wins: robber located at {located}")
                break
            belief = belief_step(belief, cls, g)
            if belief in seen:
                outcome = "robber"
                _show("robber wins: belief cycle")
                break
            seen.add(belief)
    else:
        seen = set()
        for turn in range(1, max_turns + 1):
            _show(f"turn {turn}: belief {sorted(belief)}")
            probe = None
            while probe is None:
                raw = _prompt(f"enter up to {k} distinct vertices to probe: ")
                try:
                    values = tuple(int(tok) for tok in raw.split())
                except ValueError:
                    _show("probes must be integers")
                    continue
                if not values or len(values) > k or len(set(values)) != len(values):
                    _show(f"need 1..{k} distinct vertices")
                    continue
                if any(v < 0 or v >= n for v in values):
                    _show(f"vertices must lie in 0..{n - 1}")
                    continue
                probe = values
            reply = table.robber_reply(belief, probe)
            event = {"turn": turn, "belief": sorted(belief), "probe": list(probe)}
            if reply is None:
                outcome = "cop"
                event["class"] = None
                events.append(event)
                _show("cop wins: every signature is unique")
                break
            event["class"] = sorted(reply)
            events.append(event)
            _show(f"robber's signature class: {sorted(reply)}")
            key = (belief, probe)
            if key in seen:
                outcome = "robber"
                _show("robber wins: belief cycle")
                break
            seen.add(key)
            belief = belief_step(belief, reply, g)
    if outcome is None:
        outcome = "robber"
        _show("turn limit reached; robber survives")
    payload = {
        "role": args.role,
        "k": k,
        "winner": outcome,
        "turns": len(events),
        "located": located,
        "events": events,
    }
    if args.transcript:
        with open(args.transcript, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        payload = dict(payload, transcript=args.transcript)
    return payload, 0, None


# ---------------------------------------------------------------- dispatch


def _dispatch(args):
    if args.command == "graph":
        return _cmd_graph_gen(args)
    if args.command == "solve":
        return _cmd_solve(args)
    if args.command == "check":
        return _cmd_check_chain(args)
    if args.command == "strategy":
        return _cmd_strategy_verify(args)
    if args.command == "locating":
        return _cmd_locating_min(args)
    if args.command == "reduce":
        return _cmd_reduce(args)
    if args.command == "verify":
        return _cmd_verify_thm53(args)
    if args.command == "lemma":
        return _cmd_lemma_bimatching(args)
    if args.command == "geom":
        return _cmd_geom(args)
    return _play(args)


def _peek_format(argv) -> str:
    """Best-effort --format detection for errors raised before parsing ends."""
    for i, tok in enumerate(argv):
        if tok == "--format" and i + 1 < len(argv):
            return argv[i + 1] if argv[i + 1] in ("json", "plain") else "plain"
        if tok.startswith("--format="):
            value = tok.split("=", 1)[1]
            return value if value in ("json", "plain") else "plain"
    return "plain"


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail(_peek_format(argv), 1, str(exc))
    fmt = args.fmt
    if args.threads < 1:
        return _fail(fmt, 1, "--threads must be >= 1")
    try:
        payload, code, raw = _dispatch(args)
    except UsageError as exc:
        return _fail(fmt, 1, str(exc))
    except EOFError:
        return _fail(fmt, 1, "unexpected end of input")
    except LimitExceededError as exc:
        return _fail(fmt, 3, str(exc))
    except ValueError as exc:
        return _fail(fmt, 2, str(exc))
    except OSError as exc:
        return _fail(fmt, 2, str(exc))
    if fmt == "plain" and raw is not None:
        sys.stdout.write(raw)
    else:
        _emit(payload, fmt)
    return code


if __name__ == "__main__":
    sys.exit(main())
