"""Distance-probe games in the plane with unit robber moves.

Geometry kernels (circle intersection, trilateration) work to an
absolute tolerance of 1e-9; game-level equality checks use 1e-6.

Two cops locate any robber in two rounds: round one pins it to the two
intersection points of the answer circles, and after the robber's unit
move a line separating both unit disks (built with margin >= 1) lets
round two's mirror-image ambiguity be resolved by side.  One cop can
never locate an adversarial robber exactly: the escape adversary always
keeps a second consistent point on the answer circle strictly inside
the revealed unit disk.  One cop can still get within 1 + eps in three
rounds by probing from far away so answer arcs flatten onto lines
(sagitta bound c^2/(4D) <= delta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from random import Random
from typing import Callable, NamedTuple

GEOM_TOL = 1e-9
GAME_TOL = 1e-6
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


class Point(NamedTuple):
    x: float
    y: float


class Circle(NamedTuple):
    center: Point
    radius: float


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def _add(p: Point, q: Point) -> Point:
    return Point(p[0] + q[0], p[1] + q[1])


def _sub(p: Point, q: Point) -> Point:
    return Point(p[0] - q[0], p[1] - q[1])


def _scale(p: Point, a: float) -> Point:
    return Point(p[0] * a, p[1] * a)


def _dot(p: Point, q: Point) -> float:
    return p[0] * q[0] + p[1] * q[1]


def _cross(p: Point, q: Point) -> float:
    return p[0] * q[1] - p[1] * q[0]


def _perp(p: Point) -> Point:
    return Point(-p[1], p[0])


def _unit(p: Point) -> Point:
    n = math.hypot(p[0], p[1])
    if n == 0.0:
        raise ValueError("zero vector has no direction")
    return Point(p[0] / n, p[1] / n)


def circle_intersection(
    c1: Circle, c2: Circle, tol: float = GEOM_TOL
) -> tuple[Point, ...]:
    """0, 1 (tangent within tol) or 2 intersection points."""
    if c1.radius < 0 or c2.radius < 0:
        raise ValueError("negative radius")
    d = dist(c1.center, c2.center)
    if d <= tol:
        raise ValueError("coincident circle centers")
    r1, r2 = c1.radius, c2.radius
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return ()
    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    h_sq = r1 * r1 - a * a
    axis = _unit(_sub(c2.center, c1.center))
    foot = _add(c1.center, _scale(axis, a))
    if h_sq <= tol * max(1.0, r1) * 2:
        return (foot,)
    h = math.sqrt(max(0.0, h_sq))
    off = _scale(_perp(axis), h)
    return (_add(foot, off), _sub(foot, off))


def trilaterate(probes, distances, tol: float = GEOM_TOL) -> Point:
    """Unique point at the given distances from three noncollinear probes."""
    if len(probes) != 3 or len(distances) != 3:
        raise ValueError("need exactly three probes and distances")
    (p1, p2, p3) = (Point(*p) for p in probes)
    d1, d2, d3 = distances
    if min(d1, d2, d3) < 0:
        raise ValueError("negative distance")
    v2, v3 = _sub(p2, p1), _sub(p3, p1)
    area = _cross(v2, v3)
    scale = max(1.0, dist(p1, p2), dist(p1, p3))
    if abs(area) <= tol * scale * scale:
        raise ValueError("collinear probes")
    b2 = (d1 * d1 - d2 * d2 + _dot(v2, v2)) / 2.0
    b3 = (d1 * d1 - d3 * d3 + _dot(v3, v3)) / 2.0
    x = (b2 * v3[1] - b3 * v2[1]) / area
    y = (b3 * v2[0] - b2 * v3[0]) / area
    pt = _add(p1, Point(x, y))
    residual = max(
        abs(dist(pt, p) - d) for p, d in zip((p1, p2, p3), (d1, d2, d3))
    )
    if residual > max(tol, tol * (1.0 + max(d1, d2, d3))) * 100:
        raise ValueError(f"inconsistent distances (residual {residual:.3e})")
    return pt


@dataclass(frozen=True)
class Arc:
    """Counterclockwise angular slice [start, end] of a circle."""

    circle: Circle
    start: float
    end: float

    def __post_init__(self):
        if self.end < self.start:
            raise ValueError("arc must run counterclockwise")

    def point_at(self, theta: float) -> Point:
        return _add(
            self.circle.center,
            Point(
                self.circle.radius * math.cos(theta),
                self.circle.radius * math.sin(theta),
            ),
        )

    def sample(self, count: int) -> list[Point]:
        if count < 2:
            return [self.point_at((self.start + self.end) / 2)]
        step = (self.end - self.start) / (count - 1)
        return [self.point_at(self.start + i * step) for i in range(count)]


def dist_to_arc(p: Point, arc: Arc) -> float:
    rel = _sub(p, arc.circle.center)
    theta = math.atan2(rel[1], rel[0])
    width = arc.end - arc.start
    offset = (theta - arc.start) % (2 * math.pi)
    if offset <= width:
        return abs(math.hypot(*rel) - arc.circle.radius)
    return min(dist(p, arc.point_at(arc.start)), dist(p, arc.point_at(arc.end)))


@dataclass(frozen=True)
class RegionEstimate:
    """Tagged region descriptor used in game traces."""

    kind: str
    payload: tuple = ()

    @staticmethod
    def everything() -> "RegionEstimate":
        return RegionEstimate("everything")

    @staticmethod
    def point(p: Point) -> "RegionEstimate":
        return RegionEstimate("point", (p,))

    @staticmethod
    def circle(c: Circle) -> "RegionEstimate":
        if c.radius < 0:
            raise ValueError("negative radius")
        return RegionEstimate("circle", (c,))

    @staticmethod
    def two_points(p: Point, q: Point) -> "RegionEstimate":
        return RegionEstimate("two_points", (p, q))

    @staticmethod
    def annulus(center: Point, inner: float, outer: float) -> "RegionEstimate":
        if not 0 <= inner <= outer:
            raise ValueError("annulus radii must satisfy 0 <= inner <= outer")
        return RegionEstimate("annulus", (center, inner, outer))

    @staticmethod
    def disk(center: Point, radius: float) -> "RegionEstimate":
        if radius < 0:
            raise ValueError("negative radius")
        return RegionEstimate("disk", (center, radius))

    @staticmethod
    def arcs(arcs: tuple[Arc, ...], fattening: float = 0.0) -> "RegionEstimate":
        if not arcs:
            raise ValueError("arc set must be nonempty")
        return RegionEstimate("arcs", (tuple(arcs), fattening))

    def describe(self) -> str:
        if self.kind == "everything":
            return "whole plane"
        if self.kind == "point":
            p = self.payload[0]
            return f"point ({p[0]:.6g}, {p[1]:.6g})"
        if self.kind == "circle":
            c = self.payload[0]
            return (
                f"circle center ({c.center[0]:.6g}, {c.center[1]:.6g}) "
                f"radius {c.radius:.6g}"
            )
        if self.kind == "two_points":
            p, q = self.payload
            return (
                f"two candidates ({p[0]:.6g}, {p[1]:.6g}) / "
                f"({q[0]:.6g}, {q[1]:.6g})"
            )
        if self.kind == "annulus":
            c, inner, outer = self.payload
            return (
                f"annulus center ({c[0]:.6g}, {c[1]:.6g}) "
                f"radii [{inner:.6g}, {outer:.6g}]"
            )
        if self.kind == "disk":
            c, radius = self.payload
            return f"disk center ({c[0]:.6g}, {c[1]:.6g}) radius {radius:.6g}"
        arcs, fat = self.payload
        base = f"{len(arcs)} arc(s) of radius {arcs[0].circle.radius:.6g}"
        if fat:
            base += f" fattened by {fat:.6g}"
        return base


# ------------------------------------------------------------- robber models


class RobberModel:
    """Moving target; step() is called between rounds and moves at most 1."""

    @property
    def position(self) -> Point:
        raise NotImplementedError

    def step(self) -> None:
        raise NotImplementedError


class StaticRobber(RobberModel):
    def __init__(self, position):
        self._pos = Point(*position)

    @property
    def position(self) -> Point:
        return self._pos

    def step(self) -> None:
        pass


class WaypointRobber(RobberModel):
    def __init__(self, waypoints):
        pts = [Point(*p) for p in waypoints]
        if not pts:
            raise ValueError("need at least one waypoint")
        for a, b in zip(pts, pts[1:]):
            if dist(a, b) > 1.0 + GAME_TOL:
                raise ValueError(f"step from {a} to {b} exceeds unit length")
        self._pts = pts
        self._i = 0

    @property
    def position(self) -> Point:
        return self._pts[self._i]

    def step(self) -> None:
        if self._i + 1 < len(self._pts):
            self._i += 1


class RandomWalkRobber(RobberModel):
    def __init__(self, start, seed: int, step_scale: float = 0.95):
        if not 0 <= step_scale <= 1:
            raise ValueError("step_scale must be in [0, 1]")
        self._pos = Point(*start)
        self._rng = Random(seed)
        self._scale = step_scale

    @property
    def position(self) -> Point:
        return self._pos

    def step(self) -> None:
        ang = self._rng.uniform(0, 2 * math.pi)
        r = self._scale * self._rng.random()
        self._pos = _add(self._pos, Point(r * math.cos(ang), r * math.sin(ang)))


# --------------------------------------------------------------- two cops


ROUND1_PROBES = (Point(0.0, 0.0), Point(6.0, 0.0))


def separating_line(p1: Point, p2: Point, tol: float = GEOM_TOL):
    """(base point q, outward normal w): the line through q orthogonal to w
    keeps both unit disks around p1 and p2 on its negative side with
    margin >= 1."""
    m = _scale(_add(p1, p2), 0.5)
    r = dist(p1, p2) / 2.0 + 1.0
    w = Point(1.0, 0.0)
    diff = _sub(p1, p2)
    if abs(diff[1]) <= tol * max(1.0, abs(diff[0])):
        w = Point(0.0, 1.0)  # p1p2 horizontal: rotate the normal away from it
    q = _add(m, _scale(w, r + 1.0))
    return q, w


@dataclass(frozen=True)
class GameRound:
    probes: tuple[Point, ...]
    distances: tuple[float, ...]
    region: RegionEstimate

    def to_json_dict(self) -> dict:
        return {
            "probes": [list(p) for p in self.probes],
            "distances": list(self.distances),
            "region": self.region.describe(),
        }


@dataclass(frozen=True)
class TwoCopResult:
    located: Point
    rounds: int
    trace: tuple[GameRound, ...]

    def to_json_dict(self) -> dict:
        return {
            "located": list(self.located),
            "rounds": self.rounds,
            "trace": [r.to_json_dict() for r in self.trace],
        }


def two_cop_play(robber: RobberModel, tol: float = GAME_TOL) -> TwoCopResult:
    """Locate the robber exactly in at most two rounds with two probes each."""
    v1, v2 = ROUND1_PROBES
    r1 = robber.position
    d1, d2 = dist(r1, v1), dist(r1, v2)
    if d1 <= tol:
        return TwoCopResult(
            v1, 1, (GameRound((v1, v2), (d1, d2), RegionEstimate.point(v1)),)
        )
    if d2 <= tol:
        return TwoCopResult(
            v2, 1, (GameRound((v1, v2), (d1, d2), RegionEstimate.point(v2)),)
        )
    pts = circle_intersection(Circle(v1, d1), Circle(v2, d2))
    if len(pts) == 1:
        return TwoCopResult(
            pts[0],
            1,
            (GameRound((v1, v2), (d1, d2), RegionEstimate.point(pts[0])),),
        )
    p1, p2 = pts
    round1 = GameRound((v1, v2), (d1, d2), RegionEstimate.two_points(p1, p2))

    robber.step()
    r2 = robber.position
    q, w = separating_line(p1, p2)
    along = _perp(w)
    span = max(10.0, dist(p1, p2) + 2.0)
    for attempt in range(2):
        v3 = _sub(q, _scale(along, span))
        v4 = _add(q, _scale(along, span))
        d3, d4 = dist(r2, v3), dist(r2, v4)
        if d3 <= tol:
            located = v3
            break
        if d4 <= tol:
            located = v4
            break
        cands = circle_intersection(Circle(v3, d3), Circle(v4, d4))
        if len(cands) == 1:
            located = cands[0]
            break
        sides = [_dot(w, _sub(c, q)) for c in cands]
        picked = [c for c, s in zip(cands, sides) if s < -tol]
        if len(picked) == 1:
            located = picked[0]
            break
        if attempt == 0:
            span *= 8  # widen probe separation and retry once
        else:
            raise ValueError("could not resolve mirror ambiguity")
    round2 = GameRound(
        (v3, v4), (d3, d4), RegionEstimate.point(located)
    )
    return TwoCopResult(located, 2, (round1, round2))


# ---------------------------------------------------------- one-cop escape


def greedy_prober(round_index: int, revealed: Point) -> Point:
    """Probe the center of the disk the robber admitted to."""
    return revealed


def make_random_prober(seed: int) -> Callable[[int, Point], Point]:
    rng = Random(seed)

    def prober(round_index: int, revealed: Point) -> Point:
        return _add(
            revealed, Point(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
        )

    return prober


@dataclass(frozen=True)
class EscapeRound:
    revealed: Point
    probe: Point
    moved_to: Point
    distance: float
    witness: Point
    separation: float

    def to_json_dict(self) -> dict:
        return {
            "revealed": list(self.revealed),
            "probe": list(self.probe),
            "moved_to": list(self.moved_to),
            "distance": self.distance,
            "witness": list(self.witness),
            "separation": self.separation,
        }


@dataclass(frozen=True)
class EscapeTrace:
    rounds: tuple[EscapeRound, ...]

    def to_json_dict(self) -> dict:
        return {"rounds": [r.to_json_dict() for r in self.rounds]}


def _escape_witness(new_pos: Point, probe: Point, prev: Point) -> Point:
    """Second point on the answer circle, strictly inside the unit disk."""
    if dist(probe, prev) <= GEOM_TOL:
        rel = _sub(new_pos, prev)
        return _add(prev, _perp(rel))
    axis = _unit(_sub(probe, prev))
    rel = _sub(new_pos, prev)
    a = _dot(rel, axis)
    b = _dot(rel, _perp(axis))
    mirrored = _add(_scale(axis, a), _scale(_perp(axis), -b))
    return _add(prev, mirrored)


def one_cop_escape(
    prober: Callable[[int, Point], Point],
    rounds: int,
    start=Point(0.0, 0.0),
    separation_min: float = 1e-6,
) -> EscapeTrace:
    """Adversarial robber that survives any single prober for `rounds` rounds.

    Each round the robber reveals its previous position, sees the probe,
    and steps 0.9 in a golden-angle direction, nudged so the witness (its
    reflection across the probe axis) stays separated; the probe distance
    then never determines the position.
    """
    if rounds < 1:
        raise ValueError("need at least one round")
    pos = Point(*start)
    log = []
    for i in range(rounds):
        revealed = pos
        probe = Point(*prober(i, revealed))
        if not all(math.isfinite(c) for c in probe):
            raise ValueError("probe must be finite")
        base = i * GOLDEN_ANGLE
        chosen = None
        for j in range(256):
            ang = base + 0.1 * j
            cand = _add(revealed, Point(0.9 * math.cos(ang), 0.9 * math.sin(ang)))
            if dist(cand, probe) <= max(GEOM_TOL, separation_min):
                continue
            witness = _escape_witness(cand, probe, revealed)
            separation = dist(witness, cand)
            if separation >= separation_min:
                chosen = (cand, witness, separation)
                break
        if chosen is None:
            raise AssertionError("no escape step found; geometry violated")
        pos, witness, separation = chosen
        d = dist(probe, pos)
        assert dist(pos, revealed) < 1.0 and dist(witness, revealed) < 1.0
        assert abs(dist(probe, witness) - d) <= 1e-7 * (1.0 + d)
        log.append(
            EscapeRound(
                revealed=revealed,
                probe=probe,
                moved_to=pos,
                distance=d,
                witness=witness,
                separation=separation,
            )
        )
    return EscapeTrace(rounds=tuple(log))


# ------------------------------------------------------- approximate one cop


@dataclass(frozen=True)
class ApproxParams:
    epsilon: float
    delta: float
    root: float  # positive root of 2d^2 + 2d - (2e + e^2) = 0, before halving


def derive_delta(epsilon: float) -> ApproxParams:
    """Slack budget: hypot(1 + delta, delta) <= 1 + epsilon with headroom.

    The root solves (1+d)^2 + d^2 = (1+e)^2 exactly; half of it is used so
    accumulated numerical error stays inside the guarantee.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    root = (-1.0 + math.sqrt(1.0 + 2.0 * (2.0 * epsilon + epsilon * epsilon))) / 2.0
    delta = root / 2.0
    assert math.hypot(1.0 + delta, delta) <= 1.0 + epsilon
    return ApproxParams(epsilon=epsilon, delta=delta, root=root)


def _far_probe_distance(chord_bound: float, diameter: float, delta: float) -> float:
    """Distance making answer arcs flatten to within delta of their chord."""
    base = max(
        chord_bound * chord_bound / (4.0 * delta),
        (1.0 + delta) ** 2 / delta,
        10.0 * diameter,
    )
    return base + diameter


@dataclass(frozen=True)
class ApproxResult:
    estimate: Point
    error_bound: float
    exact: bool
    rounds: tuple[GameRound, ...]
    max_arc_line_deviation: float
    sagitta_checks: tuple[float, ...]

    def to_json_dict(self) -> dict:
        return {
            "estimate": list(self.estimate),
            "error_bound": self.error_bound,
            "exact": self.exact,
            "trace": [r.to_json_dict() for r in self.rounds],
            "max_arc_line_deviation": self.max_arc_line_deviation,
            "sagitta_checks": list(self.sagitta_checks),
        }


def approx_one_cop(
    robber: RobberModel, epsilon: float, tol: float = GAME_TOL
) -> ApproxResult:
    """Estimate the robber's third-round position within 1 + epsilon.

    Round 1 pins it to a circle, round 2 (probed from far away on the
    annulus axis) to arcs within delta of a line l, round 3 (probed from
    far away on l) to one short arc whose chord crosses l at the
    estimate.  Arc-to-line deviations are asserted against delta.
    """
    params = derive_delta(epsilon)
    delta = params.delta

    c1 = Point(0.0, 0.0)
    r1 = robber.position
    d1 = dist(r1, c1)
    round1 = GameRound((c1,), (d1,), RegionEstimate.circle(Circle(c1, d1)))
    if d1 <= tol:
        return ApproxResult(c1, 0.0, True, (round1,), 0.0, ())

    inner, outer = max(0.0, d1 - 1.0), d1 + 1.0
    robber.step()
    r2 = robber.position

    diam2 = 2.0 * outer
    big_d = _far_probe_distance(diam2, diam2, delta)
    c2 = Point(big_d, 0.0)
    d2 = dist(r2, c2)
    if d2 <= tol:
        return ApproxResult(
            c2, 0.0, True, (round1, GameRound((c2,), (d2,), RegionEstimate.point(c2))), 0.0, ()
        )
    sagitta2 = diam2 * diam2 / (4.0 * big_d)
    assert sagitta2 <= delta

    theta0 = math.atan2(c1[1] - c2[1], c1[0] - c2[0])
    dd = dist(c1, c2)

    def half_angle(radius: float) -> float | None:
        arg = (d2 * d2 + dd * dd - radius * radius) / (2.0 * d2 * dd)
        if arg > 1.0:
            return None  # answer circle never reaches this radius around c1
        return math.acos(max(-1.0, min(1.0, arg)))

    phi_out = half_angle(outer)
    assert phi_out is not None, "robber circle must meet the annulus"
    phi_in = half_angle(inner) if inner > 0.0 else None
    circle2 = Circle(c2, d2)
    if phi_in is None:
        arcs2 = (Arc(circle2, theta0 - phi_out, theta0 + phi_out),)
    else:
        arcs2 = (
            Arc(circle2, theta0 - phi_out, theta0 - phi_in),
            Arc(circle2, theta0 + phi_in, theta0 + phi_out),
        )
    round2 = GameRound((c2,), (d2,), RegionEstimate.arcs(arcs2))

    # chord line l of the in-annulus portion of the answer circle
    qa = arcs2[0].point_at(theta0 - phi_out)
    qb = arcs2[-1].point_at(theta0 + phi_out)
    chord = dist(qa, qb)
    if chord <= tol:
        axis = _perp(_unit(_sub(c1, c2)))
        qb = _add(qa, axis)
        chord = 0.0
    base_pt = _scale(_add(qa, qb), 0.5)
    u_hat = _unit(_sub(qb, qa))

    deviations = [
        abs(_dot(_sub(p, base_pt), _perp(u_hat)))
        for arc in arcs2
        for p in arc.sample(65)
    ]
    max_dev = max(deviations)
    assert max_dev <= delta * (1.0 + 1e-6) + 1e-9

    robber.step()
    r3 = robber.position

    diam3 = chord + 2.0 + 2.0 * delta
    big_d3 = _far_probe_distance(diam3, diam3, delta)
    c3 = _add(base_pt, _scale(u_hat, big_d3))
    d3 = dist(r3, c3)
    if d3 <= tol:
        return ApproxResult(
            c3,
            0.0,
            True,
            (round1, round2, GameRound((c3,), (d3,), RegionEstimate.point(c3))),
            max_dev,
            (sagitta2,),
        )
    sagitta3 = diam3 * diam3 / (4.0 * big_d3)
    assert sagitta3 <= delta
    estimate = _sub(c3, _scale(u_hat, d3))

    # the surviving arc must be a single run close to the crossing point
    reach = chord / 2.0 + 1.0 + delta + 0.5
    window = math.asin(min(1.0, reach / d3)) + 0.02
    center_angle = math.atan2(base_pt[1] - c3[1], base_pt[0] - c3[0])
    samples = 1024
    member = []
    circle3 = Circle(c3, d3)
    for i in range(samples):
        theta = center_angle - window + (2 * window) * i / (samples - 1)
        p = Arc(circle3, theta, theta).point_at(theta)
        member.append(min(dist_to_arc(p, a) for a in arcs2) <= 1.0 + 1e-9)
    runs = []
    i = 0
    while i < samples:
        if member[i]:
            j = i
            while j + 1 < samples and member[j + 1]:
                j += 1
            runs.append((i, j))
            i = j + 1
        else:
            i += 1
    merged = []
    for run in runs:
        if merged and run[0] - merged[-1][1] <= 4:
            merged[-1] = (merged[-1][0], run[1])
        else:
            merged.append(run)
    if len(merged) > 1:
        raise RuntimeError("two candidate arcs survive round 3")

    arc_dev = 0.0
    for i in range(samples):
        if member[i]:
            theta = center_angle - window + (2 * window) * i / (samples - 1)
            p = Arc(circle3, theta, theta).point_at(theta)
            arc_dev = max(arc_dev, abs(_dot(_sub(p, estimate), u_hat)))
    assert arc_dev <= delta * (1.0 + 1e-6) + 1e-9

    error_bound = math.hypot(1.0 + delta, delta)
    round3 = GameRound(
        (c3,), (d3,), RegionEstimate.disk(estimate, error_bound)
    )
    assert error_bound <= 1.0 + epsilon
    return ApproxResult(
        estimate=estimate,
        error_bound=error_bound,
        exact=False,
        rounds=(round1, round2, round3),
        max_arc_line_deviation=max(max_dev, arc_dev),
        sagitta_checks=(sagitta2, sagitta3),
    )
