"""Continuous motion: connected components, motion paths, sampling,
canonical Cayley curve projections, traced vertex curves, and the nearest
realization pair between components.

A continuous motion is a walk over oriented intervals through their linked
endpoints.  Components are closed walks; paths are open walks clipped at
the two query realizations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cayley_space import CayleyConfigSpace, OrientedInterval, Side
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import (
    MismatchedLinkage,
    NonedgeNotInVector,
    NotConnected,
    NotRealizable,
    UnknownVertex,
    UnlinkedEndpoint,
)
from .linkage import Pair, TDLinkage, pair
from .realization import Realization, RealizationType, cayley_distance, realize, restore_decorations


def _other(side: Side) -> Side:
    return "upper" if side == "lower" else "lower"


@dataclass(frozen=True)
class MotionLeg:
    """One sweep through an oriented interval.

    enter_at/exit_at name the interval sides in traversal order; clipped
    legs start or end strictly inside the interval at clip_start/clip_end.
    """

    interval: OrientedInterval
    enter_at: Side
    exit_at: Side
    clip_start: float | None = None
    clip_end: float | None = None

    @property
    def start(self) -> float:
        return self.clip_start if self.clip_start is not None else self.interval.endpoint(self.enter_at)

    @property
    def end(self) -> float:
        return self.clip_end if self.clip_end is not None else self.interval.endpoint(self.exit_at)

    @property
    def arc_length(self) -> float:
        return abs(self.end - self.start)


@dataclass(frozen=True)
class ContinuousMotion:
    linkage: TDLinkage
    legs: tuple[MotionLeg, ...]
    kind: str  # "component" | "path"

    @property
    def arc_length(self) -> float:
        return sum(leg.arc_length for leg in self.legs)

    def intervals(self) -> list[OrientedInterval]:
        return [leg.interval for leg in self.legs]


@dataclass(frozen=True)
class Curve3D:
    points: tuple[tuple[float, float, float], ...]
    type_labels: tuple[str, ...]
    sample_params: tuple[tuple[int, float], ...]  # (leg index, base length)


class UniformSampler:
    """Evenly spaced base lengths per leg, endpoints included."""

    def __init__(self, per_leg: int = DEFAULT_CONFIG.samples_per_leg):
        self.per_leg = max(int(per_leg), 2)

    def params(self, leg: MotionLeg) -> list[float]:
        if leg.start == leg.end:
            return [leg.start]
        return list(np.linspace(leg.start, leg.end, self.per_leg))


class AdaptiveSampler(UniformSampler):
    """Uniform base plus midpoint refinement where the Cayley curve bends.

    Subdivides spans whose chord turns by more than max_turn radians,
    for up to max_depth rounds.
    """

    def __init__(self, per_leg: int = DEFAULT_CONFIG.samples_per_leg, max_turn: float = 0.2, max_depth: int = 4):
        super().__init__(per_leg)
        self.max_turn = max_turn
        self.max_depth = max_depth

    def refine_once(self, params: list[float], vectors: list[np.ndarray]) -> list[float]:
        added = []
        for i in range(1, len(params) - 1):
            u = vectors[i] - vectors[i - 1]
            v = vectors[i + 1] - vectors[i]
            nu, nv = np.linalg.norm(u), np.linalg.norm(v)
            if nu == 0 or nv == 0:
                continue
            turn = np.arccos(np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0))
            if turn > self.max_turn:
                added.append(0.5 * (params[i - 1] + params[i]))
                added.append(0.5 * (params[i] + params[i + 1]))
        if not added:
            return list(params)
        reverse = bool(params[0] > params[-1])
        return sorted(set(params) | set(added), reverse=reverse)


def locate_interval(
    ccs: CayleyConfigSpace,
    base_length: float,
    rtype: RealizationType,
    tol: float,
) -> OrientedInterval:
    """Oriented interval containing the Cayley configuration, honoring
    zero signs as wildcards (collinear steps match either branch)."""
    wildcard = [i for i, s in enumerate(rtype.signs) if s == 0]
    for occs in ccs.oriented:
        if len(occs.rtype) != len(rtype):
            continue
        agree = all(
            occs.rtype.signs[i] == rtype.signs[i]
            for i in range(len(rtype))
            if i not in wildcard
        )
        mirror = all(
            occs.rtype.signs[i] == -rtype.signs[i]
            for i in range(len(rtype))
            if i not in wildcard
        )
        if not (agree or mirror):
            continue
        for iv in occs.intervals:
            if iv.lower - tol <= base_length <= iv.upper + tol:
                return iv
    raise NotRealizable(
        f"no oriented interval of type {rtype} contains base length {base_length}"
    )


def find_component(
    tdl: TDLinkage,
    ccs: CayleyConfigSpace,
    r: Realization,
    config: EngineConfig = DEFAULT_CONFIG,
) -> ContinuousMotion:
    """Connected component containing the realization."""
    start = locate_interval(ccs, r.base_length, r.rtype, config.tol_link * tdl.scale)
    return _component_from(tdl, start)


def _component_from(tdl: TDLinkage, start: OrientedInterval) -> ContinuousMotion:
    legs = [MotionLeg(start, enter_at="upper", exit_at="lower")]
    cur, exit_side = start, "lower"
    guard = 0
    while True:
        link = cur.link(exit_side)
        if link is None:
            if cur.isolated and len(legs) == 1:
                return ContinuousMotion(tdl, (legs[0],), "component")
            raise UnlinkedEndpoint(
                f"interval {cur} has no neighbor through its {exit_side} endpoint"
            )
        nxt, entry = link
        if nxt is start:
            return ContinuousMotion(tdl, tuple(legs), "component")
        legs.append(MotionLeg(nxt, enter_at=entry, exit_at=_other(entry)))
        cur, exit_side = nxt, _other(entry)
        guard += 1
        if guard > 10000:
            raise UnlinkedEndpoint("component traversal did not close")


def find_all_components(
    tdl: TDLinkage, ccs: CayleyConfigSpace, config: EngineConfig = DEFAULT_CONFIG
) -> list[ContinuousMotion]:
    """Every oriented interval assigned to exactly one component,
    components ordered by smallest lower endpoint, then type."""
    order = sorted(
        ccs.all_intervals(), key=lambda iv: (iv.lower, str(iv.rtype))
    )
    seen: set[int] = set()
    components = []
    for iv in order:
        if id(iv) in seen:
            continue
        comp = _component_from(tdl, iv)
        for leg in comp.legs:
            seen.add(id(leg.interval))
        components.append(comp)
    components.sort(
        key=lambda c: (min(l.interval.lower for l in c.legs), str(c.legs[0].interval.rtype))
    )
    return components


def _walk_path(
    tdl: TDLinkage,
    start: OrientedInterval,
    from_length: float,
    target: OrientedInterval,
    to_length: float,
    heading: Side,
    tol: float,
) -> ContinuousMotion | None:
    """Directed walk from (start, from_length) until the target Cayley
    configuration is swept, the walk passes its origin again, or the
    component closes."""
    legs: list[MotionLeg] = []
    cur, pos = start, from_length
    enter_side = _other(heading)
    guard = 0
    while True:
        exit_val = cur.endpoint(heading)

        def ahead(value: float) -> bool:
            if heading == "upper":
                return pos - tol <= value <= exit_val + tol
            return exit_val - tol <= value <= pos + tol

        hit_target = cur is target and ahead(to_length)
        hit_origin = legs and cur is start and ahead(from_length)
        if hit_target and hit_origin:
            # whichever comes first along the heading wins
            hit_target = abs(to_length - pos) <= abs(from_length - pos)
            hit_origin = not hit_target
        if hit_target:
            legs.append(
                MotionLeg(
                    cur,
                    enter_at=enter_side,
                    exit_at=heading,
                    clip_start=pos if not legs else None,
                    clip_end=to_length,
                )
            )
            return ContinuousMotion(tdl, tuple(legs), "path")
        if hit_origin:
            return None
        legs.append(
            MotionLeg(
                cur,
                enter_at=enter_side,
                exit_at=heading,
                clip_start=pos if not legs else None,
            )
        )
        link = cur.link(heading)
        if link is None:
            return None
        nxt, entry = link
        cur, pos, enter_side = nxt, nxt.endpoint(entry), entry
        heading = _other(entry)
        guard += 1
        if guard > 10000:
            raise UnlinkedEndpoint("path walk did not terminate")


def find_paths(
    tdl: TDLinkage,
    ccs: CayleyConfigSpace,
    r1: Realization,
    r2: Realization,
    config: EngineConfig = DEFAULT_CONFIG,
) -> list[ContinuousMotion]:
    """Zero, one, or two continuous motion paths from r1 to r2, shortest
    first (leg count, then Cayley-parameter arc length)."""
    tol = config.tol_link * tdl.scale
    i1 = locate_interval(ccs, r1.base_length, r1.rtype, tol)
    i2 = locate_interval(ccs, r2.base_length, r2.rtype, tol)
    if i1 is i2 and abs(r1.base_length - r2.base_length) <= tol and r1.rtype == r2.rtype:
        leg = MotionLeg(
            i1, enter_at="lower", exit_at="upper",
            clip_start=r1.base_length, clip_end=r2.base_length,
        )
        return [ContinuousMotion(tdl, (leg,), "path")]
    paths = []
    for heading in ("lower", "upper"):
        found = _walk_path(tdl, i1, r1.base_length, i2, r2.base_length, heading, tol)
        if found is not None:
            paths.append(found)
    paths.sort(key=lambda p: (len(p.legs), p.arc_length))
    return paths


def find_path(
    tdl: TDLinkage,
    ccs: CayleyConfigSpace,
    r1: Realization,
    r2: Realization,
    config: EngineConfig = DEFAULT_CONFIG,
) -> list[ContinuousMotion]:
    """Like find_paths, but raises NotConnected (carrying the two
    components and their nearest sampled realization pair) when empty."""
    paths = find_paths(tdl, ccs, r1, r2, config)
    if paths:
        return paths
    c1 = find_component(tdl, ccs, r1, config)
    c2 = find_component(tdl, ccs, r2, config)
    nearest = nearest_realizations(tdl, c1, c2, config=config)
    raise NotConnected(c1, c2, nearest)


@dataclass(frozen=True)
class PairCase:
    same_oriented_interval: bool
    same_non_oriented_interval: bool
    same_type: bool
    same_component: bool
    path_count: int
    label: str


def classify_pair(
    tdl: TDLinkage,
    ccs: CayleyConfigSpace,
    r1: Realization,
    r2: Realization,
    config: EngineConfig = DEFAULT_CONFIG,
) -> PairCase:
    """Case analysis of the pair per the motion-path taxonomy."""
    tol = config.tol_link * tdl.scale
    i1 = locate_interval(ccs, r1.base_length, r1.rtype, tol)
    i2 = locate_interval(ccs, r2.base_length, r2.rtype, tol)

    def non_oriented_index(length: float) -> int | None:
        for idx, (lo, hi) in enumerate(ccs.non_oriented):
            if lo - tol <= length <= hi + tol:
                return idx
        return None

    same_oriented = i1 is i2
    same_non = non_oriented_index(r1.base_length) == non_oriented_index(r2.base_length)
    same_type = i1.rtype == i2.rtype
    comps = find_all_components(tdl, ccs, config)

    def comp_of(iv: OrientedInterval) -> int:
        for idx, comp in enumerate(comps):
            if any(leg.interval is iv for leg in comp.legs):
                return idx
        raise UnlinkedEndpoint("interval missing from component partition")

    same_component = comp_of(i1) == comp_of(i2)
    count = len(find_paths(tdl, ccs, r1, r2, config))
    if same_oriented:
        label = "1"
    elif same_non:
        label = "2a" if count else "2b"
    else:
        label = "3a" if count else "3b"
    return PairCase(same_oriented, same_non, same_type, same_component, count, label)


@dataclass(frozen=True)
class SamplePoint:
    leg: int
    base_length: float
    realization: Realization


def _sample_points(
    tdl: TDLinkage,
    motion: ContinuousMotion,
    sampler: UniformSampler | None,
    config: EngineConfig,
) -> list[SamplePoint]:
    sampler = sampler or UniformSampler(config.samples_per_leg)
    out: list[SamplePoint] = []
    for leg_idx, leg in enumerate(motion.legs):
        params = sampler.params(leg)
        if isinstance(sampler, AdaptiveSampler) and len(params) > 2:
            for _ in range(sampler.max_depth):
                vectors = [_vector_at(tdl, leg, L, config) for L in params]
                refined = sampler.refine_once(params, vectors)
                if len(refined) == len(params):
                    break
                params = refined
        for j, L in enumerate(params):
            L = float(L)
            if leg_idx > 0 and j == 0 and out and L == out[-1].base_length:
                continue  # junction sample emitted by the previous leg
            out.append(SamplePoint(leg_idx, L, _realize_on_leg(tdl, leg, L, config)))
    if motion.kind == "component" and len(out) > 1:
        last, first = out[-1], out[0]
        if last.base_length == first.base_length and last.realization.points == first.realization.points:
            out.pop()
    return out


def _realize_on_leg(tdl: TDLinkage, leg: MotionLeg, L: float, config: EngineConfig) -> Realization:
    rtype = leg.interval.rtype
    if L == leg.interval.lower and leg.interval.flip_lower is not None:
        rtype = rtype.with_sign(leg.interval.flip_lower, 0)
    elif L == leg.interval.upper and leg.interval.flip_upper is not None:
        rtype = rtype.with_sign(leg.interval.flip_upper, 0)
    return realize(tdl, L, rtype, config)


def _vector_at(tdl: TDLinkage, leg: MotionLeg, L: float, config: EngineConfig) -> np.ndarray:
    return _realize_on_leg(tdl, leg, L, config).cayley_vector()


def sample_realizations(
    tdl: TDLinkage,
    motion: ContinuousMotion,
    sampler: UniformSampler | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> list[Realization]:
    """Realizations along the motion, junction duplicates removed."""
    return [sp.realization for sp in _sample_points(tdl, motion, sampler, config)]


def curve3d(
    tdl: TDLinkage,
    motion: ContinuousMotion,
    f1: Pair,
    f2: Pair,
    f3: Pair,
    sampler: UniformSampler | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Curve3D:
    """Canonical Cayley curve projected on three complete-vector non-edges."""
    vec = tdl.complete_cayley_vector or ()
    chosen = [pair(*f1), pair(*f2), pair(*f3)]
    if len(set(chosen)) != 3:
        raise NonedgeNotInVector("the three projection non-edges must be distinct")
    for f in chosen:
        if f not in vec:
            raise NonedgeNotInVector(f"{f} is not in the complete Cayley vector")
    points, labels, params = [], [], []
    for sp in _sample_points(tdl, motion, sampler, config):
        r = sp.realization
        points.append(tuple(r.length(f) for f in chosen))
        labels.append(str(r.rtype))
        params.append((sp.leg, sp.base_length))
    return Curve3D(tuple(points), tuple(labels), tuple(params))


def traced_curves(
    tdl: TDLinkage,
    motion: ContinuousMotion,
    vertices,
    sampler: UniformSampler | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> dict[str, list[tuple[float, float]]]:
    """Canonical-frame curve traced by each requested vertex, including
    cluster interior vertices."""
    passengers = set()
    for deco in tdl.decorations:
        passengers |= set(deco.local) - set(deco.anchors)
    known = set(tdl.vertices) | passengers
    requested = list(vertices)
    for v in requested:
        if v not in known:
            raise UnknownVertex(f"vertex {v} is not part of the linkage")
    curves: dict[str, list[tuple[float, float]]] = {v: [] for v in requested}
    for sp in _sample_points(tdl, motion, sampler, config):
        full = restore_decorations(sp.realization)
        for v in requested:
            curves[v].append(full[v])
    return curves


def nearest_realizations(
    tdl: TDLinkage,
    c1: ContinuousMotion,
    c2: ContinuousMotion,
    sampler: UniformSampler | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> tuple[Realization, Realization, float]:
    """Sampled minimum Cayley distance pair across two motions.

    Brute force over all sample pairs; ties resolve to the lexicographically
    first sample index pair.
    """
    s1 = sample_realizations(tdl, c1, sampler, config)
    s2 = sample_realizations(tdl, c2, sampler, config)
    if not s1 or not s2:
        raise MismatchedLinkage("cannot compare empty motions")
    v1 = np.array([r.cayley_vector() for r in s1])
    v2 = np.array([r.cayley_vector() for r in s2])
    diff = v1[:, None, :] - v2[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    flat = int(np.argmin(dist))
    i, j = divmod(flat, dist.shape[1])
    return s1[i], s2[j], float(dist[i, j])
