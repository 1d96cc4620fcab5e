"""Cayley configuration spaces: candidate endpoints, oriented interval
construction, the non-oriented union, and interval linking.

Interval endpoints are the base lengths of extreme (collinear) step
configurations.  They are found numerically: a sign-pattern scan of all
step discriminants over (0, sum of bar lengths] refined by interval
subdivision down to the endpoint tolerance.  A missed sign change between
grid points is possible in principle; the grid is refined wherever the
realizable prefix changes, which bounds the residual risk to discriminant
double roots at sub-grid scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_CONFIG, EngineConfig
from .errors import NotLowComplexity, TooManySteps
from .linkage import TDLinkage
from .realization import RealizationType, canonical_types, realizable_at, solve_batch

Side = str  # "lower" | "upper"


@dataclass(eq=False)
class OrientedInterval:
    """Closed interval of realizable base lengths for one realization type.

    lower == upper denotes an isolated point.  Links are installed by
    link_intervals and never change afterwards: each linked endpoint
    records the neighbor interval reachable through it in a continuous
    motion and the side of the neighbor the motion enters.
    """

    lower: float
    upper: float
    rtype: RealizationType
    flip_lower: int | None = None  # 1-based step collinear at the lower endpoint
    flip_upper: int | None = None
    next_lower: tuple["OrientedInterval", Side] | None = None
    next_upper: tuple["OrientedInterval", Side] | None = None

    @property
    def isolated(self) -> bool:
        return self.lower == self.upper

    def endpoint(self, side: Side) -> float:
        return self.lower if side == "lower" else self.upper

    def link(self, side: Side) -> tuple["OrientedInterval", Side] | None:
        return self.next_lower if side == "lower" else self.next_upper

    def flip_step(self, side: Side) -> int | None:
        return self.flip_lower if side == "lower" else self.flip_upper

    def set_link(self, side: Side, target: tuple["OrientedInterval", Side]):
        if side == "lower":
            self.next_lower = target
        else:
            self.next_upper = target

    def __repr__(self):
        return f"OrientedInterval([{self.lower:.6g}, {self.upper:.6g}], {self.rtype})"


@dataclass(frozen=True)
class OrientedCCS:
    rtype: RealizationType
    intervals: tuple[OrientedInterval, ...]


@dataclass(frozen=True)
class CayleyConfigSpace:
    oriented: tuple[OrientedCCS, ...]  # nonempty spaces only, in type order
    non_oriented: tuple[tuple[float, float], ...]
    warnings: tuple[str, ...] = ()

    def space_for(self, rtype: RealizationType) -> OrientedCCS | None:
        for occs in self.oriented:
            if occs.rtype == rtype:
                return occs
        return None

    def all_intervals(self):
        for occs in self.oriented:
            yield from occs.intervals


def _sign_pattern(disc_row: np.ndarray, tol: float) -> tuple[str, ...]:
    """Per-step pattern: '+' realizable (disc >= -tol), '-' failed, 'n' undefined.

    Discriminants are only meaningful where all earlier steps are
    realizable, so everything after the first failure masks to 'n'.
    """
    out = []
    failed = False
    for value in disc_row:
        if failed or not np.isfinite(value):
            out.append("n")
        elif value < -tol:
            out.append("-")
            failed = True
        else:
            out.append("+")
    return tuple(out)


def candidate_endpoints(
    tdl: TDLinkage,
    rtype: RealizationType,
    config: EngineConfig = DEFAULT_CONFIG,
    _collect=None,
) -> list[float]:
    """Sorted base lengths at which some step is collinear under this type,
    restricted to where the preceding steps are realizable.

    Scan of (0, sum of bar lengths] on an initial uniform grid, breadth-first
    subdivision of every cell whose discriminant sign pattern changes, down
    to the bisection tolerance; nearby results merge within the endpoint
    merge tolerance.  Simultaneous collinearity of two steps is reported
    through the optional _collect list of warnings.
    """
    if not tdl.td_low:
        raise NotLowComplexity(tdl.low_diagnostic or "linkage failed the low-complexity check")
    scale = tdl.scale
    total = scale
    tol_disc = config.tol_geom * scale * scale
    tol_bisect = config.tol_endpoint_bisect * scale
    n = max(config.grid_points, 8)

    grid = np.linspace(total / n, total, n)
    _, disc = solve_batch(tdl, grid, rtype, config)
    patterns = [_sign_pattern(row, tol_disc) for row in disc]

    cells = [
        (grid[i], patterns[i], grid[i + 1], patterns[i + 1])
        for i in range(n - 1)
        if patterns[i] != patterns[i + 1]
    ]
    raw: list[tuple[float, int]] = []  # (location, 1-based step)
    while cells:
        mids = np.array([0.5 * (c[0] + c[2]) for c in cells])
        _, disc_m = solve_batch(tdl, mids, rtype, config)
        next_cells = []
        for (l0, p0, l1, p1), mid, row in zip(cells, mids, disc_m):
            pm = _sign_pattern(row, tol_disc)
            for (a, pa, b, pb) in ((l0, p0, mid, pm), (mid, pm, l1, p1)):
                if pa == pb:
                    continue
                if b - a <= tol_bisect:
                    changed = [k for k in range(len(pa)) if pa[k] != pb[k]]
                    crossing = [k for k in changed if "n" not in (pa[k], pb[k])]
                    steps = crossing or changed
                    raw.append((0.5 * (a + b), steps[0] + 1))
                    if len(crossing) > 1 and _collect is not None:
                        _collect.append(
                            f"type {rtype}: steps {[k + 1 for k in crossing]} "
                            f"simultaneously collinear near {0.5 * (a + b):.9g}"
                        )
                else:
                    next_cells.append((a, pa, b, pb))
        cells = next_cells

    # the closed realizable set can end exactly at the domain boundary
    if realizable_at(tdl, total, rtype, config):
        raw.append((total, 0))

    raw.sort()
    merged: list[float] = []
    merge_tol = config.tol_endpoint_merge * scale
    group: list[tuple[float, int]] = []
    for loc, step in raw + [(float("inf"), -1)]:
        if group and loc - group[0][0] > merge_tol:
            merged.append(float(sum(g[0] for g in group) / len(group)))
            group = []
        group.append((loc, step))

    if merged and _collect is not None:
        # simultaneous collinearity: two steps' discriminants vanish at one
        # candidate (a masked second root never shows in the sign patterns)
        _, disc_c = solve_batch(tdl, np.array(merged), rtype, config)
        tol_near = config.tol_link * scale * scale
        for loc, row in zip(merged, disc_c):
            near = [
                k + 1
                for k, value in enumerate(row)
                if np.isfinite(value) and abs(value) <= tol_near
            ]
            if len(near) > 1:
                _collect.append(
                    f"type {rtype}: steps {near} simultaneously collinear "
                    f"at {loc:.9g}"
                )
    return merged


def build_oriented_ccs(
    tdl: TDLinkage,
    rtype: RealizationType,
    config: EngineConfig = DEFAULT_CONFIG,
    _collect=None,
) -> OrientedCCS:
    """Classify candidate endpoints by midpoint realizability.

    For each candidate with neighbors prev/next (domain boundaries as
    sentinels): both midpoints unrealizable means an isolated point
    (kept only if the candidate itself is realizable), realizable-before
    closes an interval, realizable-after opens one, both means interior.
    """
    cands = candidate_endpoints(tdl, rtype, config, _collect=_collect)
    total = tdl.scale
    intervals: list[OrientedInterval] = []
    start: float | None = None
    for i, cur in enumerate(cands):
        prev_mid = 0.5 * ((cands[i - 1] if i > 0 else 0.0) + cur)
        before = realizable_at(tdl, prev_mid, rtype, config)
        if i + 1 < len(cands):
            after = realizable_at(tdl, 0.5 * (cur + cands[i + 1]), rtype, config)
        elif cur < total - config.tol_endpoint_merge * total:
            after = realizable_at(tdl, 0.5 * (cur + total), rtype, config)
        else:
            after = False
        if not before and not after:
            if realizable_at(tdl, cur, rtype, config):
                intervals.append(OrientedInterval(cur, cur, rtype))
            start = None
        elif before and not after:
            lo = start if start is not None else 0.0
            if start is None and _collect is not None:
                _collect.append(
                    f"type {rtype}: interval closing at {cur:.9g} never opened "
                    "(realizable down to the domain boundary)"
                )
            intervals.append(OrientedInterval(lo, cur, rtype))
            start = None
        elif not before and after:
            start = cur
    if start is not None:
        # defensive: realizable region that never closed before the domain end
        intervals.append(OrientedInterval(start, total, rtype))
        if _collect is not None:
            _collect.append(f"type {rtype}: interval opened at {start:.9g} never closed")
    return OrientedCCS(rtype=rtype, intervals=tuple(intervals))


def build_ccs(tdl: TDLinkage, config: EngineConfig = DEFAULT_CONFIG) -> CayleyConfigSpace:
    """Oriented spaces for every canonical type plus their merged union."""
    if not tdl.td_low:
        raise NotLowComplexity(tdl.low_diagnostic or "linkage failed the low-complexity check")
    m = len(tdl.steps)
    count = 2 ** max(m - 1, 0)
    cap = config.type_cap()
    if count > cap:
        raise TooManySteps(f"{count} canonical types exceed the cap of {cap}")

    warnings: list[str] = []
    spaces = []
    for rtype in canonical_types(m):
        occs = build_oriented_ccs(tdl, rtype, config, _collect=warnings)
        if occs.intervals:
            spaces.append(occs)

    pieces = sorted((iv.lower, iv.upper) for occs in spaces for iv in occs.intervals)
    merge_tol = config.tol_endpoint_merge * tdl.scale
    non_oriented: list[tuple[float, float]] = []
    for lo, hi in pieces:
        if non_oriented and lo <= non_oriented[-1][1] + merge_tol:
            last_lo, last_hi = non_oriented[-1]
            non_oriented[-1] = (last_lo, max(last_hi, hi))
        else:
            non_oriented.append((lo, hi))

    return CayleyConfigSpace(
        oriented=tuple(spaces),
        non_oriented=tuple(non_oriented),
        warnings=tuple(dict.fromkeys(warnings)),
    )


def _collinear_step_at(
    tdl: TDLinkage,
    rtype: RealizationType,
    length: float,
    config: EngineConfig,
) -> tuple[int, list[int]]:
    """1-based step with the smallest |discriminant| at this base length,
    plus every step within the link tolerance (ambiguity candidates)."""
    _, disc = solve_batch(tdl, np.float64(length), rtype, config)
    mags = np.abs(np.where(np.isfinite(disc), disc, np.inf))
    tol = config.tol_link * tdl.scale**2
    near = [k + 1 for k in range(len(mags)) if mags[k] <= tol]
    if near:
        return near[0], near
    return int(np.argmin(mags)) + 1, []


def link_intervals(
    tdl: TDLinkage, ccs: CayleyConfigSpace, config: EngineConfig = DEFAULT_CONFIG
) -> CayleyConfigSpace:
    """Install mutual endpoint links between oriented intervals.

    At each endpoint the collinear (flip) step determines the neighbor's
    type: the same type with that one sign negated, canonicalized.  The
    neighbor is the interval of that type sharing the endpoint value.
    Isolated points only pair with isolated points; a regular interval
    whose only match is isolated falls back to a reflecting self-link,
    with a warning (non-generic input).
    """
    warnings = list(ccs.warnings)
    by_type: dict[RealizationType, OrientedCCS] = {occs.rtype: occs for occs in ccs.oriented}
    merge_tol = config.tol_endpoint_merge * tdl.scale

    def find_neighbor(iv: OrientedInterval, side: Side):
        e = iv.endpoint(side)
        flip, near = _collinear_step_at(tdl, iv.rtype, e, config)
        if len(near) > 1:
            warnings.append(
                f"link ambiguity at {e:.9g} for type {iv.rtype}: steps {near} all "
                "collinear; linking with the smallest step index"
            )
        target_type = iv.rtype.flipped(flip)
        occs = by_type.get(target_type)
        best = None
        if occs is not None:
            for cand in occs.intervals:
                if cand.isolated != iv.isolated:
                    continue
                for cand_side in ("lower", "upper"):
                    if abs(cand.endpoint(cand_side) - e) <= merge_tol:
                        if cand is iv and cand_side == side and not (
                            target_type == iv.rtype
                        ):
                            continue
                        if best is None:
                            best = (cand, cand_side)
        return flip, best

    for occs in ccs.oriented:
        for iv in occs.intervals:
            sides = ("lower",) if iv.isolated else ("lower", "upper")
            for side in sides:
                if iv.link(side) is not None:
                    continue
                flip, neighbor = find_neighbor(iv, side)
                if side == "lower":
                    iv.flip_lower = flip
                else:
                    iv.flip_upper = flip
                if iv.isolated:
                    # pair isolated points side-to-same-side, or leave unlinked
                    if neighbor is not None and neighbor[0].isolated:
                        other = neighbor[0]
                        iv.next_lower = (other, "lower")
                        iv.next_upper = (other, "upper")
                        iv.flip_upper = flip
                        other.next_lower = (iv, "lower")
                        other.next_upper = (iv, "upper")
                        other.flip_lower = other.flip_upper = flip
                    continue
                if neighbor is None:
                    warnings.append(
                        f"endpoint {iv.endpoint(side):.9g} of type {iv.rtype} has no "
                        "neighbor interval; reflecting in place (non-generic input)"
                    )
                    iv.set_link(side, (iv, side))
                    continue
                other, other_side = neighbor
                iv.set_link(side, (other, other_side))
                if other.link(other_side) is None:
                    other.set_link(other_side, (iv, side))
                    if other_side == "lower":
                        other.flip_lower = flip
                    else:
                        other.flip_upper = flip

    return CayleyConfigSpace(
        oriented=ccs.oriented,
        non_oriented=ccs.non_oriented,
        warnings=tuple(dict.fromkeys(warnings)),
    )
