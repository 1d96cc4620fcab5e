"""Forward ruler-and-compass realization, orientation predicates, and
Cayley distance vectors.

Realizations live in the canonical frame: the first endpoint of the base
non-edge at the origin, the second on the positive x-axis.  The reflection
quotient is handled by canonical realization types (first nonzero sign is
positive); mirror realizations share one canonical type and identical
Cayley distance vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, EngineConfig
from .errors import AmbiguousZeroSign, MismatchedLinkage, Unrealizable
from .linkage import Pair, TDLinkage, pair


@dataclass(frozen=True)
class RealizationType:
    """Vector of local orientation signs, one per construction step,
    canonicalized so the first nonzero entry is +1."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (-1, 0, 1) for s in self.signs):
            raise ValueError("signs must be -1, 0, or +1")
        object.__setattr__(self, "signs", _canonical(self.signs))

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in self.signs)

    @staticmethod
    def parse(text: str) -> "RealizationType":
        table = {"+": 1, "-": -1, "0": 0, " ": 1}  # ' ' tolerates unescaped '+' in URLs
        try:
            return RealizationType(tuple(table[c] for c in text))
        except KeyError as exc:
            raise ValueError(f"bad sign character {exc.args[0]!r} in type {text!r}") from exc

    def flipped(self, step_index: int) -> "RealizationType":
        """Type with the sign of the given 1-based step negated (re-canonicalized)."""
        signs = list(self.signs)
        signs[step_index - 1] = -signs[step_index - 1]
        return RealizationType(tuple(signs))

    def with_sign(self, step_index: int, sign: int) -> "RealizationType":
        signs = list(self.signs)
        signs[step_index - 1] = sign
        return RealizationType(tuple(signs))


def _canonical(signs: tuple[int, ...]) -> tuple[int, ...]:
    for s in signs:
        if s > 0:
            return tuple(signs)
        if s < 0:
            return tuple(-x for x in signs)
    return tuple(signs)


def canonical_types(step_count: int):
    """All canonical full realization types (first sign +1), in binary order."""
    if step_count == 0:
        yield RealizationType(())
        return
    for mask in range(2 ** (step_count - 1)):
        signs = [1]
        for bit in range(step_count - 1):
            signs.append(1 if not (mask >> (step_count - 2 - bit)) & 1 else -1)
        yield RealizationType(tuple(signs))


@dataclass(frozen=True)
class Realization:
    """Point assignment for one Cayley configuration and realization type."""

    linkage: TDLinkage
    base_length: float
    rtype: RealizationType
    points: dict[str, tuple[float, float]]

    def length(self, nonedge: Pair) -> float:
        (ux, uy), (vx, vy) = self.points[nonedge[0]], self.points[nonedge[1]]
        return math.hypot(vx - ux, vy - uy)

    def cayley_vector(self) -> np.ndarray:
        """Complete Cayley distance vector; entry 0 equals base_length exactly."""
        vec = self.linkage.complete_cayley_vector
        if vec is None:
            raise MismatchedLinkage("linkage has no complete Cayley vector")
        return np.array([self.length(e) for e in vec])


def solve_batch(tdl: TDLinkage, lengths: np.ndarray, rtype: RealizationType, config: EngineConfig = DEFAULT_CONFIG):
    """Vectorized forward solve over an array of base lengths.

    Returns (positions, discriminants):
      positions     (n, |V|, 2), NaN from the first failing step onward
      discriminants (n, m), NaN where the step's prefix already failed

    A step fails where its discriminant is below -tol_geom * scale^2;
    slightly negative discriminants clamp to zero (tangential placement).
    """
    L = np.asarray(lengths, dtype=float)
    squeeze = L.ndim == 0
    L = np.atleast_1d(L)
    index = tdl.vertex_index()
    n, nv, m = L.shape[0], len(tdl.vertices), len(tdl.steps)

    pos = np.full((n, nv, 2), np.nan)
    disc = np.full((n, m), np.nan)
    v1, v2 = tdl.base_nonedge
    pos[:, index[v1], :] = 0.0
    pos[:, index[v2], 0] = L
    pos[:, index[v2], 1] = 0.0

    scale = tdl.scale
    tol = config.tol_geom * scale * scale
    # a zero sign asserts collinearity, so its step tolerates the endpoint
    # location error instead of the strict geometric clamp
    tol_zero = config.tol_link * scale * scale

    for k, step in enumerate(tdl.steps):
        iu, iw, iv = index[step.anchor1], index[step.anchor2], index[step.new_vertex]
        pu = pos[:, iu, :]
        pw = pos[:, iw, :]
        delta = pw - pu
        d2 = np.einsum("ij,ij->i", delta, delta)
        with np.errstate(invalid="ignore", divide="ignore"):
            d = np.sqrt(d2)
            x = (d2 + step.len1**2 - step.len2**2) / (2.0 * d)
            h2 = step.len1**2 - x * x
            disc[:, k] = h2
            ok = h2 >= (-tol_zero if rtype.signs[k] == 0 else -tol)
            h = np.sqrt(np.where(ok, np.maximum(h2, 0.0), np.nan))
            ex = delta / d[:, None]
        sign = rtype.signs[k]
        py = np.stack((-ex[:, 1], ex[:, 0]), axis=1)
        placed = pu + x[:, None] * ex + sign * h[:, None] * py
        degenerate = d2 <= (1e-12 * scale) ** 2
        placed[degenerate] = np.nan
        pos[:, iv, :] = placed

    if squeeze:
        return pos[0], disc[0]
    return pos, disc


def realize(
    tdl: TDLinkage,
    base_length: float,
    rtype: RealizationType,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Realization:
    """Place every vertex for the given base length and realization type.

    Raises Unrealizable at the first step whose circles do not intersect,
    and AmbiguousZeroSign when a zero sign is requested away from the
    collinear configuration.
    """
    if len(rtype) != len(tdl.steps):
        raise MismatchedLinkage(
            f"type has {len(rtype)} signs but the linkage has {len(tdl.steps)} steps"
        )
    if not (base_length > 0.0) or not math.isfinite(base_length):
        raise Unrealizable(0, "base length must be positive")

    pos, disc = solve_batch(tdl, np.float64(base_length), rtype, config)
    scale = tdl.scale
    tol = config.tol_geom * scale * scale
    # endpoints are only located to the link tolerance, so a zero sign is
    # accepted whenever the discriminant vanishes at that resolution
    tol_zero = config.tol_link * scale * scale
    for k, step in enumerate(tdl.steps):
        h2 = disc[k]
        fail_below = -tol_zero if rtype.signs[k] == 0 else -tol
        if not np.isfinite(h2) or h2 < fail_below:
            raise Unrealizable(step.index)
        if rtype.signs[k] == 0 and h2 > tol_zero:
            raise AmbiguousZeroSign(step.index)

    points = {v: (float(pos[i, 0]), float(pos[i, 1])) for v, i in tdl.vertex_index().items()}
    return Realization(linkage=tdl, base_length=float(base_length), rtype=rtype, points=points)


def realizable_at(
    tdl: TDLinkage,
    base_length: float,
    rtype: RealizationType,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """True iff realize succeeds, with zero signs relaxed to either side."""
    if not (base_length > 0.0):
        return False
    zero_steps = [k + 1 for k, s in enumerate(rtype.signs) if s == 0]
    candidates = [rtype]
    for k in zero_steps:
        candidates = [t.with_sign(k, s) for t in candidates for s in (1, -1)]
    for t in candidates:
        _, disc = solve_batch(tdl, np.float64(base_length), t, config)
        tol = config.tol_geom * tdl.scale**2
        if np.all(np.isfinite(disc)) and np.all(disc >= -tol):
            return True
    return False


def orientation_of(points: dict, v: str, u: str, w: str, tol_rel: float = DEFAULT_CONFIG.tol_collinear) -> int:
    """Orientation sign of v relative to the directed line u -> w.

    +1 when (u, w, v) is counterclockwise, 0 when collinear within the
    relative tolerance (area against squared local scale).
    """
    (vx, vy), (ux, uy), (wx, wy) = points[v], points[u], points[w]
    cross = (wx - ux) * (vy - uy) - (wy - uy) * (vx - ux)
    scale2 = max(
        (wx - ux) ** 2 + (wy - uy) ** 2,
        (vx - ux) ** 2 + (vy - uy) ** 2,
        (vx - wx) ** 2 + (vy - wy) ** 2,
    )
    if abs(cross) <= tol_rel * scale2:
        return 0
    return 1 if cross > 0 else -1


def observed_type(r: Realization, tol_rel: float = DEFAULT_CONFIG.tol_collinear) -> RealizationType:
    """Canonical type read off the realized points."""
    signs = tuple(
        orientation_of(r.points, s.new_vertex, s.anchor1, s.anchor2, tol_rel)
        for s in r.linkage.steps
    )
    return RealizationType(signs)


def cayley_distance(r1: Realization, r2: Realization) -> float:
    """Euclidean distance between complete Cayley distance vectors."""
    if r1.linkage.edges != r2.linkage.edges or pair(*r1.linkage.base_nonedge) != pair(
        *r2.linkage.base_nonedge
    ):
        raise MismatchedLinkage("realizations belong to different linkages")
    return float(np.linalg.norm(r1.cayley_vector() - r2.cayley_vector()))


def restore_decorations(r: Realization) -> dict[str, tuple[float, float]]:
    """Full point map including cluster interior vertices.

    Each interior vertex is carried by the rigid (rotation + translation)
    map taking the cluster's local anchors onto their realized positions;
    chirality follows the local coordinates.
    """
    points = dict(r.points)
    for deco in r.linkage.decorations:
        a1, a2 = deco.anchors
        la = deco.local[a1]
        lb = deco.local[a2]
        wa = points[a1]
        wb = points[a2]
        ldx, ldy = lb[0] - la[0], lb[1] - la[1]
        wdx, wdy = wb[0] - wa[0], wb[1] - wa[1]
        norm2 = ldx * ldx + ldy * ldy
        # rotation taking the local anchor direction onto the realized one
        cos_t = (ldx * wdx + ldy * wdy) / norm2
        sin_t = (ldx * wdy - ldy * wdx) / norm2
        for vtx, (lx, ly) in deco.local.items():
            if vtx in (a1, a2):
                continue
            rx, ry = lx - la[0], ly - la[1]
            points[vtx] = (
                wa[0] + cos_t * rx - sin_t * ry,
                wa[1] + sin_t * rx + cos_t * ry,
            )
    return points
