"""JSON and CSV wire formats.

Linkage file: {"vertices": [...], "bars": [{"u", "v", "length"}, ...],
optional "clusters": [{"coords": {vertex: [x, y]}, "anchors": [u, v]}],
optional "baseNonedge": [u, v]}.  All numbers are IEEE doubles.
"""

from __future__ import annotations

import io
import json

from .cayley_space import CayleyConfigSpace
from .errors import InvalidLinkage
from .linkage import Bar, Cluster, LinkageSpec, TDLinkage
from .motion import ContinuousMotion, Curve3D
from .realization import Realization


def linkage_from_dict(data) -> LinkageSpec:
    if not isinstance(data, dict):
        raise InvalidLinkage("linkage document must be a JSON object")
    try:
        vertices = tuple(str(v) for v in data["vertices"])
        bars = tuple(
            Bar(str(b["u"]), str(b["v"]), float(b["length"])) for b in data["bars"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidLinkage(f"malformed linkage document: {exc}") from exc
    clusters = []
    for c in data.get("clusters", []) or []:
        try:
            coords = {str(v): (float(xy[0]), float(xy[1])) for v, xy in c["coords"].items()}
            a1, a2 = (str(v) for v in c["anchors"])
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise InvalidLinkage(f"malformed cluster: {exc}") from exc
        clusters.append(Cluster(coords=coords, anchors=(a1, a2)))
    base = data.get("baseNonedge")
    if base is not None:
        if not isinstance(base, (list, tuple)) or len(base) != 2:
            raise InvalidLinkage("baseNonedge must be a pair of vertices")
        base = (str(base[0]), str(base[1]))
    return LinkageSpec(
        vertices=vertices, bars=bars, clusters=tuple(clusters), base_nonedge=base
    )


def linkage_from_json(text: str) -> LinkageSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidLinkage(f"invalid JSON: {exc}") from exc
    return linkage_from_dict(data)


def analysis_to_dict(tdl: TDLinkage, base_nonedges=None) -> dict:
    out = {
        "tdLow": tdl.td_low,
        "steps": len(tdl.steps),
        "completeCayleyVector": (
            [list(e) for e in tdl.complete_cayley_vector]
            if tdl.complete_cayley_vector is not None
            else None
        ),
        "warnings": list(tdl.generic_warnings),
    }
    if not tdl.td_low:
        out["diagnostic"] = tdl.low_diagnostic
    if base_nonedges is not None:
        out["baseNonedges"] = [list(f) for f in base_nonedges]
    out["baseNonedge"] = list(tdl.base_nonedge)
    return out


def realization_to_dict(r: Realization) -> dict:
    return {
        "baseLength": r.base_length,
        "type": str(r.rtype),
        "points": {v: [x, y] for v, (x, y) in sorted(r.points.items())},
    }


def ccs_to_dict(ccs: CayleyConfigSpace) -> dict:
    return {
        "nonOriented": [[lo, hi] for lo, hi in ccs.non_oriented],
        "oriented": [
            {
                "type": str(occs.rtype),
                "intervals": [[iv.lower, iv.upper] for iv in occs.intervals],
            }
            for occs in ccs.oriented
        ],
    }


def motion_to_dict(motion: ContinuousMotion) -> dict:
    legs = []
    for leg in motion.legs:
        entry = {
            "type": str(leg.interval.rtype),
            "lower": leg.interval.lower,
            "upper": leg.interval.upper,
            "enterAt": leg.enter_at,
            "exitAt": leg.exit_at,
        }
        if leg.clip_start is not None:
            entry["clipStart"] = leg.clip_start
        if leg.clip_end is not None:
            entry["clipEnd"] = leg.clip_end
        legs.append(entry)
    return {"kind": motion.kind, "legs": legs}


def component_summaries(components) -> list[dict]:
    return [
        {
            "index": idx,
            "kind": comp.kind,
            "legCount": len(comp.legs),
            "intervals": [
                {
                    "type": str(leg.interval.rtype),
                    "lower": leg.interval.lower,
                    "upper": leg.interval.upper,
                }
                for leg in comp.legs
            ],
        }
        for idx, comp in enumerate(components)
    ]


def curve3d_to_dict(curve: Curve3D) -> dict:
    return {
        "points": [list(p) for p in curve.points],
        "typeLabels": list(curve.type_labels),
        "sampleParams": [[leg, length] for leg, length in curve.sample_params],
    }


def curve3d_to_csv(curve: Curve3D) -> str:
    buf = io.StringIO()
    buf.write("param,leg,type,x,y,z\n")
    for (x, y, z), label, (leg, length) in zip(
        curve.points, curve.type_labels, curve.sample_params
    ):
        buf.write(
            f"{float(length)!r},{leg},{label},{float(x)!r},{float(y)!r},{float(z)!r}\n"
        )
    return buf.getvalue()


def trace_to_csv(points, labels, params) -> str:
    """Single-vertex traced curve as CSV rows param,leg,type,x,y."""
    buf = io.StringIO()
    buf.write("param,leg,type,x,y\n")
    for (x, y), label, (leg, length) in zip(points, labels, params):
        buf.write(f"{float(length)!r},{leg},{label},{float(x)!r},{float(y)!r}\n")
    return buf.getvalue()


def dump_json(data) -> str:
    return json.dumps(data, indent=2, allow_nan=False)
