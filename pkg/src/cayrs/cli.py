"""Command-line interface.

Verbs map one-to-one onto engine operations; output is JSON on stdout
(CSV for curve exports via --format csv), diagnostics go to stderr.
Exit status: 0 success, 1 domain error (the JSON carries a machine
readable "error" field), 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .cayley_space import build_ccs, link_intervals
from .config import DEFAULT_CONFIG
from .errors import CayrsError, InvalidLinkage, NotConnected, NotLowComplexity
from .linkage import analyze, enumerate_base_nonedges
from .motion import (
    UniformSampler,
    curve3d,
    find_all_components,
    find_path,
    nearest_realizations,
    sample_realizations,
    traced_curves,
    _sample_points,
)
from .realization import RealizationType, realize
from .serialize import (
    analysis_to_dict,
    ccs_to_dict,
    component_summaries,
    curve3d_to_csv,
    curve3d_to_dict,
    dump_json,
    linkage_from_json,
    motion_to_dict,
    realization_to_dict,
    trace_to_csv,
)


def parse_realization_literal(text: str) -> tuple[float, RealizationType]:
    """Parse "L:signs" command line literals, e.g. "5:++" or "4.25:+-0"."""
    try:
        length_text, signs = text.split(":", 1)
        return float(length_text), RealizationType.parse(signs)
    except ValueError as exc:
        raise InvalidLinkage(f"bad realization literal {text!r}: {exc}") from exc


def parse_nonedge(text: str) -> tuple[str, str]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 2:
        raise InvalidLinkage(f"bad non-edge {text!r}: expected 'u,v'")
    return parts[0], parts[1]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayrs",
        description="Cayley configuration spaces and continuous motion of "
        "1-dof tree-decomposable planar linkages",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, samples=False, fmt=False, component=False):
        p.add_argument("linkage", help="path to a linkage JSON file")
        p.add_argument("--base", help="base non-edge as 'u,v'")
        p.add_argument("--tol-geom", type=float, help="discriminant clamp factor")
        p.add_argument("--tol-endpoint", type=float, help="endpoint bisection factor")
        if samples:
            p.add_argument("--samples", type=int, default=DEFAULT_CONFIG.samples_per_leg)
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        if component:
            p.add_argument(
                "--component", type=int, action="append", default=None,
                help="component index (repeatable where two are needed)",
            )
        return p

    common(sub.add_parser("check", help="validate and run the low-complexity check"))
    common(sub.add_parser("ccs", help="Cayley configuration space"))
    common(sub.add_parser("components", help="connected components"))

    p = common(sub.add_parser("realize", help="single realization"))
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--type", required=True, help="signs over {+,-,0}, e.g. ++")

    p = common(sub.add_parser("path", help="continuous motion paths"))
    p.add_argument("--from", dest="src", required=True, metavar="L:SIGNS")
    p.add_argument("--to", dest="dst", required=True, metavar="L:SIGNS")

    common(sub.add_parser("closest", help="nearest realizations between two components"),
           samples=True, component=True)
    p = common(sub.add_parser("curve3d", help="Cayley curve projected on three non-edges"),
               samples=True, fmt=True, component=True)
    p.add_argument("--nonedges", nargs=3, required=True, metavar="U,V")
    p = common(sub.add_parser("trace", help="curves traced by vertices"),
               samples=True, fmt=True, component=True)
    p.add_argument("--vertex", action="append", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", help="directory of the built explorer frontend to host")
    return parser


def _config_from(args):
    overrides = {}
    if getattr(args, "tol_geom", None) is not None:
        overrides["tol_geom"] = args.tol_geom
    if getattr(args, "tol_endpoint", None) is not None:
        overrides["tol_endpoint_bisect"] = args.tol_endpoint
    return DEFAULT_CONFIG.with_overrides(**overrides) if overrides else DEFAULT_CONFIG


def _load_tdl(args, config):
    try:
        with open(args.linkage, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidLinkage(f"cannot read {args.linkage}: {exc}") from exc
    spec = linkage_from_json(text)
    base = parse_nonedge(args.base) if args.base else None
    return analyze(spec, base=base)


def _linked_ccs(tdl, config):
    if not tdl.td_low:
        raise NotLowComplexity(tdl.low_diagnostic or "not low Cayley complexity")
    return link_intervals(tdl, build_ccs(tdl, config), config)


def _component_pair(args, count):
    picked = args.component or []
    if len(picked) == 1:
        raise InvalidLinkage("closest needs two --component indices")
    if not picked:
        picked = [0, 1] if count > 1 else [0, 0]
    if len(picked) != 2 or any(i < 0 or i >= count for i in picked):
        raise InvalidLinkage(f"component indices out of range (found {count})")
    return picked


def _single_component(args, count):
    picked = args.component or [0]
    if len(picked) != 1 or not (0 <= picked[0] < count):
        raise InvalidLinkage(f"need one component index in range (found {count})")
    return picked[0]


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from(args)

    try:
        if args.verb == "serve":
            import uvicorn

            from .service import create_app

            uvicorn.run(
                create_app(config, frontend_dir=args.ui), host=args.host, port=args.port
            )
            return 0

        tdl = _load_tdl(args, config)

        if args.verb == "check":
            bases = enumerate_base_nonedges(tdl.vertices, tdl.edges)
            print(dump_json(analysis_to_dict(tdl, base_nonedges=bases)), file=stdout)
            return 0

        if args.verb == "ccs":
            ccs = _linked_ccs(tdl, config)
            for warning in ccs.warnings:
                print(f"warning: {warning}", file=stderr)
            print(dump_json(ccs_to_dict(ccs)), file=stdout)
            return 0

        if args.verb == "components":
            ccs = _linked_ccs(tdl, config)
            comps = find_all_components(tdl, ccs, config)
            print(dump_json({"components": component_summaries(comps)}), file=stdout)
            return 0

        if args.verb == "realize":
            r = realize(tdl, args.length, RealizationType.parse(args.type), config)
            print(dump_json(realization_to_dict(r)), file=stdout)
            return 0

        if args.verb == "path":
            ccs = _linked_ccs(tdl, config)
            L1, t1 = parse_realization_literal(args.src)
            L2, t2 = parse_realization_literal(args.dst)
            r1 = realize(tdl, L1, t1, config)
            r2 = realize(tdl, L2, t2, config)
            paths = find_path(tdl, ccs, r1, r2, config)
            print(dump_json({"paths": [motion_to_dict(p) for p in paths]}), file=stdout)
            return 0

        if args.verb == "closest":
            ccs = _linked_ccs(tdl, config)
            comps = find_all_components(tdl, ccs, config)
            i, j = _component_pair(args, len(comps))
            sampler = UniformSampler(args.samples)
            r1, r2, dist = nearest_realizations(tdl, comps[i], comps[j], sampler, config)
            print(
                dump_json(
                    {
                        "r1": realization_to_dict(r1),
                        "r2": realization_to_dict(r2),
                        "distance": dist,
                    }
                ),
                file=stdout,
            )
            return 0

        if args.verb == "curve3d":
            ccs = _linked_ccs(tdl, config)
            comps = find_all_components(tdl, ccs, config)
            idx = _single_component(args, len(comps))
            nonedges = [parse_nonedge(t) for t in args.nonedges]
            sampler = UniformSampler(args.samples)
            curve = curve3d(tdl, comps[idx], *nonedges, sampler=sampler, config=config)
            if args.format == "csv":
                stdout.write(curve3d_to_csv(curve))
            else:
                print(dump_json(curve3d_to_dict(curve)), file=stdout)
            return 0

        if args.verb == "trace":
            ccs = _linked_ccs(tdl, config)
            comps = find_all_components(tdl, ccs, config)
            idx = _single_component(args, len(comps))
            sampler = UniformSampler(args.samples)
            points = _sample_points(tdl, comps[idx], sampler, config)
            curves = traced_curves(tdl, comps[idx], args.vertex, sampler, config)
            if args.format == "csv":
                if len(args.vertex) != 1:
                    raise InvalidLinkage("csv format requires exactly one --vertex")
                v = args.vertex[0]
                labels = [str(sp.realization.rtype) for sp in points]
                params = [(sp.leg, sp.base_length) for sp in points]
                stdout.write(trace_to_csv(curves[v], labels, params))
            else:
                print(
                    dump_json({v: [list(p) for p in pts] for v, pts in curves.items()}),
                    file=stdout,
                )
            return 0

        raise InvalidLinkage(f"unknown verb {args.verb}")

    except NotConnected as exc:
        n1, n2, dist = exc.nearest
        print(
            dump_json(
                {
                    "error": exc.name,
                    "message": str(exc),
                    "nearest": {
                        "r1": realization_to_dict(n1),
                        "r2": realization_to_dict(n2),
                        "distance": dist,
                    },
                }
            ),
            file=stdout,
        )
        print(f"error: {exc}", file=stderr)
        return 1
    except InvalidLinkage as exc:
        print(dump_json({"error": exc.name, "message": str(exc)}), file=stdout)
        print(f"error: {exc}", file=stderr)
        return 2
    except CayrsError as exc:
        print(dump_json({"error": exc.name, "message": str(exc)}), file=stdout)
        print(f"error: {exc}", file=stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
