"""The four-bar linkage F1 (bars 2, 6, 3, 4.5 on a quadrilateral, base
non-edge the diagonal (a, c)).

Both realization types share the Cayley interval [4, 7.5], and the two
oriented intervals glue into a single connected component at their
endpoints.  Between the mirror realizations at |ac| = 5 there are exactly
two continuous motion paths: one through each collinear extreme.
"""

from cayrs import (
    Bar,
    LinkageSpec,
    RealizationType,
    analyze,
    build_ccs,
    classify_pair,
    find_all_components,
    find_paths,
    link_intervals,
    realize,
)

spec = LinkageSpec(
    vertices=("a", "b", "c", "d"),
    bars=(Bar("a", "b", 2.0), Bar("b", "c", 6.0), Bar("a", "d", 3.0), Bar("d", "c", 4.5)),
    base_nonedge=("a", "c"),
)
tdl = analyze(spec)
ccs = link_intervals(tdl, build_ccs(tdl))

print("oriented Cayley configuration spaces:")
for occs in ccs.oriented:
    print(f"  type {occs.rtype}: ", [(iv.lower, iv.upper) for iv in occs.intervals])
print("non-oriented union:", ccs.non_oriented)

components = find_all_components(tdl, ccs)
print(f"\n{len(components)} connected component(s); the first walks:")
for leg in components[0].legs:
    print(f"  {leg.interval.rtype}: enter {leg.enter_at}, exit {leg.exit_at}")

r1 = realize(tdl, 5.0, RealizationType((1, 1)))
r2 = realize(tdl, 5.0, RealizationType((1, -1)))
print("\nCayley vectors:", r1.cayley_vector(), r2.cayley_vector())

paths = find_paths(tdl, ccs, r1, r2)
print(f"\n{len(paths)} continuous motion paths from (5, ++) to (5, +-):")
for path in paths:
    route = " -> ".join(
        f"{leg.interval.rtype}[{leg.start:.3g}..{leg.end:.3g}]" for leg in path.legs
    )
    print(f"  arc length {path.arc_length:.3f}: {route}")

case = classify_pair(tdl, ccs, r1, r2)
print("\npair classification:", case.label, "| same non-oriented interval:",
      case.same_non_oriented_interval, "| paths:", case.path_count)
