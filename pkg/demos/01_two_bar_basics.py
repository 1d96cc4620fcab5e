"""A first tour on the smallest flexible linkage: two bars a-c (3) and
b-c (4) with base non-edge (a, b).

The base length |ab| can take any value in [1, 7] (triangle inequality);
as it sweeps that interval the joint c traces an arc from one collinear
extreme to the other.
"""

from cayrs import (
    LinkageSpec,
    Bar,
    RealizationType,
    analyze,
    build_ccs,
    find_all_components,
    link_intervals,
    realize,
)

spec = LinkageSpec(
    vertices=("a", "b", "c"),
    bars=(Bar("a", "c", 3.0), Bar("b", "c", 4.0)),
    base_nonedge=("a", "b"),
)

tdl = analyze(spec)
print("construction steps:")
for step in tdl.steps:
    print(f"  {step.new_vertex} placed from {step.anchor1}, {step.anchor2} "
          f"with bars {step.len1}, {step.len2}")
print("low Cayley complexity:", tdl.td_low)
print("complete Cayley vector:", tdl.complete_cayley_vector)

ccs = link_intervals(tdl, build_ccs(tdl))
print("\nCayley configuration space (non-oriented):", ccs.non_oriented)

# the classic 3-4-5 right triangle appears at base length 5
r = realize(tdl, 5.0, RealizationType((1,)))
print("\nrealization at |ab| = 5:")
for name, point in sorted(r.points.items()):
    print(f"  {name}: ({point[0]:.6f}, {point[1]:.6f})")

# at the interval ends the bars line up and the orientation sign hits 0
for L in (1.0, 7.0):
    extreme = realize(tdl, L, RealizationType((0,)))
    print(f"collinear extreme at |ab| = {L}: c = {extreme.points['c']}")

components = find_all_components(tdl, ccs)
print("\nconnected components:", len(components))
print("the single component sweeps", [
    (leg.interval.lower, leg.interval.upper) for leg in components[0].legs
])
