"""When no continuous motion path exists, the engine answers with the two
nearest realizations (in Cayley distance) of the two components.

This linkage's Cayley space has two disjoint intervals; each carries one
component, so asking for a path across them raises NotConnected with the
nearest pair attached.
"""

from cayrs import (
    Bar,
    LinkageSpec,
    NotConnected,
    RealizationType,
    analyze,
    build_ccs,
    find_path,
    link_intervals,
    realize,
)

spec = LinkageSpec(
    vertices=("a", "b", "c", "d", "e"),
    bars=(
        Bar("a", "c", 1.783), Bar("b", "c", 3.167),
        Bar("a", "d", 3.74), Bar("b", "d", 1.945),
        Bar("c", "e", 0.523), Bar("d", "e", 2.804),
    ),
    base_nonedge=("a", "b"),
)
tdl = analyze(spec)
ccs = link_intervals(tdl, build_ccs(tdl))
print("non-oriented intervals:", [(round(l, 4), round(h, 4)) for l, h in ccs.non_oriented])

r1 = realize(tdl, 3.0, RealizationType((1, 1, 1)))
r2 = realize(tdl, 4.6, RealizationType((1, -1, 1)))

try:
    find_path(tdl, ccs, r1, r2)
except NotConnected as blocked:
    n1, n2, dist = blocked.nearest
    print("\nno path: the realizations live in different components")
    print(f"nearest approach (Cayley distance {dist:.4f}):")
    print(f"  component A at |ab| = {n1.base_length:.4f}, type {n1.rtype}")
    print(f"  component B at |ab| = {n2.base_length:.4f}, type {n2.rtype}")
    print("  vector A:", n1.cayley_vector())
    print("  vector B:", n2.cayley_vector())
