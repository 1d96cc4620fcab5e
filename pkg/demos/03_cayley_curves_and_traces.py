"""Canonical Cayley curves and traced vertex curves, rendered with
matplotlib into demos/output/.

The fan linkage here has three construction steps, so its complete Cayley
vector has three non-edges and the canonical Cayley curve lives in 3D.
Its realization space splits into two components; each projects to a
closed polyline, color-coded by realization type.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from cayrs import (
    Bar,
    LinkageSpec,
    UniformSampler,
    analyze,
    build_ccs,
    curve3d,
    find_all_components,
    link_intervals,
    traced_curves,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

spec = LinkageSpec(
    vertices=("a", "b", "u", "v", "w"),
    bars=(
        Bar("a", "u", 5.0), Bar("b", "u", 3.0),
        Bar("a", "v", 10.0), Bar("b", "v", 9.5),
        Bar("a", "w", 6.0), Bar("b", "w", 5.51),
    ),
    base_nonedge=("a", "b"),
)
tdl = analyze(spec)
ccs = link_intervals(tdl, build_ccs(tdl))
components = find_all_components(tdl, ccs)
print(f"{len(components)} components over non-oriented space {ccs.non_oriented}")

f1, f2, f3 = tdl.complete_cayley_vector[:3]
fig = plt.figure(figsize=(7, 6))
ax = fig.add_subplot(projection="3d")
palette = {}
for idx, comp in enumerate(components):
    curve = curve3d(tdl, comp, f1, f2, f3, sampler=UniformSampler(96))
    xs, ys, zs = zip(*curve.points)
    for label in set(curve.type_labels):
        palette.setdefault(label, f"C{len(palette)}")
    # draw per-type segments so the color encodes the realization type
    start = 0
    for i in range(1, len(xs) + 1):
        if i == len(xs) or curve.type_labels[i] != curve.type_labels[start]:
            ax.plot(xs[start:i], ys[start:i], zs[start:i],
                    color=palette[curve.type_labels[start]],
                    label=curve.type_labels[start])
            start = i
ax.set_xlabel(f"|{f1[0]}{f1[1]}|")
ax.set_ylabel(f"|{f2[0]}{f2[1]}|")
ax.set_zlabel(f"|{f3[0]}{f3[1]}|")
handles, labels = ax.get_legend_handles_labels()
seen = dict(zip(labels, handles))
ax.legend(seen.values(), seen.keys(), title="realization type")
fig.savefig(OUT / "cayley_curve_3d.png", dpi=130)
print("wrote", OUT / "cayley_curve_3d.png")

fig2, ax2 = plt.subplots(figsize=(7, 6))
curves = traced_curves(tdl, components[0], ["u", "v", "w"], UniformSampler(96))
for name, polyline in curves.items():
    xs = [p[0] for p in polyline]
    ys = [p[1] for p in polyline]
    ax2.plot(xs, ys, label=f"vertex {name}")
ax2.set_aspect("equal")
ax2.legend()
ax2.set_title("curves traced in the canonical frame (component 0)")
fig2.savefig(OUT / "traced_curves.png", dpi=130)
print("wrote", OUT / "traced_curves.png")
