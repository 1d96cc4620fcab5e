"""Linkage model: validation, cluster reduction, construction sequences,
the low-complexity check, and the complete Cayley vector.

A linkage is reduced to the edge-cluster model: every rigid cluster that
shares exactly two vertices (its anchors) with the rest of the graph is
replaced by a single bar between the anchors, with the interior vertices
remembered as decorations.  On the reduced graph a construction sequence
from a base non-edge places one new vertex per step from two bars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    ClusterShareViolation,
    DegenerateCluster,
    InvalidLinkage,
    NotOneDof,
    NotTreeDecomposable,
)

Pair = tuple[str, str]


def pair(u: str, v: str) -> Pair:
    """Unordered vertex pair in canonical (sorted) order."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Bar:
    u: str
    v: str
    length: float

    @property
    def key(self) -> Pair:
        return pair(self.u, self.v)


@dataclass(frozen=True)
class Cluster:
    coords: dict[str, tuple[float, float]]
    anchors: Pair


@dataclass(frozen=True)
class LinkageSpec:
    """Validated input description of a linkage."""

    vertices: tuple[str, ...]
    bars: tuple[Bar, ...]
    clusters: tuple[Cluster, ...] = ()
    base_nonedge: Pair | None = None

    def __post_init__(self):
        names = list(self.vertices)
        if len(set(names)) != len(names):
            raise InvalidLinkage("duplicate vertex identifiers")
        declared = set(names)
        seen: set[Pair] = set()
        for bar in self.bars:
            if bar.u == bar.v:
                raise InvalidLinkage(f"bar ({bar.u}, {bar.v}) is a self-loop")
            if bar.u not in declared or bar.v not in declared:
                raise InvalidLinkage(f"bar ({bar.u}, {bar.v}) uses undeclared vertices")
            if not (bar.length > 0.0) or not math.isfinite(bar.length):
                raise InvalidLinkage(f"bar ({bar.u}, {bar.v}) has non-positive length")
            if bar.key in seen:
                raise InvalidLinkage(f"duplicate bar ({bar.u}, {bar.v})")
            seen.add(bar.key)
        for cluster in self.clusters:
            for v in cluster.anchors:
                if v not in cluster.coords:
                    raise InvalidLinkage(f"cluster anchor {v} has no local coordinates")
            for v in cluster.coords:
                if v not in declared:
                    raise InvalidLinkage(f"cluster vertex {v} not declared")
        if self.base_nonedge is not None:
            u, v = self.base_nonedge
            if u not in declared or v not in declared:
                raise InvalidLinkage("base non-edge uses undeclared vertices")
            if pair(u, v) in seen:
                raise InvalidLinkage("base non-edge coincides with a bar")


@dataclass(frozen=True)
class ConstructionStep:
    """Placement of new_vertex from two already-constructed anchors."""

    new_vertex: str
    anchor1: str
    anchor2: str
    len1: float  # distance(anchor1, new_vertex)
    len2: float  # distance(anchor2, new_vertex)
    index: int  # 1-based

    def __post_init__(self):
        if self.anchor1 == self.anchor2:
            raise InvalidLinkage("construction step anchors coincide")


@dataclass(frozen=True)
class Decoration:
    """Interior vertices of a reduced cluster, in the cluster's local frame."""

    anchors: Pair
    local: dict[str, tuple[float, float]]  # includes anchor coordinates


@dataclass(frozen=True)
class TDLinkage:
    """Reduced 1-dof tree-decomposable linkage with its construction sequence."""

    vertices: tuple[str, ...]
    edges: dict[Pair, float]
    base_nonedge: Pair  # ordered as given; first endpoint goes to the origin
    steps: tuple[ConstructionStep, ...]
    td_low: bool
    complete_cayley_vector: tuple[Pair, ...] | None
    low_diagnostic: str | None
    decorations: tuple[Decoration, ...] = ()
    generic_warnings: tuple[str, ...] = ()

    @property
    def scale(self) -> float:
        return sum(self.edges.values())

    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for (u, v) in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def reduce_clusters(spec: LinkageSpec) -> tuple[tuple[Bar, ...], tuple[Decoration, ...]]:
    """Replace each rigid cluster by a single bar between its anchors.

    Interior (passenger) vertices are recorded as decorations so that
    realizations can be re-expanded later.  Bars internal to a cluster are
    checked against the local coordinates and dropped; bars outside
    clusters pass through unchanged.
    """
    if not spec.clusters:
        return spec.bars, ()

    members: list[set[str]] = [set(c.coords) for c in spec.clusters]

    # vertices used outside a given cluster: by bars with an endpoint outside,
    # by other clusters, or by the base non-edge
    decorations: list[Decoration] = []
    reduced: list[Bar] = []
    internal_pairs: list[set[Pair]] = [set() for _ in spec.clusters]

    def outside_usage(idx: int) -> set[str]:
        inside = members[idx]
        used: set[str] = set()
        for bar in spec.bars:
            in_u, in_v = bar.u in inside, bar.v in inside
            if in_u != in_v:
                used.add(bar.u if in_u else bar.v)
        for j, other in enumerate(members):
            if j != idx:
                used |= inside & other
        if spec.base_nonedge is not None:
            used |= inside & set(spec.base_nonedge)
        return used

    for idx, cluster in enumerate(spec.clusters):
        shared = outside_usage(idx)
        anchors = set(cluster.anchors)
        if shared != anchors:
            raise ClusterShareViolation(
                f"cluster {idx} shares {sorted(shared)} with the rest of the "
                f"graph, expected exactly its anchors {sorted(anchors)}"
            )
        a1, a2 = cluster.anchors
        ax, ay = cluster.coords[a1]
        bx, by = cluster.coords[a2]
        dist = math.hypot(bx - ax, by - ay)
        scale = max((abs(c) for xy in cluster.coords.values() for c in xy), default=1.0)
        if dist <= 1e-12 * max(scale, 1.0):
            raise DegenerateCluster(f"cluster {idx}: anchors {a1}, {a2} coincide")
        # consistency of bars fully inside the cluster
        for bar in spec.bars:
            if bar.u in members[idx] and bar.v in members[idx]:
                px, py = cluster.coords[bar.u]
                qx, qy = cluster.coords[bar.v]
                local = math.hypot(qx - px, qy - py)
                if abs(local - bar.length) > 1e-9 * max(bar.length, local):
                    raise InvalidLinkage(
                        f"cluster {idx}: bar ({bar.u}, {bar.v}) length {bar.length} "
                        f"disagrees with local coordinates ({local})"
                    )
                internal_pairs[idx].add(bar.key)
        decorations.append(Decoration(anchors=pair(a1, a2), local=dict(cluster.coords)))
        reduced.append(Bar(a1, a2, dist))

    all_internal = set().union(*internal_pairs) if internal_pairs else set()
    passengers = set()
    for idx, cluster in enumerate(spec.clusters):
        passengers |= members[idx] - set(cluster.anchors)

    out: list[Bar] = []
    seen: set[Pair] = set()
    for bar in spec.bars:
        if bar.key in all_internal:
            continue
        if bar.u in passengers or bar.v in passengers:
            # cannot happen: such a bar would make the passenger shared
            raise ClusterShareViolation(f"bar ({bar.u}, {bar.v}) touches a cluster interior")
        out.append(bar)
        seen.add(bar.key)
    for bar in reduced:
        if bar.key in seen:
            # two clusters (or a cluster and an explicit anchor bar) collapse
            # to the same edge; keep one if consistent
            existing = next(b for b in out if b.key == bar.key)
            if abs(existing.length - bar.length) > 1e-9 * max(existing.length, bar.length):
                raise InvalidLinkage(
                    f"anchor bar ({bar.u}, {bar.v}) has conflicting lengths "
                    f"{existing.length} vs {bar.length}"
                )
            continue
        out.append(bar)
        seen.add(bar.key)
    return tuple(out), tuple(decorations)


def _graph_from_bars(bars) -> tuple[dict[Pair, float], dict[str, set[str]]]:
    edges: dict[Pair, float] = {}
    adj: dict[str, set[str]] = {}
    for bar in bars:
        edges[bar.key] = bar.length
        adj.setdefault(bar.u, set()).add(bar.v)
        adj.setdefault(bar.v, set()).add(bar.u)
    return edges, adj


def derive_construction(
    vertices, edges: dict[Pair, float], f: Pair
) -> tuple[ConstructionStep, ...]:
    """Construction sequence rebuilding the graph from the base non-edge.

    Peels degree-2 vertices (never the endpoints of f) and reverses the
    removal order.  Among removable vertices the lexicographically largest
    is peeled first, so construction steps come out smallest-first.
    """
    verts = set(vertices)
    if len(edges) != 2 * len(verts) - 4:
        raise NotOneDof(
            f"|E| = {len(edges)} but a 1-dof linkage on {len(verts)} vertices "
            f"needs {2 * len(verts) - 4}"
        )
    if f[0] not in verts or f[1] not in verts or f[0] == f[1]:
        raise InvalidLinkage(f"base non-edge {f} uses unknown vertices")
    if pair(*f) in edges:
        raise InvalidLinkage(f"base non-edge {f} is an edge")

    adj: dict[str, set[str]] = {v: set() for v in verts}
    for (u, v) in edges:
        adj[u].add(v)
        adj[v].add(u)

    protected = set(f)
    removable = sorted(v for v in verts if v not in protected and len(adj[v]) == 2)
    removal: list[tuple[str, str, str]] = []
    while removable:
        v = removable.pop()  # lexicographically largest
        if len(adj[v]) != 2:
            continue
        n1, n2 = sorted(adj[v])
        removal.append((v, n1, n2))
        for n in (n1, n2):
            adj[n].discard(v)
        adj[v] = set()
        candidates = {n for n in (n1, n2) if n not in protected and len(adj[n]) == 2}
        removable = sorted((set(removable) | candidates) - {v})

    remaining_edges = sum(len(s) for s in adj.values()) // 2
    leftover = [v for v in verts if v not in protected and adj[v]]
    if remaining_edges != 0 or any(len(adj[v]) for v in protected):
        raise NotTreeDecomposable(
            f"peeling stuck with {remaining_edges} edges left"
            + (f" around {sorted(leftover)}" if leftover else "")
        )
    stray = [v for v in verts if v not in protected and all(v != r[0] for r in removal)]
    if stray:
        raise NotTreeDecomposable(f"isolated vertices {sorted(stray)}")

    steps = []
    for k, (v, n1, n2) in enumerate(reversed(removal), start=1):
        steps.append(
            ConstructionStep(
                new_vertex=v,
                anchor1=n1,
                anchor2=n2,
                len1=edges[pair(n1, v)],
                len2=edges[pair(n2, v)],
                index=k,
            )
        )
    return tuple(steps)


def enumerate_base_nonedges(vertices, edges: dict[Pair, float]) -> list[Pair]:
    """All non-edges from which a construction sequence exists, sorted."""
    verts = sorted(vertices)
    found = []
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if pair(u, v) in edges:
                continue
            try:
                derive_construction(vertices, edges, (u, v))
            except (NotTreeDecomposable, NotOneDof):
                continue
            found.append((u, v))
    return found


def is_low(
    vertices,
    edges: dict[Pair, float],
    f: Pair,
    steps: tuple[ConstructionStep, ...],
) -> tuple[bool, tuple[Pair, ...] | None, str | None]:
    """Low Cayley complexity check; on success returns the complete Cayley vector.

    Follows the four-cycle recognition on edge clusters: a base pair of
    clusters is a pair of edges sharing a vertex whose far endpoints span a
    distance already determined by the base non-edge.  Step 1 is directly
    based on the base non-edge; every later step needs a witness vertex
    adjacent to both anchors whose two edges form a valid base pair, and
    contributes the non-edge (witness, new vertex) to the vector.
    """
    vector: list[Pair] = [pair(*f)]
    vector_set = {pair(*f)}
    valid_pairs: set[tuple[Pair, Pair]] = set()

    def pair_key(c1: Pair, c2: Pair) -> tuple[Pair, Pair]:
        return (c1, c2) if c1 <= c2 else (c2, c1)

    constructed = set(f)
    adj: dict[str, set[str]] = {v: set() for v in vertices}

    for step in steps:
        v, a1, a2 = step.new_vertex, step.anchor1, step.anchor2
        c_new1 = pair(a1, v)
        c_new2 = pair(a2, v)
        if step.index > 1:
            current: list[tuple[Pair, Pair]] = []
            first_witness: str | None = None
            for w in adj[a1] & adj[a2]:
                c1 = pair(a1, w)
                c2 = pair(a2, w)
                if pair_key(c1, c2) in valid_pairs:
                    if first_witness is None or w < first_witness:
                        first_witness = w
                    current.append((c1, c2))
            if first_witness is None:
                return (
                    False,
                    None,
                    f"step {step.index} ({v} from {a1}, {a2}): no witness "
                    "vertex completes a valid four-cycle of clusters",
                )
            nonedge = pair(first_witness, v)
            if nonedge not in edges and nonedge not in vector_set:
                vector.append(nonedge)
                vector_set.add(nonedge)
            for (c1, c2) in current:
                valid_pairs.add(pair_key(c_new1, c1))
                valid_pairs.add(pair_key(c_new2, c2))
        valid_pairs.add(pair_key(c_new1, c_new2))
        constructed.add(v)
        adj[a1].add(v)
        adj[a2].add(v)
        adj[v].update((a1, a2))

    return True, tuple(vector), None


def check_generic(tdl: TDLinkage, ccs=None) -> list[str]:
    """Genericity warnings: zero or duplicate bar lengths, and simultaneous
    collinearity candidates found during Cayley space construction."""
    warnings = list(tdl.generic_warnings)
    if ccs is not None:
        warnings.extend(w for w in ccs.warnings if w not in warnings)
    return warnings


def _length_warnings(edges: dict[Pair, float]) -> tuple[str, ...]:
    warnings = []
    by_length: dict[float, list[Pair]] = {}
    for key, length in sorted(edges.items()):
        if length <= 0.0:
            warnings.append(f"bar {key} has zero length")
        by_length.setdefault(length, []).append(key)
    for length, keys in sorted(by_length.items()):
        if len(keys) > 1:
            warnings.append(f"duplicate bar length {length} on {keys}")
    return tuple(warnings)


def analyze(spec: LinkageSpec, base: Pair | None = None) -> TDLinkage:
    """Full pipeline: reduce clusters, pick a base non-edge, derive the
    construction sequence, and run the low-complexity check."""
    bars, decorations = reduce_clusters(spec)
    edges, adj = _graph_from_bars(bars)
    passengers = set()
    for deco in decorations:
        passengers |= set(deco.local) - set(deco.anchors)
    unused = set(spec.vertices) - set(adj) - passengers
    if unused:
        raise InvalidLinkage(f"vertices {sorted(unused)} appear in no bar or cluster")
    vertices = tuple(sorted(adj))

    f = base or spec.base_nonedge
    if f is not None:
        for v in f:
            if v in passengers:
                raise InvalidLinkage(f"base non-edge endpoint {v} is a cluster interior vertex")
            if v not in adj:
                raise InvalidLinkage(f"base non-edge endpoint {v} is not in the reduced graph")
        steps = derive_construction(vertices, edges, tuple(f))
    else:
        candidates = enumerate_base_nonedges(vertices, edges)
        if not candidates:
            raise NotTreeDecomposable("no base non-edge admits a construction sequence")
        f = candidates[0]
        steps = derive_construction(vertices, edges, f)

    low, vector, diagnostic = is_low(vertices, edges, tuple(f), steps)
    return TDLinkage(
        vertices=vertices,
        edges=edges,
        base_nonedge=(f[0], f[1]),
        steps=steps,
        td_low=low,
        complete_cayley_vector=vector,
        low_diagnostic=diagnostic,
        decorations=decorations,
        generic_warnings=_length_warnings(edges),
    )
