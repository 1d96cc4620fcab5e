import math

import pytest

from cayrs import (
    Bar,
    Cluster,
    ClusterShareViolation,
    DegenerateCluster,
    InvalidLinkage,
    LinkageSpec,
    NotOneDof,
    NotTreeDecomposable,
    analyze,
    check_generic,
    derive_construction,
    enumerate_base_nonedges,
    reduce_clusters,
)
from cayrs.linkage import pair
from conftest import bars, full
from oracles import exhaustive_is_low


class TestSpecValidation:
    def test_duplicate_vertices(self):
        with pytest.raises(InvalidLinkage):
            LinkageSpec(vertices=("a", "a"), bars=())

    def test_undeclared_bar_endpoint(self):
        with pytest.raises(InvalidLinkage):
            LinkageSpec(vertices=("a",), bars=bars(("a", "b", 1)))

    def test_nonpositive_length(self):
        with pytest.raises(InvalidLinkage):
            LinkageSpec(vertices=("a", "b"), bars=bars(("a", "b", 0)))

    def test_duplicate_bar(self):
        with pytest.raises(InvalidLinkage):
            LinkageSpec(vertices=("a", "b"), bars=bars(("a", "b", 1), ("b", "a", 2)))

    def test_base_nonedge_is_bar(self):
        with pytest.raises(InvalidLinkage):
            LinkageSpec(
                vertices=("a", "b"), bars=bars(("a", "b", 1)), base_nonedge=("a", "b")
            )


class TestReduceClusters:
    def test_no_clusters_identity(self, two_bar_spec):
        reduced, decorations = reduce_clusters(two_bar_spec)
        assert reduced == two_bar_spec.bars
        assert decorations == ()

    def test_cluster_becomes_anchor_bar(self, cluster_spec):
        reduced, decorations = reduce_clusters(cluster_spec)
        keys = {b.key: b.length for b in reduced}
        assert keys[("a", "c")] == 4.0
        assert len(decorations) == 1
        assert decorations[0].anchors == ("a", "c")
        assert decorations[0].local["m"] == (2.0, 1.0)

    def test_degenerate_cluster(self):
        spec_kwargs = dict(
            vertices=("a", "b", "c", "m"),
            bars=bars(("b", "c", 3)),
            clusters=(
                Cluster(
                    coords={"a": (1.0, 1.0), "c": (1.0, 1.0), "m": (2.0, 1.0)},
                    anchors=("a", "c"),
                ),
            ),
            base_nonedge=("a", "b"),
        )
        with pytest.raises(DegenerateCluster):
            reduce_clusters(LinkageSpec(**spec_kwargs))

    def test_share_violation(self):
        # interior vertex m also carries an outside bar
        spec = LinkageSpec(
            vertices=("a", "b", "c", "m"),
            bars=bars(("b", "c", 3), ("b", "m", 1)),
            clusters=(
                Cluster(
                    coords={"a": (0.0, 0.0), "c": (4.0, 0.0), "m": (2.0, 1.0)},
                    anchors=("a", "c"),
                ),
            ),
            base_nonedge=("a", "b"),
        )
        with pytest.raises(ClusterShareViolation):
            reduce_clusters(spec)

    def test_internal_bar_consistency(self):
        spec = LinkageSpec(
            vertices=("a", "b", "c", "m"),
            bars=bars(("b", "c", 3), ("a", "m", 9.9)),
            clusters=(
                Cluster(
                    coords={"a": (0.0, 0.0), "c": (4.0, 0.0), "m": (2.0, 1.0)},
                    anchors=("a", "c"),
                ),
            ),
            base_nonedge=("a", "b"),
        )
        with pytest.raises(InvalidLinkage):
            reduce_clusters(spec)


class TestDeriveConstruction:
    def test_triangle_single_dyad(self, two_bar_spec):
        tdl = analyze(two_bar_spec)
        assert len(tdl.steps) == 1
        step = tdl.steps[0]
        assert (step.new_vertex, step.anchor1, step.anchor2) == ("c", "a", "b")
        assert (step.len1, step.len2) == (3.0, 4.0)

    def test_four_bar_lexicographic_order(self, four_bar_spec):
        tdl = analyze(four_bar_spec)
        assert [s.new_vertex for s in tdl.steps] == ["b", "d"]
        assert all((s.anchor1, s.anchor2) == ("a", "c") for s in tdl.steps)

    def test_k4_not_one_dof(self):
        spec = LinkageSpec(
            vertices=("a", "b", "c", "d"),
            bars=bars(
                ("a", "b", 1), ("a", "c", 1.2), ("a", "d", 1.4),
                ("b", "c", 1.6), ("b", "d", 1.8), ("c", "d", 2.0),
            ),
        )
        edges = {b.key: b.length for b in spec.bars}
        with pytest.raises(NotOneDof):
            derive_construction(spec.vertices, edges, ("a", "b"))

    def test_stuck_peeling(self):
        # K4 on {c,d,e,g} hung off a path a-c, b-c: correct edge count, no
        # degree-2 vertex anywhere
        spec = LinkageSpec(
            vertices=("a", "b", "c", "d", "e", "g"),
            bars=bars(
                ("c", "d", 1), ("c", "e", 1.1), ("c", "g", 1.2),
                ("d", "e", 1.3), ("d", "g", 1.4), ("e", "g", 1.5),
                ("a", "c", 1.6), ("b", "c", 1.7),
            ),
            base_nonedge=("a", "b"),
        )
        edges = {b.key: b.length for b in spec.bars}
        with pytest.raises(NotTreeDecomposable):
            derive_construction(spec.vertices, edges, ("a", "b"))

    def test_replay_reproduces_edges(self, four_bar, dependent3):
        for tdl in (four_bar[0], dependent3[0]):
            rebuilt = {}
            for step in tdl.steps:
                rebuilt[pair(step.anchor1, step.new_vertex)] = step.len1
                rebuilt[pair(step.anchor2, step.new_vertex)] = step.len2
            assert rebuilt == tdl.edges

    def test_deterministic(self, four_bar_spec):
        a = analyze(four_bar_spec)
        b = analyze(four_bar_spec)
        assert a.steps == b.steps
        assert a.complete_cayley_vector == b.complete_cayley_vector


class TestEnumerateBaseNonedges:
    def test_triangle(self, two_bar_spec):
        tdl = analyze(two_bar_spec)
        assert enumerate_base_nonedges(tdl.vertices, tdl.edges) == [("a", "b")]

    def test_four_bar(self, four_bar_spec):
        tdl = analyze(four_bar_spec)
        assert enumerate_base_nonedges(tdl.vertices, tdl.edges) == [("a", "c"), ("b", "d")]

    def test_path_graph(self):
        spec = LinkageSpec(
            vertices=("a", "b", "c"), bars=bars(("a", "b", 1), ("b", "c", 2))
        )
        edges = {b.key: b.length for b in spec.bars}
        assert enumerate_base_nonedges(spec.vertices, edges) == [("a", "c")]


class TestIsLow:
    def test_triangle(self, two_bar):
        tdl, _, _ = two_bar
        assert tdl.td_low
        assert tdl.complete_cayley_vector == (("a", "b"),)

    def test_four_bar_vector(self, four_bar):
        tdl, _, _ = four_bar
        assert tdl.td_low
        assert tdl.complete_cayley_vector == (("a", "c"), ("b", "d"))

    def test_no_witness_step_fails(self, not_low_spec):
        tdl = analyze(not_low_spec)
        assert not tdl.td_low
        assert tdl.complete_cayley_vector is None
        assert "step 3" in tdl.low_diagnostic
        # exhaustive witness search agrees there is no four-cycle
        assert exhaustive_is_low(tdl) is False

    def test_fan_vector(self, fan3):
        tdl, _, _ = fan3
        assert tdl.complete_cayley_vector == (("a", "b"), ("u", "v"), ("u", "w"))

    def test_dependent_vector(self, dependent3):
        tdl, _, _ = dependent3
        assert tdl.complete_cayley_vector == (("a", "b"), ("c", "d"), ("a", "e"))

    def test_vector_size_bound(self, four_bar, fan3, dependent3):
        for tdl, _, _ in (four_bar, fan3, dependent3):
            assert len(tdl.complete_cayley_vector) <= len(tdl.steps) + 1
            assert len(tdl.complete_cayley_vector) == len(tdl.steps)  # no skips here
            assert all(e not in tdl.edges for e in tdl.complete_cayley_vector)

    def test_exhaustive_agreement_on_fixtures(self, two_bar, four_bar, fan3, dependent3):
        for tdl, _, _ in (two_bar, four_bar, fan3, dependent3):
            assert exhaustive_is_low(tdl) == tdl.td_low


class TestCheckGeneric:
    def test_f1_clean(self, four_bar):
        tdl, ccs, _ = four_bar
        assert check_generic(tdl, ccs) == []

    def test_duplicate_lengths(self):
        spec = LinkageSpec(
            vertices=("a", "b", "c"),
            bars=bars(("a", "c", 2), ("b", "c", 2)),
            base_nonedge=("a", "b"),
        )
        tdl = analyze(spec)
        warnings = check_generic(tdl)
        assert any("duplicate" in w for w in warnings)

    def test_simultaneous_collinearity(self, four_bar_nongeneric_spec):
        tdl, ccs, _ = full(four_bar_nongeneric_spec)
        warnings = check_generic(tdl, ccs)
        assert any("simultaneous" in w for w in warnings)
        assert any("8" in w for w in warnings)


class TestAnalyze:
    def test_base_pick_is_first_nonedge(self, four_bar_spec):
        spec = LinkageSpec(
            vertices=four_bar_spec.vertices, bars=four_bar_spec.bars
        )
        tdl = analyze(spec)
        assert tdl.base_nonedge == ("a", "c")

    def test_unused_vertex_rejected(self):
        spec = LinkageSpec(
            vertices=("a", "b", "c", "z"),
            bars=bars(("a", "c", 3), ("b", "c", 4)),
        )
        with pytest.raises(InvalidLinkage):
            analyze(spec)

    def test_cluster_pipeline(self, cluster_spec):
        tdl = analyze(cluster_spec)
        assert tdl.td_low
        assert set(tdl.vertices) == {"a", "b", "c"}
        assert tdl.edges[("a", "c")] == 4.0
        assert len(tdl.decorations) == 1
