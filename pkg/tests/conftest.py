import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cayrs import analyze, build_ccs, find_all_components, link_intervals
from cayrs.linkage import Bar, Cluster, LinkageSpec


def bars(*triples):
    return tuple(Bar(u, v, float(length)) for u, v, length in triples)


def full(spec, base=None):
    """analyze + build + link + components bundle."""
    tdl = analyze(spec, base=base)
    ccs = link_intervals(tdl, build_ccs(tdl))
    comps = find_all_components(tdl, ccs)
    return tdl, ccs, comps


@pytest.fixture
def two_bar_spec():
    """Triangle minus an edge: bars 3 and 4, base non-edge (a, b)."""
    return LinkageSpec(
        vertices=("a", "b", "c"),
        bars=bars(("a", "c", 3), ("b", "c", 4)),
        base_nonedge=("a", "b"),
    )


@pytest.fixture
def four_bar_spec():
    """F1: bars ab=2, bc=6, ad=3, dc=4.5, base non-edge (a, c)."""
    return LinkageSpec(
        vertices=("a", "b", "c", "d"),
        bars=bars(("a", "b", 2), ("b", "c", 6), ("a", "d", 3), ("d", "c", 4.5)),
        base_nonedge=("a", "c"),
    )


@pytest.fixture
def four_bar_nongeneric_spec():
    """Four-bar with 2+6 = 3+5: two steps collinear at the same length 8."""
    return LinkageSpec(
        vertices=("a", "b", "c", "d"),
        bars=bars(("a", "b", 2), ("b", "c", 6), ("a", "d", 3), ("d", "c", 5)),
        base_nonedge=("a", "c"),
    )


@pytest.fixture
def fan3_spec():
    """Three steps off the base non-edge; step u bounds the interval at both
    ends, so the four types split into two components over one interval."""
    return LinkageSpec(
        vertices=("a", "b", "u", "v", "w"),
        bars=bars(
            ("a", "u", 5), ("b", "u", 3),
            ("a", "v", 10), ("b", "v", 9.5),
            ("a", "w", 6), ("b", "w", 5.51),
        ),
        base_nonedge=("a", "b"),
    )


@pytest.fixture
def dependent3_spec():
    """c and d off the base non-edge, e off (c, d): the Cayley space has two
    disjoint non-oriented intervals holding one component each."""
    return LinkageSpec(
        vertices=("a", "b", "c", "d", "e"),
        bars=bars(
            ("a", "c", 1.783), ("b", "c", 3.167),
            ("a", "d", 3.74), ("b", "d", 1.945),
            ("c", "e", 0.523), ("d", "e", 2.804),
        ),
        base_nonedge=("a", "b"),
    )


@pytest.fixture
def not_low_spec():
    """Third step anchored on (a, v2): a and v2 share no common neighbor."""
    return LinkageSpec(
        vertices=("a", "b", "v1", "v2", "v3"),
        bars=bars(
            ("a", "v1", 2.0), ("b", "v1", 2.5),
            ("a", "v2", 3.0), ("b", "v2", 3.5),
            ("a", "v3", 1.2), ("v2", "v3", 2.2),
        ),
        base_nonedge=("a", "b"),
    )


@pytest.fixture
def cluster_spec():
    """Two-bar linkage whose second bar is a rigid cluster with an interior
    vertex m riding on the (a, c) edge."""
    return LinkageSpec(
        vertices=("a", "b", "c", "m"),
        bars=bars(("b", "c", 3),),
        clusters=(
            Cluster(
                coords={"a": (0.0, 0.0), "c": (4.0, 0.0), "m": (2.0, 1.0)},
                anchors=("a", "c"),
            ),
        ),
        base_nonedge=("a", "b"),
    )


@pytest.fixture(scope="session")
def f1_cached():
    spec = LinkageSpec(
        vertices=("a", "b", "c", "d"),
        bars=bars(("a", "b", 2), ("b", "c", 6), ("a", "d", 3), ("d", "c", 4.5)),
        base_nonedge=("a", "c"),
    )
    return analyze(spec)


@pytest.fixture
def two_bar(two_bar_spec):
    return full(two_bar_spec)


@pytest.fixture
def four_bar(four_bar_spec):
    return full(four_bar_spec)


@pytest.fixture
def fan3(fan3_spec):
    return full(fan3_spec)


@pytest.fixture
def dependent3(dependent3_spec):
    return full(dependent3_spec)
