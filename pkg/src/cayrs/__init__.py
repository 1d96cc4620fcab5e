"""Cayley configuration spaces and continuous motion of 1-dof
tree-decomposable planar linkages."""

from .cayley_space import (
    CayleyConfigSpace,
    OrientedCCS,
    OrientedInterval,
    build_ccs,
    build_oriented_ccs,
    candidate_endpoints,
    link_intervals,
)
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import (
    AmbiguousZeroSign,
    CayrsError,
    ClusterShareViolation,
    DegenerateCluster,
    InvalidLinkage,
    MismatchedLinkage,
    NonedgeNotInVector,
    NotConnected,
    NotLowComplexity,
    NotOneDof,
    NotRealizable,
    NotTreeDecomposable,
    TooManySteps,
    UnknownVertex,
    UnlinkedEndpoint,
    Unrealizable,
)
from .linkage import (
    Bar,
    Cluster,
    ConstructionStep,
    LinkageSpec,
    TDLinkage,
    analyze,
    check_generic,
    derive_construction,
    enumerate_base_nonedges,
    is_low,
    reduce_clusters,
)
from .motion import (
    AdaptiveSampler,
    ContinuousMotion,
    Curve3D,
    MotionLeg,
    PairCase,
    UniformSampler,
    classify_pair,
    curve3d,
    find_all_components,
    find_component,
    find_path,
    find_paths,
    locate_interval,
    nearest_realizations,
    sample_realizations,
    traced_curves,
)
from .realization import (
    Realization,
    RealizationType,
    canonical_types,
    cayley_distance,
    observed_type,
    orientation_of,
    realizable_at,
    realize,
    restore_decorations,
    solve_batch,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
