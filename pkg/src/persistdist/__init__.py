"""Exact distances between 2-parameter interval persistence modules.

All coordinates and distances are exact: rationals are
:class:`fractions.Fraction` and the infinities are ``float('inf')``.
"""

from .bottleneck import (
    BottleneckResult,
    DistanceMatrix,
    bottleneck,
    bottleneck_distance,
    delta_matched,
    pairwise_matrix,
)
from .dimdist import (
    DimensionDistance,
    GridDifferential,
    GridFunction,
    accumulate,
    differential,
    dimension_distance,
    dimension_function,
    extend,
    shrink,
)
from .document import ModuleDocument, dump, load, parse, serialize
from .errors import (
    ChainsEndpointMismatch,
    EmptyRegion,
    IntervalError,
    NonMonotoneChain,
    NonRectilinearEdge,
    ParseError,
    ShapeMismatch,
    SizeLimitError,
    SizeLimitExceeded,
    TooManyComponents,
    ValidationError,
)
from .extreal import (
    INF,
    NEG_INF,
    DiagonalLine,
    MonotoneChain,
    Point,
    diag_project_chain,
    dist_inf,
    ext_add,
    format_scalar,
    to_scalar,
)
from .intersection import (
    IntersectionComponent,
    d_triv,
    intersect_components,
    is_valid,
    vertex_criterion,
)
from .interleaving import (
    EMPTY_SLICE,
    CandidateSet,
    SliceInterval,
    candidate_set,
    delta_star,
    interleave_1d,
    interleaving_distance,
    probe,
    slice,
)
from .interval import (
    IntervalModule,
    StaircaseInterval,
    boundary_vertices,
    contains,
    rectangle,
    shift,
    trivial_threshold,
    validate,
)
from .oracle import (
    SampleGrid,
    oracle_bottleneck,
    oracle_distance,
    oracle_is_interleaved,
)
from .render import render_svg

__version__ = "0.1.0"
