"""Exact topology of real elliptic surfaces over P^1 from Weierstrass data.

The public surface: binary forms and circle points (exact arithmetic),
validated Weierstrass triples with Kodaira fiber classification, the
real-locus topology pipeline, the twist and I0* transformations with
their verifiers, an extremal-component search, and an independent
cell-complex oracle that cross-checks every topological output.
"""

from .binform import BinForm, FormDegreeError, Rational, form_gcd, squarefree_part
from .roots import (
    INFINITY,
    AlgebraicPoint,
    CircleOrder,
    CirclePoint,
    FinitePoint,
    InfinityPoint,
    finite,
    isolate_real_roots,
    sign_at,
    simplest_between,
    valuation_at,
)
from .weierstrass import (
    ConjugatePairTag,
    DeltaIdenticallyZero,
    FiberReport,
    JInvariant,
    KodairaType,
    NonMinimal,
    SurfaceInvariants,
    WeierstrassError,
    WeierstrassTriple,
    classify_fibers,
    discriminant,
    j_invariant,
    normalize,
    rescale,
    validate,
)
from .topology import (
    Arc,
    ArcDecomposition,
    BoundChecks,
    NotRealGeneric,
    RealFiberType,
    RealTopologyReport,
    arc_decomposition,
    betti,
    check_bounds,
    real_type_of_nodal,
    smooth_fiber_components,
)
from .transforms import (
    I0StarParams,
    I0StarVerification,
    InvalidI0StarParams,
    SearchBudget,
    SearchResult,
    i0star_transform,
    iterate_i0star,
    make_params,
    search_extremal,
    twist,
    verify_i0star,
)
from .oracle import Agreement, OracleDisagreement, OracleResult, compare, oracle_topology

__version__ = "0.1.0"

__all__ = [
    "BinForm",
    "FormDegreeError",
    "Rational",
    "form_gcd",
    "squarefree_part",
    "INFINITY",
    "AlgebraicPoint",
    "CircleOrder",
    "CirclePoint",
    "FinitePoint",
    "InfinityPoint",
    "finite",
    "isolate_real_roots",
    "sign_at",
    "simplest_between",
    "valuation_at",
    "ConjugatePairTag",
    "DeltaIdenticallyZero",
    "FiberReport",
    "JInvariant",
    "KodairaType",
    "NonMinimal",
    "SurfaceInvariants",
    "WeierstrassError",
    "WeierstrassTriple",
    "classify_fibers",
    "discriminant",
    "j_invariant",
    "normalize",
    "rescale",
    "validate",
    "Arc",
    "ArcDecomposition",
    "BoundChecks",
    "NotRealGeneric",
    "RealFiberType",
    "RealTopologyReport",
    "arc_decomposition",
    "betti",
    "check_bounds",
    "real_type_of_nodal",
    "smooth_fiber_components",
    "I0StarParams",
    "I0StarVerification",
    "InvalidI0StarParams",
    "SearchBudget",
    "SearchResult",
    "i0star_transform",
    "iterate_i0star",
    "make_params",
    "search_extremal",
    "twist",
    "verify_i0star",
    "Agreement",
    "OracleDisagreement",
    "OracleResult",
    "compare",
    "oracle_topology",
]
