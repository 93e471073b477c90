"""Exact-arithmetic invariants of the 28 deformation families of smooth Fano
4-folds with Picard number 3 that contain a prime divisor of Picard rank 1.

Each family is built from a triple (Z, a, d): Z one of seven Fano 3-folds of
Picard number 1 and index >= 2, Y = P(O_Z + O_Z(a)) the split P^1-bundle, and
X the blow-up of Y along a surface lying over a smooth member of |O_Z(d)|.
The package enumerates the admissible triples, computes Hodge numbers,
anticanonical degrees and tangent-sheaf cohomology from first principles
(several independent routes each, all in exact integer/rational arithmetic),
models the curve and nef cones, and verifies everything against embedded
reference tables.
"""

__version__ = "0.1.0"

from .catalog import (
    FamilyParams,
    FanoThreefold,
    HBaseLocus,
    catalog,
    enumerate_families,
    threefold,
    validate_params,
)
from .classify import (
    BaseLocusKind,
    BaseLocusResult,
    Rationality,
    TangentBounds,
    ToricLabel,
    base_locus,
    chi_tangent,
    h0_line_bundle,
    rationality,
    tangent_bounds,
    toric_label,
)
from .cones import (
    CurveClass,
    CurveGen,
    DivisorClass,
    FibreLike,
    NefRay,
    RayLabel,
    anticanonical,
    is_fano,
    is_fibre_like,
    ne_generators,
    nef_rays,
    pairing,
    pairing_matrix,
    to_alternate_basis,
)
from .errors import ConsistencyError, ContextMismatchError, IntegrityError
from .golden import GoldenTables, golden_tables
from .hodge import (
    FourfoldHodge,
    HodgePolynomial,
    SurfaceHodge,
    blowup_formula,
    bundle_formula,
    hodge_of_fourfold,
    hodge_of_threefold,
    projective_space,
    surface_h02,
    surface_h11,
)
from .intersect import (
    BlowupCentreData,
    BundleInput,
    CanonicalDegrees,
    FourfoldInvariants,
    fano4_invariants,
    p1_bundle_invariants,
    projective_bundle_invariants,
    riemann_roch_chi,
    surface_blowup_invariants,
)
from .report import (
    FamilyRecord,
    Mismatch,
    VerificationReport,
    build_all_records,
    build_record,
    export,
    verify_all,
)

__all__ = [
    "__version__",
    # catalog
    "FanoThreefold", "FamilyParams", "HBaseLocus",
    "catalog", "threefold", "validate_params", "enumerate_families",
    # hodge
    "HodgePolynomial", "SurfaceHodge", "FourfoldHodge",
    "projective_space", "bundle_formula", "blowup_formula",
    "surface_h02", "surface_h11", "hodge_of_threefold", "hodge_of_fourfold",
    # intersect
    "BundleInput", "BlowupCentreData", "CanonicalDegrees", "FourfoldInvariants",
    "projective_bundle_invariants", "surface_blowup_invariants",
    "riemann_roch_chi", "p1_bundle_invariants", "fano4_invariants",
    # cones
    "DivisorClass", "CurveClass", "CurveGen", "NefRay", "RayLabel", "FibreLike",
    "anticanonical", "pairing", "pairing_matrix", "to_alternate_basis",
    "ne_generators", "nef_rays", "is_fano", "is_fibre_like",
    # classify
    "BaseLocusKind", "BaseLocusResult", "Rationality", "ToricLabel",
    "TangentBounds", "base_locus", "rationality", "toric_label",
    "h0_line_bundle", "chi_tangent", "tangent_bounds",
    # report / golden
    "FamilyRecord", "Mismatch", "VerificationReport",
    "build_record", "build_all_records", "verify_all", "export",
    "GoldenTables", "golden_tables",
    # errors
    "ConsistencyError", "IntegrityError", "ContextMismatchError",
]
