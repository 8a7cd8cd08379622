"""Certified numerics for Hadamard convolution duality on the unit disk."""

from .contour import (
    DEFAULT_TOL,
    Certificate,
    CertStatus,
    InconclusiveError,
    Tolerances,
    min_modulus_on_circle,
    nonvanishing_in_disk,
    radius_schedule,
    winding_number,
)
from .duality import (
    CheckRecord,
    Functional,
    KernelPool,
    RegionCloud,
    THEOREM_NAMES,
    VerifierConfig,
    VerifierReport,
    apply,
    build_transpose_pool,
    functional_image,
    in_T,
    in_dual,
    in_dual_hull,
    in_perp,
    is_complete_T,
    verify_theorem,
)
from .family import (
    BorderDecomposition,
    Circle,
    Disk,
    FamilySpec,
    Fixed,
    MemberTag,
    ParamGrid,
    Pencil,
    Rational,
    Segment,
    UnsupportedFamilyError,
    border_decompose,
    border_elements,
    complete_hull,
    counterexample_family,
    default_kernel_family,
    nearest_member_distance,
    pencil_family,
    sample,
    sigma_search,
)
from .series import (
    DEFAULT_ORDER,
    EvalResult,
    Tail,
    TruncSeries,
    cauchy_tail_from_samples,
    const_one,
    convolution_convergence_bound,
    convolve,
    dilate,
    evaluate,
    evaluate_many,
    from_rational,
    is_normalized,
    ones,
    series_distance,
)
from .specfile import (
    SpecFileError,
    dump_family,
    family_to_dict,
    load_family,
    parse_family,
    parse_series,
)

__all__ = [
    "DEFAULT_ORDER",
    "DEFAULT_TOL",
    "BorderDecomposition",
    "CertStatus",
    "Certificate",
    "CheckRecord",
    "Circle",
    "Disk",
    "EvalResult",
    "FamilySpec",
    "Fixed",
    "Functional",
    "InconclusiveError",
    "KernelPool",
    "MemberTag",
    "ParamGrid",
    "Pencil",
    "Rational",
    "RegionCloud",
    "Segment",
    "SpecFileError",
    "THEOREM_NAMES",
    "Tail",
    "Tolerances",
    "TruncSeries",
    "UnsupportedFamilyError",
    "VerifierConfig",
    "VerifierReport",
    "apply",
    "border_decompose",
    "border_elements",
    "build_transpose_pool",
    "cauchy_tail_from_samples",
    "complete_hull",
    "const_one",
    "convolution_convergence_bound",
    "convolve",
    "counterexample_family",
    "default_kernel_family",
    "dilate",
    "dump_family",
    "evaluate",
    "evaluate_many",
    "family_to_dict",
    "from_rational",
    "functional_image",
    "in_T",
    "in_dual",
    "in_dual_hull",
    "in_perp",
    "is_complete_T",
    "is_normalized",
    "load_family",
    "min_modulus_on_circle",
    "nearest_member_distance",
    "nonvanishing_in_disk",
    "ones",
    "parse_family",
    "parse_series",
    "pencil_family",
    "radius_schedule",
    "sample",
    "series_distance",
    "sigma_search",
    "verify_theorem",
    "winding_number",
]

__version__ = "0.1.0"
