"""Structure of the C*-algebra generated by the shift and a linear-fractional
composition operator on the Hardy space: canonical forms, 2x2 matrix symbols,
essential spectra and norms, Fredholmness, and finite-section oracles."""

from .moebius import (
    AutomorphismError,
    ContactData,
    DegenerateMapError,
    MapClass,
    MapKind,
    MoebiusMap,
    NotParabolicError,
    NotSelfMapError,
    boundary_contact,
    classify,
    identity_map,
    parabolic_translation,
    rotation,
)
from .rings import HalfPolynomial, TrigPolynomial
from .symbol import (
    ContactMismatchError,
    InvalidContactError,
    LambdaPoint,
    NormReport,
    NotCentralError,
    SampledElement,
    SymbolElement,
    TRIPLE_POINT,
    embed_cphi,
    embed_csigma,
    embed_toeplitz,
    essential_norm,
    essential_norm_report,
    essential_spectrum,
    gelfand_value,
    identity_element,
    is_central,
    is_fredholm,
    operator_norm,
    phi_lambda,
    spectrum_samples,
    zero_element,
)
from .rewriter import (
    ExpressionSyntaxError,
    NotInGeneratorRingError,
    composition_sum_pretty,
    normalize,
    parse,
    render,
    to_composition_sum,
)
from .oracle import (
    NotSelfAdjointError,
    PoleInDiskError,
    WindowTooLargeError,
    composition_matrix,
    compression_eigs,
    fill_distance,
    matrix_csv,
    sequence_csv,
    taylor_coeffs,
    toeplitz_matrix,
    truncate,
    vanishing_sequence,
)
from .tolerances import TOL, Tolerances

__version__ = "0.1.0"

__all__ = [
    "AutomorphismError",
    "ContactData",
    "ContactMismatchError",
    "DegenerateMapError",
    "ExpressionSyntaxError",
    "HalfPolynomial",
    "InvalidContactError",
    "LambdaPoint",
    "MapClass",
    "MapKind",
    "MoebiusMap",
    "NormReport",
    "NotCentralError",
    "NotInGeneratorRingError",
    "NotParabolicError",
    "NotSelfAdjointError",
    "NotSelfMapError",
    "PoleInDiskError",
    "SampledElement",
    "SymbolElement",
    "TOL",
    "TRIPLE_POINT",
    "Tolerances",
    "TrigPolynomial",
    "WindowTooLargeError",
    "boundary_contact",
    "classify",
    "composition_matrix",
    "composition_sum_pretty",
    "compression_eigs",
    "embed_cphi",
    "embed_csigma",
    "embed_toeplitz",
    "essential_norm",
    "essential_norm_report",
    "essential_spectrum",
    "fill_distance",
    "gelfand_value",
    "identity_element",
    "identity_map",
    "is_central",
    "is_fredholm",
    "matrix_csv",
    "normalize",
    "sequence_csv",
    "operator_norm",
    "parabolic_translation",
    "parse",
    "phi_lambda",
    "render",
    "rotation",
    "spectrum_samples",
    "taylor_coeffs",
    "to_composition_sum",
    "toeplitz_matrix",
    "truncate",
    "vanishing_sequence",
    "zero_element",
]
