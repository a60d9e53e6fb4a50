"""Horadam polynomials and coefficient bounds for three bi-univalent function classes."""
from .bounds import BoundReport, Branch, bound_a2, bound_a3, bound_report, denom, fekete_szego
from .classes import (
    ClassKind,
    ClassRangeError,
    ClassSpec,
    CoefficientSystem,
    DegenerateParameterError,
    FunctionCoeffs,
    coefficient_system,
    extract_schwarz,
    functional_series,
    inverse_coeffs,
    schwarz_weights,
)
from .corollaries import corollary_bounds, corollary_spec
from .horadam import (
    CHEBYSHEV_SECOND,
    FIBONACCI,
    HoradamParams,
    PolyFamily,
    chebyshev_u_trig,
    family_params,
    gf_coefficients,
    horadam_eval,
    horadam_sequence,
)
from .powerseries import TruncatedSeries, compose, exp0, log1, real_power, revert
from .verify import VerifyReport, construct_candidate, roundtrip_check, run_verification

__version__ = "0.1.0"
