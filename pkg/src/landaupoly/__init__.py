"""Landau-type univalence and schlicht radii for bounded poly-analytic functions."""

from .extremal import (
    ExtremalKind,
    ExtremalSpec,
    build_extremal,
    g1_spec,
    g2_profile,
    g4_spec,
    lemma1_extremal_series,
    sharpness_witness,
)
from .polyfn import ClosedAnalytic, Kind, PolyFn, eval_poly, from_coeffs, order_residual, wirtinger_derivs
from .radii import (
    LandauParams,
    ParamError,
    RadiusResult,
    Variant,
    landau_radii,
    make_params,
    profile_value,
    solve_monotone_root,
)
from .series import (
    AnalyticSeries,
    cauchy_product,
    differentiate,
    eval_series,
    normalize_bounded,
    series_divide,
)
from .verify import (
    BoundKind,
    VerificationReport,
    check_bounds_suite,
    check_distortion_bound,
    check_lemma6_condition,
    check_schlicht_coverage,
    check_starlike_sense_preserving,
    check_univalence_grid,
    generate_admissible,
    lemma6_value,
    run_verification,
    winding_number,
)

__version__ = "0.1.0"
