"""Riesz s-energy of N equally spaced points on the unit circle.

Exact evaluation, the convergent series in incomplete zeta functions, the
complete asymptotic expansion in N (including the logarithmic cases
``s = 1, 3, 5, ...``) and verification suites that cross-check them.
"""
from .coeffs import (
    AlphaPolynomial,
    ExpansionCoefficient,
    alpha,
    alpha_eval,
    alpha_table,
    c_coefficient,
    divergence_profile,
)
from .energy import (
    Expansion,
    asymptotic_expansion,
    energy_asymptotic,
    energy_direct,
    energy_log,
    energy_series,
    exact_even,
    g_constant,
    incomplete_zeta,
    psi_quantity,
    riesz_energy,
    v_s,
)
from .errors import (
    CapacityError,
    ConfigurationError,
    DomainError,
    ExceptionalIndexError,
    PoleError,
    PrecisionError,
    RieszError,
    TruncationWarning,
)
from .specfun import zeta
from .verify import (
    SlopeFitReport,
    VerificationReport,
    audit_divergence,
    audit_optimality,
    audit_signs,
    fit_error_order,
    run_identity_suite,
)

__version__ = "0.1.0"

__all__ = [
    "zeta",
    "AlphaPolynomial",
    "CapacityError",
    "ConfigurationError",
    "DomainError",
    "ExceptionalIndexError",
    "Expansion",
    "ExpansionCoefficient",
    "PoleError",
    "PrecisionError",
    "RieszError",
    "SlopeFitReport",
    "TruncationWarning",
    "VerificationReport",
    "alpha",
    "alpha_eval",
    "alpha_table",
    "asymptotic_expansion",
    "audit_divergence",
    "audit_optimality",
    "audit_signs",
    "c_coefficient",
    "divergence_profile",
    "energy_asymptotic",
    "energy_direct",
    "energy_log",
    "energy_series",
    "exact_even",
    "fit_error_order",
    "g_constant",
    "incomplete_zeta",
    "psi_quantity",
    "riesz_energy",
    "run_identity_suite",
    "v_s",
]
