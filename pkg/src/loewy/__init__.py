"""Exact calculator for canonical filtrations of polarised-variety rings.

Computes Hilbert/weight/trace-squared series, Donaldson-Futaki invariants and
norms for a catalog of varieties with non-reductive automorphism group, and
cross-checks every closed form against a brute-force operator oracle. All
arithmetic is exact rational.
"""

from .families import FamilySpec, closed_form_reference, family_profile, parse_spec, validate_ample
from .linalg import BACKEND
from .profiles import (
    DFReport,
    GradedProfile,
    SeriesFit,
    df_and_norm,
    fit_series,
    series_values,
    swap_convention,
)
from .ratpoly import Polynomial, Rational, interpolate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DFReport",
    "FamilySpec",
    "GradedProfile",
    "Polynomial",
    "Rational",
    "SeriesFit",
    "closed_form_reference",
    "df_and_norm",
    "family_profile",
    "fit_series",
    "interpolate",
    "parse_spec",
    "series_values",
    "swap_convention",
    "__version__",
]
