"""Exact (t-1)-chromatic Ramsey numbers for stars and for stars plus one matching.

The package computes closed-form values, builds extremal witness colorings,
checks colorings against targets and confirms small cases by exhaustive search.
"""

from .core import (
    Coloring,
    DerivationTrace,
    MatchingDecomposition,
    Matching,
    Parameters,
    ParameterError,
    Star,
    TargetSpec,
    normalize,
    targets_for,
)
from .formulas import ramsey_value, star_matching_ramsey, star_ramsey, star_ramsey_base
from .constructions import build_witness
from .checker import coloring_arrives, max_matching, star_missing_color
from .oracle import exists_avoiding_coloring, oracle_ramsey

__all__ = [
    "Coloring",
    "DerivationTrace",
    "MatchingDecomposition",
    "Matching",
    "Parameters",
    "ParameterError",
    "Star",
    "TargetSpec",
    "normalize",
    "targets_for",
    "ramsey_value",
    "star_matching_ramsey",
    "star_ramsey",
    "star_ramsey_base",
    "build_witness",
    "coloring_arrives",
    "max_matching",
    "star_missing_color",
    "exists_avoiding_coloring",
    "oracle_ramsey",
]

__version__ = "0.1.0"
