"""Exact computations with Thom series, lowering operators and Schur expansions."""

from .algebra import Polynomial, TruncatedSeries, Variable, format_poly, parse_poly
from .catalog import specialize, thom_polynomial, ts_terms
from .lowering import lower, twist_expand
from .schur import schur_positive, to_schur

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "TruncatedSeries",
    "Variable",
    "format_poly",
    "lower",
    "parse_poly",
    "schur_positive",
    "specialize",
    "thom_polynomial",
    "to_schur",
    "ts_terms",
    "twist_expand",
]
