"""Exact graded polynomial arithmetic and total-class series."""

from .polynomial import (
    FAMILIES,
    ONE,
    FamilySpec,
    Monomial,
    Polynomial,
    Rational,
    Variable,
    det,
    graded_key,
    normalize,
    rename_family,
)
from .series import (
    DEFAULT_CAP,
    TruncatedSeries,
    quotient_total_class,
    series_invert,
    series_mul,
    twist_total_class,
)
from .text import ParseError, format_poly, parse_poly, poly_from_json, terms_to_json

__all__ = [
    "DEFAULT_CAP",
    "FAMILIES",
    "ONE",
    "FamilySpec",
    "Monomial",
    "ParseError",
    "Polynomial",
    "Rational",
    "TruncatedSeries",
    "Variable",
    "det",
    "format_poly",
    "graded_key",
    "normalize",
    "parse_poly",
    "poly_from_json",
    "quotient_total_class",
    "rename_family",
    "series_invert",
    "series_mul",
    "terms_to_json",
    "twist_total_class",
]
