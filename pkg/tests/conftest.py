from __future__ import annotations

import sys

from hypothesis import strategies as st

from thomkit.algebra import Polynomial, Variable

coefficients = st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(bool)


def _index(family: str):
    if family == "d":
        return st.integers(-4, 4)
    if family == "y":
        return st.just(0)
    return st.integers(0, 6)


@st.composite
def monomial_factors(draw, families=("c",)):
    fams = draw(st.lists(st.sampled_from(families), max_size=4))
    return [(Variable(f, draw(_index(f))), draw(st.integers(1, 3))) for f in fams]


@st.composite
def polynomials(draw, families=("c",), max_terms=5):
    terms = draw(st.lists(st.tuples(monomial_factors(families), coefficients), max_size=max_terms))
    return Polynomial.from_terms(terms)


@st.composite
def homogeneous(draw, family="c", max_degree=8, max_terms=6, degree=None):
    """Homogeneous polynomial in one positive-index family."""
    if degree is None:
        degree = draw(st.integers(0, max_degree))
    terms = []
    for _ in range(draw(st.integers(1, max_terms))):
        parts, left = [], degree
        while left:
            p = draw(st.integers(1, left))
            parts.append(p)
            left -= p
        terms.append(([(Variable(family, u), 1) for u in parts], draw(coefficients)))
    return Polynomial.from_terms(terms)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
