from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thomkit.algebra import (
    ParseError,
    Polynomial,
    TruncatedSeries,
    Variable,
    det,
    format_poly,
    normalize,
    parse_poly,
    poly_from_json,
    quotient_total_class,
    series_invert,
    series_mul,
    terms_to_json,
    twist_total_class,
)

from conftest import homogeneous, monomial_factors, polynomials

P = parse_poly
ALL_FAMILIES = ("a", "b", "c", "cs", "d", "x", "y")


def c(i):
    return Variable("c", i)


def series(*coeffs, cap=12):
    return TruncatedSeries.from_coefficients([P(x) if isinstance(x, str) else x for x in coeffs], cap)


# normalize


def test_normalize_drops_unit():
    assert normalize([(c(0), 1), (c(2), 1)]) == normalize([(c(2), 1)])


def test_normalize_vanishing():
    assert normalize([(c(-1), 1), (c(3), 1)]) is None


def test_normalize_d_family_untouched():
    m = normalize([(Variable("d", -2), 1), (Variable("d", 2), 1)])
    assert m.factors == ((Variable("d", -2), 1), (Variable("d", 2), 1))
    assert normalize([(Variable("d", 0), 2)]).factor_count == 2


@pytest.mark.parametrize(
    "factors",
    [
        [(Variable("y", 1), 1)],
        [(c(1), 0)],
        [(c(1), -1)],
        [(Variable("z", 1), 1)],
    ],
)
def test_normalize_rejects_malformed(factors):
    with pytest.raises(ValueError):
        normalize(factors)


def test_normalize_is_canonical_order():
    m = normalize([(Variable("x", 2), 1), (Variable("cs", 1), 1), (c(3), 2), (Variable("c", 1), 1)])
    assert [v.family for v, _ in m.factors] == ["c", "c", "cs", "x"]
    assert [v.index for v, _ in m.factors] == [1, 3, 1, 2]
    assert m.factor_count == 5
    assert m.degree == 1 + 6 + 1 + 2


@given(monomial_factors(ALL_FAMILIES))
def test_normalize_idempotent(factors):
    m = normalize(factors)
    if m is not None:
        assert normalize(m.factors) == m


# ring operations


def test_difference_of_squares():
    assert P("c[1] + c[2]") * P("c[1] - c[2]") == P("c[1]^2 - c[2]^2")


def test_square_in_d():
    assert P("d[0] + d[1]") ** 2 == P("d[0]^2 + 2*d[0]*d[1] + d[1]^2")


@given(polynomials(ALL_FAMILIES))
def test_multiplicative_identity(p):
    assert Polynomial.constant(1) * p == p
    assert p * 1 == p
    assert p - p == 0


@given(polynomials(ALL_FAMILIES), polynomials(ALL_FAMILIES), polynomials(ALL_FAMILIES))
@settings(max_examples=60)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(homogeneous("c", max_degree=5), homogeneous("c", max_degree=5))
def test_grading_is_additive(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree


def test_zero_coefficients_are_dropped():
    p = P("c[1] + c[2]") - P("c[2]")
    assert len(p) == 1
    assert P("c[1] - c[1]").is_zero()


def test_equality_with_scalars():
    assert P("3/2") == Fraction(3, 2)
    assert P("0") == 0


def test_determinant_2x2():
    m = [[P("c[1]"), P("c[2]")], [P("1"), P("c[1]")]]
    assert det(m) == P("c[1]^2 - c[2]")


def test_determinant_matches_leibniz():
    from itertools import permutations

    entries = [[Polynomial.var("x", 1 + (3 * i + j) % 5) + (i - j) for j in range(4)] for i in range(4)]
    total = Polynomial()
    for perm in permutations(range(4)):
        sign = 1
        for a in range(4):
            for b in range(a + 1, 4):
                if perm[a] > perm[b]:
                    sign = -sign
        term = Polynomial.constant(sign)
        for row, col in enumerate(perm):
            term = term * entries[row][col]
        total = total + term
    assert det(entries) == total


# series


def test_invert_total_class():
    s = series(1, "a[1]", "a[2]", cap=2)
    assert series_invert(s) == series(1, "-a[1]", "a[1]^2 - a[2]", cap=2)


def test_invert_geometric():
    s = series(1, "y", cap=3)
    assert s.inverse() == series(1, "-y", "y^2", "-y^3", cap=3)


def test_series_product():
    assert series_mul(series(1, "c[1]", cap=2), series(1, "-c[1]", cap=2)) == series(1, 0, "-c[1]^2", cap=2)


def test_invert_rejects_non_unit():
    with pytest.raises(ValueError):
        series(2, "y").inverse()
    with pytest.raises(ValueError):
        series("c[1]", "y").inverse()


def test_cap_mismatch():
    with pytest.raises(ValueError):
        series(1, cap=2) * series(1, cap=3)


@pytest.mark.parametrize("cap", range(0, 13))
def test_inverse_is_inverse(cap):
    for fam in ("a", "c"):
        s = TruncatedSeries.total_class(fam, cap)
        assert (s * s.inverse()).is_one()


def test_quotient_examples():
    one = TruncatedSeries.one(2)
    b = series(1, "b[1]", cap=2)
    assert quotient_total_class(b, one) == b
    assert quotient_total_class(b, b).is_one()
    assert quotient_total_class(one, series(1, "a[1]", cap=2)) == series(1, "-a[1]", "a[1]^2", cap=2)


def test_quotient_classes_in_a_and_b():
    a = TruncatedSeries.total_class("a", 3)
    b = TruncatedSeries.total_class("b", 3)
    q = quotient_total_class(b, a)
    assert q[1] == P("b[1] - a[1]")
    assert q[2] == P("b[2] - a[1]*b[1] + a[1]^2 - a[2]")


def test_twist_unfolding():
    cser = TruncatedSeries.total_class("c", 4)
    out = twist_total_class(cser, series(1, "y", cap=4), TruncatedSeries.one(4))
    assert out[1] == P("c[1] + y")
    assert out[2] == P("c[2] + c[1]*y")


def test_twist_square_map():
    out = twist_total_class(TruncatedSeries.one(4), series(1, "2*y", cap=4), series(1, "y", cap=4))
    assert out == series(1, "y", "-y^2", "y^3", "-y^4", cap=4)


def test_twist_rejects_non_y_factor():
    with pytest.raises(ValueError):
        twist_total_class(TruncatedSeries.one(2), series(1, "c[1]", cap=2), TruncatedSeries.one(2))


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_trivial_twist_is_identity(ys):
    xi = series(1, *[Polynomial.var("y") ** (i + 1) * v for i, v in enumerate(ys)], cap=6)
    cser = TruncatedSeries.total_class("c", 6)
    assert twist_total_class(cser, xi, xi) == cser


def test_from_graded_splits_by_degree():
    s = TruncatedSeries.from_graded(P("1 + 2*y - y^3"), 4)
    assert s == series(1, "2*y", 0, "-y^3", 0, cap=4)


# text


@pytest.mark.parametrize(
    "text",
    [
        "d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2]",
        "x[1]*x[5] + x[2]*x[4] + x[1]^2*x[4] + x[3]^2",
        "-c[1] + 1/2*c[2]^3",
        "-y + 2*c[1]*y^2",
        "-3/4",
        "0",
    ],
)
def test_print_parse_golden(text):
    assert format_poly(P(text)) == text


def test_parse_variants():
    assert P("2 d[0]") == P("2*d[0]")
    assert P("+c[1]") == P("c[1]")
    assert P("c[ -1 ]") == 0
    assert P("c[0]*c[2]") == P("c[2]")
    assert P("cs[1]*c[1]").families == {"c", "cs"}


@pytest.mark.parametrize("bad", ["", "c[1]+", "c[1]^0", "y[1]", "c1", "1/0*c[1]", "c[1]**2", "e[1]", "2 3"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


@given(polynomials(ALL_FAMILIES))
def test_print_parse_round_trip(p):
    assert P(format_poly(p)) == p
    assert P(format_poly(p, sort=True)) == p


@given(polynomials(ALL_FAMILIES))
def test_json_round_trip(p):
    assert poly_from_json(terms_to_json(p)) == p


def test_json_shape():
    assert terms_to_json(P("1/2*d[-1]*y^2")) == [{"coeff": "1/2", "factors": [["d", -1, 1], ["y", None, 2]]}]


def test_sorted_output_is_canonical():
    p, q = P("c[3] + c[1]*c[2] + c[1]"), P("c[1] + c[1]*c[2] + c[3]")
    assert format_poly(p, sort=True) == format_poly(q, sort=True) == "c[1] + c[1]*c[2] + c[3]"
