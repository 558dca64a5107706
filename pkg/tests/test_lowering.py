from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thomkit.algebra import Polynomial, TruncatedSeries, Variable, format_poly, parse_poly, rename_family
from thomkit.lowering import lower, lower_slots, shift_indices, twist_expand, unfolding_twist

from conftest import homogeneous, polynomials

P = parse_poly


def product_oracle(p: Polynomial, i: int) -> Polynomial:
    """Coefficient of ``t^i`` in the product of ``(x[u] + t x[u-1])`` over all slots."""
    total = Polynomial()
    t = Polynomial.var("y")
    for m, coeff in p:
        acc = Polynomial.constant(coeff)
        for v in m.slots():
            acc = acc * (Polynomial.var(v.family, v.index) + t * Polynomial.var(v.family, v.index - 1))
        total = total + acc.collect(Variable("y")).get(i, Polynomial())
    return total


def test_worked_example_byte_exact():
    out = lower(P("x[1]*x[2]*x[5] + x[8] + x[4]^2"), 2)
    assert format_poly(out) == "x[1]*x[5] + x[2]*x[4] + x[1]^2*x[4] + x[3]^2"


@pytest.mark.parametrize(
    "poly, i, expected",
    [
        ("c[2]^2", 2, "c[1]^2"),
        ("c[2]^2", 1, "2*c[1]*c[2]"),
        ("c[1]*c[3] + 2*c[4]", 2, "c[2]"),
        ("c[2]^2 + c[1]*c[3] + 2*c[4]", 2, "c[1]^2 + c[2]"),
        ("d[0]^2", 1, "2*d[-1]*d[0]"),
        ("d[-1]*d[1]", 2, "d[-2]*d[0]"),
        ("c[3]", 2, "0"),
        ("7", 0, "7"),
    ],
)
def test_examples(poly, i, expected):
    assert lower(P(poly), i) == P(expected)


def test_order_zero_is_identity():
    p = P("x[1]*x[2]*x[5] + x[8] + x[4]^2")
    assert lower(p, 0) == p


def test_rejects_mixed_families_and_negative_order():
    with pytest.raises(ValueError):
        lower(P("c[1]*d[1]"), 1)
    with pytest.raises(ValueError):
        lower(P("c[1]*y"), 1)
    with pytest.raises(ValueError):
        lower(P("c[1]"), -1)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 4), st.integers(1, 3))
def test_padding_with_unit_slots_is_invisible(indices, i, pad):
    # x[0] lowers to x[-1] = 0, so extra unit slots never contribute
    assert lower_slots(indices, i, "c") == lower_slots(list(indices) + [0] * pad, i, "c")


@given(polynomials(("d",)), st.integers(-3, 3), st.integers(0, 3))
def test_uniform_shift_commutes(p, s, i):
    assert lower(shift_indices(p, s), i) == shift_indices(lower(p, i), s)


def test_shift_rejects_other_families():
    with pytest.raises(ValueError):
        shift_indices(P("c[1]"), 1)


@given(polynomials(("c",)), polynomials(("c",)), st.integers(0, 4), st.integers(-3, 3))
@settings(max_examples=60)
def test_linearity(p, q, i, a):
    assert lower(p * a + q, i) == lower(p, i) * a + lower(q, i)


@given(homogeneous("c", max_degree=7), st.integers(0, 4))
def test_degree_drops_by_order(p, i):
    out = lower(p, i)
    if out:
        assert out.degree == p.degree - i


@given(polynomials(("c",)), st.integers(0, 5))
@settings(max_examples=80)
def test_literal_matches_product_oracle(p, i):
    assert lower(p, i) == product_oracle(p, i)


@given(polynomials(("d",)), st.integers(0, 4))
@settings(max_examples=60)
def test_literal_matches_product_oracle_d(p, i):
    assert lower(p, i) == product_oracle(p, i)


# twisted substitution


def test_twist_expand_single_class():
    e = twist_expand(P("cs[1]"), *unfolding_twist())
    assert e.top_degree == 1
    assert e.parts == {1: Polynomial.constant(1), 0: P("c[1]")}


def test_twist_expand_a2_sharp():
    e = twist_expand(P("cs[2]^2 + cs[1]*cs[3] + 2*cs[4]"), *unfolding_twist())
    assert e.by_lowering_order(2) == P("c[1]^2 + c[2]")
    assert e.part(1) == P("3*c[1]*c[2] + 3*c[3]")
    # two factors per monomial, so nothing above y^2
    assert e.part(3) == 0 and e.part(4) == 0


def test_twist_expand_reconstructs():
    p = P("cs[2]^2 - 3*cs[1]*cs[3]")
    e = twist_expand(p, *unfolding_twist())
    sub = TruncatedSeries.total_class("c", 4)
    y = Polynomial.var("y")
    images = {Variable("cs", i): sub[i] + y * sub[i - 1] for i in range(1, 5)}
    assert e.reconstruct() == p.substitute(images)


def test_twist_expand_rejects_wrong_input():
    with pytest.raises(ValueError):
        twist_expand(P("c[1]"), *unfolding_twist())
    with pytest.raises(ValueError):
        twist_expand(P("cs[5]"), *unfolding_twist(cap=4))


@given(homogeneous("cs", max_degree=8))
@settings(max_examples=60, deadline=None)
def test_flat_property(p):
    e = twist_expand(p, *unfolding_twist())
    q = rename_family(p, "cs", "c")
    for i in range(e.top_degree + 1):
        assert e.by_lowering_order(i) == lower(q, i)
