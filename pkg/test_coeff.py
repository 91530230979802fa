"""Tests for Laurent polynomials in u and trace polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.core.coeff import (
    LaurentU, TracePoly, ONE, U, U_INV, ZERO,
    laurent_arith, parse_laurent, parse_tracepoly, tracepoly_arith, x_var, z_var,
)
from src.core.errors import IncompatibleError, ParameterError, ParseError


laurents = st.dictionaries(
    st.integers(min_value=-3, max_value=3),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=4,
).map(LaurentU)

TRACE_MODULUS = 3


def _tracepoly(terms):
    total = TracePoly.zero(TRACE_MODULUS)
    for coeff, z_power, x_indices in terms:
        monomial = TracePoly.constant(TRACE_MODULUS)
        for _ in range(z_power):
            monomial = monomial * z_var(TRACE_MODULUS)
        for m in x_indices:
            monomial = monomial * x_var(TRACE_MODULUS, m)
        total = total + monomial.scale(coeff)
    return total


tracepolys = st.lists(
    st.tuples(
        laurents,
        st.integers(min_value=0, max_value=2),
        st.lists(st.integers(min_value=-4, max_value=4), max_size=2),
    ),
    max_size=3,
).map(_tracepoly)


def test_laurent_render():
    assert (U - 1) * (U + 1) == LaurentU({2: 1, 0: -1})
    assert ((U - 1) * (U + 1)).render() == "u^2 - 1"
    assert LaurentU({1: Fraction(1, 2), 0: Fraction(-1, 2)}).render() == "1/2*u - 1/2"
    assert U_INV.render() == "u^-1"
    assert (-U).render() == "-u"
    assert ZERO.render() == "0"


def test_laurent_equals_scalars():
    assert LaurentU.constant(3) == 3
    assert LaurentU.constant(Fraction(1, 2)) == Fraction(1, 2)
    assert U * U_INV == ONE


def test_laurent_zero_terms_dropped():
    value = LaurentU({1: 1, 0: 0, -1: 0})
    assert value.terms == {1: Fraction(1)}
    assert (U - U).is_zero()


def test_laurent_arith_ops():
    assert laurent_arith(U, ONE, 'add') == U + 1
    assert laurent_arith(U, ONE, 'sub') == U - 1
    assert laurent_arith(U, U, 'mul') == LaurentU.u_power(2)
    assert laurent_arith(U, ZERO, 'neg') == -U
    with pytest.raises(ParameterError):
        laurent_arith(U, U, 'div')


@settings(max_examples=1000, deadline=None)
@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=1000, deadline=None)
@given(tracepolys, tracepolys, tracepolys)
def test_tracepoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert a * TracePoly.constant(TRACE_MODULUS) == a


def test_x_var_reduces_index():
    assert x_var(2, 3) == x_var(2, 1)
    assert x_var(3, -1) == x_var(3, 2)
    assert x_var(2, 0) == TracePoly.constant(2)
    assert x_var(1, 5) == TracePoly.constant(1)


@given(
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=-10, max_value=10),
)
def test_x_var_is_periodic(d, m, k):
    assert x_var(d, m + k * d) == x_var(d, m)


def test_x_var_rejects_bad_modulus():
    with pytest.raises(ParameterError):
        x_var(0, 1)


def test_tracepoly_render():
    e_trace = (x_var(2, 0) + x_var(2, 1) * x_var(2, -1)).scale(Fraction(1, 2))
    assert e_trace.render() == "1/2 + 1/2*x_1^2"
    assert z_var(3).render() == "z"
    assert (x_var(3, 1) * x_var(3, 2)).render() == "x_1*x_2"
    assert (z_var(2) * z_var(2)).render() == "z^2"
    assert TracePoly.zero(2).render() == "0"


def test_tracepoly_render_factors_signs():
    value = TracePoly.constant(2, U) - z_var(2).scale(U - 1)
    assert value.render() == "-(u - 1)*z + u"


def test_tracepoly_incompatible_moduli():
    with pytest.raises(IncompatibleError):
        x_var(2, 1) + x_var(3, 1)
    with pytest.raises(IncompatibleError):
        tracepoly_arith(x_var(2, 1), x_var(4, 1), 'mul')


def test_tracepoly_rejects_out_of_range_index():
    with pytest.raises(ParameterError):
        TracePoly(3, {(0, ((3, 1),)): 1})


def test_map_x_merges_terms():
    q = x_var(4, 1) + x_var(4, 3)
    assert q.map_x(2, lambda i: x_var(2, i)) == x_var(2, 1).scale(2)


@pytest.mark.parametrize("text", [
    "1/2 + 1/2*x_1^2",
    "-(u - 1)*z + (1/2*u + 1/2) + (1/2*u - 1/2)*x_1^2",
    "z^2*x_1 - u^-1",
    "x_1*x_3 + 2*z",
])
def test_parse_round_trip(text):
    value = parse_tracepoly(text, 4)
    assert parse_tracepoly(value.render(), 4) == value


def test_parse_accepts_equivalent_forms():
    assert parse_tracepoly("(u+1)*(u-1)", 2) == TracePoly.constant(2, U * U - 1)
    assert parse_tracepoly("2/u", 2) == TracePoly.constant(2, U_INV * 2)
    assert parse_tracepoly("x_5", 4) == x_var(4, 1)
    assert parse_tracepoly("u·z − z", 2) == z_var(2).scale(U - 1)


def test_parse_laurent():
    assert parse_laurent("u^2 - 1") == U * U - 1
    with pytest.raises(ParseError):
        parse_laurent("z")


def test_parse_error_reports_column():
    with pytest.raises(ParseError) as excinfo:
        parse_tracepoly("z + $", 2)
    assert excinfo.value.column == 5
    assert "column 5" in str(excinfo.value)


def test_parse_rejects_non_monomial_division():
    with pytest.raises(ParseError):
        parse_tracepoly("1/(u+1)", 2)
    with pytest.raises(ParseError):
        parse_tracepoly("", 2)
