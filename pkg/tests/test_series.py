from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kleene_chains.recurrence import CASE_LABELS, base_sequences, subsequences
from kleene_chains.series import (
    PowerSeries,
    build_F,
    build_G,
    build_sub_series,
    build_T,
    build_U,
    coeff,
    ps_add,
    ps_inverse,
    ps_mul,
    ps_scale,
    ps_sqrt,
    ps_sub,
)

N = 50


def binomial_half(k: int) -> Fraction:
    out = Fraction(1)
    for j in range(k):
        out *= (Fraction(1, 2) - j) / (j + 1)
    return out


def test_arithmetic_examples():
    x = PowerSeries.x(4)
    assert ps_mul(x, x) == PowerSeries.of([0, 0, 1], 4)
    assert coeff(ps_scale(build_U(4), 3), 1) == 3
    a = PowerSeries.of([1, 2, 3], 4)
    assert ps_add(a, ps_scale(a, -1)) == PowerSeries.constant(0, 4)
    assert ps_sub(a, a) == PowerSeries.constant(0, 4)


def test_order_is_fixed():
    with pytest.raises(ValueError):
        PowerSeries.x(3) + PowerSeries.x(4)
    assert (PowerSeries.x(3) * PowerSeries.x(3)).order == 3
    # x^2 * x^2 falls off the end at order 3
    x2 = PowerSeries.of([0, 0, 1], 3)
    assert x2 * x2 == PowerSeries.constant(0, 3)


def test_sqrt_binomial_expansion():
    s = ps_sqrt(1 - 12 * PowerSeries.x(30))
    assert [int(c) for c in s.coeffs[:4]] == [1, -6, -18, -108]
    assert list(s.coeffs) == [binomial_half(k) * (-12) ** k for k in range(31)]


def test_sqrt_of_constant():
    assert ps_sqrt(PowerSeries.constant(9, 5)) == PowerSeries.constant(3, 5)


def test_sqrt_nested_radical():
    x = PowerSeries.x(N)
    a = 5 + 24 * x + 4 * ps_sqrt(1 - 12 * x)
    r = ps_sqrt(a)
    assert r * r == a
    assert r.coeffs[0] == 3


@pytest.mark.parametrize("c0", [0, 2, Fraction(1, 3), -4])
def test_sqrt_domain_errors(c0):
    with pytest.raises(ValueError):
        ps_sqrt(PowerSeries.of([c0, 1], 4))


def test_inverse():
    a = PowerSeries.of([2, 3, 5], 10)
    assert a * ps_inverse(a) == PowerSeries.constant(1, 10)


def test_builders_examples():
    assert coeff(build_G(9), 1) == 3
    assert coeff(build_F(4), 4) == 41
    assert coeff(build_T(3), 3) == 30
    assert coeff(build_sub_series("T1", 3), 3) == 10
    assert coeff(build_sub_series("U3", 6), 6) == 3402
    assert coeff(build_G(9), 9) == 28146690
    assert coeff(build_U(5), 0) == 0
    assert coeff(build_F(10), 10) == 25473638
    for label in CASE_LABELS:
        assert coeff(build_sub_series(label, 3), 1) == 0
    with pytest.raises(IndexError):
        coeff(build_G(3), 4)


def test_coefficients_match_recurrence():
    base = base_sequences(N)
    subs = subsequences(N)
    for name, build in (("g", build_G), ("u", build_U), ("f", build_F), ("t", build_T)):
        s = build(N)
        assert s.is_integral()
        assert s.coeffs[0] == 0
        assert list(s.coeffs[1:]) == list(base[name].values)
    for label in CASE_LABELS:
        s = build_sub_series(label, N)
        assert s.is_integral()
        assert list(s.coeffs[1:]) == list(subs[label].values)


def test_functional_equations():
    x = PowerSeries.x(N)
    G, U, F, T = build_G(N), build_U(N), build_F(N), build_T(N)
    assert U == x + U * G
    assert F == 2 * F * U - F * F + x
    assert G == T + F + U
    assert build_sub_series("T4", N) == build_sub_series("U2", N)
    assert build_sub_series("T5", N) == build_sub_series("U1", N)


fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)


@given(
    st.fractions(min_value=Fraction(1, 20), max_value=20, max_denominator=20),
    st.lists(fractions, max_size=12),
)
def test_sqrt_of_square(c0, tail):
    order = 10
    s = PowerSeries.of([c0, *tail], order)
    assert ps_sqrt(s * s) == s
