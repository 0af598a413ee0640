from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from refs import box_partitions, naive_mul, poly_at, qnum_at, spread
from symcat.qpoly import (
    NonExactDivision,
    QPoly,
    divmod_poly,
    eval_int,
    exact_div,
    gaussian_binomial,
    gaussian_binomial_product,
    is_palindromic,
    mul,
    quantum_number,
    substitute_power,
)

q = QPoly.monomial(1)
one = QPoly.one()


def P(*coeffs):
    return QPoly(coeffs)


# ---- examples

def test_quantum_number_examples():
    assert quantum_number(5, 1) == P(1, 1, 1, 1, 1)
    assert quantum_number(1, 7) == one
    assert quantum_number(2, 3) == P(1, 0, 0, 1)


@pytest.mark.parametrize("n,step", [(0, 1), (3, 0), (-1, 2)])
def test_quantum_number_rejects(n, step):
    with pytest.raises(ValueError):
        quantum_number(n, step)


def test_gaussian_binomial_examples():
    for n in range(1, 9):
        assert gaussian_binomial(1, n - 1, 1) == quantum_number(n, 1)
    assert gaussian_binomial(2, 3, 1) == P(1, 1, 2, 2, 2, 1, 1)
    # brute force through the product formula
    assert gaussian_binomial(2, 3) == exact_div(quantum_number(5) * quantum_number(4), quantum_number(2))
    for k in range(6):
        for l in range(6):
            assert eval_int(gaussian_binomial(k, l), 1) == comb(k + l, k)


def test_mul_examples():
    assert (one + q) * (one - q) == one - q * q
    assert quantum_number(3) * one == quantum_number(3)
    assert mul(quantum_number(2, 3), quantum_number(3, 1)) == quantum_number(6)


def test_exact_div_examples():
    assert exact_div(quantum_number(6), quantum_number(3) * quantum_number(2)) == P(1, -1, 1)
    assert exact_div(quantum_number(4), P(1, 0, 1)) == P(1, 1)
    for n in range(1, 13):
        for m in range(1, n + 1):
            if n % m == 0:
                assert exact_div(quantum_number(n, m), quantum_number(m, n)) == quantum_number(n // m, m)


def test_exact_div_refuses_remainder():
    with pytest.raises(NonExactDivision):
        exact_div(quantum_number(5), quantum_number(2))
    with pytest.raises(ZeroDivisionError):
        exact_div(one, QPoly())


def test_substitute_power_examples():
    assert substitute_power(one + q, 4) == P(1, 0, 0, 0, 1)
    assert substitute_power(quantum_number(3), 8) == quantum_number(3, 8)
    p = P(3, 0, -2, Fraction(1, 2))
    assert substitute_power(p, 1) == p


def test_eval_int_examples():
    for n in range(1, 10):
        assert eval_int(quantum_number(n + 1, 2), -1) == n + 1
    e6i = (one + QPoly.monomial(9)) * (one + QPoly.monomial(17)) * quantum_number(3, 8)
    assert eval_int(e6i, -1) == 0
    p = P(4, -1, 7, 2)
    assert eval_int(p, 1) == 12


def test_palindromic_examples():
    assert is_palindromic(P(1, 0, 0, 0, 1, 1, 0, 0, 0, 1))
    assert is_palindromic((one + QPoly.monomial(4)) * (one + QPoly.monomial(5)))
    assert not is_palindromic(P(1, 2))
    assert is_palindromic(one)


def test_zero_polynomial():
    z = QPoly()
    assert z.degree is None and z.is_zero()
    assert P(0, 0) == z
    assert z * quantum_number(3) == z


def test_coefficients_lowest_terms():
    p = P(Fraction(2, 4), Fraction(6, 3))
    assert p.coeffs == (Fraction(1, 2), 2)
    assert isinstance(p.coeffs[1], int)


def test_json_round_trip():
    p = P(Fraction(-3, 7), 0, 5)
    assert p.to_json() == '["-3/7", "0", "5"]'
    assert QPoly.from_json(p.to_json()) == p


# ---- independent oracles

def test_gaussian_binomial_counts_box_partitions():
    for k in range(8):
        for l in range(8):
            assert list(gaussian_binomial(k, l).coeffs) == box_partitions(k, l)


def test_quantum_number_matches_geometric_sum():
    for n in range(1, 12):
        for step in range(1, 5):
            for x in (2, 3, Fraction(1, 3), -2):
                assert eval_int(quantum_number(n, step), x) == qnum_at(n, step, x)


# ---- properties

small = st.integers(min_value=-6, max_value=6)
polys = st.lists(small, max_size=9).map(QPoly)
nonzero = st.lists(small, min_size=1, max_size=6).filter(lambda c: c[-1] != 0).map(QPoly)


@given(st.integers(1, 30), st.integers(1, 30))
def test_divisibility_identity(n, m):
    if n % m:
        n *= m
    assert exact_div(quantum_number(n), quantum_number(m)) == quantum_number(n // m, m)


@given(st.integers(0, 10), st.integers(0, 10))
def test_recurrence_equals_product(k, l):
    assert gaussian_binomial(k, l) == gaussian_binomial_product(k, l)


@given(st.integers(1, 10), st.integers(1, 10))
def test_both_recurrences(k, l):
    lhs = gaussian_binomial(k, l)
    assert lhs == gaussian_binomial(k, l - 1).shift(k) + gaussian_binomial(k - 1, l)
    assert lhs == gaussian_binomial(k, l - 1) + gaussian_binomial(k - 1, l).shift(l)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(1, 4))
def test_gaussian_symmetric_and_substituted(k, l, step):
    g = gaussian_binomial(k, l, step)
    assert g == gaussian_binomial(l, k, step)
    assert g == substitute_power(gaussian_binomial(k, l), step)
    assert g.degree == step * k * l
    assert g.is_nonnegative_integral() and is_palindromic(g)


@given(polys, nonzero)
def test_div_mul_round_trip(a, b):
    assert exact_div(mul(a, b), b) == a


@given(polys, nonzero)
def test_divmod_reconstructs(a, b):
    quot, rem = divmod_poly(a, b)
    assert quot * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@given(polys, polys)
def test_mul_matches_naive(a, b):
    assert list(mul(a, b).coeffs) == naive_mul(list(a.coeffs), list(b.coeffs))


@given(polys, st.integers(1, 5), st.integers(-3, 3))
def test_substitute_power_evaluates(a, m, x):
    assert eval_int(substitute_power(a, m), x) == poly_at(a.coeffs, x ** m)
    if not a.is_zero():
        assert substitute_power(a, m).degree == m * a.degree


@settings(max_examples=50)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(1, 3))
def test_gaussian_spread(k, l, step):
    assert list(gaussian_binomial(k, l, step).coeffs) == spread(box_partitions(k, l), step)
