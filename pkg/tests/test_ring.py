"""Exact scalar domains, polynomials, rational functions, q-analogs."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankel_lab.ring import (QQ, QQ_Q, QQ_U, ZZ, InexactDivisionError, Poly,
                             RatFunc, binom, exact_div, poly_gcd, poly_lcm,
                             q_binomial, q_int, specialize_param)


def qpoly(*coeffs):
    return Poly(coeffs, "q", QQ)


def xpoly(*coeffs):
    return Poly(coeffs, "x", QQ)


# ---------------------------------------------------------------------------
# scalar operations

def test_exact_div_integers():
    assert exact_div(6, 3) == 2
    assert exact_div(-6, 3) == -2


def test_exact_div_poly_difference_of_squares():
    q = qpoly(0, 1)
    assert exact_div(q * q - 1, q - 1) == q + 1


def test_fraction_addition():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        exact_div(7, 3)
    with pytest.raises(InexactDivisionError):
        (xpoly(1, 1, 1)).exact_div(xpoly(1, 1))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        exact_div(5, 0)
    with pytest.raises(ZeroDivisionError):
        RatFunc.var("q") / RatFunc.const(0, "q")
    with pytest.raises(ZeroDivisionError):
        RatFunc(Poly.one("q", QQ), Poly.zero("q", QQ))


def _random_scalar(domain, rng):
    if domain is ZZ:
        return rng.randint(-20, 20)
    if domain is QQ:
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))
    var = domain.param
    num = Poly([rng.randint(-4, 4) for _ in range(3)], var, QQ)
    den = Poly.zero(var, QQ)
    while den.is_zero:
        den = Poly([rng.randint(-3, 3) for _ in range(3)], var, QQ)
    return RatFunc(num, den)


@pytest.mark.parametrize("domain", [ZZ, QQ, QQ_Q, QQ_U])
def test_ring_axioms_random(domain):
    rng = random.Random(f"axioms-{domain.tag}")
    zero = domain.zero
    for _ in range(100):
        a, b, c = (_random_scalar(domain, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == zero
        assert a + b == b + a
        assert a * b == b * a


@pytest.mark.parametrize("domain", [ZZ, QQ, QQ_Q, QQ_U])
def test_exact_div_roundtrip(domain):
    rng = random.Random(f"roundtrip-{domain.tag}")
    count = 0
    while count < 100:
        a = _random_scalar(domain, rng)
        b = _random_scalar(domain, rng)
        if b == domain.zero:
            continue
        count += 1
        assert exact_div(a * b, b) == a


@given(st.fractions(max_denominator=60), st.fractions(max_denominator=60),
       st.fractions(max_denominator=60))
@settings(deadline=None)
def test_fraction_ops_well_behaved(x, y, z):
    assert x + y + z == z + y + x
    assert (x + y) * z == x * z + y * z


small_polys = st.lists(st.integers(min_value=-9, max_value=9),
                       min_size=0, max_size=6).map(
    lambda cs: Poly(cs, "x", QQ))


@given(small_polys, small_polys)
@settings(deadline=None, max_examples=60)
def test_poly_exact_div_roundtrip_property(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a


@given(small_polys, small_polys, small_polys)
@settings(deadline=None, max_examples=60)
def test_poly_ring_axioms_property(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(st.fractions(max_denominator=30), st.fractions(max_denominator=30))
@settings(deadline=None, max_examples=60)
def test_ratfunc_const_embedding_property(x, y):
    # the constants embed homomorphically into the rational-function field
    cx, cy = RatFunc.const(x, "q"), RatFunc.const(y, "q")
    assert cx + cy == RatFunc.const(x + y, "q")
    assert cx * cy == RatFunc.const(x * y, "q")
    if y != 0:
        assert cx / cy == RatFunc.const(x / y, "q")


# ---------------------------------------------------------------------------
# polynomials

def test_substitute_x_squared():
    assert xpoly(1, -1).substitute_x_squared() == xpoly(1, 0, -1)
    assert Poly.zero("x", QQ).substitute_x_squared().is_zero


def test_eval_at():
    p = xpoly(1, -4, 1)  # 1 - 4x + x^2
    assert p.eval_at(Fraction(0)) == 1
    assert p.eval_at(Fraction(2)) == -3


def test_poly_mul():
    assert xpoly(1, 1) * xpoly(1, -1) == xpoly(1, 0, -1)


def test_poly_pow_and_compose():
    x = Poly.x("x", QQ)
    assert (1 + x) ** 3 == xpoly(1, 3, 3, 1)
    shifted = xpoly(0, 0, 1).compose(x - 1)  # (x-1)^2
    assert shifted == xpoly(1, -2, 1)


def test_poly_variable_mismatch():
    with pytest.raises(ValueError):
        xpoly(1, 1) + qpoly(1, 1)
    with pytest.raises(ValueError):
        xpoly(1, 1) * Poly([1, 1], "x", QQ_Q)


def test_poly_divmod_roundtrip():
    rng = random.Random("divmod")
    for _ in range(50):
        a = Poly([Fraction(rng.randint(-6, 6)) for _ in range(rng.randint(1, 6))],
                 "x", QQ)
        b = Poly.zero("x", QQ)
        while b.is_zero:
            b = Poly([Fraction(rng.randint(-6, 6)) for _ in range(rng.randint(1, 4))],
                     "x", QQ)
        quot, rem = divmod(a, b)
        assert quot * b + rem == a
        assert rem.is_zero or rem.degree < b.degree


def test_shift_down_exact():
    p = xpoly(0, 0, 3, 1)
    assert p.shift_down_exact(2) == xpoly(3, 1)
    with pytest.raises(InexactDivisionError):
        xpoly(1, 1).shift_down_exact(1)


def test_degree_and_trailing_zero_stripping():
    assert Poly([1, 2, 0, 0], "x", QQ).degree == 1
    assert Poly([0, 0], "x", QQ).is_zero
    assert Poly.zero("x", QQ).degree == -1


# ---------------------------------------------------------------------------
# gcd, lcm

def test_poly_gcd_examples():
    q = Poly.x("q", QQ)
    assert poly_gcd(q * q - 1, q - 1) == q - 1
    assert poly_gcd(q, q + 1) == Poly.one("q", QQ)
    assert poly_gcd(Poly.zero("q", QQ), Poly.zero("q", QQ)).is_zero
    assert poly_gcd(Poly.zero("q", QQ), (q + 1) * 3) == q + 1  # monic


def test_poly_gcd_random_products():
    rng = random.Random("gcd")
    for _ in range(40):
        def rand_poly():
            p = Poly.zero("q", QQ)
            while p.is_zero:
                p = Poly([Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))],
                         "q", QQ)
            return p
        g, a, b = rand_poly(), rand_poly(), rand_poly()
        got = poly_gcd(g * a, g * b)
        # the common factor g divides the gcd exactly
        got.exact_div(poly_gcd(got, g.monic()))
        assert poly_gcd(got, g.monic()) == g.monic()


def test_poly_lcm():
    q = Poly.x("q", QQ)
    assert poly_lcm(q - 1, q + 1) == (q - 1) * (q + 1)
    assert poly_lcm(q * q - 1, q - 1) == q * q - 1


# ---------------------------------------------------------------------------
# rational functions

def test_ratfunc_canonical_two_constructions():
    q = RatFunc.var("q")
    one_way = (q ** 2 - 1) / ((q - 1) * (q + 2))
    other_way = (q + 1) / (q + 2)
    assert one_way.num == other_way.num
    assert one_way.den == other_way.den


def test_ratfunc_monic_denominator():
    q = RatFunc.var("q")
    r = 1 / (2 * q + 2)
    assert r.den.leading == 1
    assert r == Fraction(1, 2) / (q + 1)


def test_ratfunc_pow_and_eval():
    q = RatFunc.var("q")
    r = q ** 2 / (1 + q)
    assert r.eval_at(2) == Fraction(4, 3)
    assert (q ** -2) * q ** 2 == 1
    with pytest.raises(ZeroDivisionError):
        (1 / (1 + q)).eval_at(-1)


def test_ratfunc_parameter_mismatch():
    with pytest.raises(ValueError):
        RatFunc.var("q") + RatFunc.var("u")


def test_specialize_param():
    q = RatFunc.var("q")
    assert specialize_param(q / (1 + q), 1) == Fraction(1, 2)
    p = Poly([RatFunc.const(1, "q"), q], "x", QQ_Q)
    assert specialize_param(p, 3) == Poly([1, 3], "x", QQ)


# ---------------------------------------------------------------------------
# q-analogs

def test_q_binomial_edges():
    assert q_binomial(5, 0) == Poly.one("q", QQ)
    assert q_binomial(-1, 0) == Poly.one("q", QQ)
    assert q_binomial(3, 4).is_zero
    assert q_binomial(3, -1).is_zero


def test_q_binomial_frozen_values():
    assert q_binomial(2, 1) == qpoly(1, 1)
    assert q_binomial(4, 2) == qpoly(1, 1, 2, 1, 1)


def test_q_binomial_pascal_recurrence():
    # [n, k] = [n-1, k] + q^(n-k) [n-1, k-1]
    for n in range(1, 13):
        for k in range(n + 1):
            lhs = q_binomial(n, k)
            rhs = q_binomial(n - 1, k) + \
                Poly.monomial(n - k, Fraction(1), "q", QQ) * q_binomial(n - 1, k - 1)
            assert lhs == rhs, (n, k)


def test_q_binomial_at_one_is_binomial():
    for n in range(13):
        for k in range(n + 1):
            assert q_binomial(n, k).eval_at(Fraction(1)) == math.comb(n, k)


def test_q_int():
    assert q_int(0).is_zero
    assert q_int(1) == Poly.one("q", QQ)
    assert q_int(3) == qpoly(1, 1, 1)
    assert q_int(5).eval_at(Fraction(1)) == 5


def test_binom_convention():
    assert binom(-1, 0) == 1
    assert binom(4, 2) == 6
    assert binom(2, 5) == 0
    assert binom(3, -1) == 0


# ---------------------------------------------------------------------------
# printing

def test_poly_printing():
    assert str(xpoly(1, 0, -1)) == "1 - x^2"
    assert str(xpoly(-1, 1)) == "-1 + x"
    assert str(xpoly(0, 11, 0, 1)) == "11x + x^3"
    assert str(Poly.zero("x", QQ)) == "0"
    assert str(xpoly(Fraction(3, 2), 1)) == "3/2 + x"
    assert str(Poly([Fraction(0), Fraction(-3, 2)], "x", QQ)) == "-(3/2)x"


def test_ratfunc_printing():
    q = RatFunc.var("q")
    assert str(q / (1 + q)) == "q/(1 + q)"
    assert str((1 + q) / (1 + q * q)) == "(1 + q)/(1 + q^2)"
    assert str(q + 1) == "1 + q"
    assert str(RatFunc.const(Fraction(-1, 2), "q")) == "-1/2"


def test_poly_over_ratfunc_printing():
    q = RatFunc.var("q")
    p = Poly([RatFunc.const(1, "q"), -(1 + q)], "x", QQ_Q)
    assert str(p) == "1 - (1 + q)x"
