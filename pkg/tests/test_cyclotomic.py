"""Tests for exact cyclotomic arithmetic and interval embeddings."""

import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionrings.cyclotomic import (
    Cyc,
    canonical_sqrt_of_unit,
    compare_real,
    cyc_arith,
    cyc_from_json,
    cyc_to_json,
    cyclotomic_polynomial,
    embed_interval,
    euler_phi,
    galois_conjugate,
    root_of_unity_exponent,
    root_of_unity_power,
    sign_real,
    sqrt_integer_as_cyclotomic,
    zeta,
)


# -- independent oracles -------------------------------------------------------


def naive_poly_div(num, den):
    """Plain long division of integer polynomials, written out for the oracle."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        assert c % den[-1] == 0
        c //= den[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    assert all(v == 0 for v in num)
    return q


def test_cyclotomic_polynomial_base_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)


def test_cyclotomic_polynomial_nine_by_division_oracle():
    # divide x^9 - 1 by Phi_1 * Phi_3 by hand and compare
    x9 = [-1] + [0] * 8 + [1]
    phi1_phi3 = [0] * 4
    # (x - 1)(x^2 + x + 1) = x^3 - 1
    phi1_phi3 = [-1, 0, 0, 1]
    expected = tuple(naive_poly_div(x9, phi1_phi3))
    assert cyclotomic_polynomial(9) == expected == (1, 0, 0, 1, 0, 0, 1)


def test_cyclotomic_polynomial_degree_is_phi():
    for n in range(1, 40):
        assert len(cyclotomic_polynomial(n)) == euler_phi(n) + 1


def test_root_of_unity_inverse():
    assert cyc_arith(zeta(5), zeta(5, 4), "mul") == Cyc.rational(1)


def test_binomial_expansion_at_conductor_nine():
    a = zeta(9) + zeta(9, 8)
    assert a * a == zeta(9, 2) + Cyc.rational(2) + zeta(9, 7)


def test_inverse_of_one_plus_zeta3():
    v = Cyc.rational(1) + zeta(3)
    inv = cyc_arith(Cyc.rational(1), v, "div")
    assert inv == -zeta(3)
    assert inv * v == Cyc.rational(1)


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        cyc_arith(zeta(5), Cyc.rational(0), "div")


def test_galois_conjugation_of_i():
    assert galois_conjugate(zeta(4), 3) == -zeta(4)


def test_galois_fixes_rationals():
    r = Cyc.rational(Fraction(22, 7))
    assert galois_conjugate(r, 1) == r


def test_galois_exponent_map():
    a = zeta(7) + zeta(7, 2)
    assert galois_conjugate(a, 2) == zeta(7, 2) + zeta(7, 4)


def test_galois_requires_coprime():
    with pytest.raises(ValueError):
        galois_conjugate(zeta(6), 2)


def test_sqrt_perfect_square():
    s = sqrt_integer_as_cyclotomic(9)
    assert s.is_integer() and s.as_fraction() == 3


def test_sqrt_five_is_gauss_sum():
    s = sqrt_integer_as_cyclotomic(5)
    assert s * s == Cyc.rational(5)
    # the classical quadratic Gauss sum at p = 5
    g = zeta(5) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3)
    assert s == g


def test_sqrt_two():
    s = sqrt_integer_as_cyclotomic(2)
    assert s == zeta(8) + zeta(8, 7)
    assert s * s == Cyc.rational(2)


@pytest.mark.parametrize("m", list(range(1, 40)))
def test_sqrt_squares_back(m):
    s = sqrt_integer_as_cyclotomic(m)
    assert s * s == Cyc.rational(m)
    assert sign_real(s) > 0


def test_embed_rational():
    re, im = embed_interval(Cyc.rational(3))
    assert re.contains(3) and re.width() == 0
    assert im.contains(0) and im.width() == 0


def test_embed_i():
    re, im = embed_interval(zeta(4))
    assert re.contains_zero()
    assert im.contains(1)


def test_embed_high_precision_cosine():
    # 2*(zeta_9 + zeta_9^{-1}) = 4*cos(2*pi/9), compared against mpmath at 300 bits
    val = (zeta(9) + zeta(9, 8)) * 2
    re, im = embed_interval(val, 128)
    with mpmath.workprec(300):
        target = 4 * mpmath.cos(2 * mpmath.pi / 9)
        assert re.lo <= target <= re.hi
    assert re.width() < 1e-9
    assert im.contains_zero()


def test_embed_rejects_low_precision():
    with pytest.raises(ValueError):
        embed_interval(zeta(3), 16)


def test_is_real_is_rational_is_integer():
    assert (zeta(5) + zeta(5, 4)).is_real()
    assert not (zeta(5) + zeta(5, 4)).is_rational()
    assert sqrt_integer_as_cyclotomic(9).is_integer()
    assert not zeta(3).is_real()


def test_sign_and_compare():
    assert sign_real(Cyc.rational(0)) == 0
    assert sign_real(sqrt_integer_as_cyclotomic(2) - 1) > 0
    assert compare_real(Cyc.rational(Fraction(3, 2)), sqrt_integer_as_cyclotomic(2)) > 0
    # 2cos(2pi/5) vs golden-ratio-minus-one: equal values never come out disjoint
    lhs = zeta(5) + zeta(5, 4)
    rhs = (sqrt_integer_as_cyclotomic(5) - 1) / 2
    assert compare_real(lhs, rhs) == 0


def test_root_of_unity_exponent_and_power():
    assert root_of_unity_exponent(zeta(12, 5)) == (12, 5)
    assert root_of_unity_exponent(Cyc.rational(-1)) == (2, 1)
    assert root_of_unity_exponent(Cyc.rational(2)) is None
    q = zeta(10)  # e^{pi i/5}
    assert root_of_unity_power(q, Fraction(1, 2)) == zeta(20)
    assert root_of_unity_power(q, 5) == Cyc.rational(-1)


def test_canonical_sqrt_upper_half_plane():
    r = canonical_sqrt_of_unit(Cyc.rational(-1))
    assert r == zeta(4)
    r = canonical_sqrt_of_unit(zeta(3))
    assert r * r == zeta(3)
    _, im = embed_interval(r)
    assert im.lo > 0 or (im.contains_zero() and embed_interval(r)[0].lo > 0)


def test_json_round_trip():
    vals = [Cyc.rational(Fraction(-7, 3)), zeta(12) / 5 + 2, sqrt_integer_as_cyclotomic(7)]
    for v in vals:
        blob = cyc_to_json(v)
        assert len(blob["c"]) == euler_phi(blob["n"])
        assert cyc_from_json(blob) == v


def test_json_rejects_wrong_length():
    with pytest.raises(ValueError):
        cyc_from_json({"n": 5, "c": [[1, 1]]})


# -- properties ----------------------------------------------------------------

small_conductors = st.integers(min_value=1, max_value=60).filter(lambda n: euler_phi(n) <= 16)


@st.composite
def cyc_values(draw):
    n = draw(small_conductors)
    k = euler_phi(n)
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=k, max_size=k))
    den = draw(st.integers(1, 9))
    return Cyc(n, coeffs, den)


@settings(max_examples=60, deadline=None)
@given(cyc_values(), cyc_values(), cyc_values())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(cyc_values())
def test_multiplicative_inverse(a):
    if not a.is_zero():
        assert a * a.inverse() == Cyc.rational(1)


@settings(max_examples=40, deadline=None)
@given(cyc_values())
def test_conjugation_is_involution(a):
    assert a.conjugate().conjugate() == a


@settings(max_examples=30, deadline=None)
@given(cyc_values(), cyc_values())
def test_embedding_soundness(a, b):
    # an exact equality never yields disjoint enclosures
    s = a + b
    re1, im1 = embed_interval(s, 64)
    re2, im2 = embed_interval(b + a, 64)
    assert not re1.disjoint(re2)
    assert not im1.disjoint(im2)


def test_random_conductor_mixing():
    rng = random.Random(7)
    for _ in range(50):
        n1, n2 = rng.choice([3, 4, 5, 8, 12]), rng.choice([3, 4, 6, 9, 10])
        a = zeta(n1, rng.randrange(n1)) * rng.randint(-3, 3)
        b = zeta(n2, rng.randrange(n2)) + rng.randint(-2, 2)
        assert (a + b) - b == a
        assert (a * b) * b == a * (b * b)
