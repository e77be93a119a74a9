import cmath
import itertools
import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from signed_mahonian.cycring import (
    CycCoeff,
    QPolynomial,
    SignedMonomial,
    cyc_add,
    cyc_mul,
    cyc_neg,
    cyclotomic_polynomial,
    euler_phi,
    exact_divide,
    poly_add,
    poly_equals,
    poly_mul,
    poly_neg,
    q_bracket,
    q_bracket_quotient_product,
    q_factorial_pm,
)


def Q(r, mapping):
    return QPolynomial(r, mapping)


# -- cyclotomic polynomials -------------------------------------------------------

@pytest.mark.parametrize("r, expected", [
    (1, [-1, 1]),
    (2, [1, 1]),
    (3, [1, 1, 1]),
    (4, [1, 0, 1]),
    (6, [1, -1, 1]),
    (12, [1, 0, -1, 0, 1]),
])
def test_cyclotomic_polynomial(r, expected):
    assert cyclotomic_polynomial(r) == expected


def test_cyclotomic_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


@pytest.mark.parametrize("r", range(1, 31))
def test_cyclotomic_degree_and_roots(r):
    phi = cyclotomic_polynomial(r)
    assert len(phi) - 1 == euler_phi(r)
    assert phi[-1] == 1
    root = cmath.exp(2j * cmath.pi / r)
    assert abs(sum(c * root**i for i, c in enumerate(phi))) < 1e-8


def test_coeff_vector_length_is_euler_phi():
    for r in range(1, 13):
        assert len(CycCoeff.zeta_power(r, 5).coeffs) == euler_phi(r)
    assert CycCoeff.integer(1, 7).coeffs == (7,)


# -- CycCoeff ----------------------------------------------------------------------

def test_r2_zeta_squared_is_one():
    z = CycCoeff.zeta_power(2, 1)
    assert z * z == CycCoeff.integer(2, 1)


def test_r2_one_plus_zeta_is_zero():
    assert (1 + CycCoeff.zeta_power(2, 1)).is_zero()


def test_r4_zeta_squared_plus_one_is_zero():
    assert (CycCoeff.zeta_power(4, 2) + 1).is_zero()


def test_function_forms_match_operators():
    a, b = CycCoeff(3, [1, 2]), CycCoeff(3, [-4, 1])
    assert cyc_add(a, b) == a + b
    assert cyc_mul(a, b) == a * b
    assert cyc_neg(a) == -a


def test_mismatched_r_rejected():
    with pytest.raises(ValueError):
        CycCoeff.zeta_power(3, 1) + CycCoeff.zeta_power(4, 1)
    with pytest.raises(ValueError):
        QPolynomial.one(3) * QPolynomial.one(2)


def test_zeta_power_is_periodic():
    for r in range(1, 10):
        for j in range(-2 * r, 2 * r):
            assert CycCoeff.zeta_power(r, j) == CycCoeff.zeta_power(r, j % r)


def test_unit_power_recovers_exponent():
    for r in range(1, 9):
        for j in range(r):
            for s in (1, -1):
                u = CycCoeff.zeta_power(r, j, s).unit_power()
                assert u is not None
                sign, k = u
                assert CycCoeff.zeta_power(r, k, sign) == CycCoeff.zeta_power(r, j, s)
    assert CycCoeff.integer(3, 2).unit_power() is None


def test_canonical_equality_is_field_identity():
    a = CycCoeff(3, [0, 0, 1])  # zeta^2 = -1 - zeta
    b = CycCoeff(3, [-1, -1])
    assert a == b and a.coeffs == b.coeffs and hash(a) == hash(b)


@st.composite
def cyc(draw, r):
    d = euler_phi(r)
    return CycCoeff(r, draw(st.lists(st.integers(-20, 20), min_size=d, max_size=d)))


@st.composite
def cyc_triple(draw):
    r = draw(st.integers(1, 12))
    return draw(cyc(r)), draw(cyc(r)), draw(cyc(r))


@settings(max_examples=200, deadline=None)
@given(cyc_triple())
def test_cyc_ring_laws(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.data())
def test_zero_elements_vanish_at_primitive_roots(r, data):
    # a random x times Phi_r(zeta), expanded as a raw vector, reduces to zero
    d = euler_phi(r)
    raw = data.draw(st.lists(st.integers(-5, 5), min_size=0, max_size=6))
    phi = cyclotomic_polynomial(r)
    prod = [0] * (len(raw) + len(phi))
    for i, x in enumerate(raw):
        for j, y in enumerate(phi):
            prod[i + j] += x * y
    z = CycCoeff(r, prod)
    assert z.is_zero()
    val = CycCoeff(r, data.draw(st.lists(st.integers(-5, 5), min_size=d, max_size=d)))
    for k in range(1, r + 1):
        if math.gcd(k, r) == 1:
            root = cmath.exp(2j * cmath.pi * k / r)
            assert abs(z.evaluate(root)) < 1e-9
            expected = sum(c * root**i for i, c in enumerate(val.coeffs))
            assert abs(val.evaluate(root) - expected) < 1e-9


def test_evaluate_default_root():
    z = CycCoeff.zeta_power(4, 1)
    assert abs(z.evaluate() - 1j) < 1e-12


def test_cyc_to_text():
    assert CycCoeff(3, [1, -1]).to_text() == "1-z"
    assert CycCoeff.zeta_power(3, 2).to_text() in ("-1-z",)


# -- QPolynomial -----------------------------------------------------------------

def test_poly_examples():
    one_minus_q = Q(1, {0: 1, 1: -1})
    assert poly_add(one_minus_q, Q(1, {1: 1})) == QPolynomial.one(1)
    assert poly_mul(Q(1, {0: 1, 1: 1}), one_minus_q) == Q(1, {0: 1, 2: -1})
    zq = QPolynomial(2, {0: 1, 1: CycCoeff.zeta_power(2, 1)})
    assert poly_equals(zq, Q(2, {0: 1, 1: -1}))
    assert poly_neg(one_minus_q) == Q(1, {0: -1, 1: 1})


def test_no_zero_coefficients_stored():
    p = Q(3, {0: 1, 2: 0, 5: [0, 0]})
    assert p.terms().keys() == {0}
    assert (p - p).is_zero() and len(p - p) == 0


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Q(1, {-1: 1})


def test_degree_shift_and_coefficient():
    p = Q(2, {1: 3, 4: -1})
    assert p.degree() == 4 and p.low_degree() == 1
    assert p.shift(2) == Q(2, {3: 3, 6: -1})
    assert p.coefficient(7).is_zero()


@st.composite
def poly(draw, r):
    d = euler_phi(r)
    terms = draw(st.dictionaries(st.integers(0, 8),
                                 st.lists(st.integers(-6, 6), min_size=d, max_size=d), max_size=5))
    return QPolynomial(r, terms)


@st.composite
def poly_triple(draw):
    r = draw(st.integers(1, 8))
    return draw(poly(r)), draw(poly(r)), draw(poly(r))


@settings(max_examples=150, deadline=None)
@given(poly_triple())
def test_poly_ring_laws(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * QPolynomial.one(a.r) == a
    assert (a - a).is_zero()


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8).flatmap(poly))
def test_json_round_trip(p):
    text = p.to_json()
    assert QPolynomial.from_json(p.r, text) == p
    data = json.loads(text)
    assert [e for e, _ in data] == sorted(e for e, _ in data)
    assert all(len(v) == euler_phi(p.r) for _, v in data)


def test_json_format():
    p = Q(3, {0: 1, 2: [0, -1]})
    assert p.to_json() == "[[0,[1,0]],[2,[0,-1]]]"
    with pytest.raises(ValueError):
        QPolynomial.from_json(3, "[[0,[1]]]")


def test_text_format():
    p = Q(3, {0: 1, 1: -1, 3: [1, -1]})
    assert p.to_text() == "1-q+(1-z)q^3"
    assert QPolynomial.zero(2).to_text() == "0"


@settings(max_examples=60, deadline=None)
@given(poly_triple())
def test_exact_divide_recovers_factor(t):
    a, b, _ = t
    den = q_bracket(3, SignedMonomial(a.r, -1, 1))
    assert exact_divide(a * den, den) == a
    if not b.is_zero() and b.coefficient(b.degree()).unit_power() is not None:
        assert exact_divide(a * b, b) == a


def test_exact_divide_raises_on_remainder():
    with pytest.raises(ArithmeticError):
        exact_divide(Q(1, {0: 1, 2: 1}), Q(1, {0: 1, 1: 1}))


# -- brackets ------------------------------------------------------------------------

def test_bracket_examples():
    q = SignedMonomial(1)
    assert q_bracket(1, q) == QPolynomial.one(1)
    assert q_bracket(2, -q) == Q(1, {0: 1, 1: -1})
    assert q_bracket(0, q).is_zero()
    z3 = SignedMonomial(3, 1, 1)
    assert q_bracket(3, z3) == QPolynomial(3, {0: 1, 1: CycCoeff.zeta_power(3, 1),
                                                2: CycCoeff.zeta_power(3, 2)})


def test_q_factorial_examples():
    q = SignedMonomial(1)
    assert q_factorial_pm(1, q) == QPolynomial.one(1)
    assert q_factorial_pm(2, q) == Q(1, {0: 1, 1: -1})
    assert q_factorial_pm(3, q) == Q(1, {0: 1, 1: -1}) * Q(1, {0: 1, 1: 1, 2: 1})
    assert q_factorial_pm(3, q) == Q(1, {0: 1, 3: -1})


@pytest.mark.parametrize("i, r", list(itertools.product(range(1, 6), range(1, 6))))
def test_bracket_factorization(i, r):
    for x in (SignedMonomial(r), SignedMonomial(r, -1), SignedMonomial(r, 1, 1)):
        assert q_bracket(i * r, x) == q_bracket(i, x) * q_bracket(r, x**i)


@pytest.mark.parametrize("k", range(0, 8))
def test_bracket_at_one_equals_size(k):
    assert q_bracket(k, SignedMonomial(1)).evaluate(1) == k
    # zeta = 1 is only a valid substitution when zeta does not occur
    assert q_bracket(k, SignedMonomial(5, 1, 0, 3)).evaluate(1) == k
    assert q_bracket(k, SignedMonomial(1, 1, 4, 2)).evaluate(1) == k


def test_quotient_product_examples():
    r, n = 2, 2
    bases = [SignedMonomial(r)] * n
    # k = 0: plain product
    assert q_bracket_quotient_product(r, n, 0, bases) == q_bracket(2, bases[0]) * q_bracket(4, bases[0])
    # r = 1: the tail product only
    b1 = [SignedMonomial(1), SignedMonomial(1, -1), SignedMonomial(1)]
    assert q_bracket_quotient_product(1, 3, 1, b1) == q_bracket(2, b1[1]) * q_bracket(3, b1[2])
    signed = [SignedMonomial(2), SignedMonomial(2, -1)]
    got = q_bracket_quotient_product(2, 2, 1, signed)
    assert got == q_bracket(2, SignedMonomial(2, 1, 0, 1)) * q_bracket(4, signed[1])
    num = q_bracket(2, signed[0]) * q_bracket(4, signed[1])
    assert got == exact_divide(num, q_bracket(1, signed[0]))


def test_quotient_product_matches_exact_division():
    for r in range(1, 4):
        for n in range(1, 5):
            for k in range(0, n + 1):
                bases = [SignedMonomial(r, (-1) ** (i - 1), 1) for i in range(1, n + 1)]
                num = QPolynomial.one(r)
                den = QPolynomial.one(r)
                for i in range(1, n + 1):
                    num = num * q_bracket(i * r, bases[i - 1])
                    if i <= k:
                        den = den * q_bracket(i, bases[i - 1])
                assert q_bracket_quotient_product(r, n, k, bases) == exact_divide(num, den)


def test_quotient_product_rejects_bad_k():
    with pytest.raises(ValueError):
        q_bracket_quotient_product(2, 2, 3, [SignedMonomial(2)] * 3)
