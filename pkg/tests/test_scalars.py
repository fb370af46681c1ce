"""Scalar field Q(q): canonical form, q-integers, evaluation.

Frozen expected values below were derived once by expanding the defining
formulas by hand; the evaluation homomorphism doubles as an independent
cross-check at random rational points.
"""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopflab.scalars import (
    ONE, ZERO, DivisionByZero, PoleAtPoint, QRat, RangeError,
    pconst, pmono, qbinom, qint, qrat_eval, qrat_text,
)


def q(k=1):
    return QRat.q_power(k)


def rat(n, d=1):
    return QRat(pconst(Fraction(n, d)))


def test_canonical_zero_and_one():
    assert ZERO.is_zero() and not ONE.is_zero()
    assert (q() - q()) == ZERO
    assert q() * q(-1) == ONE
    assert ZERO.num == {} and ZERO.den == {0: 1}


def test_negative_powers_live_in_denominator():
    x = q(-3)
    assert x.num == {0: 1} and x.den == {3: 1}
    assert x.as_q_power() == -3


def test_structural_equality_is_value_equality():
    # (q^2 - 1)/(q - 1) == q + 1
    a = QRat({2: 1, 0: -1}, {1: 1, 0: -1})
    b = q() + ONE
    assert a == b
    assert a.num == {1: 1, 0: 1} and a.den == {0: 1}


def test_division_and_inverse():
    x = (q() - q(-1)) / (q() - q(-1))
    assert x == ONE
    with pytest.raises(DivisionByZero):
        ZERO.inverse()
    with pytest.raises(DivisionByZero):
        QRat({0: 1}, {})


def test_qint_small_values_frozen():
    # [0]=0, [1]=1, [2]=q+q^-1, [3]=q^2+1+q^-2  (balanced convention)
    assert qint(0) == ZERO
    assert qint(1) == ONE
    assert qint(2) == q() + q(-1)
    assert qint(3) == q(2) + ONE + q(-2)
    assert qint(-3) == -qint(3)


def test_qint_defining_identity():
    # [n] * (q - q^-1) == q^n - q^-n
    for n in range(-12, 13):
        assert qint(n) * (q() - q(-1)) == q(n) - q(-n)


def test_qbinom_frozen_values():
    # [4 2] = q^4 + q^2 + 2 + q^-2 + q^-4 ; [n 0] = [n n] = 1
    assert qbinom(4, 2) == q(4) + q(2) + rat(2) + q(-2) + q(-4)
    assert qbinom(5, 1) == qint(5)
    for m in range(7):
        assert qbinom(m, 0) == ONE and qbinom(m, m) == ONE
    with pytest.raises(RangeError):
        qbinom(2, 3)
    with pytest.raises(RangeError):
        qbinom(2, -1)


def test_qbinom_pascal_rule():
    # [m n] = q^n [m-1 n] + q^{n-m} [m-1 n-1]
    for m in range(1, 8):
        for n in range(1, m):
            lhs = qbinom(m, n)
            rhs = q(n) * qbinom(m - 1, n) + q(n - m) * qbinom(m - 1, n - 1)
            assert lhs == rhs


def test_eval_at_rational_point():
    x = (q(2) - ONE) / (q() + ONE)  # == q - 1
    assert qrat_eval(x, Fraction(3, 2)) == Fraction(1, 2)
    with pytest.raises(PoleAtPoint):
        qrat_eval(ONE / (q() - ONE), 1)


def _random_qrat(rng, size=4):
    num = {}
    den = {}
    for _ in range(size):
        num[rng.randrange(0, 6)] = Fraction(rng.randrange(-9, 10))
        den[rng.randrange(0, 6)] = Fraction(rng.randrange(-9, 10))
    num = {k: v for k, v in num.items() if v}
    den = {k: v for k, v in den.items() if v}
    if not den:
        den = {0: Fraction(1)}
    return QRat(num, den)


def test_eval_is_field_homomorphism():
    rng = random.Random(7)
    pt = Fraction(7, 5)
    for _ in range(200):
        a = _random_qrat(rng)
        b = _random_qrat(rng)
        try:
            ea, eb = qrat_eval(a, pt), qrat_eval(b, pt)
        except PoleAtPoint:
            continue
        assert qrat_eval(a + b, pt) == ea + eb
        assert qrat_eval(a * b, pt) == ea * eb


def test_canonical_form_unique_across_builds():
    # build the same value along different routes; dicts must coincide
    rng = random.Random(11)
    for _ in range(200):
        a = _random_qrat(rng)
        if a.is_zero():
            continue
        b = (a * a) / a
        assert b.num == a.num and b.den == a.den
        c = a + a
        d = a * rat(2)
        assert c.num == d.num and c.den == d.den


@settings(max_examples=200)
@given(st.integers(-8, 8), st.integers(-8, 8))
def test_q_power_homomorphism(i, j):
    assert q(i) * q(j) == q(i + j)
    assert q(i).as_q_power() == i


def test_text_round_readable():
    assert qrat_text(ZERO) == "0"
    assert qrat_text(q(2) + ONE) == "q^2 + 1"
    assert qrat_text(ONE / (q(2) - ONE)) == "1/(q^2 - 1)"
    assert qrat_text((q() + ONE) / (q(2) + ONE)) == "(q + 1)/(q^2 + 1)"
    assert qrat_text(-q()) == "-q"
    assert qrat_text(q(-2)) == "1/q^2"
    x = QRat(pmono(1), {2: 1, 0: -1})  # q/(q^2-1) == 1/(q - q^-1)
    assert qrat_text(x) == "q/(q^2 - 1)"
