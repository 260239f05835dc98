from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from morsebetti.fields import QQ, FieldError, ModP, PrimeField, is_prime, is_unit, is_zero, parse_field

fractions = st.fractions(max_denominator=50)
PRIMES = [2, 3, 7, 101, 2147483647]


def test_cancellation_examples():
    one = QQ(1)
    assert one - (one * one) / one == 0
    assert -one - (one * -one) / one == 0
    F2 = PrimeField(2)
    assert F2(1) + F2(1) == F2(0)
    assert is_zero(F2(1) + F2(1))


@given(fractions, fractions, fractions)
def test_rational_axioms(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if not is_zero(a):
        assert a * (1 / a) == 1
    assert is_unit(a) == (not is_zero(a))


@pytest.mark.parametrize("p", PRIMES)
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_prime_field_axioms(p, x, y, z):
    F = PrimeField(p)
    a, b, c = F(x), F(y), F(z)
    assert 0 <= a.value < p
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - b == a + (-b)
    if a:
        assert (a / a) == F(1)
        assert b / a * a == b
    else:
        with pytest.raises(ZeroDivisionError):
            b / a


def test_no_mixing():
    with pytest.raises(FieldError):
        PrimeField(3)(1) + PrimeField(5)(1)
    with pytest.raises(FieldError):
        PrimeField(3)(1) + Fraction(1, 2)
    with pytest.raises(FieldError):
        QQ(ModP(1, 3))


def test_parse_field():
    assert parse_field("rational") == QQ
    assert parse_field("prime:7") == PrimeField(7)
    for bad in ("prime:4", "prime:1", "prime:x", "real"):
        with pytest.raises(FieldError):
            parse_field(bad)


def test_is_prime_against_trial_division():
    def slow(p):
        return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))
    assert [p for p in range(3000) if is_prime(p)] == [p for p in range(3000) if slow(p)]
    assert is_prime(2147483647) and not is_prime(2147483649)
