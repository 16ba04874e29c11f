from fractions import Fraction
from random import Random

import pytest

from hochschild.fields import GF, QQ, FieldError, parse_field


def test_rational_basics():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(-3, 4)) == Fraction(-4, 3)
    assert QQ.pow(Fraction(2), -3) == Fraction(1, 8)
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert QQ.fmt(Fraction(7, 2)) == "7/2"
    assert QQ.fmt(Fraction(5)) == "5"
    with pytest.raises(FieldError):
        QQ.inv(Fraction(0))


def test_prime_field_basics():
    F5 = GF(5)
    assert F5.add(3, 4) == 2
    assert F5.mul(3, 4) == 2
    assert F5.neg(2) == 3
    assert F5.pow(2, -1) == 3
    assert F5.parse("-1") == 4
    with pytest.raises(FieldError):
        GF(6)
    with pytest.raises(FieldError):
        F5.inv(0)


def test_fermat_inverse_exhaustive():
    # a * a^(-1) == 1 for every nonzero a, for all small primes
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        F = GF(p)
        for a in range(1, p):
            assert F.mul(a, F.inv(a)) == 1


def test_field_axioms_random_triples():
    rng = Random(0)
    for field in (QQ, GF(7), GF(31)):
        for _ in range(200):
            if field is QQ:
                a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                           for _ in range(3))
            else:
                a, b, c = (rng.randrange(field.p) for _ in range(3))
            assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
            assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
            assert field.mul(a, field.add(b, c)) == field.add(
                field.mul(a, b), field.mul(a, c))
            if not field.is_zero(a):
                assert field.mul(a, field.inv(a)) == field.one


def test_element_of_order():
    assert QQ.element_of_order(2) == -1
    with pytest.raises(FieldError):
        QQ.element_of_order(3)
    F5 = GF(5)
    q = F5.element_of_order(4)
    assert F5.pow(q, 4) == 1 and F5.pow(q, 2) != 1
    F7 = GF(7)
    q3 = F7.element_of_order(3)
    assert F7.pow(q3, 3) == 1 and q3 != 1


def test_parse_field():
    assert parse_field("Q") == QQ
    assert parse_field("F5") == GF(5)
    with pytest.raises(FieldError):
        parse_field("R")
