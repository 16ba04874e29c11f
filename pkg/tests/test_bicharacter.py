from random import Random

import pytest

from hochschild.bicharacter import (
    Bicharacter,
    koszul_sign,
    trivial_bicharacter,
    uniform_bicharacter,
)
from hochschild.fields import GF, QQ
from hochschild.grading import ZZ, GradingGroup, StructureError


def sign_twist(field=QQ):
    return uniform_bicharacter(field, ZZ, ZZ, field.neg(field.one))


def test_pair_on_rank_one():
    t = sign_twist()
    d = ZZ.degree
    assert t.pair(d((1,)), d((1,))) == -1  # generator value read back
    assert t.pair(d((0,)), d((5,))) == 1   # homomorphism kills zero
    assert t.pair(d((2,)), d((3,))) == 1   # (-1)^6


def test_pair_biadditive_random():
    rng = Random(1)
    F = GradingGroup((0, 4))
    G = GradingGroup((0, 2))
    F7 = GF(7)
    # orders: F has Z/4, G has Z/2 torsion; 7 == 1 mod 2, order-2 values exist
    t = Bicharacter(F7, F, G, [[3, 6], [6, 1]])
    # 3^? torsion checks: F factor 2 has order 4 -> need 6^4 == 1 mod 7 (6 == -1) ok
    for _ in range(100):
        f1 = F.degree((rng.randint(-5, 5), rng.randint(-5, 5)))
        f2 = F.degree((rng.randint(-5, 5), rng.randint(-5, 5)))
        g = G.degree((rng.randint(-5, 5), rng.randint(-5, 5)))
        assert t.pair(f1 + f2, g) == F7.mul(t.pair(f1, g), t.pair(f2, g))
        g2 = G.degree((rng.randint(-5, 5), rng.randint(-5, 5)))
        assert t.pair(f1, g + g2) == F7.mul(t.pair(f1, g), t.pair(f1, g2))


def test_torsion_well_definedness_enforced():
    F = GradingGroup((3,))
    with pytest.raises(StructureError):
        Bicharacter(QQ, F, ZZ, [[QQ.neg(QQ.one)]])  # (-1)^3 != 1
    F7 = GF(7)
    q3 = F7.element_of_order(3)
    t = Bicharacter(F7, F, ZZ, [[q3]])  # q3^3 == 1: fine
    assert t.pair(F.degree((4,)), ZZ.degree((1,))) == q3  # 4 == 1 mod 3


def test_kernel_membership():
    t = sign_twist()
    d = ZZ.degree
    assert t.left_kernel_contains(d((2,)))
    assert not t.left_kernel_contains(d((1,)))
    assert t.right_kernel_contains(d((0,)))
    triv = trivial_bicharacter(QQ, ZZ, ZZ)
    for n in range(-3, 4):
        assert triv.left_kernel_contains(d((n,)))


def test_kernel_membership_closed_under_addition():
    rng = Random(2)
    F5 = GF(5)
    t = uniform_bicharacter(F5, ZZ, ZZ, F5.element_of_order(4))
    members = [ZZ.degree((4 * k,)) for k in range(-3, 4)]
    for _ in range(50):
        a, b = rng.choice(members), rng.choice(members)
        assert t.left_kernel_contains(a + b)
    assert t.left_kernel_contains(ZZ.zero())


def test_zero_values_rejected():
    with pytest.raises(StructureError):
        Bicharacter(QQ, ZZ, ZZ, [[QQ.zero]])


def test_koszul_sign():
    assert koszul_sign(QQ, 1, 1) == -1
    assert koszul_sign(QQ, 2, 3) == 1
    for n in range(-4, 5):
        assert koszul_sign(QQ, 0, n) == 1
    assert koszul_sign(GF(3), 1, 1) == 2
