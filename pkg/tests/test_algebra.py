from random import Random

import pytest

from hochschild.algebra import (
    BimoduleWord,
    GradedAlgebra,
    tensor_algebra_element,
    truncated_polynomial,
    twisted_tensor_algebra,
)
from hochschild.bicharacter import trivial_bicharacter, uniform_bicharacter
from hochschild.fields import GF, QQ
from hochschild.grading import INHOMOGENEOUS, ZERO_DEGREE, ZZ, StructureError
from hochschild.textio import format_element, parse_element


def x2(field=QQ):
    return truncated_polynomial(field, 2)


def test_truncated_polynomial_multiplication():
    A = x2()
    x = A.basis_element(1)
    assert (x * x).is_zero()  # defining relation
    A3 = truncated_polynomial(QQ, 3)
    x, xx = A3.basis_element(1), A3.basis_element(2)
    assert x * x == xx
    assert (x * xx).is_zero()


def test_unit_law_random_elements():
    rng = Random(5)
    A = truncated_polynomial(GF(7), 3)
    for _ in range(20):
        a = A.element([rng.randrange(7) for _ in range(3)])
        assert A.one() * a == a
        assert a * A.one() == a


def test_element_degree_markers():
    A = x2()
    x = A.basis_element(1)
    assert x.degree() == ZZ.degree((1,))
    assert (A.one() + x).degree() is INHOMOGENEOUS
    assert A.zero().degree() is ZERO_DEGREE


def test_validate_passes_and_reports():
    assert x2().validate().ok
    # graded-multiplication violation: x*x = 1 jumps degrees
    with pytest.raises(StructureError):
        GradedAlgebra(QQ, ZZ, ["1", "x"], [ZZ.zero(), ZZ.degree((1,))], 0,
                      {(1, 1): {0: QQ.one}})
    bad = GradedAlgebra(QQ, ZZ, ["1", "x"], [ZZ.zero(), ZZ.degree((1,))], 0,
                        {(1, 1): {0: QQ.one}}, check=False)
    report = bad.validate()
    assert not report.ok
    assert any("graded" in v for v in report.violations)
    # non-associativity: b*b = b with |b| = 0 forced, (bb)b = b*b = b, fine;
    # instead use b*b = 1 + b which breaks associativity over GF(2)? keep it
    # simple: c*c = c+1 in degree zero is non-associative
    G0 = ZZ
    cand = GradedAlgebra(
        QQ, G0, ["1", "c"], [G0.zero(), G0.zero()], 0,
        {(1, 1): {0: QQ.one, 1: QQ.one}}, check=False)
    rep = cand.validate()
    # (cc)c = (1+c)c = c + cc = 1 + 2c ; c(cc) is the same here, so this one
    # is associative; force a violation explicitly
    asym = GradedAlgebra(
        QQ, G0, ["1", "b", "d"], [G0.zero()] * 3, 0,
        {(1, 1): {2: QQ.one}, (1, 2): {0: QQ.one}, (2, 1): {}, (2, 2): {}},
        check=False)
    # (b b) b = d b = 1 but b (b b) = b d = 0
    rep = asym.validate()
    assert any("associativity" in v for v in rep.violations)


def test_twisted_tensor_product_table():
    A = truncated_polynomial(QQ, 2, var="x")
    B = truncated_polynomial(QQ, 2, var="y")
    triv = trivial_bicharacter(QQ, A.group, B.group)
    R = twisted_tensor_algebra(A, B, triv)
    assert R.dim == 4
    x1 = tensor_algebra_element(R, A.basis_element(1), B.one())
    y1 = tensor_algebra_element(R, A.one(), B.basis_element(1))
    xy = tensor_algebra_element(R, A.basis_element(1), B.basis_element(1))
    assert y1 * x1 == xy  # untwisted commutation

    q = QQ.from_int(3)
    tq = uniform_bicharacter(QQ, A.group, B.group, q)
    Rq = twisted_tensor_algebra(A, B, tq)
    x1q = tensor_algebra_element(Rq, A.basis_element(1), B.one())
    y1q = tensor_algebra_element(Rq, A.one(), B.basis_element(1))
    xyq = tensor_algebra_element(Rq, A.basis_element(1), B.basis_element(1))
    assert y1q * x1q == xyq.scaled(q)  # twist scalar on the interchange

    tm = uniform_bicharacter(QQ, A.group, B.group, QQ.neg(QQ.one))
    Rm = twisted_tensor_algebra(A, B, tm)
    xym = tensor_algebra_element(Rm, A.basis_element(1), B.basis_element(1))
    # (x.y)^2 = -(x^2
    #  . y^2) = 0, expanded by hand from the twisted product rule
    assert (xym * xym).is_zero()


def test_twisted_tensor_is_graded_and_valid_random():
    rng = Random(6)
    for _ in range(10):
        p = rng.choice([3, 5, 7])
        F = GF(p)
        A = truncated_polynomial(F, rng.choice([2, 3]), var="x")
        B = truncated_polynomial(F, rng.choice([2, 3]), var="y")
        q = F.element_of_order(rng.choice([1, 2]))
        R = twisted_tensor_algebra(A, B, uniform_bicharacter(F, A.group, B.group, q))
        assert R.validate().ok
    # trivial twist gives the plain tensor product structure constants
    A = truncated_polynomial(QQ, 3, var="x")
    B = truncated_polynomial(QQ, 2, var="y")
    R1 = twisted_tensor_algebra(A, B, trivial_bicharacter(QQ, A.group, B.group))
    Rq = twisted_tensor_algebra(
        A, B, uniform_bicharacter(QQ, A.group, B.group, QQ.one))
    assert R1.table == Rq.table


def test_bimodule_word_compose_and_apply():
    A = x2()
    f = A.field
    u = BimoduleWord(A, {(1, 0): f.one, (0, 1): f.neg(f.one)})   # x|1 - 1|x
    v = BimoduleWord(A, {(1, 0): f.one, (0, 1): f.one})          # x|1 + 1|x
    assert u.compose(v).is_zero()
    assert v.compose(u).is_zero()
    x = A.basis_element(1)
    assert u.apply(A.one()).is_zero()
    assert v.apply(A.one()) == x.scaled(f.from_int(2))
    assert u.apply(x).is_zero()
    # compose orientation: (x|1) after (1|x) acts by m -> x*m*x
    left = BimoduleWord.from_pair(x, A.one())
    right = BimoduleWord.from_pair(A.one(), x)
    both = left.compose(right)
    assert both == BimoduleWord.from_pair(x, x)


def test_word_degree():
    A = x2()
    f = A.field
    u = BimoduleWord(A, {(1, 0): f.one, (0, 1): f.neg(f.one)})
    assert u.degree() == ZZ.degree((1,))
    mixed = BimoduleWord(A, {(1, 0): f.one, (0, 0): f.one})
    assert mixed.degree() is INHOMOGENEOUS
    assert BimoduleWord.zero(A).degree() is ZERO_DEGREE


def test_element_text_round_trip():
    A = truncated_polynomial(QQ, 3)
    rng = Random(7)
    for _ in range(30):
        el = A.element([QQ.parse(f"{rng.randint(-5, 5)}/{rng.randint(1, 4)}")
                        for _ in range(3)])
        assert parse_element(format_element(el), A) == el
    assert format_element(A.zero()) == "0"
    assert parse_element("1/2*x - x^2 + 3", A) == A.element(
        [QQ.from_int(3), QQ.parse("1/2"), QQ.from_int(-1)])
