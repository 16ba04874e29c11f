"""Finite-dimensional graded algebras presented by structure constants.

A GradedAlgebra fixes a field, a grading group, a homogeneous basis
with degrees, a unit basis element and the full multiplication table
b_i * b_j = sum c_ij^l b_l.  Elements are coefficient vectors over the
basis.  A BimoduleWord is an element of the enveloping algebra
A (x) A^op, i.e. a formal sum of pairs (a, a') acting on a bimodule by
m |-> a*m*a'; these are the matrix entries of free bimodule complexes.
"""

from .grading import INHOMOGENEOUS, ZERO_DEGREE, StructureError, ZZ, direct_sum, join_degrees


class GradedAlgebra:

    builder_info = None    # set by builders that downstream code recognizes
    tensor_factors = None  # (A, B, twist) when built as a twisted tensor product

    def __init__(self, field, group, labels, degrees, unit, products, check=True):
        """products: dict (i, j) -> {l: coeff}; omitted pairs multiply to zero,
        except that unit rows and columns are filled in automatically."""
        labels = tuple(labels)
        degrees = tuple(degrees)
        dim = len(labels)
        if len(degrees) != dim:
            raise StructureError("basis labels and degrees differ in length")
        if len(set(labels)) != dim:
            raise StructureError("duplicate basis labels")
        for d in degrees:
            if d.group != group:
                raise StructureError(f"basis degree {d!r} not in {group!r}")
        if not 0 <= unit < dim:
            raise StructureError("unit index out of range")
        table = [[() for _ in range(dim)] for _ in range(dim)]
        for i in range(dim):
            table[unit][i] = ((i, field.one),)
            table[i][unit] = ((i, field.one),)
        for (i, j), fibre in products.items():
            if unit in (i, j):
                expected = {j if i == unit else i: field.one}
                got = {l: c for l, c in fibre.items() if not field.is_zero(c)}
                if got != expected:
                    raise StructureError(f"product table contradicts the unit at ({i},{j})")
                continue
            table[i][j] = tuple(sorted(
                (l, c) for l, c in fibre.items() if not field.is_zero(c)))
        self.field = field
        self.group = group
        self.labels = labels
        self.degrees = degrees
        self.unit = unit
        self.table = tuple(tuple(row) for row in table)
        self.dim = dim
        self._label_index = {lab: i for i, lab in enumerate(labels)}
        if check:
            report = self.validate()
            if not report.ok:
                raise StructureError("invalid algebra:\n" + "\n".join(report.violations))

    def basis_product(self, i, j):
        return self.table[i][j]

    def index_of(self, label):
        try:
            return self._label_index[label]
        except KeyError:
            raise StructureError(f"unknown basis label {label!r}") from None

    def zero(self):
        return AlgebraElement(self, (self.field.zero,) * self.dim)

    def one(self):
        return self.basis_element(self.unit)

    def basis_element(self, i):
        coeffs = [self.field.zero] * self.dim
        coeffs[i] = self.field.one
        return AlgebraElement(self, tuple(coeffs))

    def element(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != self.dim:
            raise StructureError("coefficient vector has the wrong length")
        return AlgebraElement(self, coeffs)

    def from_dict(self, fibre):
        coeffs = [self.field.zero] * self.dim
        for i, c in fibre.items():
            coeffs[i] = self.field.add(coeffs[i], c)
        return AlgebraElement(self, tuple(coeffs))

    def validate(self):
        """Check associativity, unit laws and gradedness on the whole basis.

        Report-valued: every violated triple or pair is listed.
        """
        field = self.field
        violations = []
        for i in range(self.dim):
            if self.basis_product(self.unit, i) != ((i, field.one),):
                violations.append(f"unit law fails on 1*{self.labels[i]}")
            if self.basis_product(i, self.unit) != ((i, field.one),):
                violations.append(f"unit law fails on {self.labels[i]}*1")
        if not self.degrees[self.unit].is_zero():
            violations.append("unit is not in degree zero")
        for i in range(self.dim):
            for j in range(self.dim):
                want = self.degrees[i] + self.degrees[j]
                for l, c in self.basis_product(i, j):
                    if self.degrees[l] != want:
                        violations.append(
                            f"graded multiplication fails on {self.labels[i]}*{self.labels[j]}"
                            f" -> {self.labels[l]}")
        for i in range(self.dim):
            bi = self.basis_element(i)
            for j in range(self.dim):
                bj = self.basis_element(j)
                prod_ij = bi * bj
                for k in range(self.dim):
                    bk = self.basis_element(k)
                    if prod_ij * bk != bi * (bj * bk):
                        violations.append(
                            f"associativity fails on ({self.labels[i]},"
                            f"{self.labels[j]},{self.labels[k]})")
        return AlgebraReport(violations)

    def __repr__(self):
        return f"GradedAlgebra(dim {self.dim} over {self.field!r}, grading {self.group!r})"


class AlgebraReport:
    def __init__(self, violations):
        self.violations = violations

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        return "valid" if self.ok else "; ".join(self.violations)


class AlgebraElement:

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise StructureError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        f = self.algebra.field
        return AlgebraElement(self.algebra, tuple(
            f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        f = self.algebra.field
        return AlgebraElement(self.algebra, tuple(
            f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        f = self.algebra.field
        return AlgebraElement(self.algebra, tuple(f.neg(a) for a in self.coeffs))

    def scaled(self, c):
        f = self.algebra.field
        return AlgebraElement(self.algebra, tuple(f.mul(c, a) for a in self.coeffs))

    def __mul__(self, other):
        """Bilinear extension of the structure-constant table."""
        self._check(other)
        A, f = self.algebra, self.algebra.field
        out = [f.zero] * A.dim
        for i, a in enumerate(self.coeffs):
            if f.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if f.is_zero(b):
                    continue
                ab = f.mul(a, b)
                for l, c in A.basis_product(i, j):
                    out[l] = f.add(out[l], f.mul(ab, c))
        return AlgebraElement(A, tuple(out))

    def is_zero(self):
        f = self.algebra.field
        return all(f.is_zero(a) for a in self.coeffs)

    def support(self):
        f = self.algebra.field
        return [i for i, a in enumerate(self.coeffs) if not f.is_zero(a)]

    def degree(self):
        """Common degree of the support, ZERO_DEGREE for 0, else INHOMOGENEOUS."""
        sup = self.support()
        if not sup:
            return ZERO_DEGREE
        degs = {self.algebra.degrees[i] for i in sup}
        if len(degs) == 1:
            return degs.pop()
        return INHOMOGENEOUS

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and other.algebra is self.algebra and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.algebra), self.coeffs))

    def __repr__(self):
        from .textio import format_element
        return format_element(self)


class BimoduleWord:
    """An element of the enveloping algebra A (x) A^op.

    terms maps basis index pairs (i, j) to scalars; the word acts on a
    bimodule element m as sum c * b_i * m * b_j.  Support is kept free
    of zero coefficients, so equality is structural; two words are equal
    as elements of A (x) A^op exactly when they act identically on every
    free bimodule.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        f = algebra.field
        self.algebra = algebra
        self.terms = {ij: c for ij, c in terms.items() if not f.is_zero(c)}

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, {})

    @classmethod
    def from_pair(cls, left, right, coeff=None):
        """The word (left (x) right) for algebra elements left, right."""
        A = left.algebra
        f = A.field
        if coeff is None:
            coeff = f.one
        terms = {}
        for i in left.support():
            for j in right.support():
                c = f.mul(coeff, f.mul(left.coeffs[i], right.coeffs[j]))
                if not f.is_zero(c):
                    terms[(i, j)] = f.add(terms.get((i, j), f.zero), c)
        return cls(A, terms)

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise StructureError("words over different algebras")

    def __add__(self, other):
        self._check(other)
        f = self.algebra.field
        terms = dict(self.terms)
        for ij, c in other.terms.items():
            terms[ij] = f.add(terms.get(ij, f.zero), c)
        return BimoduleWord(self.algebra, terms)

    def __sub__(self, other):
        self._check(other)
        f = self.algebra.field
        terms = dict(self.terms)
        for ij, c in other.terms.items():
            terms[ij] = f.sub(terms.get(ij, f.zero), c)
        return BimoduleWord(self.algebra, terms)

    def __neg__(self):
        f = self.algebra.field
        return BimoduleWord(self.algebra, {ij: f.neg(c) for ij, c in self.terms.items()})

    def scaled(self, c):
        f = self.algebra.field
        return BimoduleWord(self.algebra, {ij: f.mul(c, v) for ij, v in self.terms.items()})

    def compose(self, inner):
        """Composition in A (x) A^op: (a(x)a') after (b(x)b') is ab (x) b'a'."""
        self._check(inner)
        A, f = self.algebra, self.algebra.field
        terms = {}
        for (i, j), c in self.terms.items():
            for (u, v), d in inner.terms.items():
                cd = f.mul(c, d)
                for li, cl in A.basis_product(i, u):
                    for rj, cr in A.basis_product(v, j):
                        key = (li, rj)
                        val = f.mul(cd, f.mul(cl, cr))
                        acc = f.add(terms.get(key, f.zero), val)
                        if f.is_zero(acc):
                            terms.pop(key, None)
                        else:
                            terms[key] = acc
        return BimoduleWord(A, terms)

    def apply(self, m):
        """Act on an algebra element: sum c * b_i * m * b_j."""
        if m.algebra is not self.algebra:
            raise StructureError("word applied to an element of another algebra")
        A = self.algebra
        out = A.zero()
        for (i, j), c in self.terms.items():
            out = out + (A.basis_element(i) * m * A.basis_element(j)).scaled(c)
        return out

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Common shift degree |a| + |a'| of the support, or a marker."""
        if not self.terms:
            return ZERO_DEGREE
        degs = {self.algebra.degrees[i] + self.algebra.degrees[j] for i, j in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return INHOMOGENEOUS

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        return (isinstance(other, BimoduleWord)
                and other.algebra is self.algebra and other.terms == self.terms)

    def __repr__(self):
        from .textio import format_word
        return format_word(self)


def truncated_polynomial(field, npow, var="x", group=None, gen_degree=None):
    """k[x]/(x^npow) with basis 1, x, ..., x^(npow-1).

    The generator sits in degree gen_degree (default: the generator of a
    fresh Z grading); powers are graded accordingly.
    """
    if npow < 2:
        raise StructureError("need x^n with n >= 2")
    if group is None:
        group = ZZ
    if gen_degree is None:
        gen_degree = group.generator(0) if group.nfactors else group.zero()
    if gen_degree.group != group:
        raise StructureError("generator degree not in the grading group")
    labels = []
    for i in range(npow):
        if i == 0:
            labels.append("1")
        elif i == 1:
            labels.append(var)
        else:
            labels.append(f"{var}^{i}")
    degrees = [gen_degree.scaled(i) for i in range(npow)]
    products = {}
    for i in range(1, npow):
        for j in range(1, npow):
            if i + j < npow:
                products[(i, j)] = {i + j: field.one}
            else:
                products[(i, j)] = {}
    A = GradedAlgebra(field, group, labels, degrees, 0, products)
    A.builder_info = ("truncated_polynomial", npow)
    return A


def tensor_basis_label(la, lb):
    return f"{la}.{lb}"


def twisted_tensor_algebra(A, B, twist):
    """The twisted tensor product algebra of A and B along a bicharacter.

    Basis is a_i (x) b_j in row-major order (i * dim B + j), graded by the
    direct sum of the two gradings, with product
    (a (x) b)(a' (x) b') = t(|a'|, |b|) * aa' (x) bb'.
    """
    if A.field != B.field:
        raise StructureError("factors over different fields")
    field = A.field
    if twist.field != field or twist.left_group != A.group or twist.right_group != B.group:
        raise StructureError("bicharacter does not match the factor gradings")
    group = direct_sum(A.group, B.group)
    labels, degrees = [], []
    for i in range(A.dim):
        for j in range(B.dim):
            labels.append(tensor_basis_label(A.labels[i], B.labels[j]))
            degrees.append(join_degrees(group, A.degrees[i], B.degrees[j]))
    dimB = B.dim
    unit = A.unit * dimB + B.unit
    products = {}
    for i in range(A.dim):
        for j in range(B.dim):
            for u in range(A.dim):
                for v in range(B.dim):
                    if (i, j) == (A.unit, B.unit) or (u, v) == (A.unit, B.unit):
                        continue
                    tw = twist.pair(A.degrees[u], B.degrees[j])
                    fibre = {}
                    for la, ca in A.basis_product(i, u):
                        for lb, cb in B.basis_product(j, v):
                            c = field.mul(tw, field.mul(ca, cb))
                            key = la * dimB + lb
                            fibre[key] = field.add(fibre.get(key, field.zero), c)
                    products[(i * dimB + j, u * dimB + v)] = fibre
    R = GradedAlgebra(field, group, labels, degrees, unit, products)
    R.tensor_factors = (A, B, twist)
    return R


def tensor_algebra_element(R, a, b):
    """a (x) b as an element of the (twisted) tensor product algebra R."""
    A, B, _ = R.tensor_factors
    if a.algebra is not A or b.algebra is not B:
        raise StructureError("factors do not live in the tensor factors of R")
    field = R.field
    coeffs = [field.zero] * R.dim
    for i in a.support():
        for j in b.support():
            coeffs[i * B.dim + j] = field.mul(a.coeffs[i], b.coeffs[j])
    return R.element(coeffs)
