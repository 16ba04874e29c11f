"""Free bimodule complexes, their scalar expansions, and cohomology.

A FreeBimoduleComplex is a bounded complex P_0 <- P_1 <- ... <- P_N of
free A-bimodules with an augmentation P_0 -> A.  P_n is free on rank(n)
generators carrying internal degrees; the differential is a sparse
matrix of BimoduleWord entries (elements of A (x) A^op), so d(a e a') =
a d(e) a' is forced.  Construction checks, in exact arithmetic,

  * d . d = 0 entrywise,
  * every differential entry shifts internal degree by exactly
    (source generator degree) - (target generator degree),
  * augmentation . d_1 = 0.

For rank and solving questions each P_n is expanded over the scalar
field on the basis b_s e_g b_t (dimension rank * dim(A)^2), and the
dual side Hom(P_n, A) on the basis (generator, target basis element).
Cocycles, coboundaries and cohomology bases are computed there with
the deterministic eliminators from linalg, so representatives are
reproducible.
"""

from .algebra import BimoduleWord
from .grading import INHOMOGENEOUS, ZERO_DEGREE, StructureError
from .linalg import linear_system, nullspace_of_columns


class TruncationError(ValueError):
    """An operation needed differentials past the truncation length."""


class FreeBimoduleComplex:

    def __init__(self, algebra, ranks, gen_degrees, differentials, augmentation,
                 gen_labels=None, check=True, builder=None):
        self.algebra = algebra
        self.field = algebra.field
        self.ranks = tuple(int(r) for r in ranks)
        self.length = len(self.ranks) - 1
        self.gen_degrees = tuple(tuple(degs) for degs in gen_degrees)
        if gen_labels is None:
            gen_labels = [[self._default_label(n, g) for g in range(self.ranks[n])]
                          for n in range(self.length + 1)]
        self.gen_labels = tuple(tuple(labs) for labs in gen_labels)
        # differentials[n] for 1 <= n <= length: dict (row, col) -> BimoduleWord
        diffs = [None]
        for n in range(1, self.length + 1):
            entries = {}
            for (row, col), word in differentials[n].items():
                if not (0 <= row < self.ranks[n - 1] and 0 <= col < self.ranks[n]):
                    raise StructureError(f"differential entry ({row},{col}) out of range at degree {n}")
                if word.algebra is not algebra:
                    raise StructureError("differential word over the wrong algebra")
                if not word.is_zero():
                    entries[(row, col)] = word
            diffs.append(entries)
        self.diffs = diffs
        self.augmentation = tuple(augmentation)
        if len(self.augmentation) != self.ranks[0]:
            raise StructureError("augmentation must give one value per degree-0 generator")
        self.builder = builder
        self._d_columns = {}
        self._k_columns = {}
        self._solvers = {}
        self._aug_solver = None
        self._hom_delta = {}
        self._cobound_solvers = {}
        self._cohomology = {}
        if check:
            self._check_shapes()
            self._check_homogeneous()
            self._check_squares()

    def _default_label(self, n, g):
        return f"e{n}" if self.ranks[n] == 1 else f"e{n}_{g}"

    # -- shape and invariant checks ------------------------------------

    def _check_shapes(self):
        if len(self.gen_degrees) != self.length + 1:
            raise StructureError("generator degree table length mismatch")
        for n, degs in enumerate(self.gen_degrees):
            if len(degs) != self.ranks[n]:
                raise StructureError(f"degree count at {n} does not match rank")
            for d in degs:
                if d.group != self.algebra.group:
                    raise StructureError("generator degree in the wrong group")
        for mu in self.augmentation:
            if mu.algebra is not self.algebra:
                raise StructureError("augmentation value in the wrong algebra")

    def _check_homogeneous(self):
        for n in range(1, self.length + 1):
            for (row, col), word in self.diffs[n].items():
                want = self.gen_degrees[n][col] - self.gen_degrees[n - 1][row]
                got = word.degree()
                if got is INHOMOGENEOUS or (got is not ZERO_DEGREE and got != want):
                    raise StructureError(
                        f"differential entry ({row},{col}) at degree {n} is not "
                        f"homogeneous of degree {want!r}")

    def _check_squares(self):
        for n in range(1, self.length + 1):
            for g in range(self.ranks[n]):
                el = self.differential(self.generator_element(n, g))
                if n >= 2:
                    if not self.differential(el).is_zero():
                        raise StructureError(f"d.d != 0 on generator {g} of degree {n}")
                else:
                    if not self.augment(el).is_zero():
                        raise StructureError(f"augmentation.d_1 != 0 on generator {g}")

    # -- structure access ----------------------------------------------

    def rank(self, n):
        if not 0 <= n <= self.length:
            raise TruncationError(f"degree {n} outside truncation 0..{self.length}")
        return self.ranks[n]

    def gen_degree(self, n, g):
        return self.gen_degrees[n][g]

    def gen_label(self, n, g):
        return self.gen_labels[n][g]

    def d_entry(self, n, row, col):
        return self.diffs[n].get((row, col))

    def d_column(self, n, col):
        """[(row, word)] entries of the differential leaving generator col."""
        key = n
        if key not in self._d_columns:
            cols = [[] for _ in range(self.ranks[n])]
            for (row, c), word in sorted(self.diffs[n].items(), key=lambda kv: (kv[0][1], kv[0][0])):
                cols[c].append((row, word))
            self._d_columns[key] = cols
        return self._d_columns[key][col]

    # -- elements --------------------------------------------------------

    def zero_element(self, n):
        zero = BimoduleWord.zero(self.algebra)
        return FreeElement(self, n, (zero,) * self.rank(n))

    def generator_element(self, n, g):
        words = [BimoduleWord.zero(self.algebra) for _ in range(self.rank(n))]
        words[g] = BimoduleWord.from_pair(self.algebra.one(), self.algebra.one())
        return FreeElement(self, n, tuple(words))

    def element(self, n, words):
        words = tuple(words)
        if len(words) != self.rank(n):
            raise StructureError("wrong number of generator components")
        return FreeElement(self, n, words)

    def differential(self, el):
        if el.complex is not self:
            raise StructureError("element of a different complex")
        n = el.degree
        if n < 1:
            raise TruncationError("no differential out of degree 0")
        out = [BimoduleWord.zero(self.algebra) for _ in range(self.ranks[n - 1])]
        for g, w in enumerate(el.words):
            if w.is_zero():
                continue
            for row, entry in self.d_column(n, g):
                out[row] = out[row] + w.compose(entry)
        return FreeElement(self, n - 1, tuple(out))

    def augment(self, el):
        """The augmentation applied to a degree-0 element."""
        if el.degree != 0:
            raise StructureError("augmentation applies in degree 0")
        out = self.algebra.zero()
        for g, w in enumerate(el.words):
            if not w.is_zero():
                out = out + w.apply(self.augmentation[g])
        return out

    def augmentation_cochain(self):
        return Cochain(self, 0, self.augmentation)

    # -- scalar expansion -------------------------------------------------

    def k_dim(self, n):
        return self.rank(n) * self.algebra.dim ** 2

    def k_index(self, g, s, t):
        dim = self.algebra.dim
        return (g * dim + s) * dim + t

    def k_unindex(self, idx):
        dim = self.algebra.dim
        g, rest = divmod(idx, dim * dim)
        s, t = divmod(rest, dim)
        return g, s, t

    def k_columns(self, n):
        """Columns of d_n over the scalar basis b_s e_g b_t."""
        if n not in self._k_columns:
            A = self.algebra
            dim = A.dim
            cols = []
            for g in range(self.ranks[n]):
                entries = self.d_column(n, g)
                for s in range(dim):
                    for t in range(dim):
                        outer = BimoduleWord(A, {(s, t): self.field.one})
                        col = {}
                        for row, word in entries:
                            for (u, v), c in outer.compose(word).terms.items():
                                key = self.k_index(row, u, v)
                                acc = self.field.add(col.get(key, self.field.zero), c)
                                if self.field.is_zero(acc):
                                    col.pop(key, None)
                                else:
                                    col[key] = acc
                        cols.append(col)
            self._k_columns[n] = cols
        return self._k_columns[n]

    def column_solver(self, n):
        """Eliminator loaded with the scalar columns of d_n (cached)."""
        if n not in self._solvers:
            sys = linear_system(self.field, self.k_dim(n - 1))
            for j, col in enumerate(self.k_columns(n)):
                sys.add_column(col, j)
            self._solvers[n] = sys
        return self._solvers[n]

    def augmentation_columns(self):
        dim = self.algebra.dim
        cols = []
        for g in range(self.ranks[0]):
            for s in range(dim):
                for t in range(dim):
                    word = BimoduleWord(self.algebra, {(s, t): self.field.one})
                    val = word.apply(self.augmentation[g])
                    cols.append({i: c for i, c in enumerate(val.coeffs)
                                 if not self.field.is_zero(c)})
        return cols

    def augmentation_solver(self):
        if self._aug_solver is None:
            sys = linear_system(self.field, self.algebra.dim)
            for j, col in enumerate(self.augmentation_columns()):
                sys.add_column(col, j)
            self._aug_solver = sys
        return self._aug_solver

    def element_from_kvec(self, n, vec):
        words = [dict() for _ in range(self.rank(n))]
        for idx, c in vec.items():
            g, s, t = self.k_unindex(idx)
            words[g][(s, t)] = c
        return FreeElement(self, n, tuple(
            BimoduleWord(self.algebra, w) for w in words))

    # -- Hom(P, A) side ----------------------------------------------------

    def hom_dim(self, n):
        return self.rank(n) * self.algebra.dim

    def hom_delta_columns(self, n):
        """Columns of the Hom differential Hom(P_n, A) -> Hom(P_n+1, A)."""
        if n not in self._hom_delta:
            if n + 1 > self.length:
                raise TruncationError(
                    f"Hom differential at degree {n} needs d_{n + 1} past the truncation")
            A = self.algebra
            dim = A.dim
            cols = []
            for g in range(self.ranks[n]):
                for b in range(dim):
                    f = Cochain.basis(self, n, g, b)
                    cols.append(f.coboundary().to_vec())
            self._hom_delta[n] = cols
        return self._hom_delta[n]

    def coboundary_solver(self, n):
        """Eliminator over the coboundary space inside Hom(P_n, A)."""
        if n not in self._cobound_solvers:
            sys = linear_system(self.field, self.hom_dim(n))
            if n >= 1:
                for j, col in enumerate(self.hom_delta_columns(n - 1)):
                    sys.add_column(col, j)
            self._cobound_solvers[n] = sys
        return self._cobound_solvers[n]

    def __repr__(self):
        return (f"FreeBimoduleComplex(length {self.length}, ranks {list(self.ranks)}, "
                f"over {self.algebra!r})")


class FreeElement:
    """An element of P_n, stored as one BimoduleWord per generator."""

    __slots__ = ("complex", "degree", "words")

    def __init__(self, complex, degree, words):
        self.complex = complex
        self.degree = degree
        self.words = words

    def _check(self, other):
        if other.complex is not self.complex or other.degree != self.degree:
            raise StructureError("elements in different modules")

    def __add__(self, other):
        self._check(other)
        return FreeElement(self.complex, self.degree, tuple(
            a + b for a, b in zip(self.words, other.words)))

    def __sub__(self, other):
        self._check(other)
        return FreeElement(self.complex, self.degree, tuple(
            a - b for a, b in zip(self.words, other.words)))

    def __neg__(self):
        return FreeElement(self.complex, self.degree, tuple(-a for a in self.words))

    def scaled(self, c):
        return FreeElement(self.complex, self.degree, tuple(
            a.scaled(c) for a in self.words))

    def word_action(self, w):
        """Act by an outer word: w . (sum w_g e_g) = sum (w o w_g) e_g."""
        return FreeElement(self.complex, self.degree, tuple(
            w.compose(a) for a in self.words))

    def is_zero(self):
        return all(w.is_zero() for w in self.words)

    def differential(self):
        return self.complex.differential(self)

    def to_kvec(self):
        vec = {}
        for g, w in enumerate(self.words):
            for (s, t), c in w.terms.items():
                vec[self.complex.k_index(g, s, t)] = c
        return vec

    def homogeneous_part(self, total_degree):
        """Terms b_s e_g b_t whose total internal degree equals total_degree."""
        A = self.complex.algebra
        out = []
        for g, w in enumerate(self.words):
            gdeg = self.complex.gen_degree(self.degree, g)
            keep = {}
            for (s, t), c in w.terms.items():
                if A.degrees[s] + gdeg + A.degrees[t] == total_degree:
                    keep[(s, t)] = c
            out.append(BimoduleWord(A, keep))
        return FreeElement(self.complex, self.degree, tuple(out))

    def __eq__(self, other):
        return (isinstance(other, FreeElement) and other.complex is self.complex
                and other.degree == self.degree and other.words == self.words)

    def __repr__(self):
        from .textio import format_free_element
        return format_free_element(self)


class Cochain:
    """An element of Hom over A-e of (P_n, A): one value per generator."""

    __slots__ = ("complex", "degree", "images")

    def __init__(self, complex, degree, images):
        images = tuple(images)
        if len(images) != complex.rank(degree):
            raise StructureError("one image per generator required")
        for m in images:
            if m.algebra is not complex.algebra:
                raise StructureError("cochain image in the wrong algebra")
        self.complex = complex
        self.degree = degree
        self.images = images

    @classmethod
    def basis(cls, complex, n, g, b):
        images = [complex.algebra.zero()] * complex.rank(n)
        images[g] = complex.algebra.basis_element(b)
        return cls(complex, n, images)

    @classmethod
    def zero(cls, complex, n):
        return cls(complex, n, [complex.algebra.zero()] * complex.rank(n))

    @classmethod
    def single(cls, complex, n, g, value):
        images = [complex.algebra.zero()] * complex.rank(n)
        images[g] = value
        return cls(complex, n, images)

    def _check(self, other):
        if other.complex is not self.complex or other.degree != self.degree:
            raise StructureError("cochains in different spaces")

    def __add__(self, other):
        self._check(other)
        return Cochain(self.complex, self.degree, tuple(
            a + b for a, b in zip(self.images, other.images)))

    def __sub__(self, other):
        self._check(other)
        return Cochain(self.complex, self.degree, tuple(
            a - b for a, b in zip(self.images, other.images)))

    def __neg__(self):
        return Cochain(self.complex, self.degree, tuple(-a for a in self.images))

    def scaled(self, c):
        return Cochain(self.complex, self.degree, tuple(
            a.scaled(c) for a in self.images))

    def is_zero(self):
        return all(m.is_zero() for m in self.images)

    def apply_to(self, el):
        """Evaluate the bimodule-linear extension on a free element."""
        if el.complex is not self.complex or el.degree != self.degree:
            raise StructureError("cochain applied at the wrong degree")
        out = self.complex.algebra.zero()
        for g, w in enumerate(el.words):
            if not w.is_zero() and not self.images[g].is_zero():
                out = out + w.apply(self.images[g])
        return out

    def coboundary(self):
        """f . d_(n+1), a cochain one degree up."""
        P = self.complex
        n = self.degree
        if n + 1 > P.length:
            raise TruncationError(f"coboundary at degree {n} is past the truncation")
        images = []
        for g in range(P.rank(n + 1)):
            val = P.algebra.zero()
            for row, word in P.d_column(n + 1, g):
                if not self.images[row].is_zero():
                    val = val + word.apply(self.images[row])
            images.append(val)
        return Cochain(P, n + 1, images)

    def internal_degree(self):
        """The v with |f(e)| = |e| - v, or a zero/inhomogeneous marker."""
        vs = set()
        for g, m in enumerate(self.images):
            d = m.degree()
            if d is ZERO_DEGREE:
                continue
            if d is INHOMOGENEOUS:
                return INHOMOGENEOUS
            vs.add(self.complex.gen_degree(self.degree, g) - d)
        if not vs:
            return ZERO_DEGREE
        if len(vs) == 1:
            return vs.pop()
        return INHOMOGENEOUS

    def to_vec(self):
        f = self.complex.field
        dim = self.complex.algebra.dim
        vec = {}
        for g, m in enumerate(self.images):
            for b, c in enumerate(m.coeffs):
                if not f.is_zero(c):
                    vec[g * dim + b] = c
        return vec

    @classmethod
    def from_vec(cls, complex, n, vec):
        dim = complex.algebra.dim
        field = complex.field
        coeffs = [[field.zero] * dim for _ in range(complex.rank(n))]
        for idx, c in vec.items():
            g, b = divmod(idx, dim)
            coeffs[g][b] = c
        return cls(complex, n, [complex.algebra.element(row) for row in coeffs])

    def __eq__(self, other):
        return (isinstance(other, Cochain) and other.complex is self.complex
                and other.degree == self.degree and other.images == self.images)

    def __repr__(self):
        vals = ", ".join(
            f"{self.complex.gen_label(self.degree, g)} -> {m!r}"
            for g, m in enumerate(self.images) if not m.is_zero())
        return f"Cochain(deg {self.degree}: {vals or '0'})"


# -- cocycles, coboundaries, cohomology ---------------------------------


def is_cocycle(f):
    return f.coboundary().is_zero()


def is_coboundary(f, witness=False):
    """Is f = g . d for some cochain g one degree down?

    With witness=True returns the solving g (or None).
    """
    P, n = f.complex, f.degree
    if n == 0:
        ok = f.is_zero()
        if not witness:
            return ok
        return Cochain.zero(P, 0) if ok else None
    sol = P.coboundary_solver(n).solve(f.to_vec())
    if not witness:
        return sol is not None
    if sol is None:
        return None
    return Cochain.from_vec(P, n - 1, sol)


def are_cohomologous(f, g):
    if f.complex is not g.complex or f.degree != g.degree:
        raise StructureError("cochains in different spaces")
    if not is_cocycle(f) or not is_cocycle(g):
        raise StructureError("cohomology comparison needs cocycles")
    return is_coboundary(f - g)


def cohomology_basis(P, n):
    """Representatives of a basis of HH^n computed on P.

    Deterministic: cocycle representatives are taken in the eliminator's
    canonical kernel order and reduced against the coboundary space.
    """
    if n in P._cohomology:
        return P._cohomology[n]
    if n + 1 > P.length:
        raise TruncationError(f"cohomology at degree {n} is past the truncation")
    cocycle_vecs = nullspace_of_columns(
        P.field, P.hom_dim(n + 1), P.hom_delta_columns(n))
    sys = linear_system(P.field, P.hom_dim(n))
    if n >= 1:
        for j, col in enumerate(P.hom_delta_columns(n - 1)):
            sys.add_column(col, ("b", j))
    reps = []
    for i, vec in enumerate(cocycle_vecs):
        if sys.add_column(vec, ("z", i)) is None:
            reps.append(Cochain.from_vec(P, n, vec))
    P._cohomology[n] = reps
    return reps


# -- exactness ------------------------------------------------------------


class ExactnessReport:

    def __init__(self, complex, up_to, homology_dims, aug_rank, d1_rank, kernel_mu_dim):
        self.complex = complex
        self.up_to = up_to
        self.homology_dims = homology_dims  # {n: dim H_n} for 1 <= n <= up_to
        self.aug_rank = aug_rank
        self.d1_rank = d1_rank
        self.kernel_mu_dim = kernel_mu_dim

    @property
    def h0_ok(self):
        return (self.aug_rank == self.complex.algebra.dim
                and self.d1_rank == self.kernel_mu_dim)

    @property
    def ok(self):
        return self.h0_ok and all(d == 0 for d in self.homology_dims.values())

    def lines(self):
        out = [f"H0: augmentation rank {self.aug_rank}/{self.complex.algebra.dim}, "
               f"ker mu {self.kernel_mu_dim} vs im d_1 {self.d1_rank} -> "
               f"{'ok' if self.h0_ok else 'FAIL'}"]
        for n in sorted(self.homology_dims):
            d = self.homology_dims[n]
            out.append(f"H{n}: dim {d} -> {'ok' if d == 0 else 'FAIL'}")
        out.append(f"exact through degree {self.up_to}: {'yes' if self.ok else 'NO'}")
        return out

    def __repr__(self):
        return "\n".join(self.lines())


def verify_exactness(P, up_to):
    """Certify H_n = 0 for 1 <= n <= up_to and H_0 = A via the augmentation.

    Needs d_(up_to + 1), so up_to must stay below the truncation length.
    """
    if up_to >= P.length:
        raise TruncationError(
            f"exactness through {up_to} needs d_{up_to + 1}; truncation is {P.length}")
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    ranks = {n: P.column_solver(n).rank for n in range(1, up_to + 2)}
    aug_rank = P.augmentation_solver().rank
    kernel_mu_dim = P.k_dim(0) - aug_rank
    homology = {}
    for n in range(1, up_to + 1):
        homology[n] = P.k_dim(n) - ranks[n] - ranks[n + 1]
    return ExactnessReport(P, up_to, homology, aug_rank, ranks[1], kernel_mu_dim)


class ScalarComplex:
    """The scalar-field expansion of a free bimodule complex."""

    def __init__(self, complex):
        self.complex = complex
        self.dims = [complex.k_dim(n) for n in range(complex.length + 1)]

    def matrix_columns(self, n):
        return self.complex.k_columns(n)

    def composes_to_zero(self, n):
        """Does d_(n-1) . d_n vanish on the scalar expansion?"""
        field = self.complex.field
        upper = self.matrix_columns(n)
        lower = self.matrix_columns(n - 1)
        for col in upper:
            acc = {}
            for i, c in col.items():
                for k, v in lower[i].items():
                    acc[k] = field.add(acc.get(k, field.zero), field.mul(c, v))
            if any(not field.is_zero(v) for v in acc.values()):
                return False
        return True


def scalar_expansion(P):
    return ScalarComplex(P)


# -- the periodic resolution of a truncated polynomial ring ---------------


def truncated_power(algebra):
    """The N with algebra = k[x]/(x^N) in power-ordered basis, or None.

    The basis must be ordered 1, x, x^2, ... with the evident products;
    builders tag their output, everything else is checked structurally.
    """
    if algebra.builder_info and algebra.builder_info[0] == "truncated_polynomial":
        return algebra.builder_info[1]
    if algebra.unit != 0 or algebra.dim < 2:
        return None
    npow = algebra.dim
    one = algebra.field.one
    for i in range(1, npow):
        for j in range(1, npow):
            want = ((i + j, one),) if i + j < npow else ()
            if algebra.basis_product(i, j) != want:
                return None
    return npow


def truncated_polynomial_resolution(algebra, length=8, gen_suffix=""):
    """The rank-one periodic resolution of k[x]/(x^N).

    Odd differentials multiply by u = x(x)1 - 1(x)x, even ones by
    v = sum over i+j = N-1 of x^i (x) x^j; generator degrees follow the
    homogeneity rule |e_2j| = jN |x|, |e_2j+1| = (jN+1) |x|.
    """
    npow = truncated_power(algebra)
    if npow is None:
        raise StructureError("this resolution builder needs a truncated polynomial ring")
    if length < 1:
        raise ValueError("length must be at least 1")
    field = algebra.field
    xdeg = algebra.degrees[1] if algebra.dim > 1 else algebra.group.zero()
    u = BimoduleWord(algebra, {(1, 0): field.one, (0, 1): field.neg(field.one)})
    v = BimoduleWord(algebra, {(i, npow - 1 - i): field.one for i in range(npow)})
    ranks = [1] * (length + 1)
    degs = []
    for n in range(length + 1):
        j, r = divmod(n, 2)
        degs.append([xdeg.scaled(j * npow + r)])
    diffs = [None]
    for n in range(1, length + 1):
        diffs.append({(0, 0): u if n % 2 == 1 else v})
    labels = [[f"e{n}{gen_suffix}"] for n in range(length + 1)]
    return FreeBimoduleComplex(
        algebra, ranks, degs, diffs, [algebra.one()],
        gen_labels=labels, builder=("truncated_polynomial", npow))
