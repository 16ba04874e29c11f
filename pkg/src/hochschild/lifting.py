"""Chain-map lifting, diagonal maps, homotopy liftings, cup products
and the Gerstenhaber bracket.

A homotopy lifting of a degree-m cocycle f with respect to a diagonal
map D on a resolution K is a bimodule map psi: K -> K[1-m] with

    d psi - (-1)^(m-1) psi d = (f (x) 1 - 1 (x) f) D          (condition 1)
    mu psi ~ (-1)^(m-1) f psi_K                               (condition 2)

for a companion psi_K: K -> K[1] satisfying d psi_K + psi_K d =
(mu (x) 1 - 1 (x) mu) D.  The bracket of cocycles f, g with verified
liftings is then

    [f, g] = f psi_g - (-1)^((m-1)(n-1)) g psi_f .

The solver works up the degrees.  The two lowest levels are solved as
one joint linear system: the equation at the first nontrivial degree
constrains both the bottom component and the one above it, and any
joint solution propagates (the next right-hand side is automatically a
cycle, so exactness of the resolution keeps every later level solvable
one degree at a time).  Solutions take free variables to zero under the
deterministic pivot order, and are projected onto the internal degree
of f whenever the input data is homogeneous, so liftings are
reproducible and homogeneous.
"""

import warnings

from .algebra import BimoduleWord
from .bicharacter import koszul_sign
from .complexes import Cochain, FreeElement, is_coboundary, is_cocycle
from .grading import INHOMOGENEOUS, ZERO_DEGREE, StructureError
from .linalg import linear_system
from .tensorsquare import left_apply, pair_apply, right_apply, tensor_square


class LiftingError(RuntimeError):
    """A lifting system was inconsistent; carries the failing degree."""

    def __init__(self, message, degree):
        super().__init__(f"{message} (degree {degree})")
        self.degree = degree


class ChainMap:
    """A chain map between complexes over one algebra, lifting the
    identity of the algebra through the augmentations."""

    def __init__(self, source, target, components, homogeneous=False):
        self.source = source
        self.target = target
        self.components = components  # list per degree: [FreeElement] per generator
        self.homogeneous = homogeneous

    @property
    def up_to(self):
        return len(self.components) - 1

    def component(self, n, g):
        return self.components[n][g]

    def apply(self, el):
        if el.complex is not self.source:
            raise StructureError("element is not in the source complex")
        n = el.degree
        out = self.target.zero_element(n)
        for g, w in enumerate(el.words):
            if not w.is_zero():
                out = out + self.components[n][g].word_action(w)
        return out

    def compose(self, other):
        """self . other (apply other first)."""
        if other.target is not self.source:
            raise StructureError("chain maps do not compose")
        top = min(other.up_to, self.up_to)
        comps = [[self.apply(other.components[n][g])
                  for g in range(other.source.rank(n))]
                 for n in range(top + 1)]
        return ChainMap(other.source, self.target, comps,
                        homogeneous=self.homogeneous and other.homogeneous)

    def check(self, up_to=None):
        """Degrees at which the chain-map squares fail (empty = chain map)."""
        top = self.up_to if up_to is None else min(up_to, self.up_to)
        bad = []
        for g in range(self.source.rank(0)):
            lhs = self.target.augment(self.components[0][g])
            rhs = self.source.augment(self.source.generator_element(0, g))
            if lhs != rhs:
                bad.append(0)
                break
        for n in range(1, top + 1):
            for g in range(self.source.rank(n)):
                lhs = self.target.differential(self.components[n][g])
                rhs = self.apply(self.source.generator_element(n, g).differential())
                if lhs != rhs:
                    bad.append(n)
                    break
        return bad


def lift_chain_map(source, target, up_to, homogenize=True):
    """Lift the identity of the algebra through two resolutions of it.

    Solves mu_T phi_0 = mu_S, then d phi_n = phi_(n-1) d degree by
    degree; the target must be exact in the lifted range or a system
    will come out inconsistent, which raises LiftingError with the
    failing degree.
    """
    if source.algebra is not target.algebra:
        raise StructureError("comparison lifting needs one common algebra")
    up_to = min(up_to, source.length, target.length)
    comps = []
    level0 = []
    aug = target.augmentation_solver()
    field = source.field
    for g in range(source.rank(0)):
        val = source.augment(source.generator_element(0, g))
        rhs = {i: c for i, c in enumerate(val.coeffs) if not field.is_zero(c)}
        sol = aug.solve(rhs)
        if sol is None:
            raise LiftingError("augmentation not hit", 0)
        el = target.element_from_kvec(0, sol)
        if homogenize:
            el = el.homogeneous_part(source.gen_degree(0, g))
        level0.append(el)
    comps.append(level0)
    for n in range(1, up_to + 1):
        solver = target.column_solver(n)
        level = []
        for g in range(source.rank(n)):
            rhs = target.zero_element(n - 1)
            for row, word in source.d_column(n, g):
                rhs = rhs + comps[n - 1][row].word_action(word)
            sol = solver.solve(rhs.to_kvec())
            if sol is None:
                raise LiftingError("comparison lifting inconsistent", n)
            el = target.element_from_kvec(n, sol)
            if homogenize:
                el = el.homogeneous_part(source.gen_degree(n, g))
            level.append(el)
        comps.append(level)
    return ChainMap(source, target, comps, homogeneous=homogenize)


def periodic_diagonal(P):
    """The closed-form diagonal D(e_n) = sum e_j (x) e_l on the periodic
    resolution of k[x]/(x^2); other inputs delegate to the comparison
    lifting into the tensor square."""
    if not (P.builder and P.builder[0] == "truncated_polynomial"):
        raise StructureError("periodic diagonal needs the periodic resolution builder")
    if P.builder[1] != 2:
        return diagonal_by_lifting(P, P.length)
    T2 = tensor_square(P)
    A = P.algebra
    one = BimoduleWord.from_pair(A.one(), A.one())
    comps = []
    for n in range(P.length + 1):
        words = [BimoduleWord.zero(A)] * T2.rank(n)
        for j in range(n + 1):
            idx = T2.gen_index(n, j, 0, A.unit, 0)
            words[idx] = one
        comps.append([FreeElement(T2, n, tuple(words))])
    return ChainMap(P, T2, comps, homogeneous=True)


def diagonal_by_lifting(P, up_to=None):
    if up_to is None:
        up_to = P.length
    return lift_chain_map(P, tensor_square(P), up_to)


class SelfMap:
    """A bimodule map P -> P[shift], stored per degree on generators."""

    def __init__(self, complex, shift, components):
        self.complex = complex
        self.shift = shift
        self.components = dict(components)  # n -> [FreeElement at n+shift]

    def degrees(self):
        return sorted(self.components)

    def component(self, n, g):
        level = self.components.get(n)
        return None if level is None else level[g]

    def apply(self, el):
        """Extend over words: psi(sum w_g e_g) = sum w_g . psi(e_g).

        Degrees with no stored component act as zero.
        """
        n = el.degree
        target = n + self.shift
        out = self.complex.zero_element(target)
        level = self.components.get(n)
        if level is None:
            return out
        for g, w in enumerate(el.words):
            if not w.is_zero():
                out = out + level[g].word_action(w)
        return out

    def __add__(self, other):
        if other.complex is not self.complex or other.shift != self.shift:
            raise StructureError("self-maps with different shapes")
        comps = {}
        for n in set(self.components) | set(other.components):
            a = self.components.get(n)
            b = other.components.get(n)
            if a is None:
                comps[n] = list(b)
            elif b is None:
                comps[n] = list(a)
            else:
                comps[n] = [x + y for x, y in zip(a, b)]
        return SelfMap(self.complex, self.shift, comps)

    def scaled(self, c):
        return SelfMap(self.complex, self.shift, {
            n: [x.scaled(c) for x in level] for n, level in self.components.items()})

    def compose(self, other):
        """self . other, a self-map of shift self.shift + other.shift."""
        if other.complex is not self.complex:
            raise StructureError("self-maps on different complexes")
        comps = {}
        for n, level in other.components.items():
            if n + other.shift in self.components:
                comps[n] = [self.apply(x) for x in level]
        return SelfMap(self.complex, self.shift + other.shift, comps)

    def internal_degree(self):
        """The v with |psi(x)| = |x| - v, or a marker."""
        vs = set()
        for n, level in self.components.items():
            for g, el in enumerate(level):
                for h, w in enumerate(el.words):
                    d = w.degree()
                    if d is ZERO_DEGREE:
                        continue
                    if d is INHOMOGENEOUS:
                        return INHOMOGENEOUS
                    vs.add(self.complex.gen_degree(n, g)
                           - d - self.complex.gen_degree(n + self.shift, h))
        if not vs:
            return ZERO_DEGREE
        if len(vs) == 1:
            return vs.pop()
        return INHOMOGENEOUS


def solve_shifted_system(source, target, rhs, shift, eps, top, internal=None,
                         bottom_constraints=None):
    """Solve d psi_n + eps psi_(n-1) d = rhs_n for psi_n: P_n -> T_(n+shift).

    rhs maps degrees to per-generator FreeElements of the target; levels
    missing from rhs are zero.  The lowest two component levels are
    solved jointly, the rest sequentially; a level with no solution
    raises LiftingError.  With internal set to a Degree, every solved
    component is projected onto that internal degree (valid whenever the
    data is homogeneous, since the equations split degree by degree).

    bottom_constraints, when given, appends extra linear conditions on
    the lowest component level to the joint bottom solve.  It is a dict
    with keys nrows, lo_rows (a function (gen, kindex) -> sparse row
    entries for that unknown), columns (extra labeled unknown columns)
    and rhs; solve_homotopy_lifting uses this to impose the
    mu-compatibility on the bottom component.
    """
    field = source.field
    c0 = max(0, -shift)
    e0 = max(c0, 1 - shift)
    top = min(top, source.length, target.length - shift)
    if top < c0:
        return SelfMap(target, shift, {})
    comps = {}

    def project(n, g, el):
        if internal is None:
            return el
        return el.homogeneous_part(source.gen_degree(n, g) - internal)

    # joint bottom window: components at [bottom_lo, e0], one equation level at e0
    bottom_lo = max(c0, e0 - 1)
    if e0 > top:
        for n in range(c0, top + 1):
            comps[n] = [project(n, g, target.zero_element(n + shift))
                        for g in range(source.rank(n))]
        return SelfMap(target, shift, comps)

    block = target.k_dim(e0 + shift - 1)
    eq_rows = source.rank(e0) * block
    extra = bottom_constraints or {}
    sys = linear_system(field, eq_rows + extra.get("nrows", 0))
    if bottom_lo < e0:
        dcols = [source.d_column(e0, g) for g in range(source.rank(e0))]
        for g in range(source.rank(bottom_lo)):
            for kidx in range(target.k_dim(bottom_lo + shift)):
                gk, s, t = target.k_unindex(kidx)
                base = target.generator_element(bottom_lo + shift, gk).word_action(
                    BimoduleWord(target.algebra, {(s, t): field.one}))
                col = {}
                for E in range(source.rank(e0)):
                    for row, word in dcols[E]:
                        if row != g:
                            continue
                        contrib = base.word_action(word).to_kvec()
                        for i, c in contrib.items():
                            key = E * block + i
                            acc = field.add(col.get(key, field.zero), field.mul(eps, c))
                            if field.is_zero(acc):
                                col.pop(key, None)
                            else:
                                col[key] = acc
                if "lo_rows" in extra:
                    for i, c in extra["lo_rows"](g, kidx).items():
                        col[eq_rows + i] = c
                sys.add_column(col, ("lo", g, kidx))
    kcols_hi = target.k_columns(e0 + shift)
    for E in range(source.rank(e0)):
        for kidx in range(target.k_dim(e0 + shift)):
            col = {E * block + i: c for i, c in kcols_hi[kidx].items()}
            sys.add_column(col, ("hi", E, kidx))
    for label, col in extra.get("columns", ()):
        sys.add_column({eq_rows + i: c for i, c in col.items()}, ("x",) + label)
    stacked = {}
    for E in range(source.rank(e0)):
        level = rhs.get(e0)
        if level is None:
            continue
        for i, c in level[E].to_kvec().items():
            stacked[E * block + i] = c
    for i, c in extra.get("rhs", {}).items():
        stacked[eq_rows + i] = c
    sol = sys.solve(stacked)
    if sol is None:
        raise LiftingError("homotopy system inconsistent", e0)
    lo_vecs = [dict() for _ in range(source.rank(bottom_lo))] if bottom_lo < e0 else []
    hi_vecs = [dict() for _ in range(source.rank(e0))]
    for label, c in sol.items():
        kind = label[0]
        if kind == "lo":
            lo_vecs[label[1]][label[2]] = c
        elif kind == "hi":
            hi_vecs[label[1]][label[2]] = c
    for n in range(c0, bottom_lo):
        comps[n] = [project(n, g, target.zero_element(n + shift))
                    for g in range(source.rank(n))]
    if bottom_lo < e0:
        comps[bottom_lo] = [
            project(bottom_lo, g, target.element_from_kvec(bottom_lo + shift, v))
            for g, v in enumerate(lo_vecs)]
    comps[e0] = [project(e0, g, target.element_from_kvec(e0 + shift, v))
                 for g, v in enumerate(hi_vecs)]

    for n in range(e0 + 1, top + 1):
        solver = target.column_solver(n + shift)
        level = []
        prev = comps[n - 1]
        for g in range(source.rank(n)):
            c = rhs.get(n)
            cval = (c[g] if c is not None else target.zero_element(n + shift - 1))
            for row, word in source.d_column(n, g):
                cval = cval - prev[row].word_action(word).scaled(eps)
            sol = solver.solve(cval.to_kvec())
            if sol is None:
                raise LiftingError("homotopy system inconsistent", n)
            level.append(project(n, g, target.element_from_kvec(n + shift, sol)))
        comps[n] = level
    return SelfMap(target, shift, comps)


def lifting_rhs(delta, f, degrees):
    """(f (x) 1 - 1 (x) f) D per degree, as maps into the resolution."""
    out = {}
    for n in degrees:
        level = []
        for g in range(delta.source.rank(n)):
            el = delta.components[n][g]
            level.append(left_apply(f, el) - right_apply(f, el))
        out[n] = level
    return out


def companion_of(delta):
    """The companion psi_K with d psi + psi d = (mu (x) 1 - 1 (x) mu) D.

    Cached on the diagonal; projected onto internal degree zero when the
    diagonal is homogeneous.
    """
    cached = getattr(delta, "_companion", None)
    if cached is not None:
        return cached
    P = delta.source
    mu = P.augmentation_cochain()
    top = min(delta.up_to, P.length - 1)
    rhs = lifting_rhs(delta, mu, range(0, top + 1))
    internal = P.algebra.group.zero() if delta.homogeneous else None
    psi = solve_shifted_system(P, P, rhs, 1, 1, top, internal=internal)
    delta._companion = psi
    return psi


class HomotopyLifting:
    """A solved or supplied homotopy lifting, with its verification data."""

    def __init__(self, cochain, diagonal, psi, companion=None,
                 cond2_ok=None, cond2_defect=None):
        self.cochain = cochain
        self.diagonal = diagonal
        self.psi = psi
        self.companion = companion
        self.cond2_ok = cond2_ok
        self.cond2_defect = cond2_defect

    @property
    def degree(self):
        return self.cochain.degree

    def component(self, n, g):
        return self.psi.component(n, g)


def solve_homotopy_lifting(P, delta, f, top=None, assume_koszul=False):
    """Find a homotopy lifting of the cocycle f with respect to delta.

    Components are solved through degree top (default: as far as the
    diagonal and truncation allow).  The mu-compatibility against the
    solved companion is imposed on the bottom component as part of the
    joint solve, so the result is a homotopy lifting outright whenever
    that strengthened system is consistent.  If it is not, the solver
    falls back to condition 1 alone and records the condition-2 defect
    on the result, with a warning (silenced by assume_koszul, the case
    where only condition 1 matters).
    """
    if delta.source is not P:
        raise StructureError("diagonal is not over this resolution")
    m = f.degree
    if m < 1:
        raise StructureError("homotopy liftings are for cocycles of degree >= 1")
    if not is_cocycle(f):
        raise StructureError("homotopy lifting of a non-cocycle")
    if top is None:
        top = min(P.length, delta.up_to)
    top = min(top, P.length, delta.up_to)
    rhs = lifting_rhs(delta, f, range(m, top + 1))
    v = f.internal_degree()
    if v is ZERO_DEGREE:
        v = P.algebra.group.zero()
    internal = v if (delta.homogeneous and v is not INHOMOGENEOUS) else None
    eps = koszul_sign(P.field, m, 1)  # the equation is d psi - (-1)^(m-1) psi d = rhs
    companion = companion_of(delta)
    constraints = _condition2_constraints(P, f, companion)
    try:
        psi = solve_shifted_system(P, P, rhs, 1 - m, eps, top,
                                   internal=internal, bottom_constraints=constraints)
    except LiftingError:
        psi = solve_shifted_system(P, P, rhs, 1 - m, eps, top, internal=internal)
    lifting = HomotopyLifting(f, delta, psi, companion=companion)
    defect = _condition2_defect(P, f, psi, companion)
    lifting.cond2_defect = defect
    lifting.cond2_ok = defect is None or is_coboundary(defect)
    if not lifting.cond2_ok and not assume_koszul:
        warnings.warn("homotopy lifting solved condition 1 but the mu-compatibility "
                      "failed against the solved companion", stacklevel=2)
    return lifting


def _condition2_constraints(P, f, companion):
    """Rows forcing mu psi_(m-1) - (-1)^(m-1) f psi_K = (coboundary) in the
    joint bottom solve; the coboundary is an auxiliary unknown cochain
    one degree further down (absent for m = 1, where equality is exact)."""
    field = P.field
    m = f.degree
    dim = P.algebra.dim
    nrows = P.hom_dim(m - 1)

    def lo_rows(g, kidx):
        gk, s, t = P.k_unindex(kidx)
        el = P.generator_element(0, gk).word_action(
            BimoduleWord(P.algebra, {(s, t): field.one}))
        val = P.augment(el)
        return {g * dim + b: c for b, c in enumerate(val.coeffs)
                if not field.is_zero(c)}

    columns = []
    if m >= 2:
        for j, col in enumerate(P.hom_delta_columns(m - 2)):
            columns.append(((("c", j)), {i: field.neg(c) for i, c in col.items()}))
    sign = koszul_sign(field, m - 1, 1)
    rhs = {}
    comp_level = companion.components.get(m - 1)
    for g in range(P.rank(m - 1)):
        if comp_level is None:
            break
        val = f.apply_to(comp_level[g]).scaled(sign)
        for b, c in enumerate(val.coeffs):
            if not field.is_zero(c):
                rhs[g * dim + b] = c
    return {"nrows": nrows, "lo_rows": lo_rows, "columns": columns, "rhs": rhs}


def _condition2_defect(P, f, psi, companion):
    """mu psi_f - (-1)^(m-1) f psi_K as a degree-(m-1) cochain."""
    m = f.degree
    if m - 1 > P.length:
        return None
    level = psi.components.get(m - 1)
    comp_level = companion.components.get(m - 1) if companion is not None else None
    images = []
    sign = koszul_sign(P.field, m - 1, 1)
    for g in range(P.rank(m - 1)):
        val = P.algebra.zero()
        if level is not None:
            val = val + P.augment(level[g])
        if comp_level is not None:
            val = val - f.apply_to(comp_level[g]).scaled(sign)
        images.append(val)
    return Cochain(P, m - 1, images)


class LiftingReport:
    def __init__(self, checked, cond1_bad, cond2_ok, defect):
        self.checked = checked          # degrees where condition 1 was checked
        self.cond1_bad = cond1_bad      # degrees with a nonzero residual
        self.cond2_ok = cond2_ok
        self.defect = defect

    @property
    def ok(self):
        return not self.cond1_bad and self.cond2_ok

    def lines(self):
        rng = f"{self.checked[0]}..{self.checked[-1]}" if self.checked else "(none)"
        out = [f"condition 1 checked at degrees {rng}: "
               + ("exact" if not self.cond1_bad else f"residuals at {self.cond1_bad}")]
        out.append("condition 2 (mu-compatibility up to coboundary): "
                   + ("ok" if self.cond2_ok else "FAIL"))
        return out

    def __repr__(self):
        return "\n".join(self.lines())


def verify_homotopy_lifting(P, delta, f, psi, companion=None, top=None):
    """Check both homotopy-lifting conditions for a given psi, exactly.

    Report-valued; condition 1 is verified degree by degree in exact
    arithmetic, condition 2 against the supplied or solved companion.
    """
    if isinstance(psi, HomotopyLifting):
        if companion is None:
            companion = psi.companion
        psi = psi.psi
    m = f.degree
    eps = koszul_sign(P.field, m, 1)
    if top is None:
        top = min(delta.up_to, P.length)
        if psi.components:
            top = min(top, max(psi.components))
    checked, bad = [], []
    for n in range(m, top + 1):
        level = psi.components.get(n)
        if level is None:
            break
        checked.append(n)
        rhs = lifting_rhs(delta, f, [n])[n]
        okay = True
        for g in range(P.rank(n)):
            acc = P.differential(level[g])
            ed = P.generator_element(n, g).differential()
            acc = acc + psi.apply(ed).scaled(eps)
            if acc != rhs[g]:
                okay = False
        if not okay:
            bad.append(n)
    if companion is None:
        companion = companion_of(delta)
    defect = _condition2_defect(P, f, psi, companion)
    cond2 = defect is None or is_coboundary(defect)
    return LiftingReport(checked, bad, cond2, defect)


def cup(f, g, delta, warn=True):
    """The cup product of f and g at chain level: (g (x) f) D.

    Computed for any cochains; a warning marks non-cocycle inputs, whose
    product is not cohomologically meaningful.
    """
    P = delta.source
    n = f.degree + g.degree
    if n > delta.up_to:
        raise StructureError("diagonal not computed far enough for this cup product")
    if warn and not (is_cocycle(f) and is_cocycle(g)):
        warnings.warn("cup product of non-cocycles", stacklevel=2)
    images = [pair_apply(g, f, delta.components[n][e]) for e in range(P.rank(n))]
    return Cochain(P, n, images)


def bracket(f, psi_f, g, psi_g):
    """The Gerstenhaber bracket f psi_g - (-1)^((m-1)(n-1)) g psi_f.

    psi_f, psi_g are (solved or constructed) homotopy liftings of f and
    g with respect to one diagonal.
    """
    if isinstance(psi_f, HomotopyLifting):
        psi_f = psi_f.psi
    if isinstance(psi_g, HomotopyLifting):
        psi_g = psi_g.psi
    P = f.complex
    if g.complex is not P:
        raise StructureError("bracket of cochains on different complexes")
    m, n = f.degree, g.degree
    deg = m + n - 1
    sign = koszul_sign(P.field, m - 1, n - 1)
    images = []
    for e in range(P.rank(deg)):
        gen = P.generator_element(deg, e)
        val = f.apply_to(psi_g.apply(gen))
        val = val - g.apply_to(psi_f.apply(gen)).scaled(sign)
        images.append(val)
    return Cochain(P, deg, images)
