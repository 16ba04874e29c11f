"""Independent ground truth: bar resolutions and the circle bracket.

The (un-normalized) bar resolution has degree n free on symbols
[r_1 | ... | r_n] over basis tuples of the algebra, with the usual
differential

  d[r_1|..|r_n] = r_1 [r_2|..] - [r_1 r_2|..] + ... + (-1)^n [..|r_n-1] r_n

and multiplication as augmentation.  Cochains on it are multilinear
maps, and the classical Gerstenhaber circle product

  (f o g)(r_1,..,r_m+n-1) = sum_i (-1)^((i-1)(n-1)) f(.., g(r_i,..), ..)

gives the bracket [f, g] = f o g - (-1)^((m-1)(n-1)) g o f.  Nothing
here touches diagonals or homotopy liftings, so agreement of this
bracket (after transport along certified comparison maps) with the
homotopy-lifting bracket is a genuinely independent cross-check.
"""

from .algebra import BimoduleWord
from .bicharacter import koszul_sign
from .complexes import (
    Cochain,
    FreeBimoduleComplex,
    are_cohomologous,
    cohomology_basis,
)
from .grading import StructureError
from .lifting import bracket as lifting_bracket
from .lifting import (
    lift_chain_map,
    periodic_diagonal,
    solve_homotopy_lifting,
)

BAR_SIZE_GUARD = 10 ** 6


class BarComplex(FreeBimoduleComplex):
    """Truncated un-normalized bar resolution of an algebra."""

    def __init__(self, algebra, length, check=True):
        dim = algebra.dim
        if dim ** (length + 2) > BAR_SIZE_GUARD:
            raise ValueError(
                f"bar complex would need {dim}^{length + 2} scalar dimensions; "
                f"the guard is {BAR_SIZE_GUARD}")
        field = algebra.field
        tuples = []
        index = []
        for n in range(length + 1):
            gens = [()]
            for _ in range(n):
                gens = [t + (b,) for t in gens for b in range(dim)]
            tuples.append(gens)
            index.append({t: i for i, t in enumerate(gens)})
        self.tuples = tuples
        self.tuple_index = index
        ranks = [len(tuples[n]) for n in range(length + 1)]
        degs = []
        for n in range(length + 1):
            row = []
            for t in tuples[n]:
                d = algebra.group.zero()
                for b in t:
                    d = d + algebra.degrees[b]
                row.append(d)
            degs.append(row)
        labels = [[self._label(algebra, t) for t in tuples[n]]
                  for n in range(length + 1)]
        diffs = [None]
        one = field.one
        for n in range(1, length + 1):
            entries = {}

            def put(row, col, word):
                prev = entries.get((row, col))
                total = word if prev is None else prev + word
                if total.is_zero():
                    entries.pop((row, col), None)
                else:
                    entries[(row, col)] = total

            for col, t in enumerate(tuples[n]):
                # left action peels the first letter
                put(index[n - 1][t[1:]], col,
                    BimoduleWord(algebra, {(t[0], algebra.unit): one}))
                # inner multiplications
                for i in range(1, n):
                    sign = field.neg(one) if i % 2 else one
                    for l, c in algebra.basis_product(t[i - 1], t[i]):
                        merged = t[:i - 1] + (l,) + t[i + 1:]
                        put(index[n - 1][merged], col,
                            BimoduleWord(algebra, {
                                (algebra.unit, algebra.unit): field.mul(sign, c)}))
                # right action peels the last letter
                sign = field.neg(one) if n % 2 else one
                put(index[n - 1][t[:-1]], col,
                    BimoduleWord(algebra, {(algebra.unit, t[-1]): sign}))
            diffs.append(entries)
        super().__init__(algebra, ranks, degs, diffs, [algebra.one()],
                         gen_labels=labels, check=check, builder=("bar",))

    @staticmethod
    def _label(algebra, t):
        inner = "|".join(algebra.labels[b] for b in t) if t else "()"
        return f"[{inner}]"


def bar_resolution(algebra, length, check=True):
    return BarComplex(algebra, length, check=check)


def circle_product(f, g):
    """Gerstenhaber's composition f o g of bar cochains.

    f and g are identified with multilinear maps via the free basis
    tuples; insertion of g at slot i carries the sign (-1)^((i-1)(n-1)).
    """
    bar = f.complex
    if g.complex is not bar:
        raise StructureError("circle product needs cochains on one bar complex")
    if not isinstance(bar, BarComplex):
        raise StructureError("circle product is defined on bar cochains")
    A = bar.algebra
    field = A.field
    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise StructureError("circle product needs degrees >= 1")
    deg = m + n - 1
    if deg > bar.length:
        raise StructureError("circle product overflows the bar truncation")
    images = []
    for t in bar.tuples[deg]:
        val = A.zero()
        for i in range(1, m + 1):
            sign = koszul_sign(field, i - 1, n - 1)
            inner = g.images[bar.tuple_index[n][t[i - 1:i - 1 + n]]]
            for b in inner.support():
                outer_tuple = t[:i - 1] + (b,) + t[i - 1 + n:]
                term = f.images[bar.tuple_index[m][outer_tuple]]
                val = val + term.scaled(field.mul(sign, inner.coeffs[b]))
        images.append(val)
    return Cochain(bar, deg, images)


def circle_bracket(f, g):
    """[f, g] = f o g - (-1)^((m-1)(n-1)) g o f on bar cochains."""
    field = f.complex.field
    sign = koszul_sign(field, f.degree - 1, g.degree - 1)
    return circle_product(f, g) - circle_product(g, f).scaled(sign)


class Comparison:
    """A certified pair of comparison maps between a resolution and bar."""

    def __init__(self, P, bar, into_bar, onto_P):
        self.P = P
        self.bar = bar
        self.into_bar = into_bar  # ChainMap P -> bar
        self.onto_P = onto_P      # ChainMap bar -> P
        self.certified_to = None

    def certify(self, up_to):
        """Check the round trip induces the identity on cohomology.

        For every basis class c of HH^n(P), n <= up_to, the pullback of c
        along (onto_P . into_bar) must be cohomologous to c.
        """
        top = min(up_to, self.into_bar.up_to, self.onto_P.up_to)
        round_trip = self.onto_P.compose(self.into_bar)
        for n in range(top + 1):
            for c in cohomology_basis(self.P, n):
                pulled = pull_back(c, round_trip)
                if not are_cohomologous(pulled, c):
                    raise StructureError(
                        f"comparison round trip moved a class in degree {n}")
        self.certified_to = top
        return top


def comparison_maps(P, bar, up_to):
    into_bar = lift_chain_map(P, bar, up_to)
    onto_P = lift_chain_map(bar, P, up_to)
    return Comparison(P, bar, into_bar, onto_P)


def pull_back(f, chain_map):
    """f . phi, a cochain on the source of the chain map."""
    n = f.degree
    S = chain_map.source
    return Cochain(S, n, [f.apply_to(chain_map.component(n, g))
                          for g in range(S.rank(n))])


def transport_to_bar(f, comparison):
    """A cochain on the resolution becomes the bar cochain f . onto_P."""
    if comparison.certified_to is None or f.degree > comparison.certified_to:
        raise StructureError("comparison maps are not certified this far")
    return pull_back(f, comparison.onto_P)


def transport_from_bar(f_bar, comparison):
    if comparison.certified_to is None or f_bar.degree > comparison.certified_to:
        raise StructureError("comparison maps are not certified this far")
    return pull_back(f_bar, comparison.into_bar)


class OracleRecord:
    __slots__ = ("pair", "ok", "detail")

    def __init__(self, pair, ok, detail=""):
        self.pair = pair
        self.ok = ok
        self.detail = detail

    def line(self):
        verdict = "PASS" if self.ok else "FAIL"
        pair = "(" + ",".join(str(p) for p in self.pair) + ")"
        tail = f" {self.detail}" if self.detail else ""
        return f"{verdict} pair={pair} check=oracle-bracket{tail}"


class OracleReport:
    def __init__(self, records, context):
        self.records = records
        self.context = context

    @property
    def ok(self):
        return all(r.ok for r in self.records)

    def lines(self):
        out = list(self.context)
        out.extend(r.line() for r in self.records)
        passed = sum(1 for r in self.records if r.ok)
        out.append(f"result: {passed}/{len(self.records)} checks passed")
        return out

    def __repr__(self):
        return "\n".join(self.lines())


def oracle_check(P, max_bracket_degree, delta=None, bar=None):
    """Compare every homotopy-lifting bracket of cohomology-basis classes
    against the circle bracket computed on the bar complex.

    Classes f, g with degrees >= 1 and deg f + deg g - 1 within the
    bound are bracketed twice: once on P via solved liftings, once on
    the bar complex after transport, pulled back to P for the class
    comparison.  Comparison maps are certified (round trip is the
    identity on cohomology) before any transport.
    """
    if delta is None:
        delta = periodic_diagonal(P)
    bar_length = max_bracket_degree + 2
    if bar is None:
        bar = bar_resolution(P.algebra, bar_length, check=False)
    comparison = comparison_maps(P, bar, min(bar.length - 1, P.length - 1))
    comparison.certify(min(max_bracket_degree + 1, comparison.into_bar.up_to))
    classes = {}
    for m in range(1, max_bracket_degree + 1):
        classes[m] = cohomology_basis(P, m)
    lifts = {}
    records = []
    npairs = 0
    for m in sorted(classes):
        for n in sorted(classes):
            if m + n - 1 > max_bracket_degree:
                continue
            for ai, f in enumerate(classes[m]):
                for bi, g in enumerate(classes[n]):
                    npairs += 1
                    if (m, ai) not in lifts:
                        lifts[(m, ai)] = solve_homotopy_lifting(P, delta, f)
                    if (n, bi) not in lifts:
                        lifts[(n, bi)] = solve_homotopy_lifting(P, delta, g)
                    direct = lifting_bracket(f, lifts[(m, ai)], g, lifts[(n, bi)])
                    f_bar = transport_to_bar(f, comparison)
                    g_bar = transport_to_bar(g, comparison)
                    oracle = circle_bracket(f_bar, g_bar)
                    pulled = transport_from_bar(oracle, comparison)
                    ok = are_cohomologous(direct, pulled)
                    records.append(OracleRecord(
                        (m, n, ai, bi), ok,
                        "" if ok else "lifting bracket disagrees with the bar "
                        "circle bracket"))
    context = [
        f"oracle check: dim-{P.algebra.dim} algebra, brackets through degree "
        f"{max_bracket_degree}, bar truncated at {bar.length}",
    ]
    return OracleReport(records, context)
