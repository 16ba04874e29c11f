"""The tensor square P (x)_A P of a free bimodule complex.

Degree n of the square is the direct sum over j + l = n of P_j (x)_A P_l,
which is free as an A-bimodule on the symbols e_g b_s e_h (left
generator, middle basis element, right generator), of internal degree
|e_g| + |b_s| + |e_h|.  The differential is d (x) 1 + (-1)^j 1 (x) d with
the middle coefficients absorbed into the adjacent factor.  The square
of a resolution of A is again a resolution of A, augmented by
mu(e_g) b_s mu(e_h); that is what lets diagonal maps be found by the
comparison theorem.

Evaluation helpers apply cochains to the two slots with the Koszul sign
rule; they are the single path by which (f (x) 1), (1 (x) f) and
(f' (x) f) act on tensor-square elements.
"""

from .algebra import BimoduleWord
from .bicharacter import koszul_sign
from .complexes import FreeBimoduleComplex, FreeElement


class TensorSquareComplex(FreeBimoduleComplex):
    """P (x)_A P with bookkeeping back to the factors of each generator."""

    def __init__(self, base, check=False):
        A = base.algebra
        dim = A.dim
        length = base.length
        self.base = base
        info, index = [], []
        ranks, degs, labels = [], [], []
        for n in range(length + 1):
            gens, table = [], {}
            ndegs, nlabels = [], []
            for j in range(n + 1):
                l = n - j
                for g in range(base.rank(j)):
                    for s in range(dim):
                        for h in range(base.rank(l)):
                            table[(j, g, s, h)] = len(gens)
                            gens.append((j, g, s, h))
                            ndegs.append(base.gen_degree(j, g) + A.degrees[s]
                                         + base.gen_degree(l, h))
                            nlabels.append(
                                f"{base.gen_label(j, g)}.{A.labels[s]}.{base.gen_label(l, h)}")
            info.append(gens)
            index.append(table)
            ranks.append(len(gens))
            degs.append(ndegs)
            labels.append(nlabels)
        self._info = info
        self._index = index
        diffs = [None]
        field = A.field
        for n in range(1, length + 1):
            entries = {}

            def put(row, col, word):
                if word.is_zero():
                    return
                prev = entries.get((row, col))
                entries[(row, col)] = word if prev is None else prev + word

            for col, (j, g, s, h) in enumerate(info[n]):
                l = n - j
                # left differential: d(e_g) b_s e_h
                if j >= 1:
                    for rg, word in base.d_column(j, g):
                        for (a, ap), c in word.terms.items():
                            # a e_rg (a' b_s) e_h, coefficient from a' * b_s
                            for u, cu in A.basis_product(ap, s):
                                row = index[n - 1][(j - 1, rg, u, h)]
                                put(row, col, BimoduleWord(
                                    A, {(a, A.unit): field.mul(c, cu)}))
                # right differential: (-1)^j e_g b_s d(e_h)
                if l >= 1:
                    sign = koszul_sign(field, 1, j)
                    for rh, word in base.d_column(l, h):
                        for (b, bp), c in word.terms.items():
                            # e_g (b_s b) e_rh b', coefficient from b_s * b
                            for u, cu in A.basis_product(s, b):
                                row = index[n - 1][(j, g, u, rh)]
                                put(row, col, BimoduleWord(
                                    A, {(A.unit, bp): field.mul(sign, field.mul(c, cu))}))
            diffs.append(entries)
        augmentation = []
        for (j, g, s, h) in info[0]:
            augmentation.append(
                base.augment(base.generator_element(0, g)) * A.basis_element(s)
                * base.augment(base.generator_element(0, h)))
        super().__init__(A, ranks, degs, diffs, augmentation,
                         gen_labels=labels, check=check, builder=("tensor_square",))

    def gen_info(self, n, idx):
        """(left degree, left gen, middle basis index, right gen)."""
        return self._info[n][idx]

    def gen_index(self, n, j, g, s, h):
        return self._index[n][(j, g, s, h)]


def tensor_square(P, check=False):
    if getattr(P, "_tensor_square", None) is None:
        P._tensor_square = TensorSquareComplex(P, check=check)
    return P._tensor_square


def left_apply(f, el):
    """(f (x) 1) applied to a tensor-square element, landing in P.

    On a e_g b e_h a' the left slot is a e_g b, so the value is
    [a f(e_g) b] e_h a'; the identity in the right slot carries no
    Koszul sign.  Components with left degree != deg f die.
    """
    T2 = el.complex
    P = T2.base
    A = P.algebra
    m = f.degree
    n = el.degree
    target = n - m
    if target < 0:
        raise ValueError("tensor-square element of degree below the cochain degree")
    out = [BimoduleWord.zero(A) for _ in range(P.rank(target))]
    for idx, w in enumerate(el.words):
        if w.is_zero():
            continue
        j, g, s, h = T2.gen_info(n, idx)
        if j != m:
            continue
        fval = f.images[g]
        if fval.is_zero():
            continue
        for (a, ap), c in w.terms.items():
            alpha = (A.basis_element(a) * fval * A.basis_element(s)).scaled(c)
            for u in alpha.support():
                out[h] = out[h] + BimoduleWord(A, {(u, ap): alpha.coeffs[u]})
    return FreeElement(P, target, tuple(out))


def right_apply(f, el):
    """(1 (x) f) applied to a tensor-square element, landing in P.

    Carries the Koszul sign (-1)^(deg f * left degree); on a e_g b e_h a'
    the value is +- a e_g [b f(e_h) a'].
    """
    T2 = el.complex
    P = T2.base
    A = P.algebra
    field = A.field
    m = f.degree
    n = el.degree
    target = n - m
    if target < 0:
        raise ValueError("tensor-square element of degree below the cochain degree")
    out = [BimoduleWord.zero(A) for _ in range(P.rank(target))]
    for idx, w in enumerate(el.words):
        if w.is_zero():
            continue
        j, g, s, h = T2.gen_info(n, idx)
        if n - j != m:
            continue
        fval = f.images[h]
        if fval.is_zero():
            continue
        sign = koszul_sign(field, m, j)
        for (a, ap), c in w.terms.items():
            beta = (A.basis_element(s) * fval * A.basis_element(ap)).scaled(
                field.mul(sign, c))
            for u in beta.support():
                out[g] = out[g] + BimoduleWord(A, {(a, u): beta.coeffs[u]})
    return FreeElement(P, target, tuple(out))


def pair_apply(f1, f2, el):
    """(f1 (x) f2) applied to a tensor-square element, landing in A.

    Koszul sign (-1)^(deg f2 * left degree) on each surviving component;
    only components of bidegree (deg f1, deg f2) contribute.
    """
    T2 = el.complex
    P = T2.base
    A = P.algebra
    field = A.field
    n = el.degree
    out = A.zero()
    for idx, w in enumerate(el.words):
        if w.is_zero():
            continue
        j, g, s, h = T2.gen_info(n, idx)
        if j != f1.degree or n - j != f2.degree:
            continue
        v1 = f1.images[g]
        v2 = f2.images[h]
        if v1.is_zero() or v2.is_zero():
            continue
        sign = koszul_sign(field, f2.degree, j)
        for (a, ap), c in w.terms.items():
            term = (A.basis_element(a) * v1 * A.basis_element(s)
                    * v2 * A.basis_element(ap))
            out = out + term.scaled(field.mul(sign, c))
    return out
