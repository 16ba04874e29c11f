"""Exact sparse Gaussian elimination over the rationals and GF(p).

Vectors are dicts {row_index: scalar} with no explicit zeros.  A
LinearSystem is fed columns one at a time and keeps a column echelon:
each stored column has a leading row no other stored column shares, and
over the rationals it is scaled to integer entries with content 1, so
every elimination is an integer cross-multiplication (fraction-free).
Pivots are always the first nonzero coordinate in row order and columns
are processed in the order they arrive, so ranks, solutions and kernel
combinations are reproducible run to run.

Feeding a dependent column immediately yields its expression in the
previously fed columns, which is how nullspace bases and quotient-space
representatives are extracted downstream.
"""

from fractions import Fraction
from math import gcd, lcm


def _clear_denominators(vec):
    """Scale a Fraction/int vector to integers; returns (int dict, multiplier)."""
    denoms = [Fraction(v).denominator for v in vec.values()]
    mult = lcm(*denoms) if denoms else 1
    out = {}
    for k, v in vec.items():
        f = Fraction(v) * mult
        if f:
            out[k] = int(f)
    return out, mult


def _content(vec):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g if g else 1


class _RationalSystem:
    """Column echelon over QQ with integer fraction-free rows."""

    def __init__(self, nrows):
        self.nrows = nrows
        self.pivots = {}  # lead row -> (int column dict, expression dict)
        self.order = []   # lead rows in insertion order

    @property
    def rank(self):
        return len(self.pivots)

    def _eliminate(self, w, expr, scale):
        # invariant: w == scale * target - sum(expr[l] * column_l), all exact
        while w:
            lead = min(w)
            piv = self.pivots.get(lead)
            if piv is None:
                return w, expr, scale, lead
            pvec, pexpr = piv
            a, b = pvec[lead], w[lead]
            new = {k: a * v for k, v in w.items()}
            for k, v in pvec.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                elif k in new:
                    del new[k]
            w = new
            expr = {l: a * c for l, c in expr.items()}
            for l, c in pexpr.items():
                nc = expr.get(l, Fraction(0)) + b * c
                if nc:
                    expr[l] = nc
                elif l in expr:
                    del expr[l]
            scale = scale * a
            g = _content(w)
            if g > 1:
                w = {k: v // g for k, v in w.items()}
                scale = scale / g
                expr = {l: c / g for l, c in expr.items()}
        return w, expr, scale, None

    def add_column(self, vec, label):
        """Feed a column; returns None if independent, else its expression
        {prev_label: coeff} with the convention column == sum(coeff * prev)."""
        w, mult = _clear_denominators(vec)
        # here track column = sum(expr)/scale form: w == scale*col - sum(expr*cols)
        w, expr, scale, lead = self._eliminate(w, {}, Fraction(mult))
        if lead is None:
            return {l: c / scale for l, c in expr.items()}
        if w[lead] < 0:
            w = {k: -v for k, v in w.items()}
            scale, expr = -scale, {l: -c for l, c in expr.items()}
        # store pvec == sum(pexpr * cols): pvec = scale*col - sum(expr*cols)
        pexpr = {l: -c for l, c in expr.items()}
        pexpr[label] = scale
        self.pivots[lead] = (w, pexpr)
        self.order.append(lead)
        return None

    def solve(self, vec):
        """One solution of (fed columns) * x = vec, or None if inconsistent.

        Free coordinates are zero, so the answer is the deterministic
        minimal-pivot solution.
        """
        w, mult = _clear_denominators(vec)
        w, expr, scale, lead = self._eliminate(w, {}, Fraction(mult))
        if lead is not None:
            return None
        return {l: c / scale for l, c in expr.items()}

    def contains(self, vec):
        return self.solve(vec) is not None


class _ModularSystem:
    """Column echelon over GF(p); pivot entries normalized to 1."""

    def __init__(self, field, nrows):
        self.field = field
        self.p = field.p
        self.nrows = nrows
        self.pivots = {}
        self.order = []

    @property
    def rank(self):
        return len(self.pivots)

    def _eliminate(self, w, expr, scale):
        p = self.p
        while w:
            lead = min(w)
            piv = self.pivots.get(lead)
            if piv is None:
                return w, expr, scale, lead
            pvec, pexpr = piv
            b = w[lead]  # pivot entry is 1
            new = dict(w)
            for k, v in pvec.items():
                nv = (new.get(k, 0) - b * v) % p
                if nv:
                    new[k] = nv
                elif k in new:
                    del new[k]
            w = new
            for l, c in pexpr.items():
                nc = (expr.get(l, 0) + b * c) % p
                if nc:
                    expr[l] = nc
                elif l in expr:
                    del expr[l]
        return w, expr, scale, None

    def add_column(self, vec, label):
        p = self.p
        w = {k: v % p for k, v in vec.items() if v % p}
        w, expr, _, lead = self._eliminate(w, {}, 1)
        if lead is None:
            return dict(expr)
        ainv = pow(w[lead], p - 2, p)
        w = {k: (v * ainv) % p for k, v in w.items()}
        pexpr = {l: (-c * ainv) % p for l, c in expr.items() if (c * ainv) % p}
        pexpr[label] = ainv
        self.pivots[lead] = (w, pexpr)
        self.order.append(lead)
        return None

    def solve(self, vec):
        p = self.p
        w = {k: v % p for k, v in vec.items() if v % p}
        w, expr, _, lead = self._eliminate(w, {}, 1)
        if lead is not None:
            return None
        return dict(expr)

    def contains(self, vec):
        return self.solve(vec) is not None


def linear_system(field, nrows):
    if field.characteristic == 0:
        return _RationalSystem(nrows)
    return _ModularSystem(field, nrows)


def rank_of_columns(field, nrows, columns):
    sys = linear_system(field, nrows)
    for i, col in enumerate(columns):
        sys.add_column(col, i)
    return sys.rank


def nullspace_of_columns(field, nrows, columns):
    """Kernel combinations of the column list, one dict per dependency.

    Each returned dict d satisfies sum(d[i] * column_i) == 0 and has
    d[j] == 1 at the dependent column j that produced it.
    """
    sys = linear_system(field, nrows)
    kernels = []
    for i, col in enumerate(columns):
        combo = sys.add_column(col, i)
        if combo is not None:
            out = {l: field.neg(c) for l, c in combo.items()}
            out[i] = field.one
            kernels.append(out)
    return kernels
