"""Bicharacters t: F x G -> k^x and the Koszul sign rule.

A bicharacter is stored by its values on pairs of group generators and
extended biadditively: t(f, g) = prod values[i][j]^(f_i * g_j), with
negative exponents going through the field inverse.  Well-definedness on
torsion factors requires value^order = 1, which is checked up front.

koszul_sign is the single source of (-1)^(degree * degree) signs in the
package; every sign of that shape is computed here.
"""

from .fields import FieldError
from .grading import StructureError


def koszul_sign(field, a_degree, b_degree):
    """(-1)^(a_degree * b_degree) as a field scalar."""
    if (a_degree * b_degree) % 2 == 0:
        return field.one
    return field.neg(field.one)


class Bicharacter:
    """A homomorphism from the tensor square F (x)_Z G to k^x."""

    __slots__ = ("field", "left_group", "right_group", "values")

    def __init__(self, field, left_group, right_group, values):
        values = tuple(tuple(row) for row in values)
        if len(values) != left_group.nfactors or any(
                len(row) != right_group.nfactors for row in values):
            raise StructureError("value table shape does not match the generator counts")
        for i, row in enumerate(values):
            mi = left_group.orders[i]
            for j, v in enumerate(row):
                if field.is_zero(v):
                    raise StructureError(f"bicharacter value at ({i},{j}) is zero")
                mj = right_group.orders[j]
                if mi != 0 and field.pow(v, mi) != field.one:
                    raise StructureError(
                        f"value at ({i},{j}) is not an order-{mi} root of unity")
                if mj != 0 and field.pow(v, mj) != field.one:
                    raise StructureError(
                        f"value at ({i},{j}) is not an order-{mj} root of unity")
        self.field = field
        self.left_group = left_group
        self.right_group = right_group
        self.values = values

    def pair(self, f, g):
        """t(f, g) for degrees f in F, g in G."""
        if f.group != self.left_group:
            raise StructureError(f"left degree {f!r} not in {self.left_group!r}")
        if g.group != self.right_group:
            raise StructureError(f"right degree {g!r} not in {self.right_group!r}")
        out = self.field.one
        for i, fi in enumerate(f.coords):
            if fi == 0:
                continue
            for j, gj in enumerate(g.coords):
                if gj == 0:
                    continue
                out = self.field.mul(out, self.field.pow(self.values[i][j], fi * gj))
        return out

    def pair_inverse(self, f, g):
        """t(f, g)^(-1)."""
        return self.field.inv(self.pair(f, g))

    def left_kernel_contains(self, f):
        """Does f pair trivially with the whole right group?

        Checking the right group's generators suffices by biadditivity.
        """
        return all(self.pair(f, g) == self.field.one
                   for g in self.right_group.generators())

    def right_kernel_contains(self, g):
        return all(self.pair(f, g) == self.field.one
                   for f in self.left_group.generators())

    def is_trivial(self):
        return all(v == self.field.one for row in self.values for v in row)

    def __repr__(self):
        rows = "; ".join(
            ",".join(self.field.fmt(v) for v in row) for row in self.values)
        return f"Bicharacter({self.left_group!r} x {self.right_group!r}: {rows})"


def trivial_bicharacter(field, left_group, right_group):
    one = field.one
    values = [[one] * right_group.nfactors for _ in range(left_group.nfactors)]
    return Bicharacter(field, left_group, right_group, values)


def uniform_bicharacter(field, left_group, right_group, q):
    """The bicharacter sending every generator pair to q.

    For rank-one gradings this is the familiar single-parameter twist
    t(a, b) = q^(a*b).
    """
    try:
        values = [[q] * right_group.nfactors for _ in range(left_group.nfactors)]
        return Bicharacter(field, left_group, right_group, values)
    except StructureError as exc:
        raise FieldError(f"q = {field.fmt(q)} is not compatible with the gradings") from exc
