"""Finitely generated abelian grading groups and their elements.

A group is a list of cyclic factor orders, 0 meaning an infinite (Z)
factor and m >= 2 meaning Z/m.  A degree is a coordinate vector aligned
with the factors; torsion coordinates are kept reduced mod their order,
so equality is structural.
"""


class StructureError(ValueError):
    """Operands belong to different groups, algebras or complexes."""


class DegreeMarker:
    """Answer for a degree query that has no honest Degree value."""

    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return f"<{self.name}>"


# The zero element is homogeneous of every degree; a sum of basis
# elements in different degrees has none.
ZERO_DEGREE = DegreeMarker("zero")
INHOMOGENEOUS = DegreeMarker("inhomogeneous")


class GradingGroup:
    """Z^r plus cyclic torsion, presented by per-factor orders."""

    __slots__ = ("orders",)

    def __init__(self, orders=()):
        orders = tuple(int(m) for m in orders)
        for m in orders:
            if m != 0 and m < 2:
                raise StructureError(f"bad factor order {m}")
        self.orders = orders

    @property
    def nfactors(self):
        return len(self.orders)

    @property
    def free_rank(self):
        return sum(1 for m in self.orders if m == 0)

    @property
    def torsion(self):
        return tuple(m for m in self.orders if m != 0)

    def reduce(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self.orders):
            raise StructureError(
                f"degree has {len(coords)} coordinates, group has {len(self.orders)} factors")
        return tuple(c if m == 0 else c % m for c, m in zip(coords, self.orders))

    def degree(self, coords):
        return Degree(self, self.reduce(coords))

    def zero(self):
        return Degree(self, (0,) * len(self.orders))

    def generator(self, i):
        coords = [0] * len(self.orders)
        coords[i] = 1
        return self.degree(coords)

    def generators(self):
        return [self.generator(i) for i in range(len(self.orders))]

    def parse_degree(self, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise StructureError(f"bad degree {text!r}")
        inner = text[1:-1].strip()
        coords = [] if not inner else [int(c) for c in inner.split(",")]
        return self.degree(coords)

    def __eq__(self, other):
        return isinstance(other, GradingGroup) and other.orders == self.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        if not self.orders:
            return "1"
        return " x ".join("Z" if m == 0 else f"Z/{m}" for m in self.orders)


class Degree:
    """An element of a GradingGroup."""

    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        self.group = group
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, Degree) or other.group != self.group:
            raise StructureError(f"degree group mismatch: {self!r} vs {other!r}")

    def __add__(self, other):
        self._check(other)
        return self.group.degree(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return self.group.degree(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return self.group.degree(-a for a in self.coords)

    def scaled(self, n):
        return self.group.degree(n * a for a in self.coords)

    def is_zero(self):
        return all(a == 0 for a in self.coords)

    def __eq__(self, other):
        return (isinstance(other, Degree) and other.group == self.group
                and other.coords == self.coords)

    def __hash__(self):
        return hash((self.group, self.coords))

    def __repr__(self):
        return "[" + ",".join(str(a) for a in self.coords) + "]"


TRIVIAL = GradingGroup(())
ZZ = GradingGroup((0,))


def direct_sum(left, right):
    return GradingGroup(left.orders + right.orders)


def join_degrees(sum_group, a, b):
    """Embed (a, b) from the two summands into their direct sum."""
    if sum_group.orders != a.group.orders + b.group.orders:
        raise StructureError("group is not the direct sum of the factors")
    return sum_group.degree(a.coords + b.coords)


def split_degree(degree, left, right):
    """Split a direct-sum degree back into its two components."""
    if degree.group.orders != left.orders + right.orders:
        raise StructureError("group is not the direct sum of the factors")
    k = left.nfactors
    return left.degree(degree.coords[:k]), right.degree(degree.coords[k:])
