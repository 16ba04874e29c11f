"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are plain Python values, a Fraction for the rationals and an int
residue in [0, p) for GF(p).  A field object supplies the arithmetic, so
vectors and matrices can hold unboxed values.  Both representations are
canonical (reduced fraction with positive denominator, reduced residue),
so == is structural equality.
"""

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RationalField:
    """The field of rational numbers; scalars are Fraction instances."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise FieldError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise FieldError("division by zero")
        return Fraction(a) / b

    def pow(self, a, n):
        if n >= 0:
            return Fraction(a) ** n
        return self.inv(a) ** (-n)

    def is_zero(self, a):
        return a == 0

    def element_of_order(self, n):
        """A root of unity of multiplicative order exactly n, if one exists."""
        if n == 1:
            return self.one
        if n == 2:
            return -self.one
        raise FieldError(f"the rationals contain no element of order {n}")

    def parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational scalar {text!r}") from exc

    def fmt(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """GF(p) for a prime p; scalars are ints in [0, p).

    Inverses use Fermat's little theorem: a^(p-2) mod p.
    """

    characteristic = None  # set per instance

    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise FieldError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a % self.p, n, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def element_of_order(self, n):
        """The smallest element of multiplicative order exactly n."""
        if n < 1 or (self.p - 1) % n != 0:
            raise FieldError(f"GF({self.p}) has no element of order {n}")
        for g in range(1, self.p):
            x = pow(g, (self.p - 1) // n, self.p)
            if _multiplicative_order(x, self.p) == n:
                return x
        raise FieldError(f"GF({self.p}) has no element of order {n}")

    def parse(self, text):
        text = text.strip()
        try:
            return int(text) % self.p
        except ValueError as exc:
            raise FieldError(f"bad GF({self.p}) scalar {text!r}") from exc

    def fmt(self, a):
        return str(a % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _multiplicative_order(x, p):
    if x % p == 0:
        return 0
    k, y = 1, x % p
    while y != 1:
        y = (y * x) % p
        k += 1
    return k


QQ = RationalField()

_prime_fields = {}


def GF(p):
    """Cached prime field GF(p)."""
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def parse_field(text):
    """Parse a field declaration: "Q" or "F<p>" (e.g. "F5")."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("F"):
        try:
            return GF(int(text[1:]))
        except (ValueError, FieldError) as exc:
            raise FieldError(f"bad field {text!r}") from exc
    raise FieldError(f"bad field {text!r}")


def field_name(field):
    return "Q" if field.characteristic == 0 else f"F{field.p}"
