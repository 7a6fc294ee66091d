"""Exact arithmetic in Q[L]/(L^2 - t L + d)."""

from decimal import Decimal, localcontext
from fractions import Fraction

from ..errors import DivisionByZero, ModulusMismatch
from .sparse import as_rational, qnorm


class QuadExtElem:
    """``a + b*L`` where ``L`` is a root of ``X^2 - t*X + d``.

    For real embedding ``L`` is taken to be the larger real root
    ``(t + sqrt(t^2 - 4d)) / 2``; :meth:`conjugate` swaps the roots.
    """

    __slots__ = ("a", "b", "modulus")

    def __init__(self, a, b, modulus):
        t, d = modulus
        self.a = as_rational(a)
        self.b = as_rational(b)
        self.modulus = (int(t), int(d))

    @classmethod
    def generator(cls, modulus):
        return cls(0, 1, modulus)

    @classmethod
    def rational(cls, c, modulus):
        return cls(c, 0, modulus)

    def _lift(self, other):
        if isinstance(other, QuadExtElem):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExtElem(other, 0, self.modulus)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.a + o.a, self.b + o.b, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(-self.a, -self.b, self.modulus)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t, d = self.modulus
        # (a + bL)(c + eL) = ac + (ae + bc)L + be L^2, with L^2 = tL - d
        a, b, c, e = self.a, self.b, o.a, o.b
        be = b * e
        return QuadExtElem(a * c - be * d, a * e + b * c + be * t, self.modulus)

    __rmul__ = __mul__

    def conjugate(self):
        """Image under L -> t - L."""
        t, _ = self.modulus
        return QuadExtElem(self.a + self.b * t, -self.b, self.modulus)

    def norm(self):
        t, d = self.modulus
        return qnorm(Fraction(self.a * self.a + self.a * self.b * t + self.b * self.b * d))

    def trace(self):
        t, _ = self.modulus
        return qnorm(Fraction(2 * self.a + self.b * t))

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise DivisionByZero(f"{self} is not invertible")
        c = self.conjugate()
        return QuadExtElem(Fraction(c.a) / n, Fraction(c.b) / n, self.modulus)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadExtElem):
            return self.modulus == other.modulus and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.modulus))

    def to_decimal(self, prec=50):
        t, d = self.modulus
        disc = t * t - 4 * d
        if disc < 0:
            raise ValueError("complex embedding; no real value")
        with localcontext() as ctx:
            ctx.prec = prec + 10
            root = (Decimal(t) + Decimal(disc).sqrt()) / 2
            val = _dec(self.a) + _dec(self.b) * root
            ctx.prec = prec
            return +val

    def __float__(self):
        return float(self.to_decimal(30))

    def __repr__(self):
        return f"QuadExtElem({self.a}, {self.b}, modulus={self.modulus})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        lam = "L" if self.b == 1 else ("-L" if self.b == -1 else f"{self.b}*L")
        if self.a == 0:
            return lam
        return f"{self.a} + {lam}" if not lam.startswith("-") else f"{self.a} - {lam[1:]}"


def _dec(q):
    q = Fraction(q)
    return Decimal(q.numerator) / Decimal(q.denominator)


def quad_arith(op, u, v=None):
    """Dispatch ``add``, ``mul`` or ``inv`` on quadratic-extension elements."""
    if op == "add":
        return u + v
    if op == "mul":
        return u * v
    if op == "inv":
        return u.inverse()
    raise ValueError(f"unknown operation {op!r}")
