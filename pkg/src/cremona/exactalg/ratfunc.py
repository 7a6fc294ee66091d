"""Rational functions in the affine coordinates x, y over Q.

Maps are written affinely throughout the literature, e.g. ``(x, y/(1+y))``;
this is the exact value type those expressions evaluate to.  Numerator and
denominator are kept coprime, with integer coefficients of content 1 and a
positive leading denominator coefficient, which makes ``==`` structural.
"""

from fractions import Fraction
from math import gcd, lcm

from ..errors import ZeroDenominator
from . import recursive as rec
from . import sparse
from .polynomial import affine_gcd, format_terms

_ONE = {(0, 0): 1}


def _divexact(p, d):
    a = rec.from_sparse(p, 2)
    b = rec.from_sparse(d, 2)
    return rec.to_sparse(rec.divexact(a, b, 2), 2)


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced=False):
        num = {tuple(e): sparse.as_rational(c) for e, c in dict(num).items() if c}
        den = dict(_ONE) if den is None else {
            tuple(e): sparse.as_rational(c) for e, c in dict(den).items() if c
        }
        if not den:
            raise ZeroDenominator("denominator is identically zero")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def x(cls):
        return cls({(1, 0): 1}, _reduced=True)

    @classmethod
    def y(cls):
        return cls({(0, 1): 1}, _reduced=True)

    @classmethod
    def const(cls, c):
        c = sparse.as_rational(c)
        return cls({(0, 0): c} if c else {})

    @classmethod
    def coerce(cls, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
            return cls.const(v)
        raise TypeError(f"cannot coerce {v!r} to RatFunc")

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return len(self.den) == 1 and (0, 0) in self.den

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def __add__(self, other):
        o = RatFunc.coerce(other)
        if self.den == o.den:
            return RatFunc(sparse.add(self.num, o.num), self.den)
        num = sparse.add(sparse.mul(self.num, o.den), sparse.mul(o.num, self.den))
        return RatFunc(num, sparse.mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(sparse.neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        o = RatFunc.coerce(other)
        return RatFunc(sparse.mul(self.num, o.num), sparse.mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.is_zero():
            raise ZeroDenominator("division by an identically zero rational function")
        return RatFunc(sparse.mul(self.num, o.den), sparse.mul(self.den, o.num))

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer exponents")
        if k < 0:
            if self.is_zero():
                raise ZeroDenominator("zero raised to a negative power")
            return RatFunc(
                sparse.power(self.den, -k, _ONE), sparse.power(self.num, -k, _ONE), _reduced=True
            )._renormalize()
        return RatFunc(
            sparse.power(self.num, k, _ONE), sparse.power(self.den, k, _ONE), _reduced=True
        )

    def _renormalize(self):
        # coprimality survives powers; only the scaling needs redoing
        num, den = _primitive_pair(self.num, self.den)
        return RatFunc(num, den, _reduced=True)

    def substitute(self, fx, fy):
        """``self(fx, fy)`` for rational functions ``fx``, ``fy``."""
        fx, fy = RatFunc.coerce(fx), RatFunc.coerce(fy)
        return _poly_at(self.num, fx, fy) / _poly_at(self.den, fx, fy)

    def __call__(self, x, y):
        d = sparse.evaluate(self.den, (x, y))
        if d == 0:
            raise ZeroDenominator("pole")
        return sparse.qdiv(sparse.evaluate(self.num, (x, y)), d)

    def degree(self):
        """Max total degree of numerator and denominator."""
        return max(_tdeg(self.num), _tdeg(self.den))

    def variables(self):
        used = set()
        for e in list(self.num) + list(self.den):
            if e[0]:
                used.add("x")
            if e[1]:
                used.add("y")
        return used

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        n = format_terms(sorted(self.num.items(), reverse=True), ("x", "y"))
        if self.den == _ONE:
            return n
        d = format_terms(sorted(self.den.items(), reverse=True), ("x", "y"))
        return f"({n})/({d})"


def _tdeg(p):
    return max((i + j for i, j in p), default=0)


def _poly_at(p, fx, fy):
    total = RatFunc.const(0)
    cache = {}
    for (i, j), c in p.items():
        if ("x", i) not in cache:
            cache[("x", i)] = fx**i
        if ("y", j) not in cache:
            cache[("y", j)] = fy**j
        total = total + cache[("x", i)] * cache[("y", j)] * c
    return total


def _reduce(num, den):
    if not num:
        return {}, dict(_ONE)
    if len(den) > 1 or next(iter(den)) != (0, 0):
        g = affine_gcd(num, den)
        if len(g) > 1 or next(iter(g)) != (0, 0):
            num = _divexact(num, g)
            den = _divexact(den, g)
    return _primitive_pair(num, den)


def _primitive_pair(num, den):
    """Scale to coprime integer coefficients with a positive leading denominator term."""
    d = lcm(sparse.denominator_lcm(num), sparse.denominator_lcm(den))
    num = {e: int(c * d) for e, c in num.items()}
    den = {e: int(c * d) for e, c in den.items()}
    g = 0
    for c in list(num.values()) + list(den.values()):
        g = gcd(g, c)
    if den[max(den)] < 0:
        g = -g
    if g != 1:
        num = {e: c // g for e, c in num.items()}
        den = {e: c // g for e, c in den.items()}
    return num, den
