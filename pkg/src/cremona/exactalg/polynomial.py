"""Homogeneous polynomials in x, y, z with exact rational coefficients."""

from fractions import Fraction
from types import MappingProxyType

from ..errors import BothZero, DegreeMismatch, NotExactDivision
from . import recursive as rec
from . import sparse

_ONE3 = {(0, 0, 0): 1}
_ONE2 = {(0, 0): 1}


class HomogPoly:
    """An immutable homogeneous polynomial in ``x, y, z``.

    ``terms`` maps exponent triples ``(i, j, k)`` to nonzero rationals; every
    triple has ``i + j + k == degree``.  The zero polynomial keeps an explicit
    degree so that homogeneity stays checkable.

    >>> x, y, z = HomogPoly.gens()
    >>> (x + y) * (x - y)
    HomogPoly('x^2 - y^2')
    """

    __slots__ = ("_terms", "_degree", "_hash")

    def __init__(self, terms=None, degree=None):
        clean = {}
        for e, c in dict(terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != 3 or min(e) < 0:
                raise ValueError(f"bad exponent triple {e!r}")
            c = sparse.as_rational(c)
            if c:
                clean[e] = sparse.qnorm(clean.get(e, 0) + c)
                if not clean[e]:
                    del clean[e]
        degrees = {sum(e) for e in clean}
        if len(degrees) > 1:
            raise DegreeMismatch(f"terms of mixed degree {sorted(degrees)}")
        if degrees:
            (d,) = degrees
            if degree is not None and degree != d:
                raise DegreeMismatch(f"declared degree {degree}, terms have degree {d}")
        else:
            if degree is None:
                raise ValueError("the zero polynomial needs an explicit degree")
            d = int(degree)
            if d < 0:
                raise ValueError("degree must be non-negative")
        self._terms = clean
        self._degree = d
        self._hash = None

    @classmethod
    def _raw(cls, terms, degree):
        obj = object.__new__(cls)
        obj._terms = terms
        obj._degree = degree
        obj._hash = None
        return obj

    @classmethod
    def gens(cls):
        return (
            cls._raw({(1, 0, 0): 1}, 1),
            cls._raw({(0, 1, 0): 1}, 1),
            cls._raw({(0, 0, 1): 1}, 1),
        )

    @classmethod
    def zero(cls, degree):
        return cls._raw({}, degree)

    @classmethod
    def constant(cls, c):
        c = sparse.as_rational(c)
        return cls._raw({(0, 0, 0): c} if c else {}, 0)

    @classmethod
    def monomial(cls, exponents, coeff=1):
        return cls({tuple(exponents): coeff})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def degree(self):
        return self._degree

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def sorted_terms(self):
        """Terms in descending graded-lex order (x > y > z)."""
        return sorted(self._terms.items(), reverse=True)

    def leading_term(self):
        if not self._terms:
            return None
        e = max(self._terms)
        return e, self._terms[e]

    def leading_coefficient(self):
        lt = self.leading_term()
        return 0 if lt is None else lt[1]

    def is_monomial(self):
        return len(self._terms) == 1

    def is_constant(self):
        return self._degree == 0

    def __eq__(self, other):
        if isinstance(other, HomogPoly):
            return self._degree == other._degree and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._degree == 0 and self._terms == {(0, 0, 0): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._degree, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, HomogPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return HomogPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._degree != self._degree:
            if not other._terms and other._degree == 0:
                return self
            raise DegreeMismatch(f"cannot add degree {self._degree} and {other._degree}")
        return HomogPoly._raw(sparse.add(self._terms, other._terms), self._degree)

    __radd__ = __add__

    def __neg__(self):
        return HomogPoly._raw(sparse.neg(self._terms), self._degree)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            return HomogPoly._raw(
                sparse.mul(self._terms, other._terms), self._degree + other._degree
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        return HomogPoly._raw(sparse.power(self._terms, k, _ONE3), self._degree * k)

    def scale(self, c):
        c = sparse.as_rational(c)
        return HomogPoly._raw(sparse.scale(self._terms, c), self._degree)

    def monic(self):
        """Scale so the graded-lex leading coefficient is 1 (zero stays zero)."""
        lc = self.leading_coefficient()
        if not lc or lc == 1:
            return self
        return HomogPoly._raw(sparse.scale(self._terms, sparse.qdiv(1, lc)), self._degree)

    def __call__(self, x, y, z):
        return sparse.evaluate(self._terms, (x, y, z))

    def diff(self, var):
        """Partial derivative in variable index ``var`` (0, 1, 2)."""
        out = {}
        for e, c in self._terms.items():
            a = e[var]
            if a:
                f = list(e)
                f[var] -= 1
                out[tuple(f)] = c * a
        return HomogPoly._raw(out, max(self._degree - 1, 0))

    def substitute(self, polys, powers_cache=None):
        """Compose: replace x, y, z by the three given HomogPolys of equal degree."""
        d = polys[0]._degree
        if any(p._degree != d for p in polys):
            raise DegreeMismatch("substituted polynomials must share a degree")
        cache = powers_cache if powers_cache is not None else {}

        def pw(i, a):
            key = (i, a)
            if key not in cache:
                if a == 0:
                    cache[key] = _ONE3
                elif a == 1:
                    cache[key] = polys[i]._terms
                else:
                    cache[key] = sparse.mul(pw(i, a - 1), polys[i]._terms)
            return cache[key]

        total = {}
        for (a, b, c), coeff in self._terms.items():
            t = sparse.mul(sparse.mul(pw(0, a), pw(1, b)), pw(2, c))
            total = sparse.add(total, sparse.scale(t, coeff))
        return HomogPoly._raw(total, self._degree * d)

    def min_exponents(self):
        return sparse.min_exponents(self._terms) if self._terms else (0, 0, 0)

    def divide_monomial(self, e):
        out = {}
        for k, c in self._terms.items():
            f = (k[0] - e[0], k[1] - e[1], k[2] - e[2])
            if min(f) < 0:
                raise NotExactDivision("monomial does not divide")
            out[f] = c
        return HomogPoly._raw(out, self._degree - sum(e))

    def dehomogenize(self):
        """The affine polynomial ``p(x, y, 1)`` as a sparse dict in (x, y)."""
        out = {}
        for (i, j, _k), c in self._terms.items():
            out[(i, j)] = c
        return out

    @classmethod
    def homogenize(cls, affine, degree):
        out = {}
        for (i, j), c in affine.items():
            k = degree - i - j
            if k < 0:
                raise DegreeMismatch("affine polynomial exceeds target degree")
            out[(i, j, k)] = c
        return cls._raw(out, degree)

    def exact_div(self, d):
        """Exact quotient ``self / d``; raises NotExactDivision if ``d`` does not divide."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        qdeg = self._degree - d._degree
        if self.is_zero():
            return HomogPoly.zero(max(qdeg, 0))
        if qdeg < 0:
            raise NotExactDivision("divisor has larger degree")
        if d.is_monomial():
            (e, c), = d._terms.items()
            return self.divide_monomial(e).scale(sparse.qdiv(1, c))
        # divisibility by z-powers is invisible after dehomogenizing, so peel them off
        kz = d.min_exponents()[2]
        num, den = self, d
        if kz:
            num = num.divide_monomial((0, 0, kz))
            den = den.divide_monomial((0, 0, kz))
        a = rec.from_sparse(num.dehomogenize(), 2)
        b = rec.from_sparse(den.dehomogenize(), 2)
        q = rec.to_sparse(rec.divexact(a, b, 2), 2)
        return HomogPoly.homogenize(q, qdeg)

    def __repr__(self):
        return f"HomogPoly({str(self)!r})" if self._terms else f"HomogPoly.zero({self._degree})"

    def __str__(self):
        return format_terms(self.sorted_terms(), ("x", "y", "z"))

    def to_json(self):
        return [[i, j, k, Fraction(c).numerator, Fraction(c).denominator] for (i, j, k), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, degree):
        return cls({(i, j, k): Fraction(n, d) for i, j, k, n, d in data}, degree)


def format_terms(items, names):
    if not items:
        return "0"
    parts = []
    for e, c in items:
        mono = "*".join(
            n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a
        )
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}" if mag.denominator == 1 else f"({mag})*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_add(p, q):
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot add degree {p.degree} and {q.degree}")
    return p + q


def poly_mul(p, q):
    return p * q


def affine_gcd(a, b):
    """Gcd in Q[x, y] of sparse dicts, returned as a primitive integer dict."""
    ra = rec.from_sparse(sparse.to_integer(a), 2)
    rb = rec.from_sparse(sparse.to_integer(b), 2)
    return rec.to_sparse(rec.gcd(ra, rb, 2), 2)


def poly_gcd(p, q):
    """Greatest common divisor, monic in graded-lex order; constants come back as 1."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    ep, eq = p.min_exponents(), q.min_exponents()
    common = tuple(min(a, b) for a, b in zip(ep, eq))
    pp = p.divide_monomial(ep)
    qq = q.divide_monomial(eq)
    if pp.degree == 0 or qq.degree == 0:
        g = HomogPoly._raw(dict(_ONE3), 0)
    else:
        # neither factor is divisible by z any more, so dehomogenizing at z=1
        # is a bijection on divisors and the gcd can be taken in Q[x, y]
        ga = affine_gcd(pp.dehomogenize(), qq.dehomogenize())
        gdeg = max(i + j for i, j in ga)
        g = HomogPoly.homogenize(ga, gdeg)
    if any(common):
        g = HomogPoly._raw(sparse.shift(g._terms, common), g.degree + sum(common))
    return g.monic()


def poly_gcd_many(polys):
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = p.monic() if g is None else poly_gcd(g, p)
        if g.degree == 0:
            return g
    if g is None:
        raise BothZero("gcd of zero polynomials")
    return g
