"""Sparse polynomial kernels over Q on plain dicts ``{exponent tuple: coeff}``.

Coefficients are kept as ``int`` whenever they are integral and as
``Fraction`` otherwise; mixing the two keeps the common integer case fast.
Nothing here validates its input, the classes built on top do that.
"""

from fractions import Fraction
from math import gcd, lcm


def qnorm(c):
    """Collapse an integral Fraction to int."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def qdiv(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if not r:
            return q
    return qnorm(Fraction(a) / b)


def as_rational(c):
    """Coerce ints, Fractions and numeric strings to a normalized rational."""
    if isinstance(c, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(c, int):
        return int(c)
    if isinstance(c, Fraction):
        return qnorm(c)
    if isinstance(c, str):
        return qnorm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def add(p, q):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = qnorm(s)
        else:
            out.pop(e, None)
    return out


def sub(p, q):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = qnorm(s)
        else:
            out.pop(e, None)
    return out


def neg(p):
    return {e: -c for e, c in p.items()}


def scale(p, c):
    if not c:
        return {}
    if c == 1:
        return dict(p)
    return {e: qnorm(v * c) for e, v in p.items()}


def mul(p, q):
    if not p or not q:
        return {}
    if len(p) < len(q):
        p, q = q, p
    out = {}
    get = out.get
    qitems = list(q.items())
    n = len(next(iter(p)))
    if n == 3:
        for (a0, a1, a2), ca in p.items():
            for (b0, b1, b2), cb in qitems:
                e = (a0 + b0, a1 + b1, a2 + b2)
                out[e] = get(e, 0) + ca * cb
    elif n == 2:
        for (a0, a1), ca in p.items():
            for (b0, b1), cb in qitems:
                e = (a0 + b0, a1 + b1)
                out[e] = get(e, 0) + ca * cb
    else:
        for ea, ca in p.items():
            for eb, cb in qitems:
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
    return {e: qnorm(c) for e, c in out.items() if c}


def power(p, k, one):
    """``p**k`` by repeated squaring; ``one`` is the unit dict of the right arity."""
    result = dict(one)
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def shift(p, e):
    """Multiply by the monomial with exponent ``e``."""
    return {tuple(a + b for a, b in zip(k, e)): c for k, c in p.items()}


def min_exponents(p):
    it = iter(p)
    lo = list(next(it))
    for e in it:
        for i, a in enumerate(e):
            if a < lo[i]:
                lo[i] = a
    return tuple(lo)


def denominator_lcm(p):
    d = 1
    for c in p.values():
        if type(c) is Fraction:
            d = lcm(d, c.denominator)
    return d


def to_integer(p):
    """Scale by a positive rational so coefficients are coprime integers."""
    d = denominator_lcm(p)
    ints = {e: int(c * d) for e, c in p.items()}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        ints = {e: c // g for e, c in ints.items()}
    return ints


def evaluate(p, point):
    total = 0
    for e, c in p.items():
        t = c
        for v, a in zip(point, e):
            if a:
                t = t * v**a
        total += t
    return qnorm(total) if isinstance(total, Fraction) else total
