"""Recursive dense polynomials and the subresultant gcd.

A polynomial in ``n`` variables is a list of coefficients (lowest degree
first) in the first variable, each coefficient a polynomial in the remaining
``n - 1`` variables; a polynomial in zero variables is a plain rational.
Lists are trimmed, so ``[]`` is zero and ``len(a) - 1`` is the degree.

The gcd works over Z: callers clear denominators first.  Content and
primitive part are taken recursively, and the primitive gcd in the main
variable comes from the subresultant remainder sequence, so every
intermediate division is exact.
"""

from math import gcd as igcd

from ..errors import NotExactDivision
from .sparse import qdiv, qnorm


def is_zero(a, n):
    return not a if n else a == 0


def zero(n):
    return [] if n else 0


def one(n):
    return [one(n - 1)] if n else 1


def _trim(a, n):
    while a and is_zero(a[-1], n - 1):
        a.pop()
    return a


def add(a, b, n):
    if n == 0:
        return qnorm(a + b)
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c, n - 1)
    return _trim(out, n)


def neg(a, n):
    if n == 0:
        return -a
    return [neg(c, n - 1) for c in a]


def sub(a, b, n):
    return add(a, neg(b, n), n)


def mul(a, b, n):
    if n == 0:
        return qnorm(a * b)
    if not a or not b:
        return []
    out = [zero(n - 1)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if is_zero(ai, n - 1):
            continue
        for j, bj in enumerate(b):
            if is_zero(bj, n - 1):
                continue
            out[i + j] = add(out[i + j], mul(ai, bj, n - 1), n - 1)
    return _trim(out, n)


def scale(a, c, n):
    """Multiply every main-variable coefficient of ``a`` by ``c`` (arity n-1)."""
    if is_zero(c, n - 1):
        return []
    return _trim([mul(x, c, n - 1) for x in a], n)


def pow_(a, k, n):
    result = one(n)
    for _ in range(k):
        result = mul(result, a, n)
    return result


def divexact(a, b, n):
    """Exact quotient ``a / b``; raises NotExactDivision on a remainder."""
    if n == 0:
        if b == 0:
            raise ZeroDivisionError("division by zero polynomial")
        if type(a) is int and type(b) is int:
            q, r = divmod(a, b)
            if r:
                raise NotExactDivision(f"{a} / {b}")
            return q
        return qdiv(a, b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    if len(r) - 1 < db:
        if r:
            raise NotExactDivision("divisor degree exceeds dividend degree")
        return []
    q = [zero(n - 1)] * (len(r) - db)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        t = divexact(r[-1], lb, n - 1)
        q[k] = t
        for i, bi in enumerate(b):
            r[i + k] = sub(r[i + k], mul(t, bi, n - 1), n - 1)
        if not is_zero(r[-1], n - 1):
            raise NotExactDivision("leading term did not cancel")
        _trim(r, n)
    if r:
        raise NotExactDivision("nonzero remainder")
    return _trim(q, n)


def divexact_coeffs(a, c, n):
    return [divexact(x, c, n - 1) for x in a]


def base_lc(a, n):
    """Leading coefficient at the innermost level (lex order, main var first)."""
    while n:
        a = a[-1]
        n -= 1
    return a


def is_unit(a, n):
    """True for +-1 (the units of Z[...])."""
    while n:
        if len(a) != 1:
            return False
        a = a[0]
        n -= 1
    return a == 1 or a == -1


def _sign_normal(a, n):
    if is_zero(a, n):
        return a
    return neg(a, n) if base_lc(a, n) < 0 else a


def content(a, n):
    """Gcd of the main-variable coefficients of ``a`` (arity n-1), sign-normalized."""
    c = zero(n - 1)
    for x in a:
        if is_zero(x, n - 1):
            continue
        c = gcd(c, x, n - 1)
        if is_unit(c, n - 1):
            break
    return c


def primitive(a, n):
    if not a:
        return a
    c = content(a, n)
    if is_unit(c, n - 1):
        return _sign_normal(a, n)
    return _sign_normal(divexact_coeffs(a, c, n), n)


def prem(a, b, n):
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        lr = r[-1]
        r = [mul(x, lb, n - 1) for x in r]
        for i, bi in enumerate(b):
            r[i + k] = sub(r[i + k], mul(lr, bi, n - 1), n - 1)
        _trim(r, n)
        e -= 1
    if e > 0 and r:
        f = lb
        for _ in range(e - 1):
            f = mul(f, lb, n - 1)
        r = scale(r, f, n)
    return r


def _subresultant_prs_gcd(a, b, n):
    """Gcd of primitive ``a``, ``b`` with ``deg a >= deg b >= 1``."""
    g = one(n - 1)
    h = one(n - 1)
    while True:
        delta = len(a) - len(b)
        r = prem(a, b, n)
        if not r:
            return primitive(b, n)
        if len(r) == 1:
            return one(n)
        a = b
        f = mul(g, pow_base(h, delta, n - 1), n - 1)
        b = divexact_coeffs(r, f, n)
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = divexact(pow_base(g, delta, n - 1), pow_base(h, delta - 1, n - 1), n - 1)


def pow_base(a, k, n):
    if n == 0:
        return a**k
    return pow_(a, k, n)


def gcd(a, b, n):
    """Gcd over Z in ``n`` variables with positive innermost leading coefficient."""
    if n == 0:
        return igcd(a, b)
    if not a:
        return primitive_full(b, n)
    if not b:
        return primitive_full(a, n)
    ca = content(a, n)
    cb = content(b, n)
    c = gcd(ca, cb, n - 1)
    pa = a if is_unit(ca, n - 1) else divexact_coeffs(a, ca, n)
    pb = b if is_unit(cb, n - 1) else divexact_coeffs(b, cb, n)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    if len(pb) == 1:
        g = one(n)
    else:
        g = _subresultant_prs_gcd(pa, pb, n)
    return _sign_normal(scale(g, c, n), n)


def primitive_full(a, n):
    """``a`` up to sign: the gcd of ``a`` with zero."""
    return _sign_normal(a, n)


def from_sparse(p, n):
    """Sparse ``{exponents: coeff}`` (n-tuples) to the recursive form."""
    if n == 0:
        return p.get((), 0)
    groups = {}
    for e, c in p.items():
        groups.setdefault(e[0], {})[e[1:]] = c
    if not groups:
        return []
    out = [zero(n - 1)] * (max(groups) + 1)
    for k, sub_p in groups.items():
        out[k] = from_sparse(sub_p, n - 1)
    return _trim(out, n)


def to_sparse(a, n):
    if n == 0:
        return {(): a} if a != 0 else {}
    out = {}
    for k, c in enumerate(a):
        for e, v in to_sparse(c, n - 1).items():
            out[(k,) + e] = v
    return out
