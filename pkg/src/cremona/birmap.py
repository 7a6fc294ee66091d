"""Plane rational maps in homogeneous coordinates.

A map is a triple ``(f0 : f1 : f2)`` of homogeneous polynomials of a common
degree with no common factor of positive degree.  Construction always divides
out that common factor and rescales so that the graded-lex leading
coefficient of the first nonzero component is 1; two maps are then equal as
projective maps exactly when their stored triples coincide.

Composition follows ``(f o g)(p) = f(g(p))``.  Inversion is deliberately
absent; group computations carry inverse witnesses instead.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from .errors import AllZero, DegreeCapExceeded, DegreeMismatch
from .exactalg import HomogPoly, RatFunc, poly_gcd_many
from .exactalg import sparse

DEFAULT_DEGREE_CAP = 200


class BirMap:
    __slots__ = ("components", "degree", "_key")

    def __init__(self, f0, f1, f2):
        comps = (f0, f1, f2)
        if not all(isinstance(f, HomogPoly) for f in comps):
            raise TypeError("components must be HomogPoly")
        if len({f.degree for f in comps}) != 1:
            raise DegreeMismatch(f"component degrees {[f.degree for f in comps]}")
        if all(f.is_zero() for f in comps):
            raise AllZero("all three components vanish identically")
        g = poly_gcd_many(comps)
        if g.degree > 0:
            comps = tuple(f.exact_div(g) for f in comps)
        lead = next(f for f in comps if not f.is_zero()).leading_coefficient()
        if lead != 1:
            inv = sparse.qdiv(1, lead)
            comps = tuple(f.scale(inv) for f in comps)
        self.components = comps
        self.degree = comps[0].degree
        self._key = None

    @classmethod
    def identity(cls):
        return cls(*HomogPoly.gens())

    @classmethod
    def from_affine(cls, fx, fy):
        """Homogenize the affine map ``(x, y) -> (fx, fy)`` with ``z`` as the chart variable."""
        fx, fy = RatFunc.coerce(fx), RatFunc.coerce(fy)
        den = sparse.mul(fx.den, fy.den)
        num_x = sparse.mul(fx.num, fy.den)
        num_y = sparse.mul(fy.num, fx.den)
        parts = (num_x, num_y, den)
        e = max((i + j for p in parts for i, j in p), default=0)
        return cls(*(HomogPoly.homogenize(p, e) for p in parts))

    def to_affine(self):
        """The map in the chart ``z = 1`` as a pair of rational functions."""
        f0, f1, f2 = (RatFunc(f.dehomogenize()) for f in self.components)
        if f2.is_zero():
            raise ZeroDivisionError("image lies in the line at infinity")
        return f0 / f2, f1 / f2

    def key(self):
        """Canonical hashable form: the serialized triple as nested tuples."""
        if self._key is None:
            self._key = tuple(tuple(tuple(t) for t in f.to_json()) for f in self.components)
        return self._key

    def sort_key(self):
        return (self.degree, sum(len(f) for f in self.components), self.key())

    def __eq__(self, other):
        if not isinstance(other, BirMap):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_identity(self):
        return self == _IDENTITY

    def compose(self, other, degree_cap=DEFAULT_DEGREE_CAP):
        return compose(self, other, degree_cap)

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, point):
        return apply(self, point)

    def to_json(self):
        return [f.to_json() for f in self.components]

    @classmethod
    def from_json(cls, data):
        degs = {i + j + k for comp in data for i, j, k, _n, _d in comp}
        if len(degs) != 1:
            raise DegreeMismatch(f"serialized components have degrees {sorted(degs)}")
        (d,) = degs
        return cls(*(HomogPoly.from_json(comp, d) for comp in data))

    def __repr__(self):
        return "BirMap({} : {} : {})".format(*self.components)

    def __str__(self):
        return "({} : {} : {})".format(*self.components)


_IDENTITY = BirMap(*HomogPoly.gens())


def birmap_new(f0, f1, f2):
    return BirMap(f0, f1, f2)


def compose(f, g, degree_cap=DEFAULT_DEGREE_CAP):
    """``f o g`` renormalized; raises DegreeCapExceeded above ``degree_cap``."""
    if g.is_identity():
        result = f
    elif f.is_identity():
        result = g
    else:
        cache = {}
        raw = [c.substitute(g.components, cache) for c in f.components]
        result = BirMap(*raw)
    if degree_cap is not None and result.degree > degree_cap:
        raise DegreeCapExceeded(result.degree, degree_cap)
    return result


def compose_all(maps, degree_cap=DEFAULT_DEGREE_CAP):
    """``m0 o m1 o ... o mk``, evaluated right to left."""
    result = _IDENTITY
    for m in reversed(maps):
        result = compose(m, result, degree_cap)
    return result


def equals(f, g):
    """Projective equality by cross products ``f_i g_j - f_j g_i = 0``."""
    for i in range(3):
        for j in range(i + 1, 3):
            a = f.components[i] * g.components[j]
            b = f.components[j] * g.components[i]
            if not (a - b).is_zero():
                return False
    return True


class ProjPoint:
    """A point of P^2 with rational coordinates, compared up to scaling."""

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        coords = tuple(sparse.as_rational(c) for c in (x, y, z))
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise AllZero("(0:0:0) is not a projective point")
        self.coords = tuple(sparse.qdiv(c, lead) for c in coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "ProjPoint({} : {} : {})".format(*self.coords)


class _Indeterminate:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Indeterminate"


Indeterminate = _Indeterminate()


def apply(f, p):
    if not isinstance(p, ProjPoint):
        p = ProjPoint(*p)
    vals = [c(*p.coords) for c in f.components]
    if all(v == 0 for v in vals):
        return Indeterminate
    return ProjPoint(*vals)


def jacobian_determinant(f):
    rows = [[c.diff(v) for v in range(3)] for c in f.components]
    (a, b, c), (d, e, g), (h, i, k) = rows
    return a * (e * k - g * i) - b * (d * k - g * h) + c * (d * i - e * h)


def dominance_check(f):
    return not jacobian_determinant(f).is_zero()


@dataclass
class DegreeSequence:
    """Degrees of ``f, f^2, ..., f^N`` (entry ``n - 1`` is ``deg f^n``).

    ``truncated`` is ``"length"`` when N iterates were computed and
    ``"degree-cap"`` when an iterate went over ``degree_cap`` first.
    """

    entries: List[int]
    truncated: str
    requested: int
    degree_cap: Optional[int]
    dominant: bool = True
    maps: List[BirMap] = field(default_factory=list, repr=False)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def to_json(self):
        return {
            "entries": list(self.entries),
            "truncated": self.truncated,
            "requested": self.requested,
            "degree_cap": self.degree_cap,
            "dominant": self.dominant,
        }


def degree_sequence(f, N, degree_cap=DEFAULT_DEGREE_CAP, keep_maps=False):
    if N < 1:
        raise ValueError("N must be at least 1")
    entries = [f.degree]
    maps = [f] if keep_maps else []
    truncated = "length"
    if degree_cap is not None and f.degree > degree_cap:
        truncated = "degree-cap"
        N = 1
    current = f
    for _ in range(N - 1):
        try:
            current = compose(f, current, degree_cap)
        except DegreeCapExceeded:
            truncated = "degree-cap"
            break
        entries.append(current.degree)
        if keep_maps:
            maps.append(current)
    return DegreeSequence(entries, truncated, N, degree_cap, dominance_check(f), maps)


def diagonal_map(a, b):
    """``(a x, b y)`` for nonzero rationals."""
    x, y, z = HomogPoly.gens()
    return BirMap(x.scale(a), y.scale(b), z)


__all__ = [
    "BirMap",
    "DegreeSequence",
    "ProjPoint",
    "Indeterminate",
    "DEFAULT_DEGREE_CAP",
    "birmap_new",
    "compose",
    "compose_all",
    "equals",
    "apply",
    "degree_sequence",
    "dominance_check",
    "jacobian_determinant",
    "from_affine",
    "diagonal_map",
]

from_affine = BirMap.from_affine
