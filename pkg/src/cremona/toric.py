"""Monomial maps, the toric group and its invariant foliations.

A matrix ``[[p, q], [r, s]]`` in GL(2, Z) acts by ``(x, y) -> (x^p y^q, x^r y^s)``
and the torus by ``(x, y) -> (a x, b y)``.  A :class:`ToricElement`
``(diag, M)`` is the map "apply the monomial map of M, then scale by diag",
so ``M o D(a, b) = D(M.(a, b)) o M`` with ``M.(a, b) = (a^p b^q, a^r b^s)``.
"""

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import product
from typing import Optional, Tuple

from .birmap import BirMap, compose, diagonal_map
from .dynclass import LambdaEstimate
from .errors import NotHyperbolic, NotUnimodular
from .exactalg import HomogPoly, QuadExtElem
from .exactalg.sparse import as_rational, qnorm

FINITE_ORDER_BOUND = 12


@dataclass(frozen=True)
class IntMatrix2:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.det() not in (1, -1):
            raise NotUnimodular(f"determinant {self.det()} of {self.rows()}")

    @classmethod
    def of(cls, rows):
        (p, q), (r, s) = rows
        return cls(int(p), int(q), int(r), int(s))

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def det(self):
        return self.p * self.s - self.q * self.r

    def trace(self):
        return self.p + self.s

    def rows(self):
        return ((self.p, self.q), (self.r, self.s))

    def __matmul__(self, o):
        return IntMatrix2(
            self.p * o.p + self.q * o.r,
            self.p * o.q + self.q * o.s,
            self.r * o.p + self.s * o.r,
            self.r * o.q + self.s * o.s,
        )

    def inverse(self):
        d = self.det()
        return IntMatrix2(self.s * d, -self.q * d, -self.r * d, self.p * d)

    def transpose(self):
        return IntMatrix2(self.p, self.r, self.q, self.s)

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = IntMatrix2.identity()
        for _ in range(abs(n)):
            out = out @ base
        return out

    def is_identity(self):
        return self == IntMatrix2.identity()

    def __str__(self):
        return f"[[{self.p},{self.q}],[{self.r},{self.s}]]"


def unimodular_matrices(bound):
    """All of GL(2, Z) with entries in ``[-bound, bound]``, in a fixed order."""
    rng = range(-bound, bound + 1)
    out = []
    for p, q, r, s in product(rng, repeat=4):
        if p * s - q * r in (1, -1):
            out.append(IntMatrix2(p, q, r, s))
    return out


class TorusCoord:
    """``c * prod(sym^e)``: a nonzero rational times a Laurent monomial in named symbols."""

    __slots__ = ("rational_part", "symbol_exponents")

    def __init__(self, rational_part=1, symbol_exponents=None):
        c = as_rational(rational_part)
        if c == 0:
            raise ValueError("torus coordinates are nonzero")
        self.rational_part = c
        self.symbol_exponents = {k: int(v) for k, v in (symbol_exponents or {}).items() if v}

    @classmethod
    def symbol(cls, name):
        return cls(1, {name: 1})

    @classmethod
    def coerce(cls, v):
        return v if isinstance(v, TorusCoord) else cls(v)

    def __mul__(self, o):
        o = TorusCoord.coerce(o)
        exps = dict(self.symbol_exponents)
        for k, v in o.symbol_exponents.items():
            exps[k] = exps.get(k, 0) + v
        return TorusCoord(qnorm(Fraction(self.rational_part) * o.rational_part), exps)

    __rmul__ = __mul__

    def __pow__(self, n):
        c = Fraction(self.rational_part) ** n
        return TorusCoord(qnorm(c), {k: v * n for k, v in self.symbol_exponents.items()})

    def inverse(self):
        return self ** -1

    def is_rational(self):
        return not self.symbol_exponents

    def is_one(self):
        return self.is_rational() and self.rational_part == 1

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = TorusCoord(o) if o != 0 else None
        if not isinstance(o, TorusCoord):
            return NotImplemented
        return self.rational_part == o.rational_part and self.symbol_exponents == o.symbol_exponents

    def __hash__(self):
        return hash((self.rational_part, frozenset(self.symbol_exponents.items())))

    def __repr__(self):
        return f"TorusCoord({self})"

    def __str__(self):
        parts = [] if self.rational_part == 1 and self.symbol_exponents else [str(self.rational_part)]
        for k in sorted(self.symbol_exponents):
            e = self.symbol_exponents[k]
            parts.append(k if e == 1 else f"{k}^{e}")
        return "*".join(parts)

    def to_json(self):
        c = Fraction(self.rational_part)
        return {
            "rational": [c.numerator, c.denominator],
            "symbols": dict(sorted(self.symbol_exponents.items())),
        }


def act_on_torus(M, diag):
    """``M.(a, b) = (a^p b^q, a^r b^s)``, the monomial action on torus elements."""
    a, b = (TorusCoord.coerce(d) for d in diag)
    return (a ** M.p * b ** M.q, a ** M.r * b ** M.s)


@dataclass(frozen=True)
class ToricElement:
    diag: Tuple[TorusCoord, TorusCoord]
    matrix: IntMatrix2

    def __init__(self, diag=(1, 1), matrix=None):
        object.__setattr__(self, "diag", tuple(TorusCoord.coerce(d) for d in diag))
        object.__setattr__(self, "matrix", matrix if matrix is not None else IntMatrix2.identity())

    def __hash__(self):
        return hash((self.diag, self.matrix))

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def monomial(cls, M):
        return cls((1, 1), M)

    @classmethod
    def diagonal(cls, a, b):
        return cls((a, b), IntMatrix2.identity())

    def __mul__(self, other):
        return toric_compose(self, other)

    def inverse(self):
        minv = self.matrix.inverse()
        a, b = act_on_torus(minv, (self.diag[0].inverse(), self.diag[1].inverse()))
        return ToricElement((a, b), minv)

    def is_identity(self):
        return self.matrix.is_identity() and all(d.is_one() for d in self.diag)

    def is_rational(self):
        return all(d.is_rational() for d in self.diag)

    def to_birmap(self):
        if not self.is_rational():
            raise ValueError("symbolic torus part; instantiate the symbols first")
        m = monomial_birmap(self.matrix)
        d = diagonal_map(self.diag[0].rational_part, self.diag[1].rational_part)
        return compose(d, m, degree_cap=None)

    def substitute(self, values):
        """Instantiate symbols with nonzero rationals."""
        out = []
        for d in self.diag:
            c = Fraction(d.rational_part)
            for k, e in d.symbol_exponents.items():
                c *= Fraction(values[k]) ** e
            out.append(TorusCoord(qnorm(c)))
        return ToricElement(tuple(out), self.matrix)

    def to_json(self):
        return {"diag": [d.to_json() for d in self.diag], "matrix": [list(r) for r in self.matrix.rows()]}

    def __str__(self):
        return f"(diag({self.diag[0]}, {self.diag[1]}), {self.matrix})"


def toric_compose(g, h):
    """Semidirect product law: ``(Dg, Mg)(Dh, Mh) = (Dg * Mg.Dh, Mg Mh)``."""
    a, b = act_on_torus(g.matrix, h.diag)
    return ToricElement((g.diag[0] * a, g.diag[1] * b), g.matrix @ h.matrix)


def toric_commutator(M, diag):
    """``[phi, D] = phi D phi^-1 D^-1`` for ``phi = (x^p y^q, x^r y^s)`` and ``D = (a x, b y)``."""
    phi = ToricElement.monomial(M)
    d = ToricElement.diagonal(*diag)
    return toric_compose(toric_compose(phi, d), toric_compose(phi.inverse(), d.inverse()))


def toric_closure(generators, limit=1000):
    """All products of the generators under :func:`toric_compose`, for finite groups.

    Raises ValueError if more than ``limit`` elements turn up.
    """
    gens = list(generators)
    seen = {ToricElement.identity()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = toric_compose(g, h)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        if len(seen) > limit:
            raise ValueError(f"closure exceeds {limit} elements")
        frontier = nxt
    return sorted(seen, key=lambda e: (e.matrix.rows(), str(e)))


def monomial_birmap(M):
    """Homogenize ``(x^p y^q, x^r y^s)`` by the minimal monomial clearing negative exponents."""
    if not isinstance(M, IntMatrix2):
        M = IntMatrix2.of(M)
    exps = [(M.p, M.q, -M.p - M.q), (M.r, M.s, -M.r - M.s), (0, 0, 0)]
    shift = [-min(0, *(e[i] for e in exps)) for i in range(3)]
    comps = [HomogPoly._raw({tuple(a + b for a, b in zip(e, shift)): 1}, sum(shift)) for e in exps]
    return BirMap(*comps)


def monomial_degree(M):
    """Degree of :func:`monomial_birmap` read off the matrix directly."""
    return (
        max(0, -M.p, -M.r)
        + max(0, -M.q, -M.s)
        + max(0, M.p + M.q, M.r + M.s)
    )


def fast_degree_sequence(M, N):
    out = []
    P = M
    for _ in range(N):
        out.append(monomial_degree(P))
        P = P @ M
    return out


def finite_order(M, bound=FINITE_ORDER_BOUND):
    P = M
    for k in range(1, bound + 1):
        if P.is_identity():
            return k
        P = P @ M
    return None


def is_hyperbolic(M):
    t, d = M.trace(), M.det()
    return (d == 1 and abs(t) > 2) or (d == -1 and t != 0)


@dataclass(frozen=True)
class FoliationForm:
    """The logarithmic 1-form ``pc dx/x + qc dy/y``, i.e. ``(qc x dy + pc y dx) / (xy)``.

    Stored up to scale with the first nonzero coefficient equal to 1.
    """

    pc: QuadExtElem
    qc: QuadExtElem

    def __init__(self, pc, qc, modulus=None):
        if modulus is None:
            modulus = next(
                (c.modulus for c in (pc, qc) if isinstance(c, QuadExtElem)), (0, 1)
            )
        pc = pc if isinstance(pc, QuadExtElem) else QuadExtElem.rational(pc, modulus)
        qc = qc if isinstance(qc, QuadExtElem) else QuadExtElem.rational(qc, modulus)
        if pc.is_zero() and qc.is_zero():
            raise ValueError("a foliation form needs a nonzero coefficient")
        lead = pc if not pc.is_zero() else qc
        object.__setattr__(self, "pc", pc / lead)
        object.__setattr__(self, "qc", qc / lead)

    @property
    def modulus(self):
        return self.pc.modulus

    def xdy_ydx_coefficients(self):
        """Coefficients ``(alpha, beta)`` of ``alpha x dy + beta y dx``."""
        return self.qc, self.pc

    def to_json(self):
        return {
            "dx_over_x": _quad_json(self.pc),
            "dy_over_y": _quad_json(self.qc),
            "numeric": [str(self.pc.to_decimal(20)), str(self.qc.to_decimal(20))],
        }


def _quad_json(u):
    a, b = Fraction(u.a), Fraction(u.b)
    return {"a": str(a), "b": str(b), "modulus": list(u.modulus)}


@dataclass
class SpectralData:
    matrix: IntMatrix2
    char_poly: Tuple[int, int]
    radius: LambdaEstimate
    exact_radius: Optional[QuadExtElem]
    finite_order: Optional[int]
    eigenvalues: Optional[Tuple[QuadExtElem, QuadExtElem]]
    foliations: Optional[Tuple[FoliationForm, FoliationForm]]

    def to_json(self):
        out = {
            "matrix": [list(r) for r in self.matrix.rows()],
            "char_poly": {"trace": self.char_poly[0], "det": self.char_poly[1]},
            "radius": self.radius.to_json(),
            "finite_order": self.finite_order,
            "hyperbolic": self.foliations is not None,
        }
        if self.exact_radius is not None:
            out["exact_radius"] = _quad_json(self.exact_radius)
        if self.foliations is not None:
            out["eigenvalues"] = [_quad_json(e) for e in self.eigenvalues]
            out["foliations"] = [f.to_json() for f in self.foliations]
        return out


def eigenvector_of_transpose(M, mu):
    """Eigenvector of ``tM = [[p, r], [q, s]]`` for eigenvalue ``mu``, first nonzero entry 1."""
    # first row of tM - mu is (p - mu, r); r == 0 would force eigenvalues +-1
    if M.r == 0:
        raise NotHyperbolic(f"{M} is triangular with unit eigenvalues")
    return FoliationForm(1, (mu - M.p) / M.r)


def spectral_data(M):
    if not isinstance(M, IntMatrix2):
        M = IntMatrix2.of(M)
    t, d = M.trace(), M.det()
    order = finite_order(M)
    if not is_hyperbolic(M):
        est = LambdaEstimate(Decimal(1), 0, "exact-spectral")
        return SpectralData(M, (t, d), est, None, order, None, None)
    lam = QuadExtElem.generator((t, d))
    other = lam.conjugate()
    exact = lam if t > 0 else -other
    with localcontext() as ctx:
        ctx.prec = 50
        est = LambdaEstimate(exact.to_decimal(50), 0, "exact-spectral")
    fols = (eigenvector_of_transpose(M, lam), eigenvector_of_transpose(M, other))
    return SpectralData(M, (t, d), est, exact, order, (lam, other), fols)


def foliation_pullback_check(M, form):
    """True iff ``tM (pc, qc) = mu (pc, qc)`` exactly for an eigenvalue ``mu`` of M.

    Pulling back ``a dX/X + b dY/Y`` along ``X = x^p y^q, Y = x^r y^s`` gives
    ``(ap + br) dx/x + (aq + bs) dy/y``, so invariance of the foliation is the
    eigen-equation for the transpose.
    """
    if not isinstance(M, IntMatrix2):
        M = IntMatrix2.of(M)
    if not is_hyperbolic(M):
        raise NotHyperbolic(f"{M} has spectral radius 1")
    modulus = (M.trace(), M.det())
    pc, qc = (_to_modulus(c, modulus) for c in (form.pc, form.qc))
    image = (pc * M.p + qc * M.r, pc * M.q + qc * M.s)
    lam = QuadExtElem.generator(modulus)
    for mu in (lam, lam.conjugate()):
        if image[0] == mu * pc and image[1] == mu * qc:
            return True
    return False


def _to_modulus(u, modulus):
    if u.modulus == modulus:
        return u
    if u.b != 0:
        raise ValueError(f"coefficient {u} lives in a different quadratic field")
    return QuadExtElem.rational(u.a, modulus)


SYMBOLS = ("alpha", "beta")


def symbolic_commutator_exponents(M):
    """Exponent matrix of ``toric_commutator(M, (alpha, beta))`` read back from its torus part."""
    alpha, beta = (TorusCoord.symbol(s) for s in SYMBOLS)
    c = toric_commutator(M, (alpha, beta))
    return [[c.diag[i].symbol_exponents.get(s, 0) for s in SYMBOLS] for i in range(2)]


__all__ = [
    "IntMatrix2",
    "TorusCoord",
    "ToricElement",
    "FoliationForm",
    "SpectralData",
    "monomial_birmap",
    "monomial_degree",
    "fast_degree_sequence",
    "toric_compose",
    "toric_commutator",
    "toric_closure",
    "spectral_data",
    "foliation_pullback_check",
    "finite_order",
    "is_hyperbolic",
    "unimodular_matrices",
    "act_on_torus",
    "symbolic_commutator_exponents",
]

