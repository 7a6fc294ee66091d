"""Degree-growth classification, dynamical degree estimates, the Lehmer gap.

The four growth types (bounded, linear, quadratic, exponential) are
asymptotic statements; every decision here is taken on the final
``ceil(N/2)`` entries of a finite sequence and reports ``Undetermined``
when no pattern holds there.
"""

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import TooShort

ELLIPTIC = "Elliptic"
JONQUIERES = "JonquieresTwist"
HALPHEN = "HalphenTwist"
HYPERBOLIC = "Hyperbolic"
UNDETERMINED = "Undetermined"

DEFAULT_DELTA = Fraction(1, 10)
DEFAULT_EPSILON = Decimal("0.05")
MIN_LENGTH = 6
PRECISION = 40

# the log-growth of the tail's second half may fall at most this far below the first half
TREND_SLACK = 0.9

LEHMER_COEFFS = (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)  # X^10 + X^9 - X^7 - ... + X + 1


@dataclass
class GrowthClass:
    kind: str
    evidence: dict = field(default_factory=dict)

    def to_json(self):
        return {"kind": self.kind, "evidence": dict(self.evidence)}


@dataclass
class LambdaEstimate:
    """A dynamical degree estimate; ``value >= 1``.

    ``method`` is ``ratio`` (tail ratio), ``root`` (n-th root of the last
    degree), ``subexponential`` (tail shows bounded/linear/quadratic growth,
    which forces the value 1) or ``exact-spectral`` (monomial maps only).
    """

    value: Decimal
    n_used: int
    method: str
    root_estimate: Optional[Decimal] = None
    ratio_estimate: Optional[Decimal] = None

    def __float__(self):
        return float(self.value)

    def to_json(self):
        return {
            "value": _fmt(self.value),
            "n_used": self.n_used,
            "method": self.method,
            "root_estimate": None if self.root_estimate is None else _fmt(self.root_estimate),
            "ratio_estimate": None if self.ratio_estimate is None else _fmt(self.ratio_estimate),
        }


def _fmt(d, digits=20):
    return format(round(Decimal(d), digits).normalize(), "f")


def _entries(seq):
    return [int(d) for d in getattr(seq, "entries", seq)]


def _tail_len(n):
    return (n + 1) // 2


def _periodic(tail):
    for p in range(1, len(tail) // 2 + 1):
        if all(tail[i] == tail[i + p] for i in range(len(tail) - p)):
            return p
    return None


def _constant_positive(values):
    return values[0] if values and values[0] > 0 and len(set(values)) == 1 else None


def _diffs(seq):
    return [b - a for a, b in zip(seq, seq[1:])]


def _match(entries, delta):
    """First growth pattern that holds on the tail, as (kind, evidence) or None."""
    n = len(entries)
    t = _tail_len(n)
    tail = entries[-t:]
    p = _periodic(tail)
    if p is not None:
        return ELLIPTIC, {"pattern": "periodic", "period": p, "tail_length": t}
    d1 = _diffs(entries)
    c = _constant_positive(d1[-t:])
    if c is not None:
        return JONQUIERES, {"pattern": "constant first difference", "difference": c, "tail_length": t}
    d2 = _diffs(d1)
    c = _constant_positive(d2[-t:])
    if c is not None:
        return HALPHEN, {"pattern": "constant second difference", "difference": c, "tail_length": t}
    if min(entries[-t - 1:]) > 0:
        ratios = [Fraction(b, a) for a, b in zip(entries[-t - 1:], entries[-t:])]
        if all(r >= 1 + delta for r in ratios):
            logs = [math.log(r) for r in ratios]
            h = len(logs) // 2
            first = sum(logs[:h]) / h
            second = sum(logs[len(logs) - h:]) / h
            if second >= TREND_SLACK * first:
                return HYPERBOLIC, {
                    "pattern": "exponential",
                    "min_ratio": float(min(ratios)),
                    "last_ratio": float(ratios[-1]),
                    "tail_length": t,
                }
    return None


def classify_growth(seq, delta=DEFAULT_DELTA):
    entries = _entries(seq)
    if len(entries) < MIN_LENGTH:
        raise TooShort(f"need at least {MIN_LENGTH} degrees, got {len(entries)}")
    found = _match(entries, Fraction(delta))
    if found is None:
        return GrowthClass(UNDETERMINED, {"tail_length": _tail_len(len(entries))})
    return GrowthClass(*found)


def _dec(x):
    return Decimal(x)


def estimate_lambda(seq, delta=DEFAULT_DELTA):
    """Estimate the dynamical degree from a degree sequence.

    Hyperbolic tails use the two-step tail ratio ``sqrt(d_N / d_{N-2})``, which
    also absorbs the sign alternation of monomial maps with a negative
    dominant eigenvalue.  Tails with polynomial growth give exactly 1.
    Otherwise the larger of the n-th root and ratio estimates is returned.
    """
    entries = _entries(seq)
    if not entries:
        raise ValueError("empty degree sequence")
    n = len(entries)
    with localcontext() as ctx:
        ctx.prec = PRECISION
        last = _dec(entries[-1])
        root = (last.ln() / n).exp() if entries[-1] > 0 else Decimal(0)
        ratio = None
        if n >= 3 and entries[-3] > 0:
            ratio = (last / _dec(entries[-3])).sqrt()
        elif n == 2 and entries[0] > 0:
            ratio = last / _dec(entries[0])
        found = _match(entries, Fraction(delta)) if n >= MIN_LENGTH else None
        kind = found[0] if found else None
        if kind in (ELLIPTIC, JONQUIERES, HALPHEN):
            return LambdaEstimate(Decimal(1), n, "subexponential", +root, ratio and +ratio)
        if kind == HYPERBOLIC:
            return LambdaEstimate(+ratio, n, "ratio", +root, +ratio)
        value, method = root, "root"
        if ratio is not None and ratio > value:
            value, method = ratio, "ratio"
        if value < 1:
            value = Decimal(1)
        return LambdaEstimate(+value, n, method, +root, ratio and +ratio)


def _poly_eval(coeffs, x):
    v = 0
    for c in coeffs:
        v = v * x + c
    return v


def _poly_rem(a, b):
    a = list(a)
    while len(a) >= len(b) and any(a):
        f = Fraction(a[0]) / b[0]
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return a


def _sturm_chain(coeffs):
    n = len(coeffs) - 1
    deriv = [c * (n - i) for i, c in enumerate(coeffs[:-1])]
    chain = [list(coeffs), deriv]
    while True:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append([-c for c in r])


def _sign_changes(chain, x):
    signs = [s for s in (_poly_eval(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def count_real_roots(coeffs, lo, hi):
    """Number of distinct real roots in ``(lo, hi]`` by Sturm's theorem."""
    chain = _sturm_chain(coeffs)
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def isolate_root(coeffs, lo, hi, width=Fraction(1, 10**30)):
    """Bisect an isolating interval with exact rational endpoints."""
    lo, hi = Fraction(lo), Fraction(hi)
    if count_real_roots(coeffs, lo, hi) != 1:
        raise ValueError("interval does not isolate exactly one root")
    flo = _poly_eval(coeffs, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = _poly_eval(coeffs, mid)
        if fm == 0:
            return mid, mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


@lru_cache(maxsize=None)
def lehmer_number():
    """The Lehmer number as a Decimal accurate to well over 12 digits."""
    lo, hi = isolate_root(LEHMER_COEFFS, 1, 2)
    mid = (lo + hi) / 2
    with localcontext() as ctx:
        ctx.prec = 30
        return Decimal(mid.numerator) / Decimal(mid.denominator)


def lehmer_residual(value):
    with localcontext() as ctx:
        ctx.prec = 50
        return abs(_poly_eval([Decimal(c) for c in LEHMER_COEFFS], Decimal(value)))


CONSISTENT_LOW = "consistent-elliptic-or-parabolic"
CONSISTENT_HYPERBOLIC = "consistent-hyperbolic"
GAP_VIOLATION = "gap-violation-suspected: refine N"


def lehmer_gap_check(est, epsilon=DEFAULT_EPSILON):
    value = _value(est)
    eps = Decimal(str(epsilon))
    if value <= 1 + eps:
        return CONSISTENT_LOW
    if value >= lehmer_number() - eps:
        return CONSISTENT_HYPERBOLIC
    return GAP_VIOLATION


def _value(est):
    if isinstance(est, LambdaEstimate):
        return est.value
    if isinstance(est, Decimal):
        return est
    if isinstance(est, Fraction):
        return Decimal(est.numerator) / Decimal(est.denominator)
    return Decimal(str(est))


def translation_length(est):
    value = _value(est)
    if value < 1:
        raise ValueError("a dynamical degree is at least 1")
    if value == 1:
        return Decimal(0)
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return +value.ln()


@dataclass
class GrowthReport:
    sequence: list
    growth_class: GrowthClass
    lambda_estimate: LambdaEstimate
    translation_length: Decimal
    lehmer_status: str
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "sequence": list(self.sequence),
            "class": self.growth_class.kind,
            "evidence": dict(self.growth_class.evidence),
            "lambda": self.lambda_estimate.to_json(),
            "translation_length": _fmt(self.translation_length),
            "lehmer_status": self.lehmer_status,
            "notes": list(self.notes),
        }


def growth_report(seq, delta=DEFAULT_DELTA, epsilon=DEFAULT_EPSILON):
    entries = _entries(seq)
    notes = []
    if getattr(seq, "truncated", None) == "degree-cap":
        notes.append(f"sequence truncated at degree cap {seq.degree_cap}")
    if getattr(seq, "dominant", True) is False:
        notes.append("map is not dominant; growth classes are stated for birational maps")
    if len(entries) < MIN_LENGTH:
        gc = GrowthClass(UNDETERMINED, {"reason": f"fewer than {MIN_LENGTH} entries"})
    else:
        gc = classify_growth(entries, delta)
    est = estimate_lambda(entries, delta)
    return GrowthReport(
        entries, gc, est, translation_length(est), lehmer_gap_check(est, epsilon), notes
    )
