"""Worked examples with known answers, run by ``cremona examples``.

Each item is a function returning ``(passed, detail)``; details are plain
JSON values so the report stays deterministic.
"""

from decimal import Decimal

from . import presets
from .birmap import BirMap, degree_sequence, equals
from .dynclass import (
    CONSISTENT_HYPERBOLIC,
    classify_growth,
    estimate_lambda,
    lehmer_gap_check,
    lehmer_number,
    lehmer_residual,
    translation_length,
)
from .exactalg import HomogPoly, RatFunc
from .groupexplore import Caps, Word, bs_embedding, commutator, solvable_length_lower_bound
from .parser import parse_map
from .toric import (
    IntMatrix2,
    ToricElement,
    fast_degree_sequence,
    foliation_pullback_check,
    spectral_data,
    symbolic_commutator_exponents,
    toric_closure,
    toric_commutator,
)

GOLDEN_SQUARE = Decimal("2.6180339887498948482")


def _sigma():
    x, y, z = HomogPoly.gens()
    return BirMap(y * z, x * z, x * y)


def standard_involution():
    seq = degree_sequence(_sigma(), 10).entries
    kind = classify_growth(seq).kind
    return seq == [2, 1] * 5 and kind == "Elliptic", {"sequence": seq, "class": kind}


def jonquieres_anchor():
    seq = degree_sequence(parse_map("(x*y, y)").to_birmap(), 10).entries
    kind = classify_growth(seq).kind
    lam = estimate_lambda(seq).value
    ok = seq == list(range(2, 12)) and kind == "JonquieresTwist" and abs(lam - 1) <= Decimal("0.05")
    return ok, {"sequence": seq, "class": kind, "lambda": str(lam)}


def hyperbolic_anchor():
    seq = degree_sequence(parse_map("(x^2*y, x*y)").to_birmap(), 6, degree_cap=400).entries
    est = estimate_lambda(fast_degree_sequence(IntMatrix2(2, 1, 1, 1), 40))
    tl = translation_length(est)
    status = lehmer_gap_check(est)
    ok = (
        seq == [3, 8, 21, 55, 144, 377]
        and abs(est.value - GOLDEN_SQUARE) < Decimal("1e-3")
        and abs(tl - Decimal("0.96242")) < Decimal("1e-3")
        and status == CONSISTENT_HYPERBOLIC
    )
    return ok, {"sequence": seq, "lambda": str(round(est.value, 12)), "translation_length": str(round(tl, 12)), "status": status}


def halphen_synthetic():
    kind = classify_growth([2, 5, 10, 17, 26, 37]).kind
    return kind == "HalphenTwist", {"class": kind}


def lehmer_root():
    lam = lehmer_number()
    res = lehmer_residual(lam)
    ok = str(lam).startswith("1.176") and res < Decimal("1e-10")
    return ok, {"root": str(round(lam, 15)), "residual_below_1e-20": res < Decimal("1e-20")}


def toric_commutator_formula():
    M = IntMatrix2(2, 1, 1, 1)
    exps = symbolic_commutator_exponents(M)
    c = toric_commutator(M, (2, 3))
    pres = presets.toric()
    _w, generic = commutator(pres, Word.gen(0), Word.gen(1), None)
    ok = exps == [[1, 1], [1, 0]] and equals(c.to_birmap(), generic)
    return ok, {"exponents": exps, "rational": [str(d) for d in c.diag], "generic": str(generic)}


def foliations():
    M = IntMatrix2(2, 1, 1, 1)
    data = spectral_data(M)
    checks = [foliation_pullback_check(M, f) for f in data.foliations]
    return all(checks), {"checks": checks, "radius": str(round(data.radius.value, 12))}


def s3_closure():
    elems = toric_closure([ToricElement.monomial(m) for m in presets.S3_MATRICES])
    return len(elems) == 6, {"size": len(elems)}


def cornulier_bound():
    cert = solvable_length_lower_bound(presets.cornulier(), Caps(6, 64, 200, 6))
    ok = cert.bound >= 3 and not cert.witness_map.is_identity()
    return ok, {"bound": cert.bound, "witness_length": len(cert.witness_word)}


def martelo_ribon_bound():
    cert = solvable_length_lower_bound(presets.martelo_ribon(), Caps(4, 32, 200, 6))
    return cert.bound >= 4, {"bound": cert.bound, "witness_length": len(cert.witness_word)}


def bs_relation():
    x = RatFunc.x()
    report = bs_embedding(2, x, x)
    return report.relation_holds, {"relation_holds": report.relation_holds}


def parse_rational_generator():
    fx, fy = parse_map("(x, y/(1+y))").to_ratfuncs()
    ok = fx == RatFunc.x() and fy.den == {(0, 1): 1, (0, 0): 1}
    return ok, {"map": [str(fx), str(fy)]}


CORPUS = [
    ("standard-involution", standard_involution),
    ("jonquieres-anchor", jonquieres_anchor),
    ("hyperbolic-anchor", hyperbolic_anchor),
    ("halphen-synthetic", halphen_synthetic),
    ("lehmer-root", lehmer_root),
    ("toric-commutator", toric_commutator_formula),
    ("foliations", foliations),
    ("s3-closure", s3_closure),
    ("cornulier-bound", cornulier_bound),
    ("martelo-ribon-bound", martelo_ribon_bound),
    ("bs-relation", bs_relation),
    ("parse-rational-generator", parse_rational_generator),
]


def run_corpus(names=None):
    results = []
    for name, fn in CORPUS:
        if names and name not in names:
            continue
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed item, not a crashed run
            ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        results.append({"name": name, "passed": bool(ok), "detail": detail})
    return results
