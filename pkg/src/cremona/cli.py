"""Command-line front end.

Every command prints one JSON report (or a short text summary with
``--format text``).  Reports carry the schema version, tool version, the
inputs in canonical form and every cap in force, and contain no timestamps,
so repeated runs are byte-identical.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 corpus failure.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__, presets
from .birmap import DEFAULT_DEGREE_CAP, DegreeSequence, degree_sequence
from .corpus import run_corpus
from .dynclass import (
    DEFAULT_DELTA,
    estimate_lambda,
    growth_report,
    lehmer_gap_check,
    translation_length,
    _fmt,
)
from .errors import CremonaError, MapSyntaxError
from .groupexplore import Caps, Generator, Presentation, bs_embedding, solvable_length_lower_bound
from .parser import parse_map, parse_ratfunc
from .toric import (
    IntMatrix2,
    fast_degree_sequence,
    foliation_pullback_check,
    monomial_birmap,
    spectral_data,
    symbolic_commutator_exponents,
    toric_commutator,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_CORPUS = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _matrix(text):
    try:
        vals = [int(v) for v in text.replace(";", ",").split(",")]
    except ValueError:
        raise UsageError(f"matrix must be four integers p,q,r,s; got {text!r}") from None
    if len(vals) != 4:
        raise UsageError(f"matrix must be four integers p,q,r,s; got {text!r}")
    return IntMatrix2(*vals)


def _map_input(text):
    m = parse_map(text)
    return m, m.to_birmap()


def _as_monomial(m):
    """The matrix of ``(x^p y^q, x^r y^s)`` if the map has exactly that form, else None."""
    exps = []
    for f in m.to_ratfuncs():
        if len(f.num) != 1 or len(f.den) != 1:
            return None
        (en, cn), (ed, cd) = next(iter(f.num.items())), next(iter(f.den.items()))
        if cn != 1 or cd != 1:
            return None
        exps.append((en[0] - ed[0], en[1] - ed[1]))
    (p, q), (r, s) = exps
    if abs(p * s - q * r) != 1:
        return None
    return IntMatrix2(p, q, r, s)


def _sequence(args, m, f, cap, n):
    """Degree sequence, through matrix powers for monomial maps unless ``--generic``."""
    M = None if args.generic else _as_monomial(m)
    if M is None:
        return degree_sequence(f, n, cap), "composition"
    return DegreeSequence(fast_degree_sequence(M, n), "length", n, None, True), "matrix-powers"


def build_parser():
    p = _Parser(prog="cremona", description="Exact computations with plane birational maps.")
    p.add_argument("--version", action="version", version=f"cremona {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def with_seq(sp):
        sp.add_argument("map", help='affine map, e.g. "(x^2*y, x*y)"')
        sp.add_argument("--n", type=int, default=None, help="number of iterates (env CREMONA_N, default 10)")
        sp.add_argument("--degree-cap", type=int, default=None, help="env CREMONA_DEGREE_CAP")
        sp.add_argument("--generic", action="store_true", help="never use matrix powers for monomial maps")

    with_seq(add("classify", help="growth class, dynamical degree and Lehmer check"))
    with_seq(add("degrees", help="degree sequence of the iterates"))
    lam = add("lambda", help="dynamical degree estimate")
    lam.add_argument("map", nargs="?")
    lam.add_argument("--matrix", help="monomial map p,q,r,s; uses matrix powers")
    lam.add_argument("--n", type=int, default=None)
    lam.add_argument("--degree-cap", type=int, default=None)
    lam.add_argument("--generic", action="store_true")

    tor = add("toric", help="spectral data and commutators of a monomial map")
    tor.add_argument("--matrix", required=True)
    tor.add_argument("--alpha", default=None, help="rational alpha for a concrete commutator")
    tor.add_argument("--beta", default=None)

    fol = add("foliations", help="invariant foliations of a hyperbolic monomial map")
    fol.add_argument("--matrix", required=True)

    grp = add("group", help="soluble length lower bound by derived-series sampling")
    src = grp.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(presets.PRESETS))
    src.add_argument("--gen", nargs=2, action="append", metavar=("MAP", "INVERSE"))
    grp.add_argument("--max-word-len", type=int, default=None, help="env CREMONA_MAX_WORD_LEN, default 6")
    grp.add_argument("--breadth", type=int, default=None, help="env CREMONA_BREADTH, default 64")
    grp.add_argument("--degree-cap", type=int, default=None)
    grp.add_argument("--max-level", type=int, default=None, help="env CREMONA_MAX_LEVEL, default 6")

    bs = add("bs-check", help="check r s r^-1 = s^n for the BS(1,n) embedding")
    bs.add_argument("--n", type=int, required=True)
    bs.add_argument("--a", required=True, help="rational function of x")
    bs.add_argument("--mobius", required=True, help="Mobius map of x, e.g. (x+1)/(x-1)")
    bs.add_argument("--a-inverse", default=None, help="use a different a(x) in r^-1 (for testing)")

    ex = add("examples", help="run the worked-example corpus")
    ex.add_argument("--only", action="append", default=None, help="run only the named item")
    return p


def _degree_cap(args):
    return args.degree_cap if args.degree_cap is not None else _env_int("CREMONA_DEGREE_CAP", DEFAULT_DEGREE_CAP)


def _n(args):
    n = args.n if args.n is not None else _env_int("CREMONA_N", 10)
    if n < 1:
        raise UsageError("--n must be at least 1")
    return n


def cmd_degrees(args):
    m, f = _map_input(args.map)
    cap, n = _degree_cap(args), _n(args)
    seq, method = _sequence(args, m, f, cap, n)
    result = dict(seq.to_json(), method=method)
    return {"map": m.to_text(), "n": n}, {"degree_cap": cap}, result, []


def cmd_classify(args):
    m, f = _map_input(args.map)
    cap, n = _degree_cap(args), _n(args)
    seq, method = _sequence(args, m, f, cap, n)
    report = growth_report(seq)
    warnings = []
    if not seq.dominant:
        warnings.append("map is not dominant")
    result = report.to_json()
    result["truncated"] = seq.truncated
    result["method"] = method
    return {"map": m.to_text(), "n": n}, {"degree_cap": cap, "delta": str(DEFAULT_DELTA)}, result, warnings


def cmd_lambda(args):
    n = _n(args)
    if args.matrix and args.map:
        raise UsageError("give either a map or --matrix, not both")
    if args.matrix:
        M = _matrix(args.matrix)
        seq = fast_degree_sequence(M, n)
        inputs, caps = {"matrix": [list(r) for r in M.rows()], "n": n}, {}
    elif args.map:
        m, f = _map_input(args.map)
        cap = _degree_cap(args)
        seq = _sequence(args, m, f, cap, n)[0].entries
        inputs, caps = {"map": m.to_text(), "n": n}, {"degree_cap": cap}
    else:
        raise UsageError("lambda needs a map or --matrix")
    est = estimate_lambda(seq)
    result = {
        "sequence": list(seq),
        "lambda": est.to_json(),
        "translation_length": _fmt(translation_length(est)),
        "lehmer_status": lehmer_gap_check(est),
    }
    return inputs, caps, result, []


def cmd_toric(args):
    M = _matrix(args.matrix)
    data = spectral_data(M)
    result = {
        "spectral": data.to_json(),
        "monomial_map": str(monomial_birmap(M)),
        "commutator_exponents": symbolic_commutator_exponents(M),
    }
    inputs = {"matrix": [list(r) for r in M.rows()]}
    if (args.alpha is None) != (args.beta is None):
        raise UsageError("--alpha and --beta go together")
    if args.alpha is not None:
        try:
            a, b = parse_ratfunc(args.alpha), parse_ratfunc(args.beta)
        except MapSyntaxError as exc:
            raise UsageError(str(exc)) from None
        if not (a.is_polynomial() and b.is_polynomial() and not a.variables() and not b.variables()):
            raise UsageError("--alpha and --beta must be rational constants")
        a, b = (Fraction(v.num.get((0, 0), 0), v.den[(0, 0)]) for v in (a, b))
        c = toric_commutator(M, (a, b))
        fx, fy = c.to_birmap().to_affine()
        result["commutator"] = {"toric": c.to_json(), "map": f"({fx}, {fy})"}
        inputs.update(alpha=str(a), beta=str(b))
    return inputs, {}, result, []


def cmd_foliations(args):
    M = _matrix(args.matrix)
    data = spectral_data(M)
    if data.foliations is None:
        result = {"hyperbolic": False, "foliations": []}
    else:
        result = {
            "hyperbolic": True,
            "foliations": [
                dict(f.to_json(), invariant=foliation_pullback_check(M, f)) for f in data.foliations
            ],
        }
    return {"matrix": [list(r) for r in M.rows()]}, {}, result, []


def _caps(args):
    return Caps(
        args.max_word_len if args.max_word_len is not None else _env_int("CREMONA_MAX_WORD_LEN", 6),
        args.breadth if args.breadth is not None else _env_int("CREMONA_BREADTH", 64),
        _degree_cap(args),
        args.max_level if args.max_level is not None else _env_int("CREMONA_MAX_LEVEL", 6),
    )


def cmd_group(args):
    caps = _caps(args)
    if args.preset:
        pres = presets.get(args.preset)
        inputs = {"preset": args.preset}
    else:
        gens = []
        for i, (m, inv) in enumerate(args.gen):
            gm, ginv = parse_map(m), parse_map(inv)
            gens.append(Generator(f"g{i + 1}", gm.to_birmap(), ginv.to_birmap()))
        pres = Presentation(gens, provenance="command line", name="custom")
        inputs = {"generators": [[parse_map(m).to_text(), parse_map(v).to_text()] for m, v in args.gen]}
    cert = solvable_length_lower_bound(pres, caps)
    result = cert.to_json(pres.names())
    result["generators"] = pres.names()
    result["provenance"] = pres.provenance
    result["expected_length"] = pres.expected_length
    return inputs, caps.to_json(), result, []


def cmd_bs_check(args):
    a = parse_ratfunc(args.a)
    nu = parse_ratfunc(args.mobius)
    a_inv = parse_ratfunc(args.a_inverse) if args.a_inverse else None
    report = bs_embedding(args.n, nu, a, a_inv)
    inputs = {"n": args.n, "a": str(a), "mobius": str(nu)}
    if a_inv is not None:
        inputs["a_inverse"] = str(a_inv)
    return inputs, {}, report.to_json(), []


COMMANDS = {
    "classify": cmd_classify,
    "degrees": cmd_degrees,
    "lambda": cmd_lambda,
    "toric": cmd_toric,
    "foliations": cmd_foliations,
    "group": cmd_group,
    "bs-check": cmd_bs_check,
}


def _envelope(command, inputs, caps, result, warnings):
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "cremona",
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "caps": caps,
        "result": result,
        "warnings": warnings,
    }


def _text(report):
    lines = [f"{report['command']}: {json.dumps(report['inputs'], sort_keys=True)}"]
    res = report["result"]
    if report["command"] == "examples":
        for item in res["items"]:
            lines.append(f"{'PASS' if item['passed'] else 'FAIL'} {item['name']}")
    else:
        for key in sorted(res):
            lines.append(f"  {key}: {json.dumps(res[key], sort_keys=True)}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def run(argv):
    """Parse ``argv`` and execute; returns ``(exit code, report or None)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required")
    if args.command == "examples":
        items = run_corpus(args.only)
        if args.only and len(items) != len(set(args.only)):
            raise UsageError("unknown corpus item in --only")
        passed = all(i["passed"] for i in items)
        report = _envelope("examples", {"only": args.only}, {}, {"items": items, "all_passed": passed}, [])
        return (EXIT_OK if passed else EXIT_CORPUS), report, args
    inputs, caps, result, warnings = COMMANDS[args.command](args)
    return EXIT_OK, _envelope(args.command, inputs, caps, result, warnings), args


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        code, report, args = run(argv)
    except UsageError as exc:
        print(f"cremona: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MapSyntaxError as exc:
        print(f"cremona: syntax error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CremonaError, ZeroDivisionError, ValueError) as exc:
        print(f"cremona: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    for w in report["warnings"]:
        print(f"cremona: warning: {w}", file=sys.stderr)
    if args.format == "text":
        print(_text(report))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
