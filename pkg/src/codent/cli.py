"""Command-line entry point: ``codent <subcommand> ...``.

Exit codes: 0 when every checked claim holds, 1 when a claim fails,
2 for usage errors (bad arguments, unreadable or malformed input).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .closure import close_group
from .codes import enumerate_code, is_self_dual, is_type2, load_code
from .enumerators import SWEPoly, coefficient_matrix, is_invariant, monomial_from_text, swe
from .errors import CodentError, InternalError, NotFound
from .groups import build_chi, build_eta, build_xi, build_zeta, symmetrize
from .linalg import CMatrix, det
from .molien import RationalFormula, expand_formula, fixed_space_dim, molien_series, closed_form
from .ring import F2_Z4, RingSpec
from .verify import VerifyConfig, verify_paper

log = logging.getLogger("codent")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input helpers ------------------------------------------------------------

def _read_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _spec(path):
    return RingSpec.from_json(_read_json(path)) if path else F2_Z4


def _generators_from_file(path, spec):
    """Generator list from JSON.

    Entries are {"kind": "chi"}, {"kind": "xi", "U": [[..]]},
    {"kind": "eta", "S": [["1", "1/2"], ..]}, {"kind": "zeta"} or
    {"kind": "matrix", "matrix": <CMatrix JSON>}. A top-level
    ``"symmetrize": true`` replaces each generator by its class image.
    """
    data = _read_json(path)
    entries = data["generators"] if isinstance(data, dict) else data
    out = []
    for e in entries:
        kind = e.get("kind")
        if kind == "chi":
            m = build_chi(spec)
        elif kind == "xi":
            m = build_xi(e["U"], spec)
        elif kind == "eta":
            m = build_eta([[Fraction(x) for x in r] for r in e["S"]], spec)
        elif kind == "zeta":
            m = build_zeta(spec.size)
        elif kind == "matrix":
            m = CMatrix.from_json(e["matrix"])
        else:
            raise UsageError(f"unknown generator kind {kind!r}")
        out.append(m)
    if isinstance(data, dict) and data.get("symmetrize"):
        out = [symmetrize(m, spec) for m in out]
    return out


def _named_group(name):
    if name == "H":
        return list(catalog.h_generators().values())
    if name == "G":
        return list(catalog.g_generators().values())
    raise UsageError(f"unknown group {name!r}; expected G or H")


def _group_generators(args):
    if getattr(args, "generators", None):
        return _generators_from_file(args.generators, _spec(args.spec))
    return _named_group(args.group)


def _load_poly(path):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    if p.suffix == ".json":
        return SWEPoly.from_json(json.loads(text))
    return SWEPoly.parse(text)


def _write(text, out=None):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj):
    return json.dumps(obj, indent=1, sort_keys=True)


# -- subcommands --------------------------------------------------------------

def cmd_group(args):
    gens = _group_generators(args)
    group = close_group(gens, limit=args.limit)
    print(f"order {group.order}")
    if args.emit_elements:
        Path(args.emit_elements).write_text(json.dumps([m.to_json() for m in group]))
    if args.expect is not None:
        ok = group.order == args.expect
        print(f"expected {args.expect}: {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def cmd_code(args):
    c = enumerate_code(load_code(args.file), method=args.method)
    print(f"size {len(c)}")
    checks = {"self-dual": is_self_dual, "type2": lambda c: is_self_dual(c) and is_type2(c)}
    ok = True
    for name in args.check or ():
        verdict = checks[name](c)
        print(f"{name}: {'PASS' if verdict else 'FAIL'}")
        ok &= verdict
    return EXIT_OK if ok else EXIT_FAIL


def cmd_swe(args):
    spec = _spec(args.spec)
    codes = [enumerate_code(load_code(p)) for p in args.codes]
    kw = {} if args.pairs_limit is None else {"pairs_limit": args.pairs_limit}
    f = swe(codes, spec, **kw)
    _write(_dump(f.to_json()) if args.format == "json" else f.to_text(), args.out)
    return EXIT_OK


def cmd_molien(args):
    group = close_group(_group_generators(args))
    series = molien_series(group, args.order).as_ints()
    print(json.dumps(series))
    ok = True
    if args.formula:
        formula = RationalFormula.from_json(_read_json(args.formula))
        want = expand_formula(formula, args.order).as_ints()
        ok = want == series
        print(f"formula: {'PASS' if ok else 'FAIL'}")
    if args.deep_degree is not None:
        d = args.deep_degree
        dim = fixed_space_dim(group.generators, d)
        match = d < len(series) and dim == series[d]
        print(f"fixed-space dimension at degree {d}: {dim} ({'PASS' if match else 'FAIL'})")
        ok &= match
    return EXIT_OK if ok else EXIT_FAIL


def cmd_invariance(args):
    gens = _group_generators(args)
    ok = True
    for path in args.polys:
        verdict = is_invariant(_load_poly(path), gens)
        print(f"{path}: {'invariant' if verdict else 'NOT invariant'}")
        ok &= verdict
    return EXIT_OK if ok else EXIT_FAIL


def cmd_independence(args):
    polys = [_load_poly(p) for p in args.polys]
    monos = [monomial_from_text(m) for m in args.monomials]
    if len(polys) != len(monos):
        raise UsageError("need as many monomials as polynomials")
    m = coefficient_matrix(polys, monos)
    d = det(m)
    print(m.to_text())
    print(f"det {d}")
    return EXIT_OK if d else EXIT_FAIL


def cmd_verify(args):
    cfg = VerifyConfig.load(args.config) if args.config else VerifyConfig()
    if args.skip_G:
        cfg.skip_G = True
    if args.deep_degree is not None:
        cfg.deep_degree = args.deep_degree
    if args.pairs_limit is not None:
        cfg.pairs_limit = args.pairs_limit
    report = verify_paper(cfg)
    print("\n".join(report.lines()))
    if args.report:
        Path(args.report).write_text(_dump(report.to_json(timing=not args.no_timing)) + "\n")
    if not report.passed:
        print("failing claims: " + ", ".join(report.failing()))
        return EXIT_FAIL
    return EXIT_OK


def emit(what, ident, fmt="json"):
    """Catalog object rendered as a string; unknown ids raise NotFound."""
    if what == "matrix":
        mats = {**catalog.g_generators(), **catalog.h_generators()}
        if ident not in mats:
            raise NotFound(ident)
        m = mats[ident]
        return _dump(m.to_json()) if fmt == "json" else m.to_text()
    if what == "poly":
        if ident in ("W_E8_Q8", "W_E8_K8"):
            f = catalog.degree8_enumerators()[ident]
        elif ident in catalog.degree16_recipes():
            bparts, qparts = catalog.degree16_recipes()[ident]
            f = swe([enumerate_code(catalog.summed_code(bparts)),
                     enumerate_code(catalog.summed_code(qparts))], F2_Z4)
        else:
            raise NotFound(ident)
        return _dump(f.to_json()) if fmt == "json" else f.to_text()
    if what == "series":
        if ident == "molien_H":
            coeffs = molien_series(close_group(_named_group("H")), 56).as_ints()
        elif ident == "molien_formula":
            coeffs = expand_formula(closed_form(), 56).as_ints()
        else:
            raise NotFound(ident)
        if fmt == "json":
            return json.dumps(coeffs)
        return " + ".join(f"{c}*t^{k}" for k, c in enumerate(coeffs) if c)
    if what == "code":
        if ident.upper() not in catalog.CATALOG:
            raise NotFound(ident)
        g = catalog.code(ident.upper())
        if fmt == "json":
            return _dump(g.to_json())
        return "\n".join(" ".join(str(x) for x in r) for r in g.rows)
    raise NotFound(what)


def cmd_emit(args):
    _write(emit(args.what, args.id, args.format), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _group_args(p):
    p.add_argument("--group", choices=("G", "H"), default="H", help="built-in group (default H)")
    p.add_argument("--generators", help="generator JSON file; overrides --group")
    p.add_argument("--spec", help="ring JSON {\"ks\": [...]} used with --generators")


def build_parser():
    parser = argparse.ArgumentParser(prog="codent", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="close a generator set and report its order")
    _group_args(p)
    p.add_argument("--limit", type=int, default=2_000_000)
    p.add_argument("--emit-elements", metavar="PATH")
    p.add_argument("--expect", type=int, help="exit 1 unless the order equals this")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("code", help="enumerate and certify a code")
    p.add_argument("--file", required=True)
    p.add_argument("--check", action="append", choices=("self-dual", "type2"))
    p.add_argument("--method", choices=("incremental", "closure"), default="incremental")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("swe", help="symmetrized weight enumerator of codes")
    p.add_argument("--spec")
    p.add_argument("--codes", nargs="+", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--pairs-limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_swe)

    p = sub.add_parser("molien", help="Molien series of a group")
    _group_args(p)
    p.add_argument("--order", type=int, default=56)
    p.add_argument("--formula", help="closed-form JSON to compare against")
    p.add_argument("--deep-degree", type=int)
    p.set_defaults(func=cmd_molien)

    p = sub.add_parser("invariance", help="check polynomials against group generators")
    _group_args(p)
    p.add_argument("polys", nargs="+", help="polynomial files (.json or text)")
    p.set_defaults(func=cmd_invariance)

    p = sub.add_parser("independence", help="coefficient matrix determinant")
    p.add_argument("--polys", nargs="+", required=True)
    p.add_argument("--monomials", nargs="+", required=True, help='e.g. "a^8" "b^8"')
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("verify-paper", help="reproduce every catalogued claim")
    p.add_argument("--config", help="JSON VerifyConfig")
    p.add_argument("--skip-G", action="store_true", dest="skip_G")
    p.add_argument("--deep-degree", type=int)
    p.add_argument("--pairs-limit", type=int)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times from the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("emit", help="print a catalogued object")
    p.add_argument("what", choices=("matrix", "poly", "series", "code"))
    p.add_argument("id")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_emit)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"codent: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except NotFound as exc:
        print(f"codent: not found: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, CodentError, ValueError, KeyError, OSError) as exc:
        print(f"codent: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
