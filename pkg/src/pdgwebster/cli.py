"""Command line front end.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Algebra
from .derivation import derive
from .modp import ConfigurationError
from .oracle import DEFAULT_CAPS, ResourceError, oracle_equal
from .parser import ParseError, parse
from .render import render_svg, render_tikz
from .rewrite import reduce
from .verify import SUITES, failures, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3
MAX_RENDER_TERMS = 24


def _int_list(text):
    text = text.strip()
    if not text or text in ("()", "-"):
        return ()
    return tuple(int(v) for v in text.strip("()").split(",") if v.strip())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", default="3", help="prime (verify accepts a comma list)")
    common.add_argument("--algebra", choices=("NH", "W", "D"), default="D")
    common.add_argument("--s", type=_int_list, default=None, help="red labels, comma list")
    common.add_argument("--n", type=int, default=None, help="number of black strands")
    common.add_argument("--budget", type=int, default=0, help="exploration budget for prove_zero")
    common.add_argument("--degree-cap", type=int, default=None, help="largest |degree| accepted")
    common.add_argument("--format", choices=("text", "json", "svg", "tikz"), default="text")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(
        prog="pdgwebster", description="p-DG nilHecke and Webster algebras over F_p", parents=[common]
    )
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("reduce", parents=[common], help="rewrite an expression to normal form")
    r.add_argument("expr")
    r.add_argument("--trace", action="store_true", help="print one rule application per line")
    m = sub.add_parser("mult", parents=[common], help="multiply expressions (first on top)")
    m.add_argument("exprs", nargs="+")
    d = sub.add_parser("diff", parents=[common], help="apply the p-derivation k times")
    d.add_argument("expr")
    d.add_argument("--k", type=int, default=1)
    d.add_argument("--raw", action="store_true", help="do not reduce the result")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--s-max", type=int, default=3)
    v.add_argument("--n-max", type=int, default=2)
    v.add_argument("--m-max", type=int, default=2)
    g = sub.add_parser("render", parents=[common], help="draw an expression as svg or tikz")
    g.add_argument("expr")
    g.add_argument("--bimodule", choices=("up", "down"), default=None)
    g.add_argument("--j", type=int, default=1)
    o = sub.add_parser("oracle-equal", parents=[common], help="decide a == b by linear algebra")
    o.add_argument("a")
    o.add_argument("b")
    return ap


def _algebra(args, p=None) -> Algebra:
    s = args.s if args.s is not None else ()
    n = args.n if args.n is not None else 0
    kind = args.algebra
    if kind == "NH":
        s = ()
    return Algebra(kind, s, n, p if p is not None else _single_prime(args.p))


def _single_prime(text) -> int:
    if "," in str(text):
        raise ConfigurationError("this command takes a single prime")
    return int(text)


def _check_degree(el, cap):
    if cap is None:
        return
    for (b, l) in el.terms:
        d = el.algebra.word_degree(b, l)
        if abs(d) > cap:
            raise ResourceError(f"term degree {d} exceeds --degree-cap {cap}")


def _emit(el, fmt, out, extra=None):
    if fmt == "json":
        obj = el.algebra.to_json_obj(el)
        if extra:
            obj = dict(extra, result=obj)
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    elif fmt == "svg":
        out.write(render_svg(el))
    elif fmt == "tikz":
        out.write(render_tikz(el))
    else:
        out.write(str(el) + "\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return _dispatch(args, out, err)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ResourceError as exc:
        err.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except (ConfigurationError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


def _dispatch(args, out, err) -> int:
    cmd = args.command
    if cmd == "verify":
        primes = [int(v) for v in str(args.p).split(",") if v.strip()]
        for p in primes:
            Algebra("NH", (), 0, p)
        rows = run_suite(
            args.suite, primes, s=args.s, n=args.n, s_max=args.s_max, n_max=args.n_max,
            m_max=args.m_max, budget=args.budget,
        )
        bad = failures(rows)
        if args.format == "json":
            out.write(json.dumps(rows, sort_keys=True) + "\n")
        else:
            out.write(f"{args.suite}: {len(rows) - len(bad)}/{len(rows)} proven\n")
        for r in bad:
            err.write(f"FAILED {r['id']} on {r['sequence']} (p={r['p']}): {r['status']}\n")
        return EXIT_FAIL if bad else EXIT_OK

    A = _algebra(args)
    if cmd == "reduce":
        el = parse(args.expr, A)
        _check_degree(el, args.degree_cap)
        rep = reduce(el, trace=args.trace)
        if args.trace:
            for line in rep.trace:
                err.write(str(line) + "\n")
        extra = {"trace_length": rep.trace_length, "flag": rep.flag}
        _emit(rep.reduced, args.format, out, extra)
        return EXIT_OK
    if cmd == "mult":
        el = parse(args.exprs[0], A)
        for e in args.exprs[1:]:
            el = el * parse(e, A)
        _check_degree(el, args.degree_cap)
        _emit(reduce(el).reduced, args.format, out)
        return EXIT_OK
    if cmd == "diff":
        el = parse(args.expr, A)
        res = derive(el, args.k)
        _check_degree(res, args.degree_cap)
        _emit(res if args.raw else reduce(res).reduced, args.format, out)
        return EXIT_OK
    if cmd == "render":
        el = parse(args.expr, A)
        if len(el.terms) > MAX_RENDER_TERMS:
            raise ResourceError(f"{len(el.terms)} terms exceed the render cap {MAX_RENDER_TERMS}")
        merge = (args.bimodule, args.j) if args.bimodule else None
        if args.format == "tikz":
            out.write(render_tikz(el, merge))
        else:
            out.write(render_svg(el, merge))
        return EXIT_OK
    if cmd == "oracle-equal":
        a, b = parse(args.a, A), parse(args.b, A)
        caps = {}
        if args.degree_cap is not None:
            caps["degree"] = args.degree_cap
        same = oracle_equal(a, b, dict(DEFAULT_CAPS, **caps))
        out.write(("true" if same else "false") + "\n")
        return EXIT_OK if same else EXIT_FAIL
    raise ValueError(f"unknown command {cmd}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
