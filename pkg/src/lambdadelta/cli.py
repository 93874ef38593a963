"""Batch command-line front end.

Exit codes: 0 success/true, 1 judgment false, 2 type or arity error,
3 syntax or scope error, 4 fuel exhausted, 5 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .arity import infer_arity
from .errors import (DanglingReference, FuelExhausted, LambdaDeltaError,
                     TermSyntaxError, TypeCheckError)
from .legalize import legalize_env
from .reduction import check_scope, conv_dec, normalize
from .syntax import Bind, parse_env, parse_term, print_env, print_term
from .typecheck import check_type, infer_type, parse_hierarchy, static_type, static_type_iter

EXIT_OK, EXIT_FALSE, EXIT_TYPE, EXIT_SYNTAX, EXIT_FUEL, EXIT_USAGE = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _text(value):
    """Inline text, or the contents of a UTF-8 file for ``@path``."""
    if value.startswith("@"):
        try:
            return Path(value[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {value[1:]}: {exc.strerror}") from None
    return value


def _build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--env", default="*0", help="environment, inline or @file (default *0)")
    common.add_argument("--param", default="gz", help="sort hierarchy: gz, g2 or affine:<c>")
    common.add_argument("--fuel", type=int, default=None,
                        help="reduction step budget (default 100000, or $LD_FUEL)")

    parser = _Parser(prog="lambdadelta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, what in [("parse", "print the canonical form"),
                       ("infer", "print the inferred type"),
                       ("arity", "print the canonical arity")]:
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("term")
    p = sub.add_parser("normalize", parents=[common], help="print the normal form")
    p.add_argument("--trace", action="store_true", help="print one line per reduction step")
    p.add_argument("term")
    p = sub.add_parser("check", parents=[common], help="check a term against a type")
    p.add_argument("--type", required=True, dest="type_", metavar="TYPE")
    p.add_argument("term")
    p = sub.add_parser("conv", parents=[common], help="decide convertibility (exit code only)")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("static", parents=[common], help="print the static type")
    p.add_argument("--iterate", type=int, default=None, metavar="N",
                   help="iterate up to N times until the result is env-shaped")
    p.add_argument("term")
    sub.add_parser("legalize", parents=[common], help="print the legalized environment")
    p = sub.add_parser("suite", parents=[common], help="run a named oracle suite")
    p.add_argument("name")
    return parser


def _subterm_depth(t, path):
    n = 0
    for sel in path:
        if sel == "body" and isinstance(t, Bind):
            n += 1
        t = getattr(t, sel)
    return n


def _diagnose(exc, env, root):
    where = "/".join(exc.path) or "."
    msg = f"{exc.variant} at {where}"
    if exc.subterm is not None and root is not None:
        depth = env.depth + _subterm_depth(root, exc.path)
        msg += f": {print_term(exc.subterm, depth=depth)}"
    return f"{msg}: {exc.message}"


def _run(args, out, err):
    try:
        g = parse_hierarchy(args.param)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    env = parse_env(_text(args.env))  # user names parse terms; output uses canonical names
    fuel = args.fuel

    def term(text):
        t = parse_term(_text(text), env)
        check_scope(env, t)
        return t

    cmd = args.command
    if cmd == "legalize":
        print(print_env(legalize_env(g, env, fuel)), file=out)
        return EXIT_OK
    if cmd == "suite":
        from .oracle.suites import SUITES
        if args.name not in SUITES:
            raise UsageError(f"unknown suite {args.name!r}; choose from {', '.join(SUITES)}")
        report = SUITES[args.name](g)
        print(report, file=out)
        return EXIT_OK if report.ok else EXIT_FALSE
    if cmd == "conv":
        return EXIT_OK if conv_dec(env, term(args.left), term(args.right), fuel) else EXIT_FALSE

    t = term(args.term)
    try:
        if cmd == "parse":
            print(print_term(t, env), file=out)
        elif cmd == "normalize":
            nf, steps = normalize(env, t, fuel, trace=args.trace)
            for step in steps:
                print(step.format(env), file=out)
            print(print_term(nf, env), file=out)
        elif cmd == "infer":
            print(print_term(infer_type(g, env, t, fuel), env), file=out)
        elif cmd == "check":
            w = term(args.type_)
            if check_type(g, env, t, w, fuel):
                print("OK", file=out)
            else:
                print(f"mismatch: {print_term(t, env)} does not have type {print_term(w, env)}",
                      file=out)
                return EXIT_FALSE
        elif cmd == "arity":
            print(infer_arity(g, env, t), file=out)
        elif cmd == "static":
            if args.iterate is None:
                s = static_type(g, env, t)
            else:
                s, _ = static_type_iter(g, env, t, max_iter=args.iterate)
            print(print_term(s, env), file=out)
    except TypeCheckError as exc:
        print(_diagnose(exc, env, t), file=err)
        return EXIT_SYNTAX if isinstance(exc, DanglingReference) else EXIT_TYPE
    return EXIT_OK


def run(argv, out=None, err=None):
    """Run one command; returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _build_parser().parse_args(argv)
        if args.fuel is not None and args.fuel <= 0:
            raise UsageError("--fuel must be positive")
        return _run(args, out, err)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except TermSyntaxError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return EXIT_SYNTAX
    except FuelExhausted as exc:
        print(f"FuelExhausted: {exc}", file=err)
        return EXIT_FUEL
    except DanglingReference as exc:
        print(f"DanglingReference: {exc.message}", file=err)
        return EXIT_SYNTAX
    except TypeCheckError as exc:
        print(_diagnose(exc, None, None), file=err)
        return EXIT_TYPE
    except LambdaDeltaError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return EXIT_TYPE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
