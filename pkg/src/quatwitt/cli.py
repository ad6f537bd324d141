"""Command-line front end.

Subcommands:
  prod     multiply two mixed classes
  lambda   lambda^d of an anti-hermitian form
  transfer Morita transfer of an anti-hermitian form (split algebra)
  residue  first/second residue of a Q(t) form at a place
  decide   equality decision for two inputs of the same shape
  psi      generic-splitting image of a mixed class (split algebra)
  check    run a named verification suite

All runs are deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import polys as P
from .errors import QuatWittError, SchemaViolation
from .fields import FACTOR_BOUND, Fp, QQ, QT, Place
from .funcfield import FunctionFieldForm, conic_parametrize, psi_split, residue
from .hermitian import AntiHermForm, morita_transfer
from .invariants import LambdaInvariant, invariant_equal, lambda_herm
from .mixed import MixedClass, mixed_equal
from .quadforms import QuadForm, witt_equal
from .quaternions import QuatAlgebra, find_nilpotent
from .serialize import parse_input, serialize
from .suites import RunConfig, Report, emit_report, run_suite


def _field_spec(text: str):
    if text == "Q":
        return QQ
    if text == "Qt":
        return QT
    if text.startswith("F"):
        return Fp(int(text[1:]))
    raise SchemaViolation(f"unknown field {text!r}")


def _add_globals(ap: argparse.ArgumentParser, suppress: bool):
    def d(v):
        return argparse.SUPPRESS if suppress else v

    ap.add_argument("--field", default=d("Q"),
                    help="base field: Q, Qt or F<p> (default Q)")
    ap.add_argument("--quat", nargs=2, default=d(["-1", "-1"]),
                    metavar=("a", "b"),
                    help="quaternion algebra parameters (default -1 -1)")
    ap.add_argument("--seed", type=int, default=d(0))
    ap.add_argument("--search-bound", type=int, default=d(8))
    ap.add_argument("--factor-bound", type=int, default=d(FACTOR_BOUND))
    ap.add_argument("--output", choices=["text", "json"], default=d("text"))


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quatwitt")
    _add_globals(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        # accept the global flags after the subcommand as well; SUPPRESS
        # keeps the subparser from clobbering values given before it
        p = sub.add_parser(name, help=help_text)
        _add_globals(p, suppress=True)
        return p

    p = add("prod", "multiply two mixed classes")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = add("lambda", "lambda power of an anti-hermitian form")
    p.add_argument("degree", type=int)
    p.add_argument("form")

    p = add("transfer", "Morita transfer to W(k)")
    p.add_argument("form")

    p = add("residue", "residues of a Q(t) form")
    p.add_argument("form")
    p.add_argument("--place", required=True,
                   help='"inf" or comma-separated poly coefficients, '
                        'ascending (e.g. "0,1" for t)')

    p = add("decide", "equality decision for two inputs")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = add("psi", "generic-splitting image of a mixed class")
    p.add_argument("input")

    p = add("check", "run a verification suite")
    p.add_argument("suite")
    return ap


def _emit(doc, mode: str):
    if mode == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(doc if isinstance(doc, str) else
              json.dumps(doc, indent=2, sort_keys=True))


def _parse_place(text: str) -> Place:
    if text == "inf":
        return Place("infinite")
    coeffs = [Fraction(c) for c in text.split(",")]
    return Place("poly", pi=P.monic(P.poly(coeffs)))


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    field = _field_spec(args.field)
    A = QuatAlgebra(Fraction(args.quat[0]), Fraction(args.quat[1]))
    mode = args.output
    try:
        if args.command == "prod":
            x = parse_input(args.lhs, algebra=A, field=field)
            y = parse_input(args.rhs, algebra=A, field=field)
            if not isinstance(x, MixedClass) or not isinstance(y, MixedClass):
                raise SchemaViolation("prod expects two mixed classes")
            _emit(serialize(x * y), mode)
        elif args.command == "lambda":
            h = parse_input(args.form, algebra=A, field=field)
            if not isinstance(h, AntiHermForm):
                raise SchemaViolation("lambda expects an anti-hermitian form")
            _emit(serialize(lambda_herm(args.degree, h)), mode)
        elif args.command == "transfer":
            h = parse_input(args.form, algebra=A, field=field)
            if not isinstance(h, AntiHermForm):
                raise SchemaViolation("transfer expects an anti-hermitian form")
            z0 = find_nilpotent(A)
            _emit(serialize(morita_transfer(h, z0)), mode)
        elif args.command == "residue":
            q = parse_input(args.form, algebra=A, field=field)
            if not isinstance(q, FunctionFieldForm):
                raise SchemaViolation("residue expects a Q(t) form")
            out = residue(q, _parse_place(args.place))
            _emit({"first": serialize(out.even.anis),
                   "second": serialize(out.odd.anis)}, mode)
        elif args.command == "decide":
            x = parse_input(args.lhs, algebra=A, field=field)
            y = parse_input(args.rhs, algebra=A, field=field)
            if type(x) is not type(y):
                raise SchemaViolation("decide expects two inputs of one shape")
            if isinstance(x, QuadForm):
                verdict = "equal" if witt_equal(x, y) else "distinct"
            elif isinstance(x, MixedClass):
                verdict = mixed_equal(x, y, search_bound=args.search_bound)
            elif isinstance(x, FunctionFieldForm):
                from .funcfield import kt_witt_equal

                verdict = "equal" if kt_witt_equal(x, y) else "distinct"
            elif isinstance(x, LambdaInvariant):
                verdict = invariant_equal(x, y)
            elif isinstance(x, AntiHermForm):
                verdict = mixed_equal(
                    MixedClass(_zero_even(), x, A),
                    MixedClass(_zero_even(), y, A),
                    search_bound=args.search_bound,
                )
            else:
                raise SchemaViolation("undecidable input shape")
            _emit({"result": verdict}, mode)
        elif args.command == "psi":
            x = parse_input(args.input, algebra=A, field=field)
            if not isinstance(x, MixedClass):
                raise SchemaViolation("psi expects a mixed class")
            _emit(serialize(psi_split(x, conic_parametrize(A))), mode)
        elif args.command == "check":
            cfg = RunConfig(
                field=args.field,
                quat=(Fraction(args.quat[0]), Fraction(args.quat[1])),
                seed=args.seed,
                search_bound=args.search_bound,
                factor_bound=args.factor_bound,
                output=mode,
            )
            rep = run_suite(args.suite, cfg)
            sys.stdout.write(emit_report(rep, mode))
            return rep.exit_code
    except QuatWittError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _zero_even():
    from .quadforms import witt_zero

    return witt_zero()


if __name__ == "__main__":
    sys.exit(main())
