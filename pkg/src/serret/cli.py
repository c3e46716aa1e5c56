"""Command line interface: `serret VERB ARGS... [--json]`."""

from __future__ import annotations

import argparse
import json
import sys

from . import literals
from .cf import FiniteCF, expand, tail_match, value
from .errors import DomainError, ParseError
from .quadratic import qi_mobius
from .unimodular import (
    Decomposition, decompose, equivalence_chain, normal_form, reduce_word,
    relator_selftest, serret_equivalent,
)

EXIT_OK, EXIT_NOT_EQUIVALENT, EXIT_ERROR = 0, 1, 2


def _qi_json(x):
    return {"literal": literals.format_qi(x), "P": x.P, "D": x.D, "Q": x.Q}


def _cf_json(cf):
    return {"literal": literals.format_cf(cf), "preperiod": list(cf.preperiod), "period": list(cf.period)}


def _matrix_json(M):
    return {"literal": literals.format_matrix(M), "a": M.a, "b": M.b, "c": M.c, "d": M.d}


def _word_json(w):
    return {"literal": literals.format_word(w), "e": w.e, "exponents": list(w.exponents)}


def cmd_expand(args):
    cf = expand(literals.parse_qi(args.x))
    return EXIT_OK, literals.format_cf(cf), _cf_json(cf), None


def cmd_value(args):
    cf = literals.parse_cf(args.cf)
    if isinstance(cf, FiniteCF):
        raise DomainError(f"value is rational: {cf.value()}")
    x = value(cf)
    return EXIT_OK, literals.format_qi(x), _qi_json(x), None


def cmd_eq(args):
    x, y = literals.parse_qi(args.x), literals.parse_qi(args.y)
    M = serret_equivalent(x, y)
    if M is None:
        return EXIT_NOT_EQUIVALENT, "not equivalent", False, None
    i, j = tail_match(expand(x), expand(y))
    witness = dict(_matrix_json(M), tail=[i, j])
    return EXIT_OK, literals.format_matrix(M), True, witness


def cmd_apply(args):
    y = qi_mobius(literals.parse_matrix(args.matrix), literals.parse_qi(args.x))
    return EXIT_OK, literals.format_qi(y), _qi_json(y), None


def cmd_decompose(args):
    dec = decompose(literals.parse_matrix(args.matrix).canonical())
    if isinstance(dec, Decomposition):
        text = f"terms=[{', '.join(map(str, dec.terms))}] r={dec.r}"
        return EXIT_OK, text, {"terms": list(dec.terms), "r": dec.r}, None
    text = f"sign={dec.sign:+d} shift={dec.shift}"
    return EXIT_OK, text, {"sign": dec.sign, "shift": dec.shift}, None


def cmd_normal_form(args):
    w = normal_form(literals.parse_matrix(args.matrix))
    return EXIT_OK, literals.format_word(w), _word_json(w), None


def cmd_reduce(args):
    w = reduce_word(literals.parse_word(args.word))
    return EXIT_OK, literals.format_word(w), _word_json(w), None


def cmd_chain(args):
    chain = equivalence_chain(literals.parse_matrix(args.matrix), literals.parse_qi(args.x))
    text = "\n".join(literals.format_cf(cf) for cf in chain)
    return EXIT_OK, text, [_cf_json(cf) for cf in chain], None


def cmd_selftest(args):
    report = relator_selftest()
    text = "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in report.items())
    return (EXIT_OK if all(report.values()) else 1), text, report, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="serret",
        description="Continued fractions, PGL2(Z) normal forms and equivalence of quadratic irrationals.",
    )
    parser.add_argument("--json", action="store_true", help="print one JSON object")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, *params, help):
        p = sub.add_parser(name, help=help)
        for param in params:
            p.add_argument(param)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        p.set_defaults(func=func)

    verb("expand", cmd_expand, "x", help="continued fraction of a quadratic irrational")
    verb("value", cmd_value, "cf", help="exact value of a periodic continued fraction")
    verb("eq", cmd_eq, "x", "y", help="decide equivalence and print a witness matrix")
    verb("apply", cmd_apply, "matrix", "x", help="apply a unimodular matrix to x")
    verb("decompose", cmd_decompose, "matrix", help="continued fraction decomposition of a matrix")
    verb("normal-form", cmd_normal_form, "matrix", help="generator-word normal form of a matrix")
    verb("reduce", cmd_reduce, "word", help="normal form of a word in T^k, U, V")
    verb("chain", cmd_chain, "matrix", "x", help="chain of continued fractions from M.x down to x")
    verb("selftest", cmd_selftest, help="check the PGL2(Z) relators")
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        code, text, result, witness = args.func(args)
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps({"verb": args.verb, "result": result, "witness": witness}), file=stdout)
    else:
        print(text, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
