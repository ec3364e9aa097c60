"""Command-line front end.

Subcommands cover the algebra operations (mul, gamma, star, norm, expect,
supercommutant) plus the seeded verification suites (verify). Multivector
expressions follow the grammar in :mod:`supercliff.parsing`; subspaces are
given as semicolon-separated vectors of comma-separated reals and are
orthonormalized on input. Exit codes: 0 success, 1 property failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Multivector, gamma, mul, star
from .expectation import expect_subspace, norm, supercommutant
from .parsing import ParseError, format_multivector, parse_multivector
from .subspaces import EPS_RANK, Subspace, from_spanning
from .verify import SUITE_NAMES, render_text, run_suite

_SIG_DIGITS = 12
_CHOP = 1e-12


def _fmt_real(value: float) -> str:
    if abs(value) < _CHOP:
        return "0"
    return f"{value:.{_SIG_DIGITS}g}"


def _fmt_multivector(m: Multivector) -> str:
    return format_multivector(m, sig_digits=_SIG_DIGITS, chop=_CHOP)


def _read_expression(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    return text


def _parse_input(args: argparse.Namespace, text: str) -> Multivector:
    return parse_multivector(_read_expression(text), args.dim)


def _parse_subspace(text: str, dim: int) -> Subspace:
    vectors = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        components = [float(part) for part in chunk.split(",")]
        if len(components) != dim:
            raise ValueError(
                f"subspace vector {chunk!r} has {len(components)} components, "
                f"expected {dim}"
            )
        vectors.append(components)
    subspace = from_spanning(vectors, EPS_RANK, dim_ambient=dim)
    echoed = " ; ".join(
        ",".join(_fmt_real(x) for x in row) for row in subspace.basis
    )
    print(f"subspace basis: {echoed or '(zero subspace)'}", file=sys.stderr)
    return subspace


def _cmd_mul(args: argparse.Namespace) -> int:
    if len(args.input) != 2:
        raise ValueError("mul needs exactly two --input expressions")
    x = _parse_input(args, args.input[0])
    y = _parse_input(args, args.input[1])
    print(_fmt_multivector(mul(x, y)))
    return 0


def _cmd_gamma(args: argparse.Namespace) -> int:
    print(_fmt_multivector(gamma(_parse_input(args, args.input))))
    return 0


def _cmd_star(args: argparse.Namespace) -> int:
    print(_fmt_multivector(star(_parse_input(args, args.input))))
    return 0


def _cmd_norm(args: argparse.Namespace) -> int:
    print(_fmt_real(norm(_parse_input(args, args.input))))
    return 0


def _cmd_expect(args: argparse.Namespace) -> int:
    subspace = _parse_subspace(args.subspace, args.dim)
    result = expect_subspace(subspace, _parse_input(args, args.input))
    print(_fmt_multivector(result))
    return 0


def _cmd_supercommutant(args: argparse.Namespace) -> int:
    subspace = _parse_subspace(args.subspace, args.dim)
    basis = supercommutant(subspace)
    for element in basis.elements:
        print(_fmt_multivector(element))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.dim, args.trials, args.seed)
    rendered = (
        json.dumps(report.to_dict(), indent=2) if args.json else render_text(report)
    )
    print(rendered)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(rendered + "\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercliff",
        description="Clifford superalgebra calculator and theorem verifier",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dim(p):
        p.add_argument("--dim", type=int, required=True, help="ambient dimension n")

    p_mul = sub.add_parser("mul", help="Clifford product of two expressions")
    add_dim(p_mul)
    p_mul.add_argument(
        "--input",
        action="append",
        required=True,
        metavar="EXPR",
        help="operand expression; give the flag twice ('-' reads stdin)",
    )
    p_mul.set_defaults(handler=_cmd_mul)

    for name, handler in [("gamma", _cmd_gamma), ("star", _cmd_star), ("norm", _cmd_norm)]:
        p = sub.add_parser(name, help=f"{name} of an expression")
        add_dim(p)
        p.add_argument("--input", required=True, metavar="EXPR")
        p.set_defaults(handler=handler)

    p_expect = sub.add_parser(
        "expect", help="conditional expectation onto the complement of a subspace"
    )
    add_dim(p_expect)
    p_expect.add_argument(
        "--subspace",
        required=True,
        metavar="V1;V2;...",
        help="spanning vectors, components comma-separated",
    )
    p_expect.add_argument("--input", required=True, metavar="EXPR")
    p_expect.set_defaults(handler=_cmd_expect)

    p_sc = sub.add_parser("supercommutant", help="basis of the supercommutant of C(Z)")
    add_dim(p_sc)
    p_sc.add_argument("--subspace", required=True, metavar="V1;V2;...")
    p_sc.set_defaults(handler=_cmd_supercommutant)

    p_verify = sub.add_parser("verify", help="run a randomized verification suite")
    p_verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p_verify.add_argument("--dim", type=int, default=6)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true", help="emit a JSON report")
    p_verify.add_argument("--out", metavar="PATH", help="also write the report here")
    p_verify.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
