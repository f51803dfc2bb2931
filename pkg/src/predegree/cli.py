"""Command-line interface.

Every subcommand has a plain-text mode and a --json mode reporting the same
numbers.  JSON payloads are {"command": ..., "inputs": {...}, "result": {...}}
with integers as JSON numbers when they fit in 64 bits (decimal strings
otherwise) and rationals always as exact "p/q" strings.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
integrality failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import segre
from .chow import ProductSpace
from .polynomial import IntegralityError, deg_po, deg_so, predegree_coefficient
from .quadric import ProjMatrix, base_scheme_member, predegree_quadric_p3, table1_row, table2
from .tangent import run_tangent_checks

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_INTEGRALITY = 3

_INT64_MAX = 2**63 - 1


def json_int(value: int):
    """Integers as JSON numbers while they fit in 64 bits, else strings."""
    return value if -_INT64_MAX - 1 <= value <= _INT64_MAX else str(value)


def emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def parse_int_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {raw!r}") from exc


def parse_rational_list(raw: str) -> list[Fraction]:
    try:
        return [Fraction(part) for part in raw.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {raw!r}") from exc


def cmd_predegree(args) -> int:
    row = table1_row(args.n)
    coeffs = [None if c is None else json_int(c) for c in row.coeffs]
    payload = {
        "command": "predegree",
        "inputs": {"target": "quadric", "n": args.n},
        "result": {
            "quadric_space_dim": row.quadric_space_dim,
            "max_base_component_dim": row.max_base_component_dim,
            "coefficients": coeffs,
            "polynomial": row.polynomial_string(),
        },
    }
    emit(args, payload, row.polynomial_string())
    return EXIT_OK


def cmd_segre_class(args) -> int:
    space = ProductSpace(tuple(args.factors))
    cls = segre.segre_class_pushforward(space)
    payload = {
        "command": "segre-class",
        "inputs": {"factors": list(space.factor_dims)},
        "result": {"ambient_dim": segre.ambient_dim(space), "terms": cls.to_records()},
    }
    emit(args, payload, str(cls))
    return EXIT_OK


def cmd_group_degree(args, name: str) -> int:
    value = deg_so(args.m) if name == "deg-so" else deg_po(args.m)
    payload = {
        "command": name,
        "inputs": {"m": args.m},
        "result": {"degree": json_int(value)},
    }
    emit(args, payload, str(value))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.which == 1:
        rows = [table1_row(n) for n in range(1, 5)]
        payload = {
            "command": "table",
            "inputs": {"which": 1},
            "result": {
                "rows": [
                    {
                        "n": r.n,
                        "quadric_space_dim": r.quadric_space_dim,
                        "max_base_component_dim": r.max_base_component_dim,
                        "coefficients": [None if c is None else json_int(c) for c in r.coeffs],
                        "polynomial": r.polynomial_string(),
                    }
                    for r in rows
                ]
            },
        }
        lines = [
            f"n={r.n}  dim quadric space={r.quadric_space_dim}  "
            f"max base component dim={r.max_base_component_dim}  {r.polynomial_string()}"
            for r in rows
        ]
        emit(args, payload, "\n".join(lines))
    else:
        rows = table2()
        payload = {
            "command": "table",
            "inputs": {"which": 2},
            "result": {"rows": [{"dim_l": d, "count": json_int(c)} for d, c in rows]},
        }
        emit(args, payload, "\n".join(f"dim L = {d}: {c}" for d, c in rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_tangent_checks(seed=args.seed, samples=args.samples)
    payload = {
        "command": "verify",
        "inputs": {"what": "tangents", "seed": args.seed, "samples": args.samples},
        "result": report.to_payload(),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK if report.all_passed else EXIT_VERIFICATION


def cmd_member(args) -> int:
    phi = ProjMatrix.from_flat(args.matrix)
    member = base_scheme_member(phi)
    payload = {
        "command": "member",
        "inputs": {"matrix": [str(x) for x in args.matrix]},
        "result": {"member": member},
    }
    emit(args, payload, "true" if member else "false")
    return EXIT_OK


def cmd_coeff(args) -> int:
    space = ProductSpace(tuple(args.segre_factors))
    cls = segre.segre_class_pushforward(space)
    if args.double:
        cls = 2 * cls
    ambient = segre.ambient_dim(space)
    value = predegree_coefficient(ambient, args.d, cls, args.i)
    payload = {
        "command": "coeff",
        "inputs": {
            "i": args.i,
            "d": args.d,
            "segre_factors": list(space.factor_dims),
            "double": args.double,
        },
        "result": {"coefficient": json_int(value)},
    }
    emit(args, payload, str(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="predegree",
        description="Exact intersection-theory calculator for quadric orbit invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predegree", help="predegree polynomial of a smooth quadric")
    p.add_argument("target", choices=["quadric"])
    p.add_argument("--n", type=int, required=True, help="dimension of the ambient P^n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_predegree)

    p = sub.add_parser("segre-class", help="pushed-forward Segre class of a Segre embedding")
    p.add_argument("--factors", type=parse_int_list, required=True, metavar="n1,n2,...")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_segre_class)

    for name in ("deg-so", "deg-po"):
        p = sub.add_parser(name, help=f"degree of the closure of {name.split('-')[1].upper()}(m)")
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=lambda args, name=name: cmd_group_degree(args, name))

    p = sub.add_parser("table", help="summary tables for smooth quadrics")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="exact tangent-space verification")
    p.add_argument("what", choices=["tangents"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("member", help="membership of a matrix in the base locus")
    p.add_argument("--matrix", type=parse_rational_list, required=True, metavar="r0c0,...,r3c3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("coeff", help="single predegree coefficient from a Segre class")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--segre-factors", type=parse_int_list, default=[1, 7], metavar="n1,n2,...")
    p.add_argument("--double", action="store_true", help="use twice the Segre class")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coeff)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IntegralityError as exc:
        print(f"internal integrality failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
