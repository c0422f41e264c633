"""Command line front end.

Verbs: expand, equal, invariants, op, classify, sporadics.  Diagrams are
given in the compact ``outer/inner`` form by default, or as a path to an
ASCII file with ``--in ascii``.  Domain errors exit with code 1 and a JSON
error object; usage errors exit with code 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classifier
from .diagrams import SkewShape, parse_ascii, parse_compact, shape_to_ribbon
from .diagram_ops import amalgamate, compose_alpha_d, compose_d_beta, concat, near_concat
from .errors import SkewLabError
from .invariants import fingerprint, frobenius_rank, overlaps
from .staircases import StaircasePresentation, build_from_staircase, detect_staircase
from .symfunc import hamel_goulden, h_from_schur, jacobi_trudi, schur_expand_lr


def _read_shape(raw: str, fmt: str) -> SkewShape:
    if fmt == "ascii":
        return parse_ascii(Path(raw).read_text())
    return parse_compact(raw)


def _comp(raw: str) -> tuple[int, ...]:
    return tuple(int(p) for p in raw.split(",") if p.strip())


def _emit_shape(shape: SkewShape, fmt: str) -> str:
    return shape.ascii() if fmt == "ascii" else shape.compact()


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_expand(args) -> int:
    shape = _read_shape(args.a, args.informat)
    if args.algo == "lr":
        result = schur_expand_lr(shape)
    elif args.algo == "hg":
        result = hamel_goulden(shape, args.side)
    else:
        result = jacobi_trudi(shape)
    if args.out == "json":
        _print_json(result.to_json())
    else:
        print(result)
    return 0


def cmd_equal(args) -> int:
    a = _read_shape(args.a, args.informat)
    b = _read_shape(args.b, args.informat)
    equal = fingerprint(a) == fingerprint(b)
    if args.out == "json":
        _print_json({"equivalent": equal})
    else:
        print(f"equivalent: {'true' if equal else 'false'}")
    return 0


def cmd_invariants(args) -> int:
    shape = _read_shape(args.a, args.informat)
    prof = overlaps(shape)
    obj = {
        "rank": frobenius_rank(shape),
        "rho": [list(p) for p in prof.row_parts],
        "gamma": [list(p) for p in prof.col_parts],
        "rect": [list(r) for r in prof.rect],
    }
    if args.out == "json":
        _print_json(obj)
    else:
        print(f"rank: {obj['rank']}")
        for name in ("rho", "gamma", "rect"):
            for k, row in enumerate(obj[name], start=1):
                print(f"{name}[{k}]: {row}")
    return 0


def cmd_op(args) -> int:
    fmt = args.format
    if args.operation in ("concat", "nearcat"):
        a = _read_shape(args.a, args.informat)
        b = _read_shape(args.b, args.informat)
        fn = concat if args.operation == "concat" else near_concat
        print(_emit_shape(fn(a, b), fmt))
    elif args.operation == "compose":
        if args.alpha and not args.beta:
            d = _read_shape(args.d, args.informat)
            print(_emit_shape(compose_alpha_d(_comp(args.alpha), d), fmt))
        elif args.beta and not args.alpha:
            d = _read_shape(args.d, args.informat)
            print(_emit_shape(compose_d_beta(d, _comp(args.beta)), fmt))
        else:
            raise SystemExit("compose needs exactly one of --alpha / --beta")
    elif args.operation == "amalgamate":
        a = _read_shape(args.a, args.informat)
        b = _read_shape(args.b, args.informat)
        print(_emit_shape(amalgamate(a, b, _comp(args.omega)), fmt))
    elif args.operation == "staircase":
        pres = StaircasePresentation(
            _comp(args.alpha), args.m, args.k, args.nesting or "." * (args.k - 1),
            args.side,
        )
        print(_emit_shape(build_from_staircase(pres), fmt))
    elif args.operation == "detect":
        shape = _read_shape(args.a, args.informat)
        pres = detect_staircase(shape, args.side)
        if pres is None:
            _print_json(None)
        else:
            _print_json(
                {
                    "alpha": list(pres.alpha),
                    "m": pres.m,
                    "k": pres.k,
                    "nesting": pres.nesting,
                    "side": pres.side,
                }
            )
    return 0


def cmd_classify(args) -> int:
    report = classifier.classify(args.n, jobs=args.jobs)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def cmd_sporadics(args) -> int:
    results = classifier.verify_sporadics()
    if args.out == "json":
        _print_json(results)
    else:
        for row in results:
            print(f"pair {row['pair_id']} ({row['size']} cells): equal")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlab",
        description="Skew Schur expansions, diagram calculus and equivalence classification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_io(p, shapes=("a",)):
        for name in shapes:
            p.add_argument(f"--{name}", required=True)
        p.add_argument("--in", dest="informat", choices=("compact", "ascii"),
                       default="compact")
        p.add_argument("--out", choices=("table", "json"), default="table")

    p = sub.add_parser("expand", help="Schur or h expansion of a diagram")
    add_io(p)
    p.add_argument("--algo", choices=("lr", "jt", "hg"), default="lr")
    p.add_argument("--side", choices=("se", "nw"), default="se")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("equal", help="decide skew equivalence")
    add_io(p, shapes=("a", "b"))
    p.set_defaults(fn=cmd_equal)

    p = sub.add_parser("invariants", help="rank, overlap partitions, rectangle counts")
    add_io(p)
    p.add_argument("--all", action="store_true")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("op", help="diagram operations")
    p.add_argument("operation", choices=(
        "concat", "nearcat", "compose", "amalgamate", "staircase", "detect"))
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--d")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--omega")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--nesting")
    p.add_argument("--side", choices=("se", "nw"), default="se")
    p.add_argument("--in", dest="informat", choices=("compact", "ascii"),
                   default="compact")
    p.add_argument("--format", choices=("compact", "ascii"), default="compact")
    p.set_defaults(fn=cmd_op)

    p = sub.add_parser("classify", help="equivalence classes at size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSON report to this file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("sporadics", help="verify the six bundled pairs")
    p.add_argument("--out", choices=("table", "json"), default="table")
    p.set_defaults(fn=cmd_sporadics)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SkewLabError as exc:
        print(json.dumps({"error": exc.name, "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
