"""Command-line interface.

Subcommands:

* ``list``    -- the 28 family labels with their (z_id, a, d);
* ``info``    -- full record for one family, cones and pairings included;
* ``verify``  -- check all records against the reference tables
                 (exit 0 all pass, 1 any mismatch, 2 internal error);
* ``export``  -- write all records as json, csv or markdown;
* ``cones``   -- curve/nef cone generators and pairings for one family.

All numeric output is exact; non-integral rationals (which only the pairing
displays could ever produce) are rendered as p/q.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__, cones, report
from .catalog import FamilyParams, enumerate_families, threefold, validate_params
from .errors import ConsistencyError, IntegrityError

__all__ = ["main"]


def _fmt(value: Fraction | int) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _family_arg(args: argparse.Namespace) -> FamilyParams:
    try:
        ok = validate_params(args.i, args.a, args.d)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    if not ok:
        raise SystemExit(
            f"error: (z_id={args.i}, a={args.a}, d={args.d}) is not an "
            f"admissible family; run 'list' for the 28 admissible triples")
    return FamilyParams(args.i, args.a, args.d)


def _cmd_list(args: argparse.Namespace) -> int:
    for p in enumerate_families():
        print(f"{p.label}  (z_id={p.z_id}, a={p.a}, d={p.d})")
    return 0


def _print_cones(params: FamilyParams) -> None:
    antiK = cones.anticanonical(params)
    generators = cones.ne_generators(params)
    print("NE(X) generators and -K degrees:")
    for C in generators:
        print(f"  {C.kind.value:7s}  -K . C = {_fmt(cones.pairing(antiK, C))}")
    print("nef cone rays:")
    for ray in cones.nef_rays(params):
        face = ", ".join(sorted(g.value for g in ray.vanishing_face)) or "-"
        coords = ", ".join(_fmt(c) for c in ray.generator.coords)
        print(f"  {ray.label.value}: {ray.name}  = ({coords}) over "
              f"(phi*H, Ghat, E); face {{{face}}}; {ray.contraction}")
    print("pairing matrix (rows phi*H, Ghat, E; columns F, Fhat, C_G, C_Ghat):")
    matrix = cones.pairing_matrix(params)
    for row_name, idx in (("phi*H", 0), ("Ghat", 1), ("E", 2)):
        row = "  ".join(f"{matrix[g][idx]:4d}" for g in cones.CurveGen)
        print(f"  {row_name:6s} {row}")


def _cmd_info(args: argparse.Namespace) -> int:
    params = _family_arg(args)
    record = report.build_record(params)
    Z = params.threefold
    print(f"{record.label}: family over Z_{Z.id} ({Z.description}), "
          f"a={params.a}, d={params.d}")
    print(f"  base 3-fold: index {Z.index}, degree {Z.degree}, "
          f"h^{{1,2}} = {Z.h12}")
    print(f"  K^4 = {record.K4}, K^2.c2 = {record.K2c2}, "
          f"h^0(-K) = {record.h0_antiK}")
    print(f"  h^{{1,2}} = {record.h12}, h^{{1,3}} = {record.h13}, "
          f"h^{{2,2}} = {record.h22}")
    print(f"  base locus of |-K|: {record.base_locus.display()} "
          f"(general member smooth)")
    rat = record.rationality.value.replace("_", " ")
    if record.toric_label is not None:
        rat += f" ({record.toric_label.value})"
    print(f"  rationality: {rat}")
    print(f"  fibre-like: {record.fibre_like.value.replace('_', ' ')}")
    t = record.tangent
    h0 = f"= {t.h0_exact}" if t.h0_exact is not None else f"<= {t.h0_upper}"
    h1 = f"= {t.h1_exact}" if t.h1_exact is not None else f"<= {t.h1_upper}"
    print(f"  tangent sheaf: chi(T) = {t.chi}, h^0(T) {h0}, h^1(T) {h1}")
    _print_cones(params)
    return 0


def _cmd_cones(args: argparse.Namespace) -> int:
    params = _family_arg(args)
    print(f"{params.label}:")
    _print_cones(params)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    result = report.verify_all()
    if not args.quiet:
        for m in result.mismatches:
            print(f"MISMATCH {m.family} {m.field}: expected {m.expected}, "
                  f"computed {m.computed}")
        print(f"{result.pass_count}/{result.pass_count + result.fail_count} "
              f"families match the reference tables")
    return 0 if result.ok else 1


def _cmd_export(args: argparse.Namespace) -> int:
    payload = report.export(report.build_all_records(), args.format)
    if args.out is None:
        sys.stdout.buffer.write(payload)
    else:
        with open(args.out, "wb") as fh:
            fh.write(payload)
        if not args.quiet:
            print(f"wrote {len(payload)} bytes to {args.out}")
    return 0


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("i", type=int, help="base 3-fold id (1..7)")
    parser.add_argument("a", type=int, help="bundle twist a >= 0")
    parser.add_argument("d", type=int, help="degree d >= 1 of the blown-up surface")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fano4",
        description="Invariants of the 28 families of smooth Fano 4-folds of "
                    "Picard number 3 with a prime divisor of Picard rank 1.")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress informational output")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the 28 family labels").set_defaults(
        func=_cmd_list)

    info = sub.add_parser("info", help="full record for one family")
    _add_family_arguments(info)
    info.set_defaults(func=_cmd_info)

    verify = sub.add_parser(
        "verify", help="check all records against the reference tables")
    verify.set_defaults(func=_cmd_verify)

    export_cmd = sub.add_parser("export", help="write all records")
    export_cmd.add_argument("--format", choices=("json", "csv", "markdown"),
                            required=True)
    export_cmd.add_argument("--out", default=None, metavar="PATH",
                            help="output file (default: standard output)")
    export_cmd.set_defaults(func=_cmd_export)

    cones_cmd = sub.add_parser(
        "cones", help="curve/nef cone data for one family")
    _add_family_arguments(cones_cmd)
    cones_cmd.set_defaults(func=_cmd_cones)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConsistencyError, IntegrityError) as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
