"""Command-line interface.

Exit codes: 0 when the requested check passes (or the command is purely
informational), 1 when a check returns Obstructed, 2 on hypothesis failure
or any input/usage error. The code depends only on the verdict or error
class, never on the output format.
"""

from __future__ import annotations

import argparse
import sys

from . import reports
from .covers import branched_double_cover, consistency_check
from .engine import Verdict, excess_check, plane_family_audit
from .errors import ExcessKitError
from .fileio import (
    load_catalog,
    read_family_file,
    read_vector_file,
    resolve_profile,
)
from .gf2 import Gf2Vector, max_zero_sum_subset, zero_sum_subcollection
from .manifolds import ManifoldProfile, budget_report, validate_profile
from .surfaces import SurfaceFamily, TubedSurface, massey_admissible_set, tube

__all__ = ["build_parser", "run", "main"]

_VERDICT_EXIT = {
    Verdict.BOUND_SATISFIED: 0,
    Verdict.OBSTRUCTED: 1,
    Verdict.HYPOTHESIS_FAILURE: 2,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="excess-kit",
        description=(
            "Exact integer obstruction checks for families of disjoint"
            " nonorientable surfaces in closed oriented 4-manifolds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    catalog = sub.add_parser("catalog", help="list or show built-in profiles")
    catalog_sub = catalog.add_subparsers(dest="catalog_command", required=True)
    catalog_sub.add_parser("list", help="list all known profiles")
    show = catalog_sub.add_parser("show", help="show one profile with budgets")
    show.add_argument("name")

    bound = sub.add_parser("bound", help="print a profile's budgets")
    bound.add_argument("--manifold", required=True, metavar="REF")

    check = sub.add_parser("check", help="excess check of a family file")
    check.add_argument("--manifold", required=True, metavar="REF")
    check.add_argument("--family", required=True, metavar="PATH")
    check.add_argument("--format", choices=("text", "json"), default="text")

    audit = sub.add_parser("audit", help="staged audit of a genus-1 family")
    audit.add_argument("--manifold", required=True, metavar="REF")
    audit.add_argument("--planes", required=True, metavar="PATH")
    audit.add_argument(
        "--exact",
        action="store_true",
        help="use the exact zero-sum maximizer instead of the constructive one",
    )
    audit.add_argument("--format", choices=("text", "json"), default="text")
    audit.add_argument("--effort", type=int, default=0, metavar="N")

    tube_cmd = sub.add_parser("tube", help="tube a family into one surface")
    tube_cmd.add_argument("--family", required=True, metavar="PATH")

    cover = sub.add_parser("cover", help="branched double cover invariants")
    cover.add_argument("--manifold", required=True, metavar="REF")
    cover.add_argument("--genus", required=True, type=int)
    cover.add_argument("--euler", required=True, type=int)
    cover.add_argument("--class", dest="class_bits", default=None, metavar="BITS")

    zerosum = sub.add_parser("zerosum", help="zero-sum subset of a vector file")
    zerosum.add_argument("--vectors", required=True, metavar="PATH")
    zerosum.add_argument("--exact", action="store_true")
    zerosum.add_argument("--effort", type=int, default=0, metavar="N")

    massey = sub.add_parser("massey", help="admissible Euler numbers for a genus")
    massey.add_argument("--genus", required=True, type=int)

    return parser


def _profile_line(profile: ManifoldProfile) -> str:
    b = budget_report(profile)
    return (
        f"{profile.name}: signature {profile.signature}, "
        f"euler_characteristic {profile.euler_characteristic}, "
        f"b1_f2 {profile.b1_f2}, b2_f2 {b.b2_f2}, D {b.d_of_m}, B {b.b_of_m}"
    )


def _cmd_catalog(args: argparse.Namespace) -> int:
    catalog = load_catalog()
    if args.catalog_command == "list":
        for name in sorted(catalog):
            print(_profile_line(catalog[name]))
        return 0
    profile = catalog.get(args.name)
    if profile is None:
        print(f"unknown catalog profile {args.name!r}", file=sys.stderr)
        return 2
    print(reports.render_budget_text(profile, budget_report(profile)))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    profile = resolve_profile(args.manifold)
    validate_profile(profile)
    print(reports.render_budget_text(profile, budget_report(profile)))
    return 0


def _load_family_for(ref: str, path: str) -> tuple[ManifoldProfile, SurfaceFamily]:
    """Resolve the command's profile and the family's declared ambient.

    The family file names its own ambient profile; it must agree with the
    profile named on the command line, field for field.
    """
    catalog = load_catalog()
    profile = resolve_profile(ref, catalog)
    validate_profile(profile)
    ambient, family = read_family_file(path, catalog)
    if (
        ambient.signature,
        ambient.euler_characteristic,
        ambient.b1_f2,
    ) != (profile.signature, profile.euler_characteristic, profile.b1_f2):
        raise ExcessKitError(
            f"family file declares ambient {ambient.name!r} with invariants "
            f"({ambient.signature}, {ambient.euler_characteristic}, {ambient.b1_f2}), "
            f"but the command names {profile.name!r} with "
            f"({profile.signature}, {profile.euler_characteristic}, {profile.b1_f2})"
        )
    return profile, family


def _cmd_check(args: argparse.Namespace) -> int:
    profile, family = _load_family_for(args.manifold, args.family)
    report = excess_check(profile, family)
    if args.format == "json":
        print(reports.canonical_json(reports.report_document(report)))
    else:
        print(reports.render_report_text(report))
    return _VERDICT_EXIT[report.verdict]


def _cmd_audit(args: argparse.Namespace) -> int:
    profile, family = _load_family_for(args.manifold, args.planes)
    audit = plane_family_audit(
        profile, family, use_exact=args.exact, effort_limit=args.effort
    )
    if args.format == "json":
        print(reports.canonical_json(reports.audit_document(audit)))
    else:
        print(reports.render_audit_text(audit))
    return _VERDICT_EXIT[audit.verdict]


def _cmd_tube(args: argparse.Namespace) -> int:
    _, family = read_family_file(args.family)
    print(reports.render_tube_text(tube(family)))
    return 0


def _cmd_cover(args: argparse.Namespace) -> int:
    profile = resolve_profile(args.manifold)
    validate_profile(profile)
    if args.class_bits is None:
        bits = "0" * profile.b2_f2
    else:
        bits = args.class_bits
        if bits.strip("01"):
            print(f"--class is not a bit string: {bits!r}", file=sys.stderr)
            return 2
        if len(bits) != profile.b2_f2:
            print(
                f"--class has length {len(bits)}, profile {profile.name!r} "
                f"needs {profile.b2_f2}",
                file=sys.stderr,
            )
            return 2
    if args.genus < 1:
        print(f"--genus must be >= 1, got {args.genus}", file=sys.stderr)
        return 2
    surface = TubedSurface(
        genus=args.genus,
        euler_number=args.euler,
        euler_characteristic=2 - args.genus,
        mod2_class=Gf2Vector.from_string(bits),
    )
    cover = branched_double_cover(profile, surface)
    print(reports.render_cover_text(cover, consistency_check(cover)))
    return 0


def _cmd_zerosum(args: argparse.Namespace) -> int:
    collection = read_vector_file(args.vectors)
    if args.effort < 0:
        print(f"--effort must be nonnegative, got {args.effort}", file=sys.stderr)
        return 2
    if args.exact:
        cert = max_zero_sum_subset(collection, args.effort)
    else:
        cert = zero_sum_subcollection(collection)
    print(str(cert))
    return 0


def _cmd_massey(args: argparse.Namespace) -> int:
    values = massey_admissible_set(args.genus)
    print(" ".join(str(v) for v in values))
    return 0


_DISPATCH = {
    "catalog": _cmd_catalog,
    "bound": _cmd_bound,
    "check": _cmd_check,
    "audit": _cmd_audit,
    "tube": _cmd_tube,
    "cover": _cmd_cover,
    "zerosum": _cmd_zerosum,
    "massey": _cmd_massey,
}


def run(argv: list[str]) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if isinstance(code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except ExcessKitError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
