"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 incompatible automorphism.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .character import age, reid_failures
from .curves import (
    CurveError,
    IncompatibleAutomorphism,
    differential_basis,
    eigencharacter,
    format_model,
    genus,
    parse_automorphism,
    parse_model,
)
from .engine import (
    FILTERS,
    UNIVERSES,
    bound_certificate,
    bring_check,
    candidate_table,
    classify_genus,
    group_orders,
    klein_check,
    order_bound,
    verify_cos_lemma,
)
from .report import (
    ReportDocument,
    ages_by_power,
    classification_document,
    group_orders_document,
    rational,
    render,
    table_document,
)

EXIT_OK, EXIT_USAGE, EXIT_INCOMPATIBLE = 0, 2, 3

# row universes of the reference tables; other (genus, order) pairs default to "lefschetz"
DEFAULT_UNIVERSE = {(4, 4): "reid"}


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def _filters(text: str) -> tuple[str, ...]:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [n for n in names if n not in FILTERS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown filters {bad}; choose from {', '.join(FILTERS)}")
    return names


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jacquot", description="Uniruledness of Jacobian quotients by cyclic automorphism groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify cyclic actions for one genus")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--order", type=int)
    c.add_argument("--filters", type=_filters, default=FILTERS, help=f"enabled filters (default: {','.join(FILTERS)})")
    c.add_argument("--all-verdicts", action="store_true", help="list every candidate, not only realizable ones")

    t = sub.add_parser("tables", parents=[common], help="intermediate candidate table for (genus, order)")
    t.add_argument("--genus", type=int, required=True)
    t.add_argument("--order", type=int, required=True)
    t.add_argument("--universe", choices=UNIVERSES)
    t.add_argument("--full-universe", action="store_true", help="same as --universe full")

    v = sub.add_parser("verify-curve", parents=[common], help="eigenvalues of a monomial automorphism of y^m = f(x)")
    v.add_argument("model", help="e.g. 'y^3 = x(x^5-1)'")
    v.add_argument("automorphism", help="e.g. '(z^3*x, z*y) @ N=15'")

    g = sub.add_parser("group-orders", parents=[common], help="which element orders could give a uniruled quotient")
    g.add_argument("--genus", type=int)
    g.add_argument("--orders", type=_int_list)
    g.add_argument("--group", choices=("bring", "klein"), help="run the full check for a named curve")

    b = sub.add_parser("check-bound", parents=[common], help="certify the large-genus bound")
    b.add_argument("--genus", type=int, required=True)
    b.add_argument("--step", type=_fraction, default=Fraction(1, 10_000))
    return p


def cmd_classify(args) -> ReportDocument:
    if not 2 <= args.genus <= 6:
        raise UsageError(f"--genus must be in 2..6, got {args.genus}")
    orders = None
    if args.order is not None:
        if not 2 <= args.order <= order_bound(args.genus):
            raise UsageError(f"--order must be in 2..{order_bound(args.genus)} for genus {args.genus}")
        orders = [args.order]
    report = classify_genus(args.genus, args.filters)
    echo = {"genus": args.genus, "order": args.order, "filters": list(args.filters)}
    return classification_document(report, echo, orders, args.all_verdicts)


def cmd_tables(args) -> ReportDocument:
    if args.genus < 2 or not 2 <= args.order <= order_bound(args.genus):
        raise UsageError(f"need genus >= 2 and 2 <= order <= 4g+2, got genus {args.genus}, order {args.order}")
    universe = "full" if args.full_universe else args.universe
    universe = universe or DEFAULT_UNIVERSE.get((args.genus, args.order), "lefschetz")
    rows = candidate_table(args.genus, args.order, universe)
    echo = {"genus": args.genus, "order": args.order, "universe": universe}
    return table_document(args.genus, args.order, universe, rows, echo)


def cmd_verify_curve(args) -> ReportDocument:
    curve = parse_model(args.model)
    auto, auto_text = parse_automorphism(args.automorphism)
    chi = eigencharacter(curve, auto)
    notes = []
    if auto.exact_order != auto.order:
        notes.append(f"the map has exact order {auto.exact_order} on the curve, not {auto.order}")
    fails = reid_failures(chi)
    results = {
        "model": format_model(curve),
        "automorphism": auto_text,
        "genus": genus(curve),
        "basis": [str(w) for w in differential_basis(curve)],
        "exponents": list(chi.exponents),
        "ages": ages_by_power(chi),
        "age": rational(age(chi)),
        "reid_failures": fails,
        "uniruled": bool(fails),
    }
    echo = {"model": args.model, "automorphism": args.automorphism}
    return ReportDocument("verify-curve", echo, results, [], notes)


def cmd_group_orders(args) -> ReportDocument:
    check = None
    if args.group:
        check = bring_check() if args.group == "bring" else klein_check()
        genus_, orders = (4, (1, 2, 3, 4, 5, 6)) if args.group == "bring" else (3, (1, 2, 3, 4, 7))
        if args.genus is not None and args.genus != genus_:
            raise UsageError(f"--group {args.group} lives in genus {genus_}")
        if args.orders is not None and set(args.orders) != set(orders):
            raise UsageError(f"--group {args.group} has element orders {list(orders)}")
    else:
        if args.genus is None or args.orders is None:
            raise UsageError("group-orders needs --genus and --orders (or --group)")
        genus_, orders = args.genus, tuple(args.orders)
        if not 2 <= genus_ <= 6:
            raise UsageError(f"--genus must be in 2..6, got {genus_}")
        if not orders or any(o < 1 for o in orders):
            raise UsageError(f"--orders must be positive integers, got {list(orders)}")
    res = group_orders(genus_, orders)
    echo = {"genus": genus_, "orders": list(orders), "group": args.group}
    return group_orders_document(res, check, echo)


def cmd_check_bound(args) -> ReportDocument:
    if args.genus < 2:
        raise UsageError(f"--genus must be at least 2, got {args.genus}")
    if args.step <= 0:
        raise UsageError(f"--step must be positive, got {args.step}")
    cert = bound_certificate(args.genus)
    lemma = verify_cos_lemma(args.step)
    results = {
        "genus": args.genus,
        "status": cert.status,
        "threshold_low": str(cert.threshold_low),
        "threshold_high": str(cert.threshold_high),
        "cos_lemma": {
            "step": rational(lemma.step),
            "end": rational(lemma.end),
            "monotone_until": str(lemma.monotone_until),
            "grid_minimum": str(lemma.grid_minimum),
            "slack": str(lemma.slack),
            "critical_values": [str(v) for v in lemma.critical_values],
            "margin": str(lemma.margin),
            "certified": lemma.certified,
        },
    }
    notes = []
    if not cert.certified:
        notes.append(f"genus {args.genus} is below the threshold; run 'classify --genus {args.genus}' for the exhaustive sweep")
    return ReportDocument("check-bound", {"genus": args.genus, "step": rational(args.step)}, results, [], notes)


COMMANDS = {
    "classify": cmd_classify,
    "tables": cmd_tables,
    "verify-curve": cmd_verify_curve,
    "group-orders": cmd_group_orders,
    "check-bound": cmd_check_bound,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc = COMMANDS[args.command](args)
    except IncompatibleAutomorphism as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except (UsageError, CurveError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
