"""Command-line front end.

Exit codes: 0 every assertion passed, 1 an assertion failed, 2 an input
file could not be parsed, 3 the request exceeds the order cap.
"""

import argparse
import sys
from pathlib import Path

from .cayley import (
    check_derived_identities,
    check_homomorphism,
    promote_to_ag_group,
    subgroup,
)
from .errors import AGFuzzError, NotAGGroup, OrderCapExceeded, ParseError, PreconditionFailed
from .formats import (
    format_table_stream,
    parse_grades,
    parse_table,
    quotient_dict,
)
from .fuzzy import fuzzy_subset, is_fuzzy_ag_subgroup, is_normal, level_set, pullback
from .grades import format_grade
from .quotients import (
    build_crisp_quotient,
    build_quotient_by_mu,
    fuzzy_coset,
    fuzzy_lagrange,
)
from .report import Check, Report, emit_report
from .search import CAP_ENV, EnumerationTask, enumerate_ag_groups, population_sweep
from .suite import select

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INFEASIBLE = 0, 1, 2, 3


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _load_group(path):
    t = parse_table(_read(path))
    return promote_to_ag_group(t)


def _load_mu(g, path):
    return fuzzy_subset(g, parse_grades(_read(path), g.order), label=Path(path).name)


def _int_list(text):
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"expected comma separated integers, got {text!r}") from None


def _order_range(text):
    if "-" in text:
        lo, hi = text.split("-", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def cmd_check_group(args):
    report = Report("check-group")
    t = parse_table(_read(args.table))
    try:
        g = promote_to_ag_group(t)
    except NotAGGroup as exc:
        report.info["summary"] = f"AG-group: no ({type(exc).__name__})"
        report.add(Check("ag-group-axioms", args.table, False, exc.witness,
                         {"error": type(exc).__name__}))
        return report
    selfinv = [x for x in g.elements if g.inv(x) == x]
    desc = "all" if len(selfinv) == g.order else ",".join(map(str, selfinv)) or "none"
    report.info["summary"] = f"AG-group: yes, e={g.identity}, self-inverse: {desc}"
    report.info["inverse"] = list(g.inverse)
    report.info["commutative"] = g.table.is_commutative()
    report.add(Check("ag-group-axioms", args.table, True))
    for name, w in check_derived_identities(g).violations.items():
        report.add(Check(f"identity:{name}", args.table, w is None, w))
    return report


def cmd_check_fuzzy(args):
    g = _load_group(args.table)
    mu = _load_mu(g, args.grades)
    report = Report("check-fuzzy")
    ok, w = is_fuzzy_ag_subgroup(mu)
    report.add(Check("fuzzy-ag-subgroup", mu.describe(), ok, w))
    if not ok:
        return report
    report.info["level_set"] = list(level_set(mu).members)
    if args.normal:
        normal, nw = is_normal(mu, check_pre=False)
        report.info["normal"] = "yes" if normal else "NO"
        if not normal:
            report.info["normal_witness"] = list(nw)
    return report


def cmd_cosets(args):
    g = _load_group(args.table)
    mu = _load_mu(g, args.grades)
    report = Report("cosets")
    ok, w = is_fuzzy_ag_subgroup(mu)
    report.add(Check("fuzzy-ag-subgroup", mu.describe(), ok, w))
    if ok:
        report.info["cosets"] = {
            str(x): [format_grade(t) for t in fuzzy_coset(mu, x).grades] for x in g.elements}
    return report


def cmd_quotient(args):
    g = _load_group(args.table)
    mu = _load_mu(g, args.grades)
    report = Report("quotient")
    try:
        q = build_quotient_by_mu(mu)
    except AGFuzzError as exc:
        report.add(Check("quotient", mu.describe(), False, exc.witness,
                         {"error": type(exc).__name__}))
        return report
    report.info["quotient"] = quotient_dict(q)
    report.info["left_identity_class"] = q.group.identity
    report.add(Check("quotient", mu.describe(), True))
    return report


def cmd_crisp_quotient(args):
    g = _load_group(args.table)
    report = Report("crisp-quotient")
    h = subgroup(g, _int_list(args.subgroup))
    q = build_crisp_quotient(g, h)
    report.info["quotient"] = quotient_dict(q)
    report.add(Check("crisp-quotient", f"H={list(h.members)}", True))
    return report


def cmd_lagrange(args):
    g = _load_group(args.table)
    mu = _load_mu(g, args.grades)
    report = Report("lagrange")
    check = fuzzy_lagrange(mu)
    d = check.detail
    idx = d["index"] if d["index"] is not None else d["coset_count"]
    verb = "divides" if d["divides"] else "does not divide"
    report.info["summary"] = f"index {idx} {verb} order {d['order']}"
    report.info["quotient_well_defined"] = d["quotient_well_defined"]
    report.add(check)
    return report


def cmd_pullback(args):
    src = _load_group(args.source)
    dst = _load_group(args.target)
    f = check_homomorphism(_int_list(args.map), src, dst)
    mu = _load_mu(dst, args.grades)
    report = Report("pullback")
    try:
        out = pullback(f, mu)
    except PreconditionFailed as exc:
        report.add(Check("thm-pullback-normal", mu.describe(), False, exc.witness,
                         {"error": "PreconditionFailed"}))
        return report
    report.info["grades"] = [format_grade(t) for t in out.grades]
    report.add(Check("thm-pullback-normal", mu.describe(), True))
    return report


def cmd_sweep(args):
    suite = select(args.theorems.split(",") if args.theorems else None)
    orders = _order_range(args.orders)
    for n in orders:
        EnumerationTask(n)  # validates
    sweep = population_sweep(suite, orders, keep_records=True)
    report = Report("sweep")
    report.info["groups_per_order"] = {str(k): v for k, v in sorted(sweep.groups.items())}
    report.info["instances"] = sweep.instances
    report.info["counts"] = sweep.summary()
    report.info["note"] = "group counts are produced by this enumerator"
    report.add(sweep.records)
    return report


def cmd_enumerate(args):
    mode = {"ag-groups": "ag_groups", "ag-groupoids": "ag_groupoids_with_left_identity"}[args.mode]
    task = EnumerationTask(args.order, mode, args.canonical)
    items = list(enumerate_ag_groups(task, allow_large=args.allow_large))
    tables = [getattr(x, "table", x) for x in items]
    text = format_table_stream(tables)
    if args.out:
        Path(args.out).write_text(text)
    report = Report("enumerate")
    report.info["order"] = args.order
    report.info["mode"] = args.mode
    report.info["canonical"] = args.canonical
    report.info["count"] = len(tables)
    report.info["note"] = "count produced by this enumerator"
    if not args.out:
        report.info["tables"] = [t.tolist() for t in tables]
    return report


def build_parser():
    p = argparse.ArgumentParser(prog="agfuzz", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-group", help="verify the AG-group axioms of a table")
    s.add_argument("table")
    s.set_defaults(func=cmd_check_group)

    for name, func, help_ in (
        ("check-fuzzy", cmd_check_fuzzy, "fuzzy AG-subgroup and normality predicates"),
        ("cosets", cmd_cosets, "list every fuzzy coset"),
        ("quotient", cmd_quotient, "build G/mu"),
        ("lagrange", cmd_lagrange, "fuzzy Lagrange check"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("table")
        s.add_argument("grades")
        if name == "check-fuzzy":
            s.add_argument("--normal", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("crisp-quotient", help="build G/H for an AG-subgroup H")
    s.add_argument("table")
    s.add_argument("--subgroup", required=True, help="comma separated members")
    s.set_defaults(func=cmd_crisp_quotient)

    s = sub.add_parser("pullback", help="pull a normal fuzzy subgroup back along f")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("grades", help="grades over the target group")
    s.add_argument("--map", required=True, help="comma separated images f(0), f(1), ...")
    s.set_defaults(func=cmd_pullback)

    s = sub.add_parser("sweep", help="run theorem checks over all small AG-groups")
    s.add_argument("--orders", default="1-4", help="e.g. 1-5")
    s.add_argument("--theorems", default="", help="comma separated subset of the suite")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("enumerate", help=f"enumerate AG-groups (cap via ${CAP_ENV})")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--mode", choices=("ag-groups", "ag-groupoids"), default="ag-groups")
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--allow-large", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)
    return p


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except OrderCapExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParseError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotAGGroup as exc:
        print(f"input is not an AG-group: {exc}", file=sys.stderr)
        return EXIT_PARSE
    stdout.write(emit_report(report, args.format))
    return EXIT_OK if report.ok else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
