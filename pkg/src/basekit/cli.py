"""Command-line front door: ingestion, dispatch, and report emission.

Exit codes: 0 success, 1 hypothesis violation (or a failed verification),
2 budget exhaustion, 3 parse error.  Reports go to stdout as text or JSON;
errors print one machine-parsable line on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import engine, sample, scan
from .catalog import catalog, extend_degree, load_group_text
from .cosets import CosetSpace
from .errors import BudgetError, HypothesisError, ParseError
from .perm import GeneratedGroup, format_cycles
from .structure import SubgroupHandle, core, is_maximal_solvable, is_solvable
from .wreath import WreathSpace, asymmetric_partition, distinct_regular_lifts, lift_regular_point

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_BUDGET = 2
EXIT_PARSE = 3


def resolve_group(source: str, enum_cap: int) -> GeneratedGroup:
    """A group from a file path or a catalog spec."""
    path = Path(source)
    if path.exists():
        g = load_group_text(path.read_text(encoding="utf-8"))
    else:
        g = catalog(source)
    g.enum_cap = enum_cap
    return g


def build_space(args) -> CosetSpace:
    group = resolve_group(args.group, args.enum_cap)
    sub = resolve_group(args.subgroup, args.enum_cap)
    if sub.degree < group.degree:
        sub = extend_degree(sub, group.degree)
    return CosetSpace.build(group, sub)


def emit(args, payload: dict):
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _add_common(p: argparse.ArgumentParser, subgroup: bool = True):
    p.add_argument("--group", required=True, help="group file path or catalog spec")
    if subgroup:
        p.add_argument("--subgroup", required=True, help="subgroup file path or catalog spec")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.add_argument("--enum-cap", type=int, default=10**7, help="group enumeration cap")
    p.add_argument("--scan-budget", type=int, default=engine.DEFAULT_SCAN_BUDGET,
                   help="maximum tuple-space size per scan")
    p.add_argument("--rep-cap", type=int, default=engine.DEFAULT_REP_CAP,
                   help="maximum orbit representatives reported")
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("BASEKIT_THREADS", "1")),
                   help="scan worker count (BASEKIT_THREADS overridable)")


def cmd_base_size(args) -> int:
    space = build_space(args)
    report = engine.base_size(space, scan_budget=args.scan_budget, threads=args.threads)
    emit(args, report.to_dict())
    return EXIT_OK


def cmd_reg_count(args) -> int:
    space = build_space(args)
    report = engine.reg_count(
        space, args.k, scan_budget=args.scan_budget,
        rep_cap=args.rep_cap, threads=args.threads,
    )
    emit(args, report.to_dict())
    return EXIT_OK


def cmd_intersections(args) -> int:
    group = resolve_group(args.group, args.enum_cap)
    sub = resolve_group(args.subgroup, args.enum_cap)
    if sub.degree < group.degree:
        sub = extend_degree(sub, group.degree)
    witnesses = engine.base_by_intersections(group, sub, args.k)
    payload = {
        "k": args.k,
        "found": witnesses is not None,
        "witnesses": [format_cycles(w) for w in witnesses] if witnesses else None,
    }
    emit(args, payload)
    return EXIT_OK


def cmd_partition(args) -> int:
    group = resolve_group(args.group, args.enum_cap)
    coloring = asymmetric_partition(group, seed=args.seed)
    emit(args, coloring.to_dict())
    return EXIT_OK


def cmd_wreath_lift(args) -> int:
    base_group = resolve_group(args.group, args.enum_cap)
    base_sub = resolve_group(args.subgroup, args.enum_cap)
    if base_sub.degree < base_group.degree:
        base_sub = extend_degree(base_sub, base_group.degree)
    top = resolve_group(args.top, args.enum_cap)
    space = CosetSpace.build(base_group, base_sub)
    w = WreathSpace(space, top)
    coloring = asymmetric_partition(top, seed=args.seed)
    want = max(args.lifts, 1)
    need = max(want, coloring.cell_count) if want > 1 else coloring.cell_count
    report = engine.reg_count(
        space, args.k, scan_budget=args.scan_budget,
        rep_cap=max(need, args.rep_cap), threads=args.threads,
    )
    if report.reg_count < need:
        raise HypothesisError(
            f"need {need} regular orbits at k={args.k}, found {report.reg_count}"
        )
    if want > 1:
        lifts = distinct_regular_lifts(w, report.representatives[:want], coloring)
    else:
        lifts = [lift_regular_point(w, report.representatives[:need], coloring)]
    payload = {
        "base_points": space.size,
        "blocks": w.n,
        "product_points": w.product_size,
        "wreath_order": w.order,
        "k": args.k,
        "cells": coloring.cells(),
        "lifts": [
            {
                "product_labels": [p + 1 for p in t],
                "digits": [[d + 1 for d in w.digits(p)] for p in t],
                "certified_regular": True,
            }
            for t in lifts
        ],
        "pairwise_distinct_orbits": len(lifts) > 1,
        "method": "structured-certificates",
    }
    emit(args, payload)
    return EXIT_OK


def cmd_random_base(args) -> int:
    space = build_space(args)
    run = sample.random_base_search(
        space, args.k, trials=args.trials, seed=args.seed,
    )
    emit(args, run.to_dict())
    return EXIT_OK


def cmd_analyze(args) -> int:
    group = resolve_group(args.group, args.enum_cap)
    sub = resolve_group(args.subgroup, args.enum_cap)
    if sub.degree < group.degree:
        sub = extend_degree(sub, group.degree)
    space = CosetSpace.build(group, sub)
    payload: dict = {
        "group_order": group.order,
        "subgroup_order": sub.order,
        "index": space.size,
        "core_order": space.core_order,
        "subgroup_solvable": is_solvable(sub),
    }
    if payload["subgroup_solvable"]:
        handle = SubgroupHandle(group, sub)
        payload["subgroup_maximal_solvable"] = is_maximal_solvable(handle)
    else:
        payload["subgroup_maximal_solvable"] = False
    if space.size == 1:
        payload["trivial_action"] = True
        payload["base_size"] = 0
        emit(args, payload)
        return EXIT_OK
    payload["trivial_action"] = False
    payload["index_lower_bound"] = engine.lower_bound(space.size, space.h_order)
    base_report = engine.base_size(space, scan_budget=args.scan_budget, threads=args.threads)
    payload["base_size"] = base_report.base_size
    payload["base_witness"] = [p + 1 for p in base_report.representatives[0]] if base_report.representatives else None
    for k in (base_report.base_size, base_report.base_size + 1):
        try:
            rep = engine.reg_count(space, k, scan_budget=args.scan_budget,
                                   rep_cap=0, threads=args.threads)
            payload[f"reg_count_at_{k}"] = rep.reg_count
        except BudgetError:
            payload[f"reg_count_at_{k}"] = "budget-exceeded"
    witnesses = engine.base_by_intersections(group, sub, base_report.base_size)
    payload["intersection_witnesses"] = (
        [format_cycles(w) for w in witnesses] if witnesses else None
    )
    emit(args, payload)
    return EXIT_OK


def cmd_verify_examples(args) -> int:
    """Re-derive the two bundled worked scenarios and print PASS/FAIL lines."""
    failures = 0

    def check(label: str, computed, expected_desc: str, ok: bool):
        nonlocal failures
        status = "PASS" if ok else "FAIL"
        if not ok:
            failures += 1
        print(f"[{status}] {label}: computed {computed} (expected {expected_desc})")

    threads = args.threads
    budget = args.scan_budget

    # Scenario A: Sym5 wr Sym2 with the 1152-element solvable subgroup
    g_a = catalog("wreath(sym(5),sym(2))")
    s_a = catalog("wreath(young(4,1),sym(2))")
    space_a = CosetSpace.build(g_a, s_a)
    check("A: coset count for sym5wr2 / 1152-subgroup", space_a.size, "25", space_a.size == 25)
    reg4 = engine.reg_count(space_a, 4, scan_budget=budget, rep_cap=0, threads=threads)
    check("A: regular orbit count at k=4", reg4.reg_count, "0", reg4.reg_count == 0)
    base_a = engine.base_size(space_a, scan_budget=budget, threads=threads)
    check("A: base size", base_a.base_size, "5", base_a.base_size == 5)
    none4 = engine.base_by_intersections(g_a, s_a, 4)
    check("A: four conjugates meeting in the core", "none" if none4 is None else "witness",
          "none", none4 is None)
    wit5 = engine.base_by_intersections(g_a, s_a, 5)
    check("A: five conjugates meeting in the core", "witness" if wit5 else "none",
          "witness", wit5 is not None)
    sym5 = catalog("sym(5)")
    y41 = catalog("young(4,1)")
    space_nat = CosetSpace.build(sym5, y41)
    reg_nat = engine.reg_count(space_nat, 4, scan_budget=budget, rep_cap=1, threads=threads)
    check("A: regular orbit count of sym(5)/young(4,1) at k=4", reg_nat.reg_count, "1",
          reg_nat.reg_count == 1)

    # Scenario B: Sym8 with the same 1152-element subgroup
    g_b = catalog("sym(8)")
    s_b = catalog("young-wreath(4,2)")
    space_b = CosetSpace.build(g_b, s_b)
    check("B: coset count for sym(8) / young-wreath(4,2)", space_b.size, "35", space_b.size == 35)
    lb = engine.lower_bound(space_b.size, space_b.h_order)
    check("B: index lower bound", lb, "3 (strictly below the base)", lb == 3)
    base_b = engine.base_size(space_b, scan_budget=budget, threads=threads)
    check("B: base size", base_b.base_size, "5", base_b.base_size == 5)
    reg5 = engine.reg_count(space_b, 5, scan_budget=budget, rep_cap=0, threads=threads)
    check("B: regular orbit count at k=5", reg5.reg_count, ">= 12", reg5.reg_count >= 12)

    print(f"{'ALL CHECKS PASSED' if failures == 0 else f'{failures} CHECK(S) FAILED'}")
    return EXIT_OK if failures == 0 else EXIT_HYPOTHESIS


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basekit",
        description="Base sizes, regular orbits, asymmetric partitions, and "
                    "wreath-product lifts for desk-scale permutation groups "
                    f"(scan backend: {scan.backend_name()})",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("base-size", help="minimal k admitting a regular k-tuple")
    _add_common(p)
    p.set_defaults(func=cmd_base_size)

    p = subs.add_parser("reg-count", help="regular orbit count on k-tuples")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_reg_count)

    p = subs.add_parser("intersections", help="k conjugates meeting in the core")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_intersections)

    p = subs.add_parser("partition", help="verified asymmetric partition, at most 5 cells")
    _add_common(p, subgroup=False)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_partition)

    p = subs.add_parser("wreath-lift", help="lift base regular tuples into a wreath product")
    _add_common(p)
    p.add_argument("--top", required=True, help="solvable top group spec or file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lifts", type=int, default=1, help="number of distinct-orbit lifts")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_wreath_lift)

    p = subs.add_parser("random-base", help="seeded random search for regular tuples")
    _add_common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=sample.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random_base)

    p = subs.add_parser("verify-examples", help="re-derive the bundled worked scenarios")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.add_argument("--enum-cap", type=int, default=10**7)
    p.add_argument("--scan-budget", type=int, default=engine.DEFAULT_SCAN_BUDGET)
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("BASEKIT_THREADS", "1")))
    p.set_defaults(func=cmd_verify_examples)

    p = subs.add_parser("analyze", help="composite structural and base-size report")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"basekit: error kind=parse msg={e}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisError as e:
        print(f"basekit: error kind=hypothesis msg={e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except BudgetError as e:
        print(f"basekit: error kind=budget msg={e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
