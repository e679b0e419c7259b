#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the pure-Python fallback.

Runs the stabilizer-reduced regular-tuple count on the bundled scenarios and
reports wall times plus the speedup.  Results must be identical; the script
exits nonzero if they ever disagree.

Usage: python benchmarks/bench_scan.py [--scenario small|large] [--threads N]
"""

import argparse
import time

from basekit import _scan_py, catalog, scan
from basekit.cosets import CosetSpace

SCENARIOS = {
    "small": ("wreath(sym(5),sym(2))", "wreath(young(4,1),sym(2))", 4),
    "large": ("sym(8)", "young-wreath(4,2)", 5),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenario", choices=sorted(SCENARIOS), default="large")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    group_spec, sub_spec, k = SCENARIOS[args.scenario]
    print(f"scenario: {group_spec} / {sub_spec}, k = {k}")
    space = CosetSpace.build(catalog(group_spec), catalog(sub_spec))
    stabs = space.stab_words_h
    depth = k - 1
    print(
        f"points: {space.size}, stabilizer order: {space.h_order}, "
        f"tail space: {space.size}**{depth} = {space.size**depth}"
    )

    t0 = time.perf_counter()
    pure = _scan_py.count_regular(stabs, depth)
    t_pure = time.perf_counter() - t0
    print(f"pure      : count={pure[0]:>12} nodes={pure[1]:>12}  {t_pure * 1000:9.1f} ms")

    if scan.backend_name() != "compiled":
        print("compiled  : extension not built (pip install -e . rebuilds it)")
        return 0

    t0 = time.perf_counter()
    comp = scan.count_regular(stabs, depth, threads=args.threads)
    t_comp = time.perf_counter() - t0
    print(
        f"compiled  : count={comp[0]:>12} nodes={comp[1]:>12}  {t_comp * 1000:9.1f} ms"
        f"  (threads={args.threads})"
    )
    if comp != pure:
        print("MISMATCH between backends")
        return 1
    print(f"speedup   : {t_pure / t_comp:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
