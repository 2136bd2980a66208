#!/usr/bin/env python3
"""Seeded sweep of all five reductions over a barrier pool.

Runs the exhaustive finite checker on random and stress instances and prints
a per-arm summary; exits nonzero on any counterexample.

    python scripts/reduction_sweep.py --instances 25 --seed 7 --top 8
"""

from __future__ import annotations

import argparse
import sys
import time

from barriers.barrier import Canonical, ExactSize, Schreier, spec_label
from barriers.ordinals import OMEGA
from barriers.reduction import adversarial_instances, check_reduction, random_instance

ARMS = (
    ("fs-to-rt", None),
    ("ts-to-rt", None),
    ("ts-to-fs", None),
    ("rrt-to-rt", 2),
    ("rrt-to-rt", 3),
    ("rrt2-to-fs", None),
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=25, help="random instances per arm")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--top", type=int, default=8, help="ground set is [0..top]")
    ap.add_argument("--min-size", type=int, default=3)
    args = ap.parse_args()

    ground = range(args.top + 1)
    pool = [ExactSize(1), ExactSize(2), Schreier(), Canonical(OMEGA)]
    bad = 0
    t0 = time.time()
    for arm_idx, (name, bound) in enumerate(ARMS):
        for b_idx, spec in enumerate(pool):
            instances = [
                random_instance(name, spec, ground, seed=args.seed + 7919 * arm_idx + 101 * b_idx + i, bound=bound)
                for i in range(args.instances)
            ]
            instances += adversarial_instances(name, spec, ground, bound=bound)
            cex = checked = chain = 0
            for f in instances:
                rep = check_reduction(name, f, ground, args.min_size)
                cex += len(rep.counterexamples)
                checked += rep.checked_witnesses
                chain = max(chain, rep.max_recursion_chain)
            bad += cex
            label = name if bound is None else f"{name}:k{bound}"
            print(
                f"{label:14s} {spec_label(spec):14s} instances={len(instances):3d} "
                f"witnesses={checked:6d} counterexamples={cex} max_chain={chain}"
            )
    print(f"done in {time.time() - t0:.1f}s, {bad} counterexamples")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
