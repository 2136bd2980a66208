#!/usr/bin/env python3
"""Census of the stock barrier constructors on a finite ground set.

For each spec: front size, symbolic order type, Sperner check and the
density probe.  Handy for eyeballing how the families grow.

    python scripts/barrier_census.py --top 12
"""

from __future__ import annotations

import argparse

from barriers.barrier import (
    Canonical,
    Derived,
    ExactSize,
    OrderTypeUnsupportedError,
    Plus,
    Product,
    Schreier,
    check_sperner,
    density_probe,
    front,
    order_type,
    spec_label,
)
from barriers.ordinals import parse_ordinal


def stock_specs():
    out = [ExactSize(n) for n in (1, 2, 3)]
    out.append(Schreier())
    out += [Canonical(parse_ordinal(a)) for a in ("0", "1", "2", "3", "w", "w + 1", "w*2", "w^2", "w^w")]
    out += [Plus(Schreier()), Product(ExactSize(1), Schreier()), Derived(Schreier(), 2)]
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--top", type=int, default=12, help="ground set is [0..top]")
    args = ap.parse_args()
    ground = range(args.top + 1)

    header = f"{'spec':30s} {'front':>6s} {'order type':>12s} {'sperner':>8s} {'hit':>6s} {'inc':>6s} {'viol':>5s}"
    print(header)
    print("-" * len(header))
    for spec in stock_specs():
        members = front(spec, ground)
        try:
            ot = str(order_type(spec))
        except OrderTypeUnsupportedError:
            ot = "-"
        probe = density_probe(spec, ground)
        print(
            f"{spec_label(spec):30s} {len(members):6d} {ot:>12s} "
            f"{'ok' if check_sperner(members) else 'BAD':>8s} "
            f"{probe.hit:6d} {probe.inconclusive:6d} {len(probe.violations):5d}"
        )


if __name__ == "__main__":
    main()
