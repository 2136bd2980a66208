"""Batch command-line front end.

Subcommands: front, check, variant, ordertype, solve, reduce, diag.  Every
command is deterministic given its arguments (plus --seed where random
instances are requested) and prints either a human-readable summary or, with
--json, a machine-readable report validating against docs/schemas/.

Exit codes: 0 clean, 1 violations or counterexamples found, 2 usage errors,
3 internal invariant violations (reports tagged BUG).

Barrier arguments accept shorthand (``schreier``, ``exact:3``,
``canonical:w^2``), inline JSON, or a path to a JSON file.  Ground sets are
half-open ranges ``a..b`` (so ``0..6`` means 0,1,2,3,4,5) or comma lists.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import __version__
from .barrier import (
    BarrierSpec,
    InternalInvariantError,
    OrderTypeUnsupportedError,
    check_sperner,
    classify,
    density_probe,
    front,
    order_type,
    spec_label,
    variant,
)
from .coloring import Coloring
from .diag import StagedColoring, rainbow_defeater, thin_defeater, verify_defeat_rainbow, verify_defeat_thin
from .jsonio import coloring_from_json, family_from_json, spec_from_json
from .ordinals import parse_ordinal
from .reduction import REDUCTIONS, adversarial_instances, check_reduction, random_instance
from .solver import PROPERTIES, default_universe, find
from .seqs import as_seq

__all__ = ["main"]


class UsageError(ValueError):
    pass


def _load_json_arg(text: str) -> Any:
    text = text.strip()
    if text.startswith(("{", "[", '"')):
        return json.loads(text)
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    return text  # shorthand string


def parse_barrier_arg(text: str) -> BarrierSpec:
    try:
        return spec_from_json(_load_json_arg(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad barrier {text!r}: {exc}")


def parse_ground_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return tuple(range(int(lo), int(hi)))
        return tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError as exc:
        raise UsageError(f"bad ground set {text!r}: {exc}")


def parse_seq_arg(text: str) -> tuple[int, ...]:
    try:
        return as_seq(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad sequence {text!r}: {exc}")


# --- commands ---------------------------------------------------------------


def cmd_front(args: argparse.Namespace) -> tuple[dict, int, str]:
    spec = parse_barrier_arg(args.barrier)
    ground = parse_ground_arg(args.ground)
    members = front(spec, ground)
    report = {
        "command": "front",
        "barrier": spec_label(spec),
        "ground": list(ground),
        "count": len(members),
        "elements": [list(s) for s in members],
    }
    lines = [f"front of {report['barrier']} on {list(ground)}: {len(members)} members"]
    lines += [f"  {tuple(s)}" for s in members]
    return report, 0, "\n".join(lines)


def cmd_check(args: argparse.Namespace) -> tuple[dict, int, str]:
    spec = parse_barrier_arg(args.barrier)
    ground = parse_ground_arg(args.ground)
    members = front(spec, ground)
    sperner_ok = check_sperner(members)
    density = density_probe(spec, ground)
    ok = sperner_ok and not density.violations
    report = {
        "command": "check",
        "barrier": spec_label(spec),
        "ground": list(ground),
        "front_size": len(members),
        "sperner_ok": sperner_ok,
        "density": density.to_json(),
    }
    text = (
        f"barrier {report['barrier']} on {list(ground)}: front={len(members)} "
        f"sperner={'ok' if sperner_ok else 'VIOLATED'} "
        f"density: hit={density.hit} inconclusive={density.inconclusive} "
        f"violations={len(density.violations)}"
    )
    return report, 0 if ok else 1, text


def cmd_variant(args: argparse.Namespace) -> tuple[dict, int, str]:
    spec = parse_barrier_arg(args.barrier)
    seq = parse_seq_arg(args.seq)
    try:
        out = variant(spec, seq, args.k)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc))
    report = {
        "command": "variant",
        "barrier": spec_label(spec),
        "seq": list(seq),
        "k": args.k,
        "variant": list(out),
    }
    return report, 0, f"{args.k}-variant of {seq}: {out}"


def cmd_ordertype(args: argparse.Namespace) -> tuple[dict, int, str]:
    spec = parse_barrier_arg(args.barrier)
    try:
        ot = order_type(spec)
    except OrderTypeUnsupportedError as exc:
        raise UsageError(str(exc))
    report = {"command": "ordertype", "barrier": spec_label(spec), "order_type": str(ot)}
    return report, 0, str(ot)


def cmd_solve(args: argparse.Namespace) -> tuple[dict, int, str]:
    spec = parse_barrier_arg(args.barrier)
    ground = parse_ground_arg(args.ground)
    f = coloring_from_json(spec, _load_json_arg(args.coloring))
    witness = find(args.property, f, ground, args.min_size)
    report = {
        "command": "solve",
        "barrier": spec_label(spec),
        "property": args.property,
        "ground": list(ground),
        "min_size": args.min_size,
        "witness": witness.to_json() if witness else None,
    }
    text = f"{args.property} witness: {witness.h if witness else 'none'}"
    return report, 0, text


def cmd_reduce(args: argparse.Namespace) -> tuple[dict, int, str]:
    if args.name not in REDUCTIONS:
        raise UsageError(f"unknown reduction {args.name!r}; pick from {sorted(REDUCTIONS)}")
    red = REDUCTIONS[args.name]
    spec = parse_barrier_arg(args.barrier)
    ground = parse_ground_arg(args.ground)

    instances: list[Coloring] = []
    if args.random:
        for idx in range(args.random):
            instances.append(random_instance(red, spec, ground, seed=args.seed * 100003 + idx))
        if args.adversarial:
            instances.extend(adversarial_instances(red, spec, ground))
    elif args.coloring:
        instances.append(coloring_from_json(spec, _load_json_arg(args.coloring)))
    else:
        raise UsageError("reduce needs --coloring or --random N")

    if not args.check:
        f = instances[0]
        g = red.forward(spec, f)
        tg = red.target_ground(tuple(x for x in ground))
        table = [[list(s), g(s)] for s in front(g.barrier, tg)]
        report = {
            "command": "reduce",
            "name": red.name,
            "barrier": spec_label(spec),
            "target_barrier": spec_label(g.barrier),
            "ground": list(ground),
            "forward_table": table,
        }
        lines = [f"{red.name} forward instance on {spec_label(g.barrier)}:"]
        lines += [f"  {tuple(row[0])} -> {row[1]}" for row in table]
        return report, 0, "\n".join(lines)

    reports = [check_reduction(red, f, ground, args.min_size) for f in instances]
    total_cex = sum(len(r.counterexamples) for r in reports)
    report = {
        "command": "reduce",
        "name": red.name,
        "barrier": spec_label(spec),
        "ground": list(ground),
        "min_size": args.min_size,
        "seed": args.seed if args.random else None,
        "instances": len(reports),
        "checked_witnesses": sum(r.checked_witnesses for r in reports),
        "counterexamples": [c for r in reports for c in r.counterexamples],
        "max_recursion_chain": max((r.max_recursion_chain for r in reports), default=0),
    }
    text = (
        f"{red.name} on {spec_label(spec)}: {len(reports)} instances, "
        f"{report['checked_witnesses']} witnesses checked, "
        f"{total_cex} counterexamples, max chain {report['max_recursion_chain']}"
    )
    return report, 0 if total_cex == 0 else 1, text


def _parse_verify(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        out[key.strip()] = int(value)
    return out


def cmd_diag(args: argparse.Namespace) -> tuple[dict, int, str]:
    alpha = parse_ordinal(args.alpha)
    family = family_from_json(_load_json_arg(args.family))
    col: StagedColoring = (thin_defeater if args.kind == "thin" else rainbow_defeater)(alpha, family)
    params = _parse_verify(args.verify)
    if "e" not in params:
        raise UsageError("--verify needs e=<index>")
    if args.kind == "thin":
        if "i" not in params:
            raise UsageError("thin verification needs i=<color>")
        result = verify_defeat_thin(col, params["e"], params["i"], args.bound)
    else:
        result = verify_defeat_rainbow(col, params["e"], args.bound)
    report = {
        "command": "diag",
        "kind": args.kind,
        "alpha": str(alpha),
        "verify": params,
        "bound": args.bound,
        "result": result.to_json(),
    }
    if result.is_bug:
        return report, 3, f"BUG: {result.reason}"
    text = f"defeat witness: {result.found}" if result.ok else f"none ({result.reason})"
    return report, 0, text


# --- wiring -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="barriers", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"barriers {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a machine-readable report")

    p = sub.add_parser("front", help="list the members inside a finite ground set")
    p.add_argument("--barrier", required=True)
    p.add_argument("--ground", required=True, help="a..b (half-open) or comma list")
    add_common(p)
    p.set_defaults(fn=cmd_front)

    p = sub.add_parser("check", help="probe the Sperner and Density properties")
    p.add_argument("--barrier", required=True)
    p.add_argument("--ground", required=True)
    add_common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("variant", help="the k-variant of a member")
    p.add_argument("--barrier", required=True)
    p.add_argument("--seq", required=True, help="comma list, e.g. 2,4,5")
    p.add_argument("--k", required=True, type=int)
    add_common(p)
    p.set_defaults(fn=cmd_variant)

    p = sub.add_parser("ordertype", help="symbolic order type")
    p.add_argument("--barrier", required=True)
    add_common(p)
    p.set_defaults(fn=cmd_ordertype)

    p = sub.add_parser("solve", help="search for a solution set on a finite ground set")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--barrier", required=True)
    p.add_argument("--coloring", required=True, help="JSON (inline or path)")
    p.add_argument("--ground", required=True)
    p.add_argument("--min-size", type=int, default=1)
    add_common(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("reduce", help="apply or exhaustively check a reduction")
    p.add_argument("--name", required=True)
    p.add_argument("--barrier", required=True)
    p.add_argument("--coloring", help="JSON (inline or path)")
    p.add_argument("--ground", required=True)
    p.add_argument("--check", action="store_true", help="validate solutions exhaustively")
    p.add_argument("--min-size", type=int, default=3)
    p.add_argument("--random", type=int, default=0, metavar="N", help="check N seeded random instances")
    p.add_argument("--adversarial", action="store_true", help="add the stress instances")
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("diag", help="verify a diagonalizing coloring defeats a declared set")
    p.add_argument("--kind", required=True, choices=("thin", "rainbow"))
    p.add_argument("--alpha", required=True, help="ordinal, e.g. w")
    p.add_argument("--family", required=True, help="JSON (inline or path)")
    p.add_argument("--verify", required=True, help="e=0 or e=0,i=2")
    p.add_argument("--bound", type=int, default=16, help="cap on the stage minimum")
    add_common(p)
    p.set_defaults(fn=cmd_diag)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code, text = args.fn(args)
    except InternalInvariantError as exc:
        print(json.dumps({"BUG": str(exc)}, sort_keys=True))
        return 3
    except (UsageError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
