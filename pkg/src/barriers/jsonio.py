"""JSON forms of barrier specs, ground sets, colorings and oracle families.

Barrier specs are tagged constructor trees with ordinals as text; shorthand
strings (``schreier``, ``exact:N``, ``canonical:ORD``) are accepted anywhere
a spec is expected, including inside trees, e.g. ``{"plus": "schreier"}``.
Matching JSON Schemas ship under docs/schemas/.
"""

from __future__ import annotations

from typing import Any

from .barrier import (
    BarrierSpec,
    Canonical,
    Derived,
    ExactSize,
    Plus,
    Product,
    Restrict,
    Schreier,
    make_derived,
    make_product,
    make_restrict,
)
from .coloring import Coloring, builtin_coloring, table_coloring
from .diag import OracleEntry, OracleFamily
from .ordinals import parse_ordinal
from .seqs import GroundSet, Tail, as_seq

__all__ = [
    "spec_to_json",
    "spec_from_json",
    "ground_to_json",
    "ground_from_json",
    "coloring_from_json",
    "family_to_json",
    "family_from_json",
]


def spec_to_json(spec: BarrierSpec) -> Any:
    match spec:
        case ExactSize(n):
            return {"exact": n}
        case Schreier():
            return "schreier"
        case Canonical(index):
            return {"canonical": str(index)}
        case Product(left, right):
            return {"product": [spec_to_json(left), spec_to_json(right)]}
        case Plus(inner):
            return {"plus": spec_to_json(inner)}
        case Derived(inner, n):
            return {"derived": {"inner": spec_to_json(inner), "n": n}}
        case Restrict(inner, base):
            return {"restrict": {"inner": spec_to_json(inner), "base": ground_to_json(base)}}
    raise TypeError(f"not a barrier spec: {spec!r}")


def _spec_from_shorthand(text: str) -> BarrierSpec:
    if text == "schreier":
        return Schreier()
    if text.startswith("exact:"):
        return ExactSize(int(text.split(":", 1)[1]))
    if text.startswith("canonical:"):
        return Canonical(parse_ordinal(text.split(":", 1)[1]))
    raise ValueError(f"unknown barrier shorthand {text!r}")


def spec_from_json(obj: Any) -> BarrierSpec:
    if isinstance(obj, str):
        return _spec_from_shorthand(obj)
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"a barrier spec is a shorthand string or a one-key object, got {obj!r}")
    (tag, value), = obj.items()
    if tag == "exact":
        return ExactSize(int(value))
    if tag == "schreier":
        return Schreier()
    if tag == "canonical":
        return Canonical(parse_ordinal(value))
    if tag == "product":
        left, right = value
        return make_product(spec_from_json(left), spec_from_json(right))
    if tag == "plus":
        return Plus(spec_from_json(value))
    if tag == "derived":
        return make_derived(spec_from_json(value["inner"]), int(value["n"]))
    if tag == "restrict":
        return make_restrict(spec_from_json(value["inner"]), ground_from_json(value["base"]))
    raise ValueError(f"unknown barrier constructor {tag!r}")


def ground_to_json(g: GroundSet) -> dict:
    out: dict = {"prefix": list(g.prefix)}
    if g.tail is not None:
        out["tail"] = {"start": g.tail.start, "step": g.tail.step}
    return out


def ground_from_json(obj: Any) -> GroundSet:
    if isinstance(obj, list):
        return GroundSet.of(int(x) for x in obj)
    tail = None
    if obj.get("tail") is not None:
        tail = Tail(int(obj["tail"]["start"]), int(obj["tail"].get("step", 1)))
    return GroundSet(prefix=tuple(int(x) for x in obj.get("prefix", ())), tail=tail)


def coloring_from_json(barrier: BarrierSpec, obj: Any) -> Coloring:
    """{"table": [[seq, color], ...]} or {"builtin": name, "params": {...}},
    optionally with "bound": k declared on either form."""
    if not isinstance(obj, dict):
        raise ValueError(f"a coloring is an object, got {obj!r}")
    bound = obj.get("bound")
    bound = int(bound) if bound is not None else None
    if "table" in obj:
        table = {as_seq(int(x) for x in row[0]): int(row[1]) for row in obj["table"]}
        return table_coloring(barrier, table, declared_bound=bound)
    if "builtin" in obj:
        f = builtin_coloring(barrier, obj["builtin"], obj.get("params"))
        if bound is not None:
            f.declared_bound = bound
        return f
    raise ValueError("a coloring needs a 'table' or a 'builtin' key")


def family_to_json(fam: OracleFamily) -> list:
    return [
        {"e": entry.e, "set": ground_to_json(entry.members), "delay": entry.delay}
        for entry in fam.entries
    ]


def family_from_json(obj: Any) -> OracleFamily:
    entries = [
        OracleEntry(e=int(row["e"]), members=ground_from_json(row["set"]), delay=int(row.get("delay", 0)))
        for row in obj
    ]
    return OracleFamily.of(entries)
