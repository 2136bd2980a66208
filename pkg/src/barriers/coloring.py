"""Colorings of barrier members.

A coloring assigns a natural number to every member of a barrier that tests
will ever query.  Colorings come from finite tables (raising on anything
outside the table) or from named builtin rules, and may declare a bound k
meaning no color value is taken more than k times; the bound is checked
where it matters, never assumed.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Mapping

from .barrier import BarrierSpec, enum_rank, front
from .seqs import Seq, as_seq

__all__ = [
    "Coloring",
    "PartialColoringError",
    "BoundViolationError",
    "table_coloring",
    "builtin_coloring",
    "BUILTIN_COLORINGS",
    "color_usage",
    "check_bounded",
]


class PartialColoringError(KeyError):
    """The coloring was queried outside its table."""


class BoundViolationError(ValueError):
    """A declared k-bound was violated on a queried front."""


class Coloring:
    def __init__(
        self,
        barrier: BarrierSpec,
        rule: Callable[[Seq], int],
        name: str = "custom",
        declared_bound: int | None = None,
        colors: tuple[int, ...] | None = None,
    ):
        self.barrier = barrier
        self.rule = rule
        self.name = name
        self.declared_bound = declared_bound
        self.colors = colors  # optional declared color universe

    def __call__(self, s: Iterable[int]) -> int:
        return self.rule(as_seq(s))

    def __repr__(self) -> str:
        return f"Coloring({self.name!r})"


def table_coloring(
    barrier: BarrierSpec,
    table: Mapping[Seq, int],
    name: str = "table",
    declared_bound: int | None = None,
) -> Coloring:
    fixed = {as_seq(k): int(v) for k, v in table.items()}

    def rule(s: Seq) -> int:
        try:
            return fixed[s]
        except KeyError:
            raise PartialColoringError(f"coloring {name!r} has no value for {s}")

    return Coloring(barrier, rule, name=name, declared_bound=declared_bound)


def _rank_div(barrier: BarrierSpec, k: int) -> Callable[[Seq], int]:
    def rule(s: Seq) -> int:
        return enum_rank(barrier, s) // k

    return rule


def _rank_mod(barrier: BarrierSpec, m: int) -> Callable[[Seq], int]:
    def rule(s: Seq) -> int:
        return enum_rank(barrier, s) % m

    return rule


BUILTIN_COLORINGS = ("const", "min", "max-plus-one", "min-parity", "size", "rank", "rank-div", "rank-mod")


def builtin_coloring(barrier: BarrierSpec, name: str, params: Mapping | None = None) -> Coloring:
    """Named rules: const {value}, min, max-plus-one, min-parity, size,
    rank (injective), rank-div {k} (k-bounded), rank-mod {m}."""
    params = dict(params or {})
    if name == "const":
        value = int(params.get("value", 0))
        return Coloring(barrier, lambda s: value, name=f"const:{value}")
    if name == "min":
        return Coloring(barrier, lambda s: s[0], name="min")
    if name == "max-plus-one":
        return Coloring(barrier, lambda s: s[-1] + 1, name="max-plus-one")
    if name == "min-parity":
        return Coloring(barrier, lambda s: s[0] % 2, name="min-parity")
    if name == "size":
        return Coloring(barrier, lambda s: len(s), name="size")
    if name == "rank":
        return Coloring(barrier, lambda s: enum_rank(barrier, s), name="rank", declared_bound=1)
    if name == "rank-div":
        k = int(params["k"])
        if k < 1:
            raise ValueError("k must be >= 1")
        return Coloring(barrier, _rank_div(barrier, k), name=f"rank-div:{k}", declared_bound=k)
    if name == "rank-mod":
        m = int(params["m"])
        if m < 1:
            raise ValueError("m must be >= 1")
        return Coloring(barrier, _rank_mod(barrier, m), name=f"rank-mod:{m}")
    raise ValueError(f"unknown builtin coloring {name!r}")


def color_usage(f: Coloring, ground: Iterable[int]) -> Counter:
    """Multiplicity of each color over the front inside the ground set."""
    return Counter(f(s) for s in front(f.barrier, ground))


def check_bounded(f: Coloring, ground: Iterable[int]) -> tuple[bool, int]:
    """Check the declared bound on the front inside the ground set.

    Returns (ok, max multiplicity).  A coloring with no declared bound is
    vacuously ok.
    """
    usage = color_usage(f, ground)
    worst = max(usage.values(), default=0)
    if f.declared_bound is None:
        return True, worst
    return worst <= f.declared_bound, worst
