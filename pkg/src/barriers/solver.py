"""Brute-force finite-front search for Ramsey-style solution sets.

The infinite statements ask for an infinite set whose induced sub-barrier is
monochromatic, free, thin or a rainbow.  At desk scale a solution is a finite
set H whose front (the members inside H) verifies the property; ``find``
searches subsets of a ground set exhaustively, by size then lexicographically,
so witnesses are reproducible.

All four properties are anti-monotone in H: shrinking a verified H keeps it
verified (for thin, with the same color universe).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .barrier import base_members, front, in_base
from .coloring import Coloring

__all__ = [
    "PROPERTIES",
    "Witness",
    "verify_mono",
    "verify_free",
    "verify_thin",
    "verify_rainbow",
    "default_universe",
    "find",
]

PROPERTIES = ("mono", "free", "thin", "rainbow")


@dataclass(frozen=True)
class Witness:
    h: tuple[int, ...]
    property: str
    detail: int | None = None  # mono: the color; thin: an omitted color

    def to_json(self) -> dict:
        return {"h": list(self.h), "property": self.property, "detail": self.detail}


def _checked(f: Coloring, h: Iterable[int]) -> tuple[int, ...]:
    hs = tuple(sorted(set(h)))
    bad = [x for x in hs if not in_base(f.barrier, x)]
    if bad:
        raise ValueError(f"{bad} not in the base of the barrier")
    return hs


def verify_mono(f: Coloring, h: Iterable[int]) -> bool:
    """True iff f is constant on the front inside h (vacuously on empty)."""
    hs = _checked(f, h)
    return len({f(s) for s in front(f.barrier, hs)}) <= 1


def verify_free(f: Coloring, h: Iterable[int]) -> bool:
    """True iff every member s inside h has f(s) outside h or inside s."""
    hs = _checked(f, h)
    hset = set(hs)
    return all(f(s) in s for s in front(f.barrier, hs) if f(s) in hset)


def verify_thin(f: Coloring, h: Iterable[int], universe: Iterable[int]) -> bool:
    """True iff f restricted to the front inside h omits a universe color."""
    hs = _checked(f, h)
    image = {f(s) for s in front(f.barrier, hs)}
    return any(c not in image for c in set(universe))


def verify_rainbow(f: Coloring, h: Iterable[int]) -> bool:
    """True iff f is injective on the front inside h."""
    hs = _checked(f, h)
    members = front(f.barrier, hs)
    return len({f(s) for s in members}) == len(members)


def default_universe(f: Coloring, ground: Iterable[int]) -> tuple[int, ...]:
    """Colors used on the ground front plus the coloring's declared palette."""
    used = {f(s) for s in front(f.barrier, ground)}
    return tuple(sorted(used | set(f.colors or ())))


def find(
    property: str,
    f: Coloring,
    ground: Iterable[int],
    min_size: int,
    universe: Iterable[int] | None = None,
) -> Witness | None:
    """Smallest (by size, then lex) subset of the ground set of at least
    min_size that verifies the property; None when the search exhausts."""
    if property not in PROPERTIES:
        raise ValueError(f"unknown property {property!r}")
    g = base_members(f.barrier, ground)
    if property == "thin":
        universe = default_universe(f, g) if universe is None else tuple(sorted(set(universe)))
    for size in range(min_size, len(g) + 1):
        for h in combinations(g, size):
            if property == "mono":
                colors = {f(s) for s in front(f.barrier, h)}
                if len(colors) <= 1:
                    return Witness(h, "mono", colors.pop() if colors else None)
            elif property == "free":
                if verify_free(f, h):
                    return Witness(h, "free")
            elif property == "thin":
                image = {f(s) for s in front(f.barrier, h)}
                omitted = sorted(c for c in universe if c not in image)
                if omitted:
                    return Witness(h, "thin", omitted[0])
            else:
                if verify_rainbow(f, h):
                    return Witness(h, "rainbow")
    return None
