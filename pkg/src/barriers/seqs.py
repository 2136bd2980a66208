"""Finite increasing sequences of naturals and decidable ground sets.

Sequences are plain tuples of ints, strictly increasing; the empty tuple is
allowed.  A :class:`GroundSet` is an explicit finite prefix plus an optional
infinite arithmetic-progression tail, so membership stays decidable while the
set can stand in for an infinite subset of the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Seq = tuple[int, ...]

__all__ = [
    "Seq",
    "as_seq",
    "seq_plus",
    "seq_minus",
    "lex_cmp",
    "insert_sorted",
    "Tail",
    "GroundSet",
]


def as_seq(values: Iterable[int]) -> Seq:
    """Validate and normalize to a strictly increasing tuple of naturals."""
    s = tuple(values)
    for i, x in enumerate(s):
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"sequence entries must be naturals, got {x!r}")
        if i > 0 and s[i - 1] >= x:
            raise ValueError(f"sequence must be strictly increasing, got {s}")
    return s


def seq_plus(s: Seq) -> Seq:
    """Shift every coordinate up by one."""
    return tuple(x + 1 for x in s)


def seq_minus(s: Seq) -> Seq:
    """Drop the last coordinate, then shift the rest down by one.

    Requires a nonempty sequence with min >= 1.
    """
    if not s:
        raise ValueError("seq_minus of the empty sequence")
    if s[0] < 1:
        raise ValueError(f"seq_minus needs min >= 1, got {s}")
    return tuple(x - 1 for x in s[:-1])


def lex_cmp(s: Seq, t: Seq) -> int:
    """First-difference comparison; a strict prefix compares less.

    Two distinct elements of one barrier always differ at some shared
    position, so the prefix rule never decides between them.
    """
    if s == t:
        return 0
    return -1 if s < t else 1


def insert_sorted(s: Seq, k: int) -> Seq:
    """Insert k into an increasing sequence; k must not be present."""
    if k in s:
        raise ValueError(f"{k} already occurs in {s}")
    return tuple(sorted(s + (k,)))


@dataclass(frozen=True)
class Tail:
    """Arithmetic progression start, start+step, start+2*step, ..."""

    start: int
    step: int = 1

    def __post_init__(self) -> None:
        if self.start < 0 or self.step < 1:
            raise ValueError(f"bad tail {self.start}/{self.step}")

    def __contains__(self, x: int) -> bool:
        return x >= self.start and (x - self.start) % self.step == 0


@dataclass(frozen=True)
class GroundSet:
    """Finite prefix plus optional infinite arithmetic tail."""

    prefix: tuple[int, ...] = ()
    tail: Tail | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", as_seq(self.prefix))
        if self.tail is not None and self.prefix and self.tail.start <= self.prefix[-1]:
            raise ValueError("tail must start strictly above the prefix")

    @classmethod
    def of(cls, values: Iterable[int]) -> "GroundSet":
        return cls(prefix=tuple(sorted(set(values))))

    @classmethod
    def from_range(cls, start: int, stop: int) -> "GroundSet":
        return cls(prefix=tuple(range(start, stop)))

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    def __contains__(self, x: int) -> bool:
        return x in self.prefix or (self.tail is not None and x in self.tail)

    def elements(self) -> Iterator[int]:
        """All members in increasing order; infinite when there is a tail."""
        yield from self.prefix
        if self.tail is not None:
            x = self.tail.start
            while True:
                yield x
                x += self.tail.step

    def elements_below(self, stop: int) -> tuple[int, ...]:
        out = []
        for x in self.elements():
            if x >= stop:
                break
            out.append(x)
        return tuple(out)

    def stream_from(self, lo: int) -> Iterator[int]:
        """Members >= lo in increasing order."""
        for x in self.elements():
            if x >= lo:
                yield x

    def finite_tuple(self) -> tuple[int, ...]:
        if not self.is_finite:
            raise ValueError("ground set has an infinite tail")
        return self.prefix
