"""Barrier constructors, classification and front enumeration.

A barrier on an infinite base X of naturals is a family of finite strictly
increasing sequences whose members cover X (Base), none of which strictly
contains another as a set (Sperner), and such that every infinite subset of X
has a member as an initial segment (Density).  Barriers here are intensional:
a :data:`BarrierSpec` is a constructor tree and every question is answered by
the classification rule :func:`classify`, never by materializing the family.

Classification of a sequence ``s`` over the base yields exactly one of:

* ``ELEMENT``        s is a member,
* ``PROPER_PREFIX``  s is a strict initial segment of some member,
* ``OVERRUN``        a strict initial segment of s is a member,
* ``NOT_IN_BASE``    some coordinate of s lies outside the base.

Product classification relies on prefixes of one sequence being comparable
while distinct members are set-incomparable: among the prefixes of ``s`` at
most one can be a member of the left factor, so the split point is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .ordinals import OMEGA, Ordinal, fund_seq, mul, omega_pow, pred
from .seqs import GroundSet, Seq, as_seq, insert_sorted, lex_cmp

__all__ = [
    "Classification",
    "ELEMENT",
    "PROPER_PREFIX",
    "OVERRUN",
    "NOT_IN_BASE",
    "ExactSize",
    "Schreier",
    "Canonical",
    "Product",
    "Plus",
    "Derived",
    "Restrict",
    "BarrierSpec",
    "NotInBaseError",
    "InternalInvariantError",
    "VariantRangeError",
    "OrderTypeUnsupportedError",
    "in_base",
    "base_members",
    "classify",
    "step",
    "front",
    "check_sperner",
    "DensityReport",
    "density_probe",
    "variant",
    "append_variant",
    "order_type",
    "make_exact",
    "make_schreier",
    "make_canonical",
    "make_product",
    "make_plus",
    "make_derived",
    "make_restrict",
    "rank_key",
    "ranked_up_to",
    "enum_rank",
    "spec_label",
]


class Classification(Enum):
    ELEMENT = "element"
    PROPER_PREFIX = "proper-prefix"
    OVERRUN = "overrun"
    NOT_IN_BASE = "not-in-base"


ELEMENT = Classification.ELEMENT
PROPER_PREFIX = Classification.PROPER_PREFIX
OVERRUN = Classification.OVERRUN
NOT_IN_BASE = Classification.NOT_IN_BASE


class NotInBaseError(ValueError):
    """A stream or argument left the base of the barrier."""


class InternalInvariantError(AssertionError):
    """BUG: a structural barrier invariant failed; never expected at runtime."""


class VariantRangeError(ValueError):
    """k-variant requested with k beyond max(s); see append_variant."""


class OrderTypeUnsupportedError(ValueError):
    """Order type is not tracked for this constructor."""


@dataclass(frozen=True)
class ExactSize:
    """All increasing sequences of a fixed length; size 0 is the one-member
    family {()}, used as the product unit."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("size must be >= 0")


@dataclass(frozen=True)
class Schreier:
    """Sequences with length = min + 1."""


@dataclass(frozen=True)
class Canonical:
    """Canonical barrier of order type w^index, built by induction on the
    index: 0 gives {()}, successors prepend one coordinate, a limit branches
    on the first coordinate n into the product chain of the canonical
    barriers at index[n], ..., index[0]."""

    index: Ordinal


@dataclass(frozen=True)
class Product:
    """Members s + t with s from left, t from right, max(s) < min(t)."""

    left: "BarrierSpec"
    right: "BarrierSpec"


@dataclass(frozen=True)
class Plus:
    """Members are shifted inner members with one extra coordinate appended:
    { s^+ + (m) : s inner member, m > max(s^+) }, on the shifted base."""

    inner: "BarrierSpec"


@dataclass(frozen=True)
class Derived:
    """Members s with (n) + s a member of the inner barrier, on the base
    above n."""

    inner: "BarrierSpec"
    n: int


@dataclass(frozen=True)
class Restrict:
    """Members of the inner barrier contained in the given set, which must
    be infinite (carry a tail) so that Density survives."""

    inner: "BarrierSpec"
    base: GroundSet


BarrierSpec = Union[ExactSize, Schreier, Canonical, Product, Plus, Derived, Restrict]


# --- base -------------------------------------------------------------


def in_base(spec: BarrierSpec, x: int) -> bool:
    if x < 0:
        return False
    match spec:
        case ExactSize() | Schreier() | Canonical():
            return True
        case Plus(inner):
            return x >= 1 and in_base(inner, x - 1)
        case Derived(inner, n):
            return x > n and in_base(inner, x)
        case Restrict(inner, base):
            return x in base and in_base(inner, x)
        case Product(left, right):
            return in_base(left, x) and in_base(right, x)
    raise TypeError(f"not a barrier spec: {spec!r}")


def base_members(spec: BarrierSpec, ground: Iterable[int]) -> tuple[int, ...]:
    """Ground elements that belong to the base, sorted."""
    return tuple(sorted(x for x in set(ground) if in_base(spec, x)))


# --- classification ---------------------------------------------------


@lru_cache(maxsize=None)
def _limit_chain(index: Ordinal, n: int) -> BarrierSpec:
    # Canonical(index[n]) * Canonical(index[n-1]) * ... * Canonical(index[0])
    chain: BarrierSpec = Canonical(fund_seq(index, 0))
    for i in range(1, n + 1):
        chain = Product(Canonical(fund_seq(index, i)), chain)
    return chain


def _tag(spec: BarrierSpec, s: Seq) -> Classification:
    # All coordinates already checked against the base.
    match spec:
        case ExactSize(n):
            if len(s) == n:
                return ELEMENT
            return PROPER_PREFIX if len(s) < n else OVERRUN
        case Schreier():
            if not s:
                return PROPER_PREFIX
            need = s[0] + 1
            if len(s) == need:
                return ELEMENT
            return PROPER_PREFIX if len(s) < need else OVERRUN
        case Plus(inner):
            if not s:
                return PROPER_PREFIX
            return _tag(inner, tuple(x - 1 for x in s[:-1]))
        case Derived(inner, n):
            return _tag(inner, (n,) + s)
        case Restrict(inner, _):
            return _tag(inner, s)
        case Product(left, right):
            for i in range(len(s) + 1):
                t = _tag(left, s[:i])
                if t is ELEMENT:
                    return _tag(right, s[i:])
                if t is OVERRUN:
                    raise InternalInvariantError(
                        f"BUG: overrun before element in product left scan at {s[:i]}"
                    )
            return PROPER_PREFIX
        case Canonical(index):
            if index.is_zero:
                return ELEMENT if not s else OVERRUN
            if not s:
                return PROPER_PREFIX
            if index.is_successor:
                return _tag(Canonical(pred(index)), s[1:])
            return _tag(_limit_chain(index, s[0]), s[1:])
    raise TypeError(f"not a barrier spec: {spec!r}")


def classify(spec: BarrierSpec, s: Iterable[int]) -> Classification:
    """Classify a strictly increasing sequence against the barrier."""
    seq = as_seq(s)
    if any(not in_base(spec, x) for x in seq):
        return NOT_IN_BASE
    return _tag(spec, seq)


def step(spec: BarrierSpec, stream: Iterable[int]) -> Seq | None:
    """Shortest prefix of the stream that is a member.

    Returns None (inconclusive) when a finite stream runs out while still a
    proper prefix.  Raises NotInBaseError when the stream leaves the base.
    Along any infinite increasing stream inside the base, Density guarantees
    termination.
    """
    if _tag(spec, ()) is ELEMENT:
        return ()
    cur: list[int] = []
    for x in stream:
        if cur and x <= cur[-1]:
            raise ValueError(f"stream must be strictly increasing, got {x} after {cur[-1]}")
        if not in_base(spec, x):
            raise NotInBaseError(f"{x} is not in the base")
        cur.append(x)
        t = _tag(spec, tuple(cur))
        if t is ELEMENT:
            return tuple(cur)
        if t is OVERRUN:
            raise InternalInvariantError(
                f"BUG: stream {tuple(cur)} overran without an element prefix"
            )
    return None


def front(spec: BarrierSpec, ground: Iterable[int]) -> tuple[Seq, ...]:
    """All members contained in a finite ground set, in lexicographic order.

    Non-base elements of the ground set are ignored.  Enumeration is a
    depth-first extension walk pruned at members (extensions of a member
    would overrun, by Sperner).
    """
    g = base_members(spec, ground)
    out: list[Seq] = []

    def extend(prefix: Seq, start: int) -> None:
        t = _tag(spec, prefix)
        if t is ELEMENT:
            out.append(prefix)
            return
        if t is OVERRUN:
            raise InternalInvariantError(f"BUG: overrun below a proper prefix at {prefix}")
        for j in range(start, len(g)):
            extend(prefix + (g[j],), j + 1)

    extend((), 0)
    return tuple(out)


def check_sperner(members: Iterable[Seq]) -> bool:
    """True iff no member strictly contains another as a set."""
    sets = [frozenset(s) for s in members]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a < b:
                return False
    return True


@dataclass(frozen=True)
class DensityReport:
    hit: int
    inconclusive: int
    violations: tuple[Seq, ...]

    def to_json(self) -> dict:
        return {
            "hit": self.hit,
            "inconclusive": self.inconclusive,
            "violations": [list(v) for v in self.violations],
        }


def density_probe(spec: BarrierSpec, ground: Iterable[int]) -> DensityReport:
    """Stream every nonempty subset of the ground set through the stop rule.

    ``hit`` counts subsets that reach a member, ``inconclusive`` those that
    run out first.  A subset witnessing an overrun with no member prefix is
    recorded as a violation; for a genuine barrier the list is empty.
    Non-base ground elements are dropped up front, matching the Density
    quantifier over subsets of the base.
    """
    g = base_members(spec, ground)
    if _tag(spec, ()) is ELEMENT:
        # Degenerate one-member family {()}: every stream stops immediately.
        total = (1 << len(g)) - 1
        return DensityReport(hit=total, inconclusive=0, violations=())

    from .parallel import pmap

    def probe_chunk(bounds: tuple[int, int]) -> tuple[int, int, list[Seq]]:
        lo, hi = bounds
        hit = inconclusive = 0
        violations: list[Seq] = []
        for mask in range(lo, hi):
            sub = tuple(g[i] for i in range(len(g)) if mask >> i & 1)
            prefix: tuple[int, ...] = ()
            outcome = None
            for x in sub:
                prefix += (x,)
                t = _tag(spec, prefix)
                if t is ELEMENT:
                    outcome = "hit"
                    break
                if t is OVERRUN:
                    outcome = "violation"
                    break
            if outcome == "hit":
                hit += 1
            elif outcome == "violation":
                violations.append(sub)
            else:
                inconclusive += 1
        return hit, inconclusive, violations

    total = 1 << len(g)
    chunk = 1 << 10
    bounds = [(lo, min(lo + chunk, total)) for lo in range(1, total, chunk)]
    hit = inconclusive = 0
    violations: list[Seq] = []
    for h, i, v in pmap(probe_chunk, bounds):
        hit += h
        inconclusive += i
        violations.extend(v)
    return DensityReport(hit=hit, inconclusive=inconclusive, violations=tuple(violations))


# --- variants ----------------------------------------------------------


def variant(spec: BarrierSpec, s: Iterable[int], k: int) -> Seq:
    """The unique member (s_0,...,s_i,k,s_{i+1},...,s_j) obtained by
    inserting k below max(s) and truncating.

    Existence and uniqueness follow from Density plus Sperner; the result is
    always lexicographically below s.  k at or above max(s) is rejected with
    a distinct error; the gap just below max(s) is also reachable through
    :func:`append_variant`.
    """
    seq = as_seq(s)
    if classify(spec, seq) is not ELEMENT:
        raise ValueError(f"{seq} is not a member")
    if not in_base(spec, k):
        raise NotInBaseError(f"{k} is not in the base")
    if k in seq:
        raise ValueError(f"{k} already occurs in {seq}")
    if k >= seq[-1]:
        raise VariantRangeError(f"{k} is not below max{seq}; use append_variant")
    out = step(spec, insert_sorted(seq, k))
    if out is None or k not in out:
        raise InternalInvariantError(f"BUG: no variant of {seq} through {k}")
    if lex_cmp(out, seq) >= 0:
        raise InternalInvariantError(f"BUG: variant {out} not lex-below {seq}")
    return out


def append_variant(spec: BarrierSpec, s: Iterable[int], k: int) -> Seq:
    """Replace the last coordinate: for s_{n-1} < k < s_n the sequence
    (s_0,...,s_{n-1},k) is again a member."""
    seq = as_seq(s)
    if classify(spec, seq) is not ELEMENT:
        raise ValueError(f"{seq} is not a member")
    if not seq:
        raise ValueError("append_variant of the empty member")
    if not in_base(spec, k):
        raise NotInBaseError(f"{k} is not in the base")
    low = seq[-2] if len(seq) >= 2 else -1
    if not (low < k < seq[-1]):
        raise VariantRangeError(f"{k} is not in the last gap of {seq}")
    out = seq[:-1] + (k,)
    if classify(spec, out) is not ELEMENT:
        raise InternalInvariantError(f"BUG: {out} is not a member")
    return out


# --- order types --------------------------------------------------------


def order_type(spec: BarrierSpec) -> Ordinal:
    """Symbolic order type of the lexicographic order on the barrier.

    For Restrict this returns the inner order type, which is only an upper
    bound (passing to an infinite subset can shrink the type).  For Derived
    no rule is tracked and the call raises.
    """
    match spec:
        case ExactSize(n):
            return omega_pow(Ordinal.from_int(n))
        case Schreier():
            return omega_pow(OMEGA)
        case Canonical(index):
            return omega_pow(index)
        case Plus(inner):
            return mul(OMEGA, order_type(inner))
        case Product(left, right):
            # Left coordinates dominate lexicographically, so the whole order
            # is order_type(right) copies stacked along order_type(left).
            return mul(order_type(right), order_type(left))
        case Restrict(inner, _):
            return order_type(inner)
        case Derived():
            raise OrderTypeUnsupportedError("order type of a derived barrier is not tracked")
    raise TypeError(f"not a barrier spec: {spec!r}")


# --- validated constructors ---------------------------------------------


def make_exact(n: int) -> ExactSize:
    return ExactSize(n)


def make_schreier() -> Schreier:
    return Schreier()


def make_canonical(index: Ordinal | int) -> Canonical:
    if isinstance(index, int):
        index = Ordinal.from_int(index)
    return Canonical(index)


def _plain_base(spec: BarrierSpec) -> bool:
    match spec:
        case ExactSize() | Schreier() | Canonical():
            return True
        case Product(left, right):
            return _plain_base(left) and _plain_base(right)
        case _:
            return False


def make_product(left: BarrierSpec, right: BarrierSpec) -> Product:
    if not (_plain_base(left) and _plain_base(right)):
        raise ValueError("product factors must live on the full base of naturals")
    return Product(left, right)


def make_plus(inner: BarrierSpec) -> Plus:
    return Plus(inner)


def make_derived(inner: BarrierSpec, n: int) -> Derived:
    if n < 0 or not in_base(inner, n):
        raise ValueError(f"{n} is not in the base")
    t = classify(inner, (n,))
    if t not in (ELEMENT, PROPER_PREFIX):
        raise ValueError(f"({n},) does not extend to a member")
    return Derived(inner, n)


def make_restrict(inner: BarrierSpec, base: GroundSet) -> Restrict:
    if base.is_finite:
        raise ValueError("restriction base must carry an infinite tail")
    return Restrict(inner, base)


# --- enumeration rank ----------------------------------------------------


def rank_key(s: Seq) -> tuple[int, Seq]:
    """Sort key (max, then lex) under which every member has a finite,
    enumerable set of predecessors."""
    return (s[-1] if s else -1, s)


def ranked_up_to(spec: BarrierSpec, top: int) -> tuple[Seq, ...]:
    """All members with max coordinate <= top, sorted by rank."""
    return tuple(sorted(front(spec, range(top + 1)), key=rank_key))


def enum_rank(spec: BarrierSpec, s: Iterable[int]) -> int:
    """Position of a member in the (max, lex) enumeration of the barrier."""
    seq = as_seq(s)
    if classify(spec, seq) is not ELEMENT:
        raise ValueError(f"{seq} is not a member")
    key = rank_key(seq)
    return sum(1 for t in ranked_up_to(spec, key[0]) if rank_key(t) < key)


# --- labels --------------------------------------------------------------


def spec_label(spec: BarrierSpec) -> str:
    """Compact human-readable form, used in reports."""
    match spec:
        case ExactSize(n):
            return f"exact:{n}"
        case Schreier():
            return "schreier"
        case Canonical(index):
            return f"canonical:{index}"
        case Product(left, right):
            return f"product({spec_label(left)}, {spec_label(right)})"
        case Plus(inner):
            return f"plus({spec_label(inner)})"
        case Derived(inner, n):
            return f"derived({spec_label(inner)}, {n})"
        case Restrict(inner, base):
            tail = "" if base.tail is None else f"+{base.tail.start}/{base.tail.step}"
            return f"restrict({spec_label(inner)}, {list(base.prefix)}{tail})"
    raise TypeError(f"not a barrier spec: {spec!r}")
