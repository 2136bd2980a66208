"""Uniform reductions between Ramsey-type principles on barriers.

Each reduction is a pair of maps: a forward map turning an instance (a
coloring) of the source principle into an instance of the target principle,
and a backward map turning target solutions into source solutions.  The five
reductions shipped here:

    fs-to-rt    free set          <=  2-color monochromatic, on the plus barrier
    ts-to-rt    thin set          <=  2-color monochromatic
    ts-to-fs    thin set          <=  free set
    rrt-to-rt   rainbow (k-bdd)   <=  k-color monochromatic
    rrt2-to-fs  rainbow (2-bdd)   <=  free set

Forward colorings are demand-driven rules closing over the instance and the
barrier only, so they are uniform: no ground set is consulted beyond the
queried member.  ``check_reduction`` validates a reduction exhaustively on a
finite ground set: every subset that solves the target instance must map back
to a solution of the source instance.

Desk-scale note for fs-to-rt: a finite monochromatic front constrains the
recursion only below its largest element (the recursion at a member needs a
next element of H after it), so the solution transform used by the checker
drops max(H) before decrementing.  The pointwise decrement itself is
:func:`fs_backward`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .barrier import (
    BarrierSpec,
    ELEMENT,
    InternalInvariantError,
    Plus,
    classify,
    front,
    base_members,
    rank_key,
    ranked_up_to,
    spec_label,
    variant,
)
from .coloring import BoundViolationError, Coloring, table_coloring
from .seqs import Seq, as_seq, lex_cmp, seq_minus

__all__ = [
    "FreeToMonoColoring",
    "fs_forward",
    "fs_backward",
    "ts_rt_forward",
    "ts_fs_backward",
    "rrt_rt_forward",
    "rrt2_fs_forward",
    "thin_universe",
    "Reduction",
    "REDUCTIONS",
    "ReductionReport",
    "check_reduction",
    "random_instance",
    "adversarial_instances",
]


# --- free set from monochromatic ----------------------------------------


class FreeToMonoColoring(Coloring):
    """2-coloring of the plus barrier defined by recursion along the
    lexicographic order, which is well-founded on any barrier.

    For a member s = (s_0,...,s_n) of the plus barrier, let t be s with the
    last coordinate dropped and the rest shifted down, and v = f(t):

        v in t                                        -> 0
        v < s_0 - 1, or v strictly inside a gap
        (s_i - 1, s_{i+1} - 1) with i < n-1           -> 1 - g(s[v+1])
        v strictly inside (s_{n-1} - 1, s_n - 1)      -> 0
        otherwise (v = s_n - 1 or v >= s_n)           -> 1

    where s[v+1] is the (v+1)-variant, lexicographically below s.  Values are
    memoized per member; each recursive hop is asserted to decrease.  The hop
    depth below each member (a pure function of the instance, independent of
    query order) is tracked, and ``max_chain`` holds the largest seen.

    The memo is the only mutable state; every entry is a pure function of
    the instance, so concurrent queries race only on identical values.
    """

    def __init__(self, inner: BarrierSpec, f: Coloring):
        self.inner = inner
        self.f = f
        self.memo: dict[Seq, int] = {}
        self.depth: dict[Seq, int] = {}
        self.max_chain = 0
        super().__init__(Plus(inner), self._eval, name=f"free-to-mono({f.name})", colors=(0, 1))

    def _terminal(self, s: Seq) -> int | None:
        """Value for the non-recursive cases, None when a hop is needed."""
        t = seq_minus(s)
        v = self.f(t)
        n = len(s) - 1
        if v in t:
            return 0
        if v < s[0] - 1 or any(s[i] - 1 < v < s[i + 1] - 1 for i in range(n - 1)):
            return None
        if n >= 1 and s[n - 1] - 1 < v < s[n] - 1:
            return 0
        return 1

    def _eval(self, s: Seq) -> int:
        if classify(self.barrier, s) is not ELEMENT:
            raise ValueError(f"{s} is not a member of the plus barrier")
        chain: list[Seq] = []
        cur = s
        while cur not in self.memo:
            value = self._terminal(cur)
            if value is not None:
                self.memo[cur] = value
                self.depth[cur] = 0
                break
            v = self.f(seq_minus(cur))
            nxt = variant(self.barrier, cur, v + 1)
            if lex_cmp(nxt, cur) >= 0:
                raise InternalInvariantError(f"BUG: hop {cur} -> {nxt} does not lex-decrease")
            chain.append(cur)
            cur = nxt
        value = self.memo[cur]
        below = self.depth[cur]
        for node in reversed(chain):
            value = 1 - value
            below += 1
            self.memo[node] = value
            self.depth[node] = below
        self.max_chain = max(self.max_chain, self.depth[s])
        return self.memo[s]


def fs_forward(inner: BarrierSpec, f: Coloring) -> FreeToMonoColoring:
    """Instance map of fs-to-rt: a free-set instance on the inner barrier
    becomes a 2-coloring of its plus barrier."""
    return FreeToMonoColoring(inner, f)


def fs_backward(h: Iterable[int]) -> tuple[int, ...]:
    """Solution map of fs-to-rt at the infinite level: pointwise decrement."""
    hs = tuple(sorted(set(h)))
    if hs and hs[0] < 1:
        raise ValueError(f"0 cannot occur in a plus-barrier solution: {hs}")
    return tuple(x - 1 for x in hs)


# --- thin set from monochromatic / free set ------------------------------


def ts_rt_forward(f: Coloring) -> Coloring:
    """Collapse to 2 colors: keep 0, send everything else to 1."""
    return Coloring(
        f.barrier,
        lambda s: 0 if f(s) == 0 else 1,
        name=f"thin-to-mono({f.name})",
        colors=(0, 1),
    )


def ts_fs_backward(x: Iterable[int]) -> tuple[int, ...]:
    """Drop the minimum of a free solution; the remainder is thin (the
    dropped element can no longer occur as a color on the sub-front)."""
    xs = tuple(sorted(set(x)))
    if len(xs) < 2:
        raise ValueError(f"need at least 2 elements, got {xs}")
    return xs[1:]


def thin_universe(f: Coloring, ground: Iterable[int]) -> tuple[int, ...]:
    """Color universe for desk-scale thinness checks: colors used on the
    ground front, the two collapse colors, and the ground elements themselves
    (the omitted color produced by ts-to-fs is a ground element)."""
    g = tuple(ground)
    used = {f(s) for s in front(f.barrier, g)}
    return tuple(sorted(used | {0, 1} | set(g)))


# --- rainbow from monochromatic / free set -------------------------------


class _RankedPrefix:
    """Members ordered by (max, lex); the strict predecessors of any member
    form a finite, explicitly enumerable list."""

    def __init__(self, spec: BarrierSpec):
        self.spec = spec
        self._by_top: dict[int, tuple[Seq, ...]] = {}

    def before(self, s: Seq) -> tuple[Seq, ...]:
        top = rank_key(s)[0]
        if top not in self._by_top:
            self._by_top[top] = ranked_up_to(self.spec, max(top, 0))
        key = rank_key(s)
        return tuple(t for t in self._by_top[top] if rank_key(t) < key)


def rrt_rt_forward(spec: BarrierSpec, f: Coloring) -> Coloring:
    """Count agreeing predecessors: g(s) = |{t before s : f(t) = f(s)}|.

    For a k-bounded f this is a k-coloring; the bound is validated on every
    queried rank prefix and violations raise.
    """
    k = f.declared_bound
    if k is None or k < 1:
        raise ValueError("instance must declare a bound k >= 1")
    ranked = _RankedPrefix(spec)

    def rule(s: Seq) -> int:
        color = f(s)
        count = sum(1 for t in ranked.before(s) if f(t) == color)
        if count >= k:
            raise BoundViolationError(
                f"color {color} occurs {count + 1} times up to {s}; declared bound {k}"
            )
        return count

    return Coloring(spec, rule, name=f"twin-count({f.name})", colors=tuple(range(k)))


def rrt2_fs_forward(spec: BarrierSpec, f: Coloring) -> Coloring:
    """g(s) = min(t \\ s) for the unique earlier twin t of s, else 0.

    Uniqueness holds because f is 2-bounded; t \\ s is nonempty because
    distinct members are set-incomparable.
    """
    if f.declared_bound != 2:
        raise ValueError("instance must declare bound 2")
    ranked = _RankedPrefix(spec)

    def rule(s: Seq) -> int:
        color = f(s)
        twins = [t for t in ranked.before(s) if f(t) == color]
        if len(twins) > 1:
            raise BoundViolationError(f"color {color} occurs {len(twins) + 1} times up to {s}")
        if not twins:
            return 0
        diff = set(twins[0]) - set(s)
        if not diff:
            raise InternalInvariantError(f"BUG: member {twins[0]} contained in {s}")
        return min(diff)

    return Coloring(spec, rule, name=f"twin-min({f.name})")


# --- the reduction registry ----------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """A source principle, a target principle, and the two uniform maps."""

    name: str
    source_property: str
    target_property: str
    barrier_map: Callable[[BarrierSpec], BarrierSpec]
    forward: Callable[[BarrierSpec, Coloring], Coloring]
    backward: Callable[[tuple[int, ...]], tuple[int, ...]]
    target_ground: Callable[[tuple[int, ...]], tuple[int, ...]]
    min_witness: int = 1
    needs_bound: int | None = None  # 2 = exactly 2-bounded, 0 = any declared k


def _identity_ground(g: tuple[int, ...]) -> tuple[int, ...]:
    return g


def _shift_ground(g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + 1 for x in g)


def _fs_desk_backward(h: tuple[int, ...]) -> tuple[int, ...]:
    # A finite mono front only witnesses the recursion below its top element.
    return fs_backward(h[:-1])


REDUCTIONS: dict[str, Reduction] = {
    "fs-to-rt": Reduction(
        name="fs-to-rt",
        source_property="free",
        target_property="mono",
        barrier_map=Plus,
        forward=fs_forward,
        backward=_fs_desk_backward,
        target_ground=_shift_ground,
        min_witness=2,
    ),
    "ts-to-rt": Reduction(
        name="ts-to-rt",
        source_property="thin",
        target_property="mono",
        barrier_map=lambda spec: spec,
        forward=lambda spec, f: ts_rt_forward(f),
        backward=lambda h: h,
        target_ground=_identity_ground,
    ),
    "ts-to-fs": Reduction(
        name="ts-to-fs",
        source_property="thin",
        target_property="free",
        barrier_map=lambda spec: spec,
        forward=lambda spec, f: f,
        backward=ts_fs_backward,
        target_ground=_identity_ground,
        min_witness=2,
    ),
    "rrt-to-rt": Reduction(
        name="rrt-to-rt",
        source_property="rainbow",
        target_property="mono",
        barrier_map=lambda spec: spec,
        forward=rrt_rt_forward,
        backward=lambda h: h,
        target_ground=_identity_ground,
        needs_bound=0,
    ),
    "rrt2-to-fs": Reduction(
        name="rrt2-to-fs",
        source_property="rainbow",
        target_property="free",
        barrier_map=lambda spec: spec,
        forward=rrt2_fs_forward,
        backward=lambda h: h,
        target_ground=_identity_ground,
        needs_bound=2,
    ),
}


# --- exhaustive finite validation -----------------------------------------


@dataclass(frozen=True)
class ReductionReport:
    name: str
    barrier: str
    coloring: str
    ground: tuple[int, ...]
    min_size: int
    checked_witnesses: int
    counterexamples: tuple[dict, ...]
    max_recursion_chain: int
    forward_max_color: int | None

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "barrier": self.barrier,
            "coloring": self.coloring,
            "ground": list(self.ground),
            "min_size": self.min_size,
            "checked_witnesses": self.checked_witnesses,
            "counterexamples": list(self.counterexamples),
            "max_recursion_chain": self.max_recursion_chain,
            "forward_max_color": self.forward_max_color,
        }


def _mask(seq: Seq, index: dict[int, int]) -> int:
    m = 0
    for x in seq:
        m |= 1 << index[x]
    return m


def check_reduction(
    red: Reduction | str,
    f: Coloring,
    ground: Iterable[int],
    min_size: int,
) -> ReductionReport:
    """Exhaustively validate one instance at desk scale.

    Every subset H of the target ground set with at least ``min_size``
    elements whose front solves the target instance is mapped back; the
    report collects any H whose image fails the source property.  For a
    correct reduction the counterexample list is empty.
    """
    if isinstance(red, str):
        red = REDUCTIONS[red]
    if red.needs_bound is not None:
        if f.declared_bound is None:
            raise ValueError(f"{red.name} needs a declared bound")
        if red.needs_bound and f.declared_bound != red.needs_bound:
            raise ValueError(f"{red.name} needs bound {red.needs_bound}")

    src_spec = f.barrier
    g = base_members(src_spec, ground)
    tgt_spec = red.barrier_map(src_spec)
    tg = red.target_ground(g)
    gvals = red.forward(src_spec, f)

    t_index = {x: i for i, x in enumerate(tg)}
    t_front = front(tgt_spec, tg)
    t_masks = [_mask(s, t_index) for s in t_front]
    t_colors = [gvals(s) for s in t_front]
    t_sets = [set(s) for s in t_front]

    s_index = {x: i for i, x in enumerate(g)}
    s_front = front(src_spec, g)
    s_masks = [_mask(s, s_index) for s in s_front]
    s_colors = [f(s) for s in s_front]
    s_sets = [set(s) for s in s_front]
    universe = thin_universe(f, g) if red.source_property == "thin" else ()

    def target_holds(hmask: int, hset: set[int]) -> bool:
        if red.target_property == "mono":
            seen: set[int] = set()
            for m, c in zip(t_masks, t_colors):
                if m & ~hmask == 0:
                    seen.add(c)
                    if len(seen) > 1:
                        return False
            return True
        # free
        for m, c, elems in zip(t_masks, t_colors, t_sets):
            if m & ~hmask == 0 and c in hset and c not in elems:
                return False
        return True

    def source_holds(back: tuple[int, ...]) -> bool:
        bmask = _mask(back, s_index)
        bset = set(back)
        if red.source_property == "free":
            return all(
                c in elems
                for m, c, elems in zip(s_masks, s_colors, s_sets)
                if m & ~bmask == 0 and c in bset
            )
        if red.source_property == "thin":
            image = {c for m, c in zip(s_masks, s_colors) if m & ~bmask == 0}
            return any(c not in image for c in universe)
        # rainbow
        seen: set[int] = set()
        for m, c in zip(s_masks, s_colors):
            if m & ~bmask == 0:
                if c in seen:
                    return False
                seen.add(c)
        return True

    checked = 0
    counterexamples: list[dict] = []
    lo = max(min_size, red.min_witness)
    for size in range(lo, len(tg) + 1):
        for h in combinations(tg, size):
            hmask = _mask(h, t_index)
            if not target_holds(hmask, set(h)):
                continue
            checked += 1
            back = red.backward(h)
            if not source_holds(back):
                counterexamples.append(
                    {"witness": list(h), "solution": list(back), "property": red.source_property}
                )
    return ReductionReport(
        name=red.name,
        barrier=spec_label(src_spec),
        coloring=f.name,
        ground=g,
        min_size=min_size,
        checked_witnesses=checked,
        counterexamples=tuple(counterexamples),
        max_recursion_chain=getattr(gvals, "max_chain", 0),
        forward_max_color=max(t_colors, default=None),
    )


# --- instance generators ---------------------------------------------------


def random_instance(
    red: Reduction | str,
    spec: BarrierSpec,
    ground: Iterable[int],
    seed: int,
    bound: int | None = None,
) -> Coloring:
    """Seeded random table coloring over the ground front, shaped for the
    reduction: plain colorings for free/thin sources, exactly-bounded color
    multisets for rainbow sources."""
    if isinstance(red, str):
        red = REDUCTIONS[red]
    g = base_members(spec, ground)
    members = front(spec, g)
    rng = random.Random(seed)
    if red.needs_bound is not None:
        k = bound if bound is not None else (red.needs_bound or 2)
        colors = [i // k for i in range(len(members))]
        rng.shuffle(colors)
        return table_coloring(spec, dict(zip(members, colors)), name=f"random:{seed}", declared_bound=k)
    top = (max(g) if g else 0) + 4
    colors = [rng.randrange(top) for _ in members]
    return table_coloring(spec, dict(zip(members, colors)), name=f"random:{seed}")


def adversarial_instances(
    red: Reduction | str,
    spec: BarrierSpec,
    ground: Iterable[int],
    bound: int | None = None,
) -> list[Coloring]:
    """Deterministic stress instances per reduction."""
    if isinstance(red, str):
        red = REDUCTIONS[red]
    g = base_members(spec, ground)
    members = front(spec, g)
    out: list[Coloring] = []
    if red.needs_bound is not None:
        k = bound if bound is not None else (red.needs_bound or 2)
        n = len(members)
        out.append(
            table_coloring(spec, {s: i for i, s in enumerate(members)}, name="injective", declared_bound=k)
        )
        out.append(
            table_coloring(spec, {s: i // k for i, s in enumerate(members)}, name="adjacent-twins", declared_bound=k)
        )
        stride = max(1, (n + k - 1) // k)
        out.append(
            table_coloring(spec, {s: i % stride for i, s in enumerate(members)}, name="far-twins", declared_bound=k)
        )
        return out
    out.append(table_coloring(spec, {s: 0 for s in members}, name="const:0"))
    out.append(table_coloring(spec, {s: max(g, default=0) + 50 for s in members}, name="const:big"))
    out.append(table_coloring(spec, {s: s[0] for s in members}, name="min"))
    out.append(table_coloring(spec, {s: s[-1] + 1 for s in members}, name="max-plus-one"))
    out.append(table_coloring(spec, {s: max(s[0] - 2, 0) for s in members}, name="cascade"))
    if members:
        probe = {s: 0 for s in members}
        top = max(members, key=rank_key)
        probe[top] = min(x for x in g if x != 0) if len(g) > 1 else 0
        out.append(table_coloring(spec, probe, name="top-probe"))
    return out
