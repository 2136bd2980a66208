"""Stage-based diagonalizing colorings against mock limit oracles.

An :class:`OracleFamily` stands in for a family of approximated sets: entry e
declares a decidable set X_e and a delay d_e, and the approximation
``g(e, x, stage)`` answers membership of x in X_e correctly whenever
min(stage) > d_e, and 0 otherwise.  This delay model realizes exactly the two
properties the defeating constructions consume: the approximation is total
and {0,1}-valued, and along the barrier there are stages with arbitrarily
large minimum on which it is correct below any threshold.

The defeating colorings live on the product of the singleton barrier with a
canonical barrier: a member is (m) + stage with m < min(stage), and the color
of (m, stage) is computed by replaying a deterministic substage loop at that
stage.  The thin defeater plants every color i on each declared-infinite set;
the rainbow defeater plants color collisions inside each declared set while
staying 2-bounded overall.

Stage replays depend only on min(stage) and the family, so the defeat search
inspects one canonical (lex-least) stage per admissible minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .barrier import (
    BarrierSpec,
    Canonical,
    ExactSize,
    InternalInvariantError,
    Product,
    step,
)
from .coloring import Coloring
from .ordinals import Ordinal
from .seqs import GroundSet, Seq, as_seq

__all__ = [
    "pair",
    "unpair",
    "code_seq",
    "OracleEntry",
    "OracleFamily",
    "f_approx",
    "StagedColoring",
    "thin_defeater",
    "rainbow_defeater",
    "DefeatResult",
    "verify_defeat_thin",
    "verify_defeat_rainbow",
]


# --- pairing and sequence codes -------------------------------------------


def pair(a: int, b: int) -> int:
    """Cantor-style pairing, enumerating the diagonal a + b = w as
    (0,w), (1,w-1), ..., (w,0); so pair(0,0)=0, pair(0,1)=1, pair(1,0)=2."""
    if a < 0 or b < 0:
        raise ValueError("pair needs naturals")
    w = a + b
    return w * (w + 1) // 2 + a


def unpair(z: int) -> tuple[int, int]:
    """Inverse of :func:`pair`."""
    if z < 0:
        raise ValueError("unpair needs a natural")
    w = 0
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    a = z - w * (w + 1) // 2
    return a, w - a


def code_seq(s: Seq) -> int:
    """Injective code of a finite sequence: a length tag paired with the
    right fold of the coordinates."""
    payload = 0
    for x in reversed(s):
        payload = pair(x, payload)
    return pair(len(s), payload)


# --- oracle families --------------------------------------------------------


@dataclass(frozen=True)
class OracleEntry:
    e: int
    members: GroundSet  # declared infinite at the meaning level
    delay: int = 0

    def __post_init__(self) -> None:
        if self.e < 0 or self.delay < 0:
            raise ValueError("index and delay must be naturals")


@dataclass(frozen=True)
class OracleFamily:
    entries: tuple[OracleEntry, ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for entry in self.entries:
            if entry.e in seen:
                raise ValueError(f"duplicate oracle index {entry.e}")
            seen.add(entry.e)

    @classmethod
    def of(cls, entries: Iterable[OracleEntry]) -> "OracleFamily":
        return cls(tuple(entries))

    def get(self, e: int) -> OracleEntry | None:
        for entry in self.entries:
            if entry.e == e:
                return entry
        return None

    def g(self, e: int, x: int, stage: Seq) -> int:
        """Total {0,1} approximation: correct once min(stage) passes the
        entry's delay, 0 in every other situation."""
        entry = self.get(e)
        if entry is None or not stage or stage[0] <= entry.delay:
            return 0
        return int(x in entry.members)


def f_approx(fam: OracleFamily, e: int, i: int, stage: Seq) -> tuple[int, ...] | None:
    """Stage approximation of the finite set attacked at substage (e, i):
    the first pair(e,i)+1 numbers x < min(stage) with g(e,x,stage) = 1, or
    None when fewer exist."""
    if not stage:
        return None
    need = pair(e, i) + 1
    xs = [x for x in range(stage[0]) if fam.g(e, x, stage) == 1]
    if len(xs) < need:
        return None
    return tuple(xs[:need])


# --- staged colorings --------------------------------------------------------


def _thin_stage(fam: OracleFamily, stage: Seq) -> dict[int, int]:
    """Replay the thin-defeating substage loop at one stage.

    Substages 0..min(stage)-1 are read as pair codes (e, i); a substage with
    a defined approximation claims its least still-uncolored member and
    colors it i.  The closing substage colors everything left with 1.
    """
    s1 = stage[0]
    colors: dict[int, int] = {}
    for u in range(s1):
        e, i = unpair(u)
        approx = f_approx(fam, e, i, stage)
        if approx is None:
            continue
        free = [m for m in approx if m not in colors]
        if free:
            colors[free[0]] = i
    for m in range(s1):
        colors.setdefault(m, 1)
    return colors


def _rainbow_stage(fam: OracleFamily, stage: Seq) -> dict[int, int]:
    """Replay the rainbow-defeating substage loop at one stage.

    Substage e claims the two least unclaimed numbers below min(stage) that
    the e-th approximation puts in X_e, and gives both the color <m, stage>
    for the smaller one m.  The closing substage hands every remaining l its
    own color <l, stage>.  Each stage's codes are fresh, so the whole
    coloring is 2-bounded.
    """
    s1 = stage[0]
    colors: dict[int, int] = {}
    claimed: set[int] = set()
    stage_code = code_seq(stage)
    for e in range(s1):
        cands = [x for x in range(s1) if x not in claimed and fam.g(e, x, stage) == 1]
        if len(cands) >= 2:
            m, l = cands[0], cands[1]
            claimed.update((m, l))
            colors[m] = colors[l] = pair(m, stage_code)
    for l in range(s1):
        colors.setdefault(l, pair(l, stage_code))
    return colors


class StagedColoring(Coloring):
    """Coloring of Product(ExactSize(1), Canonical(alpha)) evaluated by a
    per-stage replay; members are (m) + stage with m < min(stage)."""

    def __init__(self, kind: str, alpha: Ordinal, family: OracleFamily):
        if kind not in ("thin", "rainbow"):
            raise ValueError(f"unknown defeater kind {kind!r}")
        if not alpha.terms:
            raise ValueError("alpha must be at least 1")
        self.kind = kind
        self.alpha = alpha
        self.family = family
        self._cache: dict[Seq, dict[int, int]] = {}
        barrier = Product(ExactSize(1), Canonical(alpha))
        super().__init__(
            barrier,
            self._eval,
            name=f"{kind}-defeater",
            declared_bound=2 if kind == "rainbow" else None,
        )

    def stage_colors(self, stage: Iterable[int]) -> dict[int, int]:
        """All colors assigned at one stage: m -> f(m, stage) for m < min.

        Replays are pure functions of (stage, family); the cache only ever
        holds identical values for a key, so concurrent queries agree.
        """
        key = as_seq(stage)
        if not key:
            raise ValueError("stage must be nonempty")
        if key not in self._cache:
            replay = _thin_stage if self.kind == "thin" else _rainbow_stage
            self._cache[key] = replay(self.family, key)
        return self._cache[key]

    def _eval(self, s: Seq) -> int:
        if len(s) < 2 or s[0] >= s[1]:
            raise ValueError(f"{s} is not of the form (m) + stage with m < min(stage)")
        return self.stage_colors(s[1:])[s[0]]


def thin_defeater(alpha: Ordinal, family: OracleFamily) -> StagedColoring:
    """Coloring that plants every color on every declared-infinite set."""
    return StagedColoring("thin", alpha, family)


def rainbow_defeater(alpha: Ordinal, family: OracleFamily) -> StagedColoring:
    """2-bounded coloring with a planted collision inside every declared set."""
    return StagedColoring("rainbow", alpha, family)


# --- defeat verification ------------------------------------------------------


@dataclass(frozen=True)
class DefeatResult:
    found: tuple | None
    reason: str  # "ok" | "bound-too-small" | "no-oracle-entry" | "BUG: ..."

    @property
    def ok(self) -> bool:
        return self.found is not None

    @property
    def is_bug(self) -> bool:
        return self.reason.startswith("BUG")

    def to_json(self) -> dict:
        if self.found is None:
            return {"found": None, "reason": self.reason}
        *nums, stage = self.found
        return {"found": {"numbers": list(nums), "stage": list(stage)}, "reason": self.reason}


def _stages(alpha: Ordinal, entry: OracleEntry, bound: int) -> Iterator[Seq]:
    """Canonical stages inside the entry's set: for each admissible minimum
    m0 with delay < m0 < bound, the lex-least member of the canonical barrier
    starting at m0 and drawn from the set.  Replays depend on the minimum
    only, so one stage per minimum is exhaustive for defeat search."""
    spec: BarrierSpec = Canonical(alpha)
    for m0 in entry.members.elements():
        if m0 >= bound:
            break
        if m0 <= entry.delay:
            continue
        stage = step(spec, entry.members.stream_from(m0))
        if stage is None:
            return  # finite declared set ran out
        yield stage


def verify_defeat_thin(col: StagedColoring, e: int, i: int, bound: int) -> DefeatResult:
    """Search for m in X_e and a stage inside X_e with f(m, stage) = i.

    The stage minimum is capped by ``bound``; coordinates beyond the minimum
    follow the declared set as far as needed.  When some inspected stage had
    a defined approximation for (e, i), a witness is guaranteed (the claim
    has pair(e,i)+1 candidates and at most pair(e,i) earlier claims), so
    coming up empty in that situation is flagged as a bug.
    """
    if col.kind != "thin":
        raise ValueError("thin defeat check needs a thin defeater")
    entry = col.family.get(e)
    if entry is None:
        return DefeatResult(None, "no-oracle-entry")
    guaranteed = False
    for stage in _stages(col.alpha, entry, bound):
        colors = col.stage_colors(stage)
        for m in range(stage[0]):
            if colors.get(m) == i and m in entry.members:
                return DefeatResult((m, stage), "ok")
        if f_approx(col.family, e, i, stage) is not None:
            guaranteed = True
    if guaranteed:
        return DefeatResult(None, "BUG: defined approximation produced no witness")
    return DefeatResult(None, "bound-too-small")


def verify_defeat_rainbow(col: StagedColoring, e: int, bound: int) -> DefeatResult:
    """Search for m < l in X_e and a stage inside X_e with equal colors.

    Guaranteed once a stage sees at least 2e+2 members of X_e below its
    minimum: the first e substages claim at most 2e of them, so substage e
    finds an unclaimed pair.  Coming up empty past that threshold is a bug.
    """
    if col.kind != "rainbow":
        raise ValueError("rainbow defeat check needs a rainbow defeater")
    entry = col.family.get(e)
    if entry is None:
        return DefeatResult(None, "no-oracle-entry")
    guaranteed = False
    for stage in _stages(col.alpha, entry, bound):
        colors = col.stage_colors(stage)
        below = [x for x in range(stage[0]) if x in entry.members]
        for ia in range(len(below)):
            for ib in range(ia + 1, len(below)):
                m, l = below[ia], below[ib]
                if colors[m] == colors[l]:
                    return DefeatResult((m, l, stage), "ok")
        if len(below) >= 2 * e + 2:
            guaranteed = True
    if guaranteed:
        return DefeatResult(None, "BUG: enough correct members but no collision")
    return DefeatResult(None, "bound-too-small")
