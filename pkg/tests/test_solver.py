from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from barriers.barrier import ExactSize, Schreier, front
from barriers.coloring import (
    BoundViolationError,
    Coloring,
    PartialColoringError,
    builtin_coloring,
    check_bounded,
    table_coloring,
)
from barriers.solver import Witness, default_universe, find, verify_free, verify_mono, verify_rainbow, verify_thin


def const(spec, value):
    return builtin_coloring(spec, "const", {"value": value})


def test_verify_mono():
    assert verify_mono(const(Schreier(), 4), range(8))
    parity = builtin_coloring(Schreier(), "min-parity")
    assert verify_mono(parity, (0, 2, 4, 6, 8, 10))
    two = table_coloring(ExactSize(1), {(0,): 0, (1,): 1})
    assert not verify_mono(two, (0, 1))
    assert verify_mono(two, ())  # empty front is vacuously constant


def test_verify_free():
    f = builtin_coloring(Schreier(), "min")
    assert verify_free(f, range(9))  # the color always lands inside the member
    g = builtin_coloring(ExactSize(1), "max-plus-one")
    assert not verify_free(g, (0, 1, 2))
    assert verify_free(const(Schreier(), 0), range(1, 10))  # 0 outside the set


def test_verify_thin():
    f = const(ExactSize(1), 0)
    assert verify_thin(f, (), (0, 1))  # empty image omits everything
    two = table_coloring(ExactSize(1), {(0,): 0, (1,): 1})
    assert not verify_thin(two, (0, 1), (0, 1))
    assert verify_thin(two, (0,), (0, 1))


def test_verify_rainbow():
    rank = builtin_coloring(Schreier(), "rank")
    assert verify_rainbow(rank, range(8))
    assert not verify_rainbow(const(ExactSize(1), 3), (0, 1))


def test_verify_rejects_non_base_elements():
    from barriers.barrier import Plus

    f = const(Plus(ExactSize(1)), 0)
    with pytest.raises(ValueError):
        verify_mono(f, (0, 1))  # 0 is outside the shifted base


def test_partial_coloring_raises():
    f = table_coloring(ExactSize(1), {(0,): 1})
    with pytest.raises(PartialColoringError):
        verify_mono(f, (0, 1))


def test_find_mono_pigeonhole():
    two = table_coloring(ExactSize(1), {(x,): x % 2 for x in range(6)})
    w = find("mono", two, range(6), 3)
    assert w is not None and w.property == "mono"
    assert verify_mono(two, w.h)
    assert w.h == (0, 2, 4)  # smallest-lex witness at minimal size


def test_find_rainbow_none_for_constant():
    f = const(ExactSize(1), 7)
    assert find("rainbow", f, range(4), 2) is None


def test_find_free_excludes_successors():
    f = builtin_coloring(ExactSize(1), "max-plus-one")
    w = find("free", f, range(9), 4)
    assert w is not None and w.h == (0, 2, 4, 6)


def test_find_thin_uses_declared_universe():
    f = Coloring(ExactSize(1), lambda s: 0, name="zero", colors=(0, 1))
    w = find("thin", f, range(3), 2)
    assert w is not None and w.detail == 1  # omits the declared color 1


def test_find_none_means_exhausted():
    f = const(ExactSize(1), 7)
    g = tuple(range(8))
    assert find("rainbow", f, g, 2) is None
    for size in range(2, len(g) + 1):
        for h in combinations(g, size):
            assert not verify_rainbow(f, h)
    # same for a mono search that cannot reach its size
    two = table_coloring(ExactSize(1), {(x,): x % 2 for x in range(8)})
    assert find("mono", two, g, 5) is None
    for size in range(5, len(g) + 1):
        for h in combinations(g, size):
            assert not verify_mono(two, h)


def test_find_results_always_verify():
    members = front(Schreier(), range(9))
    f = table_coloring(Schreier(), {s: (3 * s[0] + len(s)) % 4 for s in members})
    universe = default_universe(f, range(9))
    checks = {
        "mono": verify_mono,
        "free": verify_free,
        "rainbow": verify_rainbow,
        "thin": lambda g, h: verify_thin(g, h, universe),
    }
    for prop, check in checks.items():
        w = find(prop, f, range(9), 3)
        if w is not None:
            assert check(f, w.h), (prop, w)


@given(st.sets(st.integers(0, 9), max_size=7), st.data())
def test_anti_monotone_in_the_solution_set(h, data):
    h = tuple(sorted(h))
    members = front(Schreier(), range(10))
    table = {s: (s[0] * 7 + len(s)) % 5 for s in members}
    f = table_coloring(Schreier(), table)
    sub = tuple(sorted(data.draw(st.sets(st.sampled_from(h or (0,)), max_size=len(h)))))
    sub = tuple(x for x in sub if x in h)
    universe = default_universe(f, range(10))
    if verify_free(f, h):
        assert verify_free(f, sub)
    if verify_rainbow(f, h):
        assert verify_rainbow(f, sub)
    if verify_thin(f, h, universe):
        assert verify_thin(f, sub, universe)
    if verify_mono(f, h):
        assert verify_mono(f, sub)


def test_check_bounded_detects_violations():
    members = front(ExactSize(1), range(6))
    f = table_coloring(ExactSize(1), {s: 0 for s in members}, declared_bound=2)
    ok, worst = check_bounded(f, range(6))
    assert not ok and worst == 6
    g = table_coloring(ExactSize(1), {s: i // 2 for i, s in enumerate(members)}, declared_bound=2)
    ok, worst = check_bounded(g, range(6))
    assert ok and worst == 2


def test_witness_json():
    assert Witness((1, 2), "mono", 0).to_json() == {"h": [1, 2], "property": "mono", "detail": 0}
