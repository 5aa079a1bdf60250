import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CC3, CC3_SYNCHRONIZED, EXAMPLE_C, EXAMPLE_U, EXAMPLE_V, edge_coordinates
from tamaricc import (
    CC, TID, Condition, CubicCoordinate, IndexRangeError, Order, SizeError, ValidationError, covers, enumerate_tids,
    is_cubic_coordinate, is_new, is_synchronized, leq_cc, min_increase, minimal_increases, phi, phi_inverse, rank,
    validate_cubic, zero_entry
)


def test_phi_example():
    tid = phi(CC(EXAMPLE_C))
    assert tid.u == EXAMPLE_U
    assert tid.v == EXAMPLE_V
    assert phi_inverse(tid) == EXAMPLE_C
    assert phi_inverse(TID(EXAMPLE_U, EXAMPLE_V)) == EXAMPLE_C


def test_phi_small():
    assert phi(CC(())) == TID((0, ), (0, ))
    assert phi(CC((-1, ))) == TID((0, 0), (0, 1))
    assert phi(CC((1, ))) == TID((1, 0), (0, 0))
    assert phi(CC((-1, -2))) == TID((0, 0, 0), (0, 1, 2))
    assert phi(CC((2, 1))) == TID((2, 1, 0), (0, 0, 0))


def test_phi_rejects():
    with pytest.raises(ValidationError):
        phi((1, 1))


@pytest.mark.parametrize('n', range(1, 7))
def test_phi_roundtrip(n):
    coords = set()
    for tid in enumerate_tids(n):
        c = phi_inverse(tid)
        assert phi(c) == tid
        assert is_cubic_coordinate(c)
        coords.add(c)
    assert all(len(c) == n - 1 for c in coords)


def test_validate_cubic():
    assert validate_cubic(())
    assert validate_cubic(EXAMPLE_C)
    verdict = validate_cubic((1, 1))
    assert (verdict.condition, verdict.index) == (Condition.SLOPE, 1)
    assert verdict.message.startswith('u: ')
    verdict = validate_cubic((-1, -1))
    assert (verdict.condition, verdict.index, verdict.other) == (Condition.SLOPE, 3, 1)
    assert verdict.message.startswith('v: ')
    verdict = validate_cubic((3, 0))
    assert verdict.condition is Condition.BOUND
    with pytest.raises(TypeError):
        validate_cubic((1.0, ))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(-n, n), min_size=n - 1, max_size=n - 1)))
@settings(max_examples=500)
def test_fast_check_agrees(entries):
    assert is_cubic_coordinate(entries) == bool(validate_cubic(entries))


def test_cubic_coordinate_type():
    c = CubicCoordinate(EXAMPLE_C)
    assert c.n == 10
    assert c.entry(1) == 9 and c.entry(9) == -2
    assert str(c) == '9,-1,2,1,-4,4,3,1,-2'
    assert repr(CC((0, 1))) == "<CubicCoordinate object: '(0,1)'>"
    assert CubicCoordinate.from_text('(-1,-2)') == (-1, -2)
    assert CubicCoordinate.from_text('') == ()
    assert CubicCoordinate().n == 1
    with pytest.raises(IndexRangeError):
        c.entry(10)
    with pytest.raises(ValidationError):
        CubicCoordinate((1, 1))


@pytest.mark.parametrize('n', range(1, 6))
def test_extremes(n):
    assert CubicCoordinate.minimum(n) == tuple(-i for i in range(1, n))
    assert CubicCoordinate.maximum(n) == tuple(n - i for i in range(1, n))
    assert is_cubic_coordinate(CubicCoordinate.minimum(n))
    assert is_cubic_coordinate(CubicCoordinate.maximum(n))


def test_zero_entry():
    assert zero_entry(CC(EXAMPLE_C), 1) == (0, -1, 2, 1, -4, 4, 3, 1, -2)
    assert zero_entry(CC((2, 1)), 2) == (2, 0)
    assert zero_entry(CC((-1, -2)), 1) == (0, -2)
    with pytest.raises(IndexRangeError):
        zero_entry(CC((2, 1)), 0)
    with pytest.raises(IndexRangeError):
        zero_entry(CC((2, 1)), 3)


@pytest.mark.parametrize('n', range(2, 6))
def test_zero_entry_closed(n):
    for tid in enumerate_tids(n):
        c = phi_inverse(tid)
        for i in range(1, n):
            assert is_cubic_coordinate(zero_entry(c, i))


@pytest.mark.parametrize('a, b, order', [
    ((0, 0), (2, 1), Order.LE),
    ((2, 1), (0, 0), Order.GE),
    ((0, 1), (0, 1), Order.EQ),
    ((1, -2), (0, 1), Order.INCOMPARABLE),
    ((), (), Order.EQ),
])
def test_leq_cc(a, b, order):
    assert leq_cc(a, b) is order


def test_leq_cc_sizes():
    with pytest.raises(SizeError):
        leq_cc((0, ), (0, 0))


def test_rank():
    assert rank(EXAMPLE_C) == 13
    assert rank(()) == 0


def test_rank_increases_along_covers(cc4):
    for lo, hi in edge_coordinates(cc4):
        assert rank(hi) > rank(lo)


def test_min_increase():
    assert min_increase(CC((0, 1)), 1) == (2, 1)
    assert min_increase(CC((0, 0)), 1) == (1, 0)
    assert min_increase(CC((0, 0)), 2) == (0, 1)
    assert min_increase(CC((-1, -2)), 2) == (-1, 0)
    assert min_increase(CC((2, 1)), 1) is None
    assert min_increase(CC((2, 1)), 2) is None
    with pytest.raises(IndexRangeError):
        min_increase(CC((0, 0)), 3)


def test_minimal_increases():
    assert minimal_increases(CC((-1, -2))) == {1: (0, -2), 2: (-1, 0)}
    assert minimal_increases(CC((-1, 1))) == {1: (0, 1)}
    assert minimal_increases(CC(())) == {}


def test_covers_cc3(cc3):
    assert set(edge_coordinates(cc3)) == {(c, up) for c in cc3.elements for up in covers(c)}
    assert covers(CC((2, 1))) == frozenset()


def test_synchronized():
    assert {c for c in CC3 if is_synchronized(CC(c))} == CC3_SYNCHRONIZED
    assert is_synchronized(TID(EXAMPLE_U, EXAMPLE_V))
    assert is_synchronized(CC(EXAMPLE_C))
    assert not is_synchronized(phi(CC((0, 1))))
    assert is_synchronized(CC(()))


def test_new():
    assert {c for c in CC3 if is_new(CC(c))} == {(0, 0), (0, -1), (1, 0)}
    assert is_new(CC((0, )))
    assert not is_new(CC((1, )))
    assert is_new(phi(CC((0, 0))))


@pytest.mark.parametrize('n', range(2, 7))
def test_synchronized_never_new(n):
    for tid in enumerate_tids(n):
        assert not (tid.is_synchronized() and is_new(tid))
