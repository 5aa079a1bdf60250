"""Cubic coordinates, their order and cover relations"""
from __future__ import annotations

__all__ = [
    'CubicCoordinate',
    'validate_cubic', 'is_cubic_coordinate',
    'phi', 'phi_inverse', 'zero_entry',
    'leq_cc', 'rank', 'min_increase', 'minimal_increases', 'covers',
    'is_synchronized', 'is_new'
]

from dataclasses import replace
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .diagrams import (
    DualTamariDiagram, TamariDiagram, TamariIntervalDiagram, check_compatible, validate_dual_tamari,
    validate_tamari
)
from .types import IndexRangeError, InvariantError, Order, SizeError, ValidationError, Verdict
from .util import format_word, parse_word


def _entries(entries: Sequence[int], func_name: str) -> Tuple[int, ...]:
    if any(isinstance(x, bool) or not isinstance(x, int) for x in entries):
        raise TypeError(f'{func_name}: entries must be integers')
    return tuple(entries)


def _split(c: Sequence[int]) -> Tuple[List[int], List[int]]:
    u = [x if x > 0 else 0 for x in c] + [0]
    v = [0] + [-x if x < 0 else 0 for x in c]
    return u, v


def is_cubic_coordinate(entries: Sequence[int]) -> bool:
    """Fast membership test, same answer as ``validate_cubic``"""
    u, v = _split(entries)
    n = len(u)
    for i in range(n):
        ui = u[i]
        if ui > n - 1 - i:
            return False
        for j in range(1, ui + 1):
            # slope of u, then compatibility with v
            if u[i + j] > ui - j or v[i + j] >= j:
                return False
        vi = v[i]
        if vi > i:
            return False
        for j in range(1, vi + 1):
            if v[i - j] > vi - j:
                return False
    return True


def validate_cubic(entries: Sequence[int]) -> Verdict:
    """Checks that the pair (u, v) built from ``entries`` is a Tamari interval diagram,
    with ``u_i = max(c_i, 0)``, ``u_n = 0``, ``v_1 = 0`` and ``v_{i+1} = |min(c_i, 0)|``.

    Args:
        entries (Sequence[int]): c_1 ... c_{n-1}. The empty tuple is the coordinate of size 1.

    Returns:
        Verdict: ok, or the first failing diagram condition. Indices refer to the letters of u or v,
        as stated by the message prefix.
    """
    u, v = _split(_entries(entries, 'validate_cubic'))
    verdict = validate_tamari(u)
    if not verdict:
        return replace(verdict, message=f'u: {verdict.message}')
    verdict = validate_dual_tamari(v)
    if not verdict:
        return replace(verdict, message=f'v: {verdict.message}')
    return check_compatible(u, v)


class CubicCoordinate(tuple[int, ...]):
    """Signed (n - 1)-tuple encoding a Tamari interval of size n"""

    def __new__(cls, entries: Iterable[int] = (), /) -> CubicCoordinate:
        c = tuple(entries)
        verdict = validate_cubic(c)
        if not verdict:
            raise ValidationError(verdict, 'cubic coordinate')
        return super().__new__(cls, c)

    @classmethod
    def _unchecked(cls, entries: Iterable[int]) -> CubicCoordinate:
        return tuple.__new__(cls, entries)

    @classmethod
    def from_text(cls, text: str) -> CubicCoordinate:
        return cls(parse_word(text))

    @classmethod
    def minimum(cls, n: int) -> CubicCoordinate:
        """(-1, -2, ..., -(n-1))"""
        return cls._unchecked(-i for i in range(1, n))

    @classmethod
    def maximum(cls, n: int) -> CubicCoordinate:
        """(n-1, n-2, ..., 1)"""
        return cls._unchecked(n - i for i in range(1, n))

    @property
    def n(self) -> int:
        return len(self) + 1

    def entry(self, i: int) -> int:
        """1-based access"""
        _check_index(self, i, 'CubicCoordinate.entry')
        return self[i - 1]

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f'<CubicCoordinate object: \'({self})\'>'

    def __getnewargs__(self) -> Tuple[Any, ...]:
        return (tuple(self), )


def _as_cc(c: Sequence[int]) -> CubicCoordinate:
    return c if isinstance(c, CubicCoordinate) else CubicCoordinate(c)


def _check_index(c: Sequence[int], i: int, func_name: str) -> None:
    if not 1 <= i <= len(c):
        raise IndexRangeError(f'{func_name}: index {i} out of [1, {len(c)}]')


def phi(c: Sequence[int]) -> TamariIntervalDiagram:
    """Tamari interval diagram of a cubic coordinate.

    Args:
        c (Sequence[int]): Cubic coordinate.

    Raises:
        ValidationError: ``c`` is not a cubic coordinate. The verdict names the failing diagram condition.

    Returns:
        TamariIntervalDiagram: ``u_i = max(c_i, 0)``, ``v_{i+1} = |min(c_i, 0)|``.
    """
    u, v = _split(_as_cc(c))
    return TamariIntervalDiagram._unchecked(TamariDiagram._unchecked(u), DualTamariDiagram._unchecked(v))


def phi_inverse(tid: TamariIntervalDiagram) -> CubicCoordinate:
    """``c = (u_1 - v_2, u_2 - v_3, ..., u_{n-1} - v_n)``"""
    return CubicCoordinate._unchecked(tid.u[i] - tid.v[i + 1] for i in range(tid.n - 1))


def zero_entry(c: CubicCoordinate, i: int) -> CubicCoordinate:
    """Sets entry ``i`` (1-based) to 0. The result is always a cubic coordinate.

    Raises:
        IndexRangeError: ``i`` is not in [1, n - 1].
    """
    c = _as_cc(c)
    _check_index(c, i, 'zero_entry')
    out = c[:i - 1] + (0, ) + c[i:]
    if not is_cubic_coordinate(out):
        raise InvariantError(f'zero_entry: zeroing entry {i} of ({c}) gave an invalid coordinate')
    return CubicCoordinate._unchecked(out)


def leq_cc(a: Sequence[int], b: Sequence[int]) -> Order:
    """Componentwise comparison in O(n).

    Raises:
        SizeError: Sizes differ.
    """
    if len(a) != len(b):
        raise SizeError(f'leq_cc: sizes differ ({len(a) + 1} != {len(b) + 1})')
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Order.EQ
    if le:
        return Order.LE
    if ge:
        return Order.GE
    return Order.INCOMPARABLE


def rank(c: Sequence[int]) -> int:
    """Sum of entries. Strictly increasing along ≤cc."""
    return sum(c)


def min_increase(c: CubicCoordinate, i: int) -> Optional[CubicCoordinate]:
    """Minimal increase of entry ``i``: the cover of ``c`` differing from it only in entry ``i``.

    Candidates ``c_i + 1, ..., n - i`` are tried in ascending order.

    Args:
        c (CubicCoordinate): Source coordinate.

        i (int): 1-based index in [1, n - 1].

    Raises:
        IndexRangeError: ``i`` out of range.

    Returns:
        Optional[CubicCoordinate]: The increased coordinate, or None when entry ``i`` cannot grow.
    """
    c = _as_cc(c)
    _check_index(c, i, 'min_increase')
    work = list(c)
    for x in range(c[i - 1] + 1, c.n - i + 1):
        work[i - 1] = x
        if is_cubic_coordinate(work):
            return CubicCoordinate._unchecked(work)
    return None


def minimal_increases(c: CubicCoordinate) -> Dict[int, CubicCoordinate]:
    """Index -> ↑_i(c), for every defined minimal increase"""
    c = _as_cc(c)
    out: Dict[int, CubicCoordinate] = {}
    for i in range(1, c.n):
        up = min_increase(c, i)
        if up is not None:
            out[i] = up
    return out


def covers(c: CubicCoordinate) -> FrozenSet[CubicCoordinate]:
    """Every element covering ``c`` in (CC_n, ≤cc)"""
    return frozenset(minimal_increases(c).values())


def is_synchronized(x: Union[CubicCoordinate, TamariIntervalDiagram]) -> bool:
    """No zero entry. A Tamari interval diagram is tested through its cubic coordinate."""
    if isinstance(x, TamariIntervalDiagram):
        return x.is_synchronized()
    return all(x)


def is_new(x: Union[TamariIntervalDiagram, CubicCoordinate]) -> bool:
    """Checks the three conditions of a new Tamari interval diagram:
    ``u_i <= n - i - 1`` for i in [n - 1], ``v_j <= j - 2`` for j in [2, n],
    and ``u_k < l - k - 1`` or ``v_l < l - k - 1`` whenever ``k + 1 < l``.
    """
    tid = x if isinstance(x, TamariIntervalDiagram) else phi(x)
    u, v, n = tid.u, tid.v, tid.n
    if any(u[i - 1] > n - i - 1 for i in range(1, n)):
        return False
    if any(v[j - 1] > j - 2 for j in range(2, n + 1)):
        return False
    for k in range(1, n + 1):
        for l in range(k + 2, n + 1):
            if u[k - 1] >= l - k - 1 and v[l - 1] >= l - k - 1:
                return False
    return True
