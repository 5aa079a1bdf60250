"""Cells of the cubic realization and the bijection with synchronized coordinates"""
from __future__ import annotations

__all__ = [
    'Cell',
    'is_minimal_cellular', 'maximal_correspondent', 'apply_increases', 'divergent_orders',
    'cell_vertices', 'gamma_map', 'enumerate_cells', 'interior_points'
]

import logging
from dataclasses import dataclass
from itertools import permutations, product
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .cubic import CubicCoordinate, is_cubic_coordinate, min_increase
from .lattice import PosetInstance, enumerate_cc
from .types import SIZE_CAP, InvariantError, PreconditionError, SizeError
from .util import format_word, sized

logger = logging.getLogger(__name__)


def is_minimal_cellular(c: CubicCoordinate) -> bool:
    """Every minimal increase is defined. The size-1 coordinate is vacuously minimal-cellular."""
    return all(min_increase(c, i) is not None for i in range(1, len(c) + 1))


def apply_increases(c: CubicCoordinate, order: Iterable[int]) -> Optional[CubicCoordinate]:
    """
    Applies the minimal increases ``↑_i`` in the given index order.

    Args:
        c (CubicCoordinate): Starting coordinate.

        order (Iterable[int]): 1-based indices, first applied first.

    Returns:
        Optional[CubicCoordinate]: Final coordinate, or None as soon as one increase is undefined.
    """
    out = c
    for i in order:
        up = min_increase(out, i)
        if up is None:
            return None
        out = up
    return out


def maximal_correspondent(c: CubicCoordinate) -> CubicCoordinate:
    """
    ``↑_1(↑_2(...(↑_{n-1}(c))...))``, the index n - 1 applied first.

    Args:
        c (CubicCoordinate): Minimal-cellular coordinate.

    Raises:
        PreconditionError: ``c`` is not minimal-cellular.
        InvariantError: An increase is undefined along the way.

    Returns:
        CubicCoordinate: The maximal-cellular correspondent.
    """
    if not is_minimal_cellular(c):
        raise PreconditionError(f'maximal_correspondent: ({format_word(c)}) is not minimal-cellular')
    out = apply_increases(c, range(len(c), 0, -1))
    if out is None:
        raise InvariantError(f'maximal_correspondent: an increase of ({format_word(c)}) is undefined')
    return out


def divergent_orders(c: CubicCoordinate) -> List[Tuple[int, ...]]:
    """Index orders whose increases, applied to a minimal-cellular ``c``, do not reach its maximal correspondent"""
    target = maximal_correspondent(c)
    return [
        order for order in permutations(range(1, len(c) + 1))
        if apply_increases(c, order) != target
    ]


@dataclass(frozen=True)
class Cell:
    """
    Pair ``⟨c_min, c_max⟩`` of a minimal-cellular coordinate and its maximal correspondent.

    In each position, a negative ``c_min`` entry gives a non-positive ``c_max`` entry,
    a non-negative one gives a positive entry, and the two entries always differ.
    """
    c_min: CubicCoordinate
    c_max: CubicCoordinate

    def __post_init__(self) -> None:
        for name in ('c_min', 'c_max'):
            if not isinstance(getattr(self, name), CubicCoordinate):
                object.__setattr__(self, name, CubicCoordinate(getattr(self, name)))
        if len(self.c_min) != len(self.c_max):
            raise SizeError(f'Cell: sizes differ ({len(self.c_min) + 1} != {len(self.c_max) + 1})')
        if maximal_correspondent(self.c_min) != self.c_max:
            raise InvariantError(f'Cell: ({self.c_max}) is not the maximal correspondent of ({self.c_min})')
        for i, (lo, hi) in enumerate(zip(self.c_min, self.c_max), 1):
            if (lo < 0 and hi > 0) or (lo >= 0 and hi <= 0):
                raise InvariantError(f'Cell: entry {i} breaks sign coherence ({lo} -> {hi})')
            if lo == hi:
                raise InvariantError(f'Cell: entry {i} does not move ({lo})')

    @classmethod
    def from_minimal(cls, c: CubicCoordinate) -> Cell:
        return cls(c, maximal_correspondent(c))

    @property
    def n(self) -> int:
        return len(self.c_min) + 1

    def __str__(self) -> str:
        return f'⟨({self.c_min}), ({self.c_max})⟩'


def cell_vertices(cell: Cell) -> FrozenSet[CubicCoordinate]:
    """
    The 2^(n-1) coordinates mixing the entries of ``c_min`` and ``c_max``.

    Raises:
        InvariantError: A mix is not a cubic coordinate.
    """
    out: Set[CubicCoordinate] = set()
    for mix in product(*zip(cell.c_min, cell.c_max)):
        if not is_cubic_coordinate(mix):
            raise InvariantError(f'cell_vertices: ({format_word(mix)}) of {cell} is not a cubic coordinate')
        out.add(CubicCoordinate._unchecked(mix))
    return frozenset(out)


def gamma_map(cell: Cell) -> CubicCoordinate:
    """Entry ``i`` is ``c_min_i`` when negative, ``c_max_i`` otherwise. Always synchronized."""
    return CubicCoordinate._unchecked(lo if lo < 0 else hi for lo, hi in zip(cell.c_min, cell.c_max))


@sized
def enumerate_cells(n: int, *, cap: int = SIZE_CAP, poset: Optional[PosetInstance] = None) -> Iterator[Cell]:
    """
    One cell per minimal-cellular element of CC_n, in the lexicographic order of ``c_min``.

    Args:
        n (int): Size, at least 1.

        cap (int, optional): Largest accepted size. Defaults to SIZE_CAP.

        poset (PosetInstance, optional): Already materialised CC_n. Defaults to None.

    Returns:
        Iterator[Cell]: Stream of cells.
    """
    if poset is None:
        poset = enumerate_cc(n, cap=cap)
    elif poset.n != n:
        raise SizeError(f'enumerate_cells: poset of size {poset.n} given for size {n}')
    count = 0
    for c in poset.elements:
        if is_minimal_cellular(c):
            count += 1
            yield Cell.from_minimal(c)
    logger.debug('enumerate_cells: n=%d, %d cells', n, count)


def interior_points(cell: Cell) -> FrozenSet[CubicCoordinate]:
    """Every cubic coordinate ``c`` with ``c_min <=cc c <=cc c_max``"""
    ranges: Sequence[range] = [range(lo, hi + 1) for lo, hi in zip(cell.c_min, cell.c_max)]
    return frozenset(CubicCoordinate._unchecked(c) for c in product(*ranges) if is_cubic_coordinate(c))
