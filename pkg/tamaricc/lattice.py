"""Materialised cubic coordinate posets, meets and joins, and count verification"""
from __future__ import annotations

__all__ = [
    'PosetInstance', 'CountRow', 'CountReport',
    'enumerate_cc', 'count_cc', 'meet', 'join', 'meet_table', 'join_table', 'check_counts'
]

import logging
from collections import deque
from dataclasses import dataclass, field
from time import perf_counter
from typing import Any, Callable, Deque, Dict, List, Optional, Set, Tuple

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from .cubic import CubicCoordinate, covers, phi_inverse
from .diagrams import enumerate_tids
from .trees import enumerate_intervals
from .types import SIZE_CAP, Edge, IndexRangeError, InvariantError
from .util import check_cap, check_size, sized, tamari_interval_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PosetInstance:
    """
    (CC_n, <=cc) as a finite structure.

    ``elements`` are sorted lexicographically and ``hasse`` holds the cover edges
    ``(lower index, upper index)``, sorted.
    """
    n: int
    elements: Tuple[CubicCoordinate, ...]
    hasse: Tuple[Edge, ...]
    coords: NDArray[np.int64] = field(init=False, repr=False, compare=False)
    ranks: NDArray[np.int64] = field(init=False, repr=False, compare=False)
    _index: Dict[CubicCoordinate, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {c: k for k, c in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise InvariantError('PosetInstance: elements are not distinct')
        coords = np.array(self.elements, dtype=np.int64).reshape(len(self.elements), self.n - 1)
        object.__setattr__(self, '_index', index)
        object.__setattr__(self, 'coords', coords)
        object.__setattr__(self, 'ranks', coords.sum(axis=1))

        has_lower = np.zeros(len(self), dtype=bool)
        has_upper = np.zeros(len(self), dtype=bool)
        for lo, hi in self.hasse:
            has_upper[lo] = True
            has_lower[hi] = True
        if (~has_lower).sum() != 1 or (~has_upper).sum() != 1:
            raise InvariantError(
                f'PosetInstance: expected a unique minimum and maximum, got {int((~has_lower).sum())} '
                f'minimal and {int((~has_upper).sum())} maximal elements'
            )

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, c: CubicCoordinate) -> int:
        try:
            return self._index[CubicCoordinate._unchecked(c)]
        except KeyError:
            raise IndexRangeError(f'PosetInstance.index_of: ({",".join(map(str, c))}) is not in CC_{self.n}') from None

    @property
    def minimum(self) -> int:
        return int(np.argmin(self.ranks))

    @property
    def maximum(self) -> int:
        return int(np.argmax(self.ranks))

    def leq(self, a: int, b: int) -> bool:
        return bool((self.coords[a] <= self.coords[b]).all())

    def down_set(self, a: int) -> NDArray[np.bool_]:
        """Mask of the elements below ``a``, ``a`` included"""
        return (self.coords <= self.coords[a]).all(axis=1)

    def up_set(self, a: int) -> NDArray[np.bool_]:
        """Mask of the elements above ``a``, ``a`` included"""
        return (self.coords >= self.coords[a]).all(axis=1)

    def up_degree(self) -> NDArray[np.int64]:
        """Number of elements covering each element"""
        lows = np.array([lo for lo, _ in self.hasse], dtype=np.int64)
        return np.bincount(lows, minlength=len(self))

    def leq_matrix(self) -> NDArray[np.bool_]:
        """``out[a, b]`` iff ``elements[a] <=cc elements[b]``"""
        return (self.coords[:, None, :] <= self.coords[None, :, :]).all(axis=2)

    def to_graph(self) -> nx.DiGraph:
        """Hasse diagram, nodes are element indices carrying their coordinate as ``c``"""
        graph = nx.DiGraph()
        graph.add_nodes_from((k, {'c': c}) for k, c in enumerate(self.elements))
        graph.add_edges_from(self.hasse)
        return graph


@sized
def enumerate_cc(n: int, *, cap: int = SIZE_CAP) -> PosetInstance:
    """
    Materialises CC_n with its Hasse diagram, by breadth-first search upward from
    the minimum ``(-1, -2, ..., -(n-1))`` along minimal increases.

    Args:
        n (int): Size, at least 1.

        cap (int, optional):
            Largest accepted size. Raising it above the default is allowed but memory grows quickly.
            Defaults to SIZE_CAP.

    Raises:
        SizeCapError: ``n > cap``.

    Returns:
        PosetInstance: The poset, with 2(4n+1)! / ((n+1)! (3n+2)!) elements.
    """
    start = perf_counter()
    bottom = CubicCoordinate.minimum(n)
    seen: Set[CubicCoordinate] = {bottom}
    queue: Deque[CubicCoordinate] = deque([bottom])
    raw: List[Tuple[CubicCoordinate, CubicCoordinate]] = []
    while queue:
        c = queue.popleft()
        for up in covers(c):
            raw.append((c, up))
            if up not in seen:
                seen.add(up)
                queue.append(up)

    elements = tuple(sorted(seen))
    index = {c: k for k, c in enumerate(elements)}
    hasse = tuple(sorted((index[lo], index[hi]) for lo, hi in raw))
    logger.debug('enumerate_cc: n=%d, %d elements, %d cover edges in %.3fs',
                 n, len(elements), len(hasse), perf_counter() - start)
    return PosetInstance(n, elements, hasse)


@sized
def count_cc(n: int, *, cap: int = SIZE_CAP) -> int:
    """|CC_n| through the coordinates of every Tamari interval diagram, without building the Hasse diagram"""
    return len({phi_inverse(tid) for tid in enumerate_tids(n)})


def _check_index(p: PosetInstance, a: int, func_name: str) -> None:
    if not 0 <= a < len(p):
        raise IndexRangeError(f'{func_name}: element index {a} out of [0, {len(p) - 1}]')


def meet(p: PosetInstance, a: int, b: int) -> int:
    """
    Greatest lower bound of two elements.
    The common lower set is computed, then its element of largest rank must dominate all of it.

    Args:
        p (PosetInstance): Materialised poset.

        a (int): Element index.

        b (int): Element index.

    Raises:
        InvariantError: The common lower set has no maximum.

    Returns:
        int: Index of the meet.
    """
    _check_index(p, a, 'meet')
    _check_index(p, b, 'meet')
    common = p.down_set(a) & p.down_set(b)
    return _extremum(p, common, np.argmax, p.down_set, f'meet({a}, {b})')


def join(p: PosetInstance, a: int, b: int) -> int:
    """Least upper bound of two elements, dual of ``meet``"""
    _check_index(p, a, 'join')
    _check_index(p, b, 'join')
    common = p.up_set(a) & p.up_set(b)
    return _extremum(p, common, np.argmin, p.up_set, f'join({a}, {b})')


def _extremum(p: PosetInstance, common: NDArray[np.bool_], pick: Callable[..., Any],
              bound_set: Callable[[int], NDArray[np.bool_]], what: str) -> int:
    candidates = np.flatnonzero(common)
    if candidates.size == 0:
        raise InvariantError(f'{what}: no common bound')
    best = int(candidates[pick(p.ranks[candidates])])
    if (common & ~bound_set(best)).any():
        raise InvariantError(f'{what}: common bounds have no unique extremum')
    return best


def meet_table(p: PosetInstance) -> NDArray[np.int64]:
    """``out[a, b] = meet(p, a, b)`` for every pair, one row at a time"""
    return _table(p, p.leq_matrix(), np.argmax, 'meet_table')


def join_table(p: PosetInstance) -> NDArray[np.int64]:
    """``out[a, b] = join(p, a, b)`` for every pair, one row at a time"""
    return _table(p, p.leq_matrix().T, np.argmin, 'join_table')


def _table(p: PosetInstance, below: NDArray[np.bool_], pick: Callable[..., Any], func_name: str) -> NDArray[np.int64]:
    # below[x, a]: x lies on the bounded side of a
    size = len(p)
    fill = np.iinfo(np.int64).min if pick is np.argmax else np.iinfo(np.int64).max
    out = np.empty((size, size), dtype=np.int64)
    for a in range(size):
        common = below[:, a:a + 1] & below
        scores = np.where(common, p.ranks[:, None], fill)
        best = pick(scores, axis=0)
        if not common[best, np.arange(size)].all():
            raise InvariantError(f'{func_name}: row {a} has pairs without a common bound')
        if (common & ~below[:, best]).any():
            raise InvariantError(f'{func_name}: row {a} has pairs without a unique extremal bound')
        out[a] = best
    return out


@dataclass(frozen=True)
class CountRow:
    n: int
    formula: int
    tids: int
    cc: int
    tree_pairs: Optional[int] = None

    @property
    def ok(self) -> bool:
        values = {self.formula, self.tids, self.cc}
        if self.tree_pairs is not None:
            values.add(self.tree_pairs)
        return len(values) == 1

    def __str__(self) -> str:
        pairs = '-' if self.tree_pairs is None else str(self.tree_pairs)
        return f'n={self.n}: formula={self.formula} tids={self.tids} cc={self.cc} tree-pairs={pairs}' \
            + ('' if self.ok else '  MISMATCH')


@dataclass(frozen=True)
class CountReport:
    rows: Tuple[CountRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def mismatches(self) -> List[CountRow]:
        return [row for row in self.rows if not row.ok]

    def __str__(self) -> str:
        return '\n'.join(str(row) for row in self.rows)


def check_counts(n_max: int, *, cap: int = SIZE_CAP, tree_pairs_max: int = 5) -> CountReport:
    """
    Compares, for every n <= ``n_max``, the closed formula 2(4n+1)! / ((n+1)! (3n+2)!),
    the number of Tamari interval diagrams, the size of the materialised CC_n
    and, up to ``tree_pairs_max``, the number of comparable pairs of binary trees.

    Args:
        n_max (int): Largest size checked.

        cap (int, optional): Largest accepted size. Defaults to SIZE_CAP.

        tree_pairs_max (int, optional): Largest size for the tree pair count. Defaults to 5.

    Raises:
        SizeError: ``n_max < 1``.
        SizeCapError: ``n_max > cap``.

    Returns:
        CountReport: One row per size, mismatching rows flagged.
    """
    check_size(n_max, 'check_counts')
    check_cap(n_max, cap, 'check_counts')
    rows: List[CountRow] = []
    for n in range(1, n_max + 1):
        pairs = sum(1 for _ in enumerate_intervals(n, cap=cap)) if n <= tree_pairs_max else None
        row = CountRow(
            n, tamari_interval_count(n), sum(1 for _ in enumerate_tids(n)), len(enumerate_cc(n, cap=cap)), pairs
        )
        logger.info('check_counts: %s', row)
        rows.append(row)
    return CountReport(tuple(rows))
