"""Naive reference implementations and the cross-validation suite built on them"""
from __future__ import annotations

__all__ = [
    'CLOSURE_MAX', 'BOX_FILTER_MAX', 'POSET_FILTER_MAX', 'TREE_PAIRS_MAX',
    'PropertyResult', 'CheckReport',
    'tamari_order_by_closure', 'cc_by_box_filter', 'interval_posets_by_filter', 'covers_by_definition',
    'run_checks'
]

import logging
from dataclasses import dataclass
from itertools import product
from time import perf_counter
from typing import Callable, FrozenSet, List, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from .cells import cell_vertices, enumerate_cells, gamma_map, is_minimal_cellular
from .cubic import CubicCoordinate, is_new, is_synchronized, phi, phi_inverse, validate_cubic, zero_entry
from .diagrams import check_compatible, enumerate_tids
from .lattice import count_cc, enumerate_cc, join_table, meet_table
from .posets import IntervalPoset, chi, chi_inverse, validate_interval_poset
from .trees import (
    BinaryTree, canopy, enumerate_intervals, enumerate_trees, interval_covers, psi, psi_inverse, rotations_up,
    tamari_leq, tree_to_dual_diagram, tree_to_tamari_diagram
)
from .types import SIZE_CAP, TamariError
from .util import check_cap, format_word, sized, tamari_interval_count

logger = logging.getLogger(__name__)

CLOSURE_MAX = 6
BOX_FILTER_MAX = 5
POSET_FILTER_MAX = 4
TREE_PAIRS_MAX = 5


@sized(limit=CLOSURE_MAX)
def tamari_order_by_closure(n: int) -> nx.DiGraph:
    """
    Reflexive-transitive closure of the one-rotation relation on the binary trees of size ``n``.
    ``s <=t t`` iff the returned graph has the edge ``(s, t)``.
    """
    graph = nx.DiGraph()
    bottom = BinaryTree.left_comb(n)
    graph.add_node(bottom)
    stack = [bottom]
    while stack:
        tree = stack.pop()
        for _, up in rotations_up(tree):
            if up not in graph:
                stack.append(up)
            graph.add_edge(tree, up)
    return nx.transitive_closure(graph, reflexive=True)


@sized(limit=BOX_FILTER_MAX)
def cc_by_box_filter(n: int) -> FrozenSet[CubicCoordinate]:
    """Every tuple of the box ``[-1, n-1] x [-2, n-2] x ...`` that is a cubic coordinate"""
    box = product(*(range(-i, n - i + 1) for i in range(1, n)))
    return frozenset(CubicCoordinate._unchecked(c) for c in box if validate_cubic(c))


@sized(limit=POSET_FILTER_MAX)
def interval_posets_by_filter(n: int) -> FrozenSet[IntervalPoset]:
    """Every transitively closed relation on x_1 ... x_n satisfying the interval-poset axioms"""
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    out: Set[IntervalPoset] = set()
    for mask in range(1 << len(pairs)):
        chosen = [p for k, p in enumerate(pairs) if mask >> k & 1]
        if validate_interval_poset(n, chosen):
            out.add(IntervalPoset(n, frozenset(chosen)))
    return frozenset(out)


def covers_by_definition(elements: Sequence[CubicCoordinate]) -> Set[Tuple[CubicCoordinate, CubicCoordinate]]:
    """Pairs ``c < c'`` of ``elements`` with nothing in between, straight from the componentwise order"""
    if not elements:
        return set()
    coords = np.array(elements, dtype=np.int64).reshape(len(elements), len(elements[0]))
    less = (coords[:, None, :] <= coords[None, :, :]).all(axis=2)
    np.fill_diagonal(less, False)
    step = less.astype(np.int64)
    between = (step @ step) > 0
    lo, hi = np.nonzero(less & ~between)
    return {(elements[a], elements[b]) for a, b in zip(lo.tolist(), hi.tolist())}


@dataclass(frozen=True)
class PropertyResult:
    name: str
    ok: bool
    detail: str = ''
    skipped: bool = False

    def __str__(self) -> str:
        status = 'SKIP' if self.skipped else 'OK' if self.ok else 'FAIL'
        return f'{self.name}: {status}' + (f' ({self.detail})' if self.detail else '')


@dataclass(frozen=True)
class CheckReport:
    n: int
    results: Tuple[PropertyResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> List[PropertyResult]:
        return [r for r in self.results if not r.ok]

    def __str__(self) -> str:
        return '\n'.join([str(r) for r in self.results] + ['OK' if self.ok else 'FAIL'])


_Check = Callable[[], Tuple[bool, str]]


def _first(bad: List[str], total: int, what: str) -> Tuple[bool, str]:
    if bad:
        return False, f'{len(bad)} of {total} {what} fail, first: {bad[0]}'
    return True, f'{total} {what}'


def run_checks(n: int, *, cap: int = SIZE_CAP) -> CheckReport:
    """
    Cross-validates every module against the closed formula and the naive oracles at size ``n``.
    Properties whose oracle is too expensive at this size are reported as skipped.

    Args:
        n (int): Size, at least 1.

        cap (int, optional): Largest accepted size. Defaults to SIZE_CAP.

    Raises:
        SizeCapError: ``n > cap``.

    Returns:
        CheckReport: One result per property.
    """
    check_cap(n, cap, 'run_checks')
    poset = enumerate_cc(n, cap=cap)
    tids = list(enumerate_tids(n))
    elements = poset.elements

    def counts() -> Tuple[bool, str]:
        values = {
            'formula': tamari_interval_count(n), 'tids': len(tids), 'cc': len(poset), 'count_cc': count_cc(n, cap=cap)
        }
        return len(set(values.values())) == 1, ', '.join(f'{k}={v}' for k, v in values.items())

    def box_filter() -> Tuple[bool, str]:
        box = cc_by_box_filter(n)
        return box == set(elements), f'{len(box)} coordinates in the box'

    def hasse_covers() -> Tuple[bool, str]:
        truth = covers_by_definition(elements)
        edges = {(elements[lo], elements[hi]) for lo, hi in poset.hasse}
        return truth == edges, f'{len(edges)} cover edges'

    def phi_roundtrip() -> Tuple[bool, str]:
        bad = [str(t) for t in tids if phi(phi_inverse(t)) != t]
        bad += [format_word(c) for c in elements if phi_inverse(phi(c)) != c]
        return _first(bad, len(tids) + len(elements), 'round trips')

    def chi_roundtrip() -> Tuple[bool, str]:
        images = [chi(t) for t in tids]
        bad = [str(t) for t, p in zip(tids, images) if chi_inverse(p) != t]
        if len(set(images)) != len(tids):
            bad.append('chi is not injective')
        return _first(bad, len(tids), 'round trips')

    def interval_posets() -> Tuple[bool, str]:
        brute = interval_posets_by_filter(n)
        return brute == {chi(t) for t in tids}, f'{len(brute)} interval-posets'

    def tamari_order() -> Tuple[bool, str]:
        closure = tamari_order_by_closure(n)
        trees = list(enumerate_trees(n))
        bad = [f'{s} vs {t}' for s, t in product(trees, trees) if tamari_leq(s, t) != closure.has_edge(s, t)]
        return _first(bad, len(trees) ** 2, 'tree pairs')

    def compatibility() -> Tuple[bool, str]:
        trees = list(enumerate_trees(n))
        bad = [
            f'{s} vs {t}' for s, t in product(trees, trees)
            if bool(check_compatible(tree_to_tamari_diagram(s), tree_to_dual_diagram(t))) != tamari_leq(s, t)
        ]
        return _first(bad, len(trees) ** 2, 'tree pairs')

    def psi_isomorphism() -> Tuple[bool, str]:
        intervals = list(enumerate_intervals(n, cap=cap))
        image = {i: psi(i) for i in intervals}
        bad = [str(i) for i in intervals if psi_inverse(image[i]) != i]
        covers_ti = {(image[i], image[j]) for i in intervals for j in interval_covers(i)}
        covers_cc = {(elements[lo], elements[hi]) for lo, hi in poset.hasse}
        if set(image.values()) != set(elements):
            bad.append('psi is not onto CC_n')
        if covers_ti != covers_cc:
            bad.append(f'{len(covers_ti ^ covers_cc)} cover edges differ')
        return _first(bad, len(intervals), 'intervals')

    def synchronized_canopy() -> Tuple[bool, str]:
        bad = [
            str(i) for i in enumerate_intervals(n, cap=cap)
            if is_synchronized(psi(i)) != (canopy(i.lower) == canopy(i.upper))
        ]
        return _first(bad, len(elements), 'intervals')

    def synchronized_not_new() -> Tuple[bool, str]:
        # the size-1 interval is both, vacuously
        bad = [str(t) for t in tids if n > 1 and t.is_synchronized() and is_new(t)]
        bad += [str(t) for t in tids if t.is_synchronized() != is_synchronized(phi_inverse(t))]
        return _first(bad, len(tids), 'diagrams')

    def zeroing() -> Tuple[bool, str]:
        bad: List[str] = []
        for c in elements:
            for i in range(1, n):
                try:
                    zero_entry(c, i)
                except TamariError as err:
                    bad.append(str(err))
        return _first(bad, len(elements) * (n - 1), 'zeroings')

    def cells() -> Tuple[bool, str]:
        found = list(enumerate_cells(n, poset=poset))
        sync = {c for c in elements if is_synchronized(c)}
        images = [gamma_map(cell) for cell in found]
        bad: List[str] = []
        if len(found) != len(sync):
            bad.append(f'{len(found)} cells for {len(sync)} synchronized coordinates')
        if len(set(images)) != len(images) or set(images) != sync:
            bad.append('gamma is not a bijection onto the synchronized coordinates')
        for cell in found:
            vertices = cell_vertices(cell)
            if len(vertices) != 2 ** (n - 1):
                bad.append(f'{cell} has {len(vertices)} vertices')
        return _first(bad, len(found), 'cells')

    def minimal_cellular_degree() -> Tuple[bool, str]:
        degree = poset.up_degree()
        bad = [format_word(c) for k, c in enumerate(elements) if is_minimal_cellular(c) != (degree[k] == n - 1)]
        return _first(bad, len(elements), 'coordinates')

    def lattice() -> Tuple[bool, str]:
        meets, joins = meet_table(poset), join_table(poset)
        size = len(poset)
        rng = np.random.default_rng(0)
        triples = rng.integers(0, size, size=(min(10_000, size ** 3), 3))
        bad: List[str] = []
        for a, b, c in triples.tolist():
            if meets[a, joins[a, b]] != a or joins[a, meets[a, b]] != a:
                bad.append(f'absorption at ({a}, {b})')
            if meets[meets[a, b], c] != meets[a, meets[b, c]] or joins[joins[a, b], c] != joins[a, joins[b, c]]:
                bad.append(f'associativity at ({a}, {b}, {c})')
        return _first(bad, len(triples), 'sampled triples')

    checks: List[Tuple[str, int, _Check]] = [
        ('counts', cap, counts),
        ('box-filter', BOX_FILTER_MAX, box_filter),
        ('hasse-covers', BOX_FILTER_MAX, hasse_covers),
        ('phi-roundtrip', cap, phi_roundtrip),
        ('chi-roundtrip', cap, chi_roundtrip),
        ('interval-posets', POSET_FILTER_MAX, interval_posets),
        ('tamari-order', CLOSURE_MAX, tamari_order),
        ('compatibility', TREE_PAIRS_MAX, compatibility),
        ('psi-isomorphism', TREE_PAIRS_MAX, psi_isomorphism),
        ('synchronized-canopy', CLOSURE_MAX, synchronized_canopy),
        ('synchronized-not-new', cap, synchronized_not_new),
        ('zero-entry', BOX_FILTER_MAX, zeroing),
        ('cells', CLOSURE_MAX, cells),
        ('minimal-cellular-degree', CLOSURE_MAX, minimal_cellular_degree),
        ('lattice', BOX_FILTER_MAX, lattice),
    ]
    results: List[PropertyResult] = []
    for name, limit, check in checks:
        if n > limit:
            results.append(PropertyResult(name, True, f'size above {limit}', skipped=True))
            continue
        start = perf_counter()
        try:
            ok, detail = check()
        except TamariError as err:
            ok, detail = False, f'{type(err).__name__}: {err}'
        result = PropertyResult(name, ok, detail)
        logger.info('run_checks: n=%d %s in %.3fs', n, result, perf_counter() - start)
        results.append(result)
    return CheckReport(n, tuple(results))
