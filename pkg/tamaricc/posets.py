"""Interval-posets and the bijection with Tamari interval diagrams"""
from __future__ import annotations

__all__ = [
    'IntervalPoset',
    'validate_interval_poset', 'chi', 'chi_inverse'
]

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Set, Tuple

import networkx as nx

from .diagrams import DualTamariDiagram, TamariDiagram, TamariIntervalDiagram
from .types import Condition, IndexRangeError, Relation, ValidationError, Verdict
from .util import check_size


def _check_vertices(n: int, pairs: Iterable[Relation], func_name: str) -> Set[Relation]:
    check_size(n, func_name)
    out: Set[Relation] = set()
    for a, b in pairs:
        if not (1 <= a <= n and 1 <= b <= n):
            raise IndexRangeError(f'{func_name}: relation ({a}, {b}) leaves the vertex set [1, {n}]')
        out.add((a, b))
    return out


def _closure(pairs: Set[Relation]) -> Set[Relation]:
    graph = nx.DiGraph()
    graph.add_edges_from(pairs)
    # reflexivity stays implicit
    return {(a, b) for a, b in nx.transitive_closure(graph, reflexive=None).edges if a != b}


def _check_closed(closure: Set[Relation]) -> Verdict:
    for a, b in sorted(closure):
        if (b, a) in closure:
            return Verdict.violation(
                Condition.ANTISYMMETRY, min(a, b), max(a, b), f'x_{a} ⊲ x_{b} and x_{b} ⊲ x_{a}'
            )
    for a, b in sorted(closure):
        if a > b:
            # decreasing, x_k ⊲ x_i with i < k
            k, i = a, b
            for j in range(i + 1, k):
                if (j, i) not in closure:
                    return Verdict.violation(
                        Condition.DECREASING, k, i, f'x_{k} ⊲ x_{i} requires x_{j} ⊲ x_{i}'
                    )
        else:
            # increasing, x_i ⊲ x_k with i < k
            i, k = a, b
            for j in range(i + 1, k):
                if (j, k) not in closure:
                    return Verdict.violation(
                        Condition.INCREASING, i, k, f'x_{i} ⊲ x_{k} requires x_{j} ⊲ x_{k}'
                    )
    return Verdict.valid()


def validate_interval_poset(n: int, pairs: Iterable[Relation]) -> Verdict:
    """Checks that the reflexive-transitive closure of ``pairs`` is an interval-poset.

    Args:
        n (int): Number of vertices x_1 ... x_n.

        pairs (Iterable[Relation]):
            Pairs ``(j, i)`` meaning ``x_j ⊲ x_i``. Reflexive pairs are ignored.

    Raises:
        IndexRangeError: A pair references a vertex outside of [1, n].

    Returns:
        Verdict: ok, or the first failing instance of antisymmetry, the decreasing axiom
        or the increasing axiom.
    """
    closure = _closure(_check_vertices(n, pairs, 'validate_interval_poset'))
    return _check_closed(closure)


@dataclass(frozen=True)
class IntervalPoset:
    """Partial order ⊲ on x_1 ... x_n satisfying the decreasing and increasing axioms.

    ``relations`` holds the strict pairs ``(j, i)`` meaning ``x_j ⊲ x_i``, transitively closed.
    Reflexivity is implicit.
    """
    n: int
    relations: FrozenSet[Relation]

    def __post_init__(self) -> None:
        closure = _closure(_check_vertices(self.n, self.relations, 'IntervalPoset'))
        verdict = _check_closed(closure)
        if not verdict:
            raise ValidationError(verdict, 'interval-poset')
        object.__setattr__(self, 'relations', frozenset(closure))

    def precedes(self, j: int, i: int) -> bool:
        """``x_j ⊲ x_i``, reflexive"""
        return j == i or (j, i) in self.relations

    @property
    def decreasing(self) -> FrozenSet[Relation]:
        """Relations ``x_k ⊲ x_i`` with ``i < k``"""
        return frozenset((a, b) for a, b in self.relations if a > b)

    @property
    def increasing(self) -> FrozenSet[Relation]:
        """Relations ``x_i ⊲ x_k`` with ``i < k``"""
        return frozenset((a, b) for a, b in self.relations if a < b)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self.relations))

    def __str__(self) -> str:
        return f'IntervalPoset(n={self.n}, ' + ', '.join(f'x{a}<x{b}' for a, b in self) + ')'


def chi(tid: TamariIntervalDiagram) -> IntervalPoset:
    """Interval-poset of a Tamari interval diagram.

    Generated by ``x_{i+l} ⊲ x_i`` for ``0 <= l <= u_i`` and ``x_{i-k} ⊲ x_i`` for ``0 <= k <= v_i``,
    then transitively closed.

    Args:
        tid (TamariIntervalDiagram): Source diagram.

    Returns:
        IntervalPoset: Its interval-poset.
    """
    n = tid.n
    pairs: Set[Relation] = set()
    for i in range(1, n + 1):
        pairs.update((i + l, i) for l in range(1, tid.u[i - 1] + 1))
        pairs.update((i - k, i) for k in range(1, tid.v[i - 1] + 1))
    return IntervalPoset(n, frozenset(pairs))


def chi_inverse(poset: IntervalPoset) -> TamariIntervalDiagram:
    """Tamari interval diagram of an interval-poset.
    ``u_i = #{j > i : x_j ⊲ x_i}`` and ``v_j = #{i < j : x_i ⊲ x_j}``."""
    u = [0] * poset.n
    v = [0] * poset.n
    for a, b in poset.relations:
        if a > b:
            u[b - 1] += 1
        else:
            v[b - 1] += 1
    return TamariIntervalDiagram(TamariDiagram(u), DualTamariDiagram(v))
