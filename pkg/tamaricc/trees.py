"""Binary trees, rotations, Tamari intervals and their bijections with interval-posets and cubic coordinates"""
from __future__ import annotations

__all__ = [
    'BinaryTree', 'TamariInterval', 'Canopy',
    'tree_to_tamari_diagram', 'tree_to_dual_diagram', 'tree_from_tamari_diagram', 'tree_from_dual_diagram',
    'rotations_up', 'tamari_leq', 'canopy',
    'rho_inverse', 'rho', 'psi', 'psi_inverse',
    'enumerate_trees', 'enumerate_intervals', 'interval_covers'
]

from dataclasses import dataclass, field
from typing import FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .cubic import CubicCoordinate, phi, phi_inverse
from .diagrams import (
    DualTamariDiagram, TamariDiagram, TamariIntervalDiagram, check_compatible, enumerate_tamari_diagrams
)
from .posets import IntervalPoset, chi, chi_inverse
from .types import SIZE_CAP, ParseError, SizeError, ValidationError
from .util import sized


@dataclass(frozen=True, repr=False)
class BinaryTree:
    """Non-empty binary tree. Empty subtrees are None. Nodes are addressed by their infix index 1 ... n."""
    left: Optional[BinaryTree] = None
    right: Optional[BinaryTree] = None
    size: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'size', _size(self.left) + 1 + _size(self.right))

    @classmethod
    def left_comb(cls, n: int) -> BinaryTree:
        """Bottom of the Tamari lattice, every node on the left branch"""
        tree = cls()
        for _ in range(n - 1):
            tree = cls(left=tree)
        return tree

    @classmethod
    def right_comb(cls, n: int) -> BinaryTree:
        """Top of the Tamari lattice, every node on the right branch"""
        tree = cls()
        for _ in range(n - 1):
            tree = cls(right=tree)
        return tree

    @classmethod
    def from_brackets(cls, text: str) -> BinaryTree:
        """Inverse of ``to_brackets``"""
        text = ''.join(text.split())
        pos = 0

        def _parse() -> Optional[BinaryTree]:
            nonlocal pos
            if pos >= len(text) or text[pos] != '(':
                return None
            pos += 1
            left = _parse()
            if pos >= len(text) or text[pos] != ')':
                raise ParseError(f'BinaryTree.from_brackets: unbalanced brackets in "{text}"')
            pos += 1
            return cls(left, _parse())

        tree = _parse()
        if tree is None or pos != len(text):
            raise ParseError(f'BinaryTree.from_brackets: "{text}" is not a non-empty bracket word')
        return tree

    def to_brackets(self) -> str:
        """Balanced parenthesis word, ``(left)right``"""
        return '(' + _brackets(self.left) + ')' + _brackets(self.right)

    def nodes(self) -> Iterator[BinaryTree]:
        """Subtrees rooted at each node, in infix order"""
        if self.left is not None:
            yield from self.left.nodes()
        yield self
        if self.right is not None:
            yield from self.right.nodes()

    @property
    def n(self) -> int:
        return self.size

    def __str__(self) -> str:
        return self.to_brackets()

    def __repr__(self) -> str:
        return f'<BinaryTree object: \'{self.to_brackets()}\'>'


def _size(tree: Optional[BinaryTree]) -> int:
    return 0 if tree is None else tree.size


def _brackets(tree: Optional[BinaryTree]) -> str:
    return '' if tree is None else tree.to_brackets()


class Canopy(str):
    """Word over {L, R} of length n - 1"""

    def __new__(cls, letters: str) -> Canopy:
        if set(letters) - {'L', 'R'}:
            raise ValueError(f'Canopy: "{letters}" is not a word over L and R')
        return super().__new__(cls, letters)

    def __repr__(self) -> str:
        return f'<Canopy object: \'{self}\'>'


def tree_to_tamari_diagram(tree: BinaryTree) -> TamariDiagram:
    """``u_i`` is the size of the right subtree of node ``i``"""
    return TamariDiagram._unchecked(_size(node.right) for node in tree.nodes())


def tree_to_dual_diagram(tree: BinaryTree) -> DualTamariDiagram:
    """``v_i`` is the size of the left subtree of node ``i``"""
    return DualTamariDiagram._unchecked(_size(node.left) for node in tree.nodes())


def tree_from_tamari_diagram(u: Sequence[int]) -> BinaryTree:
    """
    Unique tree whose right subtree sizes are ``u``.
    The root of the nodes a ... b - 1 is the first node whose right subtree reaches b - 1.

    Raises:
        ValidationError: ``u`` is not a Tamari diagram.
    """
    u = u if isinstance(u, TamariDiagram) else TamariDiagram(u)

    def _build(a: int, b: int) -> Optional[BinaryTree]:
        if a >= b:
            return None
        root = next(i for i in range(a, b) if i + u[i] == b - 1)
        return BinaryTree(_build(a, root), _build(root + 1, b))

    tree = _build(0, len(u))
    assert tree
    return tree


def tree_from_dual_diagram(v: Sequence[int]) -> BinaryTree:
    """
    Unique tree whose left subtree sizes are ``v``.
    The root of the nodes a ... b - 1 is the last node whose left subtree reaches a.

    Raises:
        ValidationError: ``v`` is not a dual Tamari diagram.
    """
    v = v if isinstance(v, DualTamariDiagram) else DualTamariDiagram(v)

    def _build(a: int, b: int) -> Optional[BinaryTree]:
        if a >= b:
            return None
        root = next(i for i in reversed(range(a, b)) if i - v[i] == a)
        return BinaryTree(_build(a, root), _build(root + 1, b))

    tree = _build(0, len(v))
    assert tree
    return tree


def _rotations(tree: BinaryTree, base: int) -> Iterator[Tuple[int, BinaryTree]]:
    if tree.left is not None:
        # x(y(A, B), C) -> y(A, x(B, C)), keyed by the infix index of y
        y = tree.left
        yield base + _size(y.left) + 1, BinaryTree(y.left, BinaryTree(y.right, tree.right))
        for i, sub in _rotations(tree.left, base):
            yield i, BinaryTree(sub, tree.right)
    if tree.right is not None:
        for i, sub in _rotations(tree.right, base + _size(tree.left) + 1):
            yield i, BinaryTree(tree.left, sub)


def rotations_up(tree: BinaryTree) -> Set[Tuple[int, BinaryTree]]:
    """
    Every tree obtained by one right rotation.
    Each result is keyed by the infix index of the node that moves up, whose right subtree grows.

    Args:
        tree (BinaryTree): Source tree.

    Returns:
        Set[Tuple[int, BinaryTree]]: (index, rotated tree) pairs, each strictly greater than ``tree``.
    """
    return set(_rotations(tree, 0))


def tamari_leq(s: BinaryTree, t: BinaryTree) -> bool:
    """
    ``s <=t t``, i.e. ``t`` is reachable from ``s`` by right rotations.
    Computed as the componentwise order of the Tamari diagrams.

    Raises:
        SizeError: Sizes differ.
    """
    if s.size != t.size:
        raise SizeError(f'tamari_leq: sizes differ ({s.size} != {t.size})')
    return all(a <= b for a, b in zip(tree_to_tamari_diagram(s), tree_to_tamari_diagram(t)))


def canopy(tree: BinaryTree) -> Canopy:
    """Letter ``i`` is L when node ``i`` has an empty right subtree, R otherwise, for i in [n - 1]"""
    u = tree_to_tamari_diagram(tree)
    return Canopy(''.join('L' if x == 0 else 'R' for x in u[:-1]))


@dataclass(frozen=True)
class TamariInterval:
    """Pair of binary trees ``[lower, upper]`` with ``lower <=t upper``"""
    lower: BinaryTree
    upper: BinaryTree

    def __post_init__(self) -> None:
        if self.lower.size != self.upper.size:
            raise SizeError(f'TamariInterval: sizes differ ({self.lower.size} != {self.upper.size})')
        verdict = check_compatible(tree_to_tamari_diagram(self.lower), tree_to_dual_diagram(self.upper))
        if not verdict:
            raise ValidationError(verdict, 'Tamari interval')

    @property
    def n(self) -> int:
        return self.lower.size

    def leq(self, other: TamariInterval) -> bool:
        """``[S, T] <=ti [S', T']`` iff ``S <=t S'`` and ``T <=t T'``"""
        return tamari_leq(self.lower, other.lower) and tamari_leq(self.upper, other.upper)

    def __str__(self) -> str:
        return f'[{self.lower}; {self.upper}]'


def rho_inverse(interval: TamariInterval) -> IntervalPoset:
    """Interval-poset of ``[S, T]``: chi applied to the Tamari diagram of S and the dual diagram of T."""
    return chi(TamariIntervalDiagram._unchecked(
        tree_to_tamari_diagram(interval.lower), tree_to_dual_diagram(interval.upper)
    ))


def rho(poset: IntervalPoset) -> TamariInterval:
    """Tamari interval of an interval-poset.
    Decreasing relations give the lower tree, increasing ones the upper tree."""
    tid = chi_inverse(poset)
    return TamariInterval(tree_from_tamari_diagram(tid.u), tree_from_dual_diagram(tid.v))


def psi(interval: TamariInterval) -> CubicCoordinate:
    """
    Cubic coordinate of a Tamari interval, the composite of rho_inverse, chi_inverse and phi_inverse.
    This is an isomorphism of posets from (TI_n, <=ti) to (CC_n, <=cc).

    Args:
        interval (TamariInterval): Source interval.

    Returns:
        CubicCoordinate: Its coordinate.
    """
    return phi_inverse(chi_inverse(rho_inverse(interval)))


def psi_inverse(c: Sequence[int]) -> TamariInterval:
    """Inverse of ``psi``"""
    return rho(chi(phi(c)))


@sized
def enumerate_trees(n: int) -> Iterator[BinaryTree]:
    """Catalan(n) binary trees, ordered by their Tamari diagrams"""
    return (tree_from_tamari_diagram(u) for u in enumerate_tamari_diagrams(n))


@sized
def enumerate_intervals(n: int, *, cap: int = SIZE_CAP) -> Iterator[TamariInterval]:
    """
    Every Tamari interval of size ``n``, from the pairs of trees comparable for ``<=t``.

    Args:
        n (int): Size, at least 1.

        cap (int, optional): Largest accepted size. Defaults to SIZE_CAP.

    Raises:
        SizeCapError: ``n > cap``.

    Returns:
        Iterator[TamariInterval]: Intervals, ordered by (lower, upper) Tamari diagrams.
    """
    trees: List[Tuple[TamariDiagram, BinaryTree]] = [
        (tree_to_tamari_diagram(t), t) for t in enumerate_trees(n)
    ]
    for us, s in trees:
        for ut, t in trees:
            if all(a <= b for a, b in zip(us, ut)):
                yield TamariInterval(s, t)


def interval_covers(interval: TamariInterval) -> FrozenSet[TamariInterval]:
    """
    Upper covers in ``<=ti``: ``[S', T]`` for a rotation S' of S still below T,
    and ``[S, T']`` for a rotation T' of T.
    """
    s, t = interval.lower, interval.upper
    out: Set[TamariInterval] = set()
    for _, up in rotations_up(s):
        if tamari_leq(up, t):
            out.add(TamariInterval(up, t))
    out.update(TamariInterval(s, up) for _, up in rotations_up(t))
    return frozenset(out)
