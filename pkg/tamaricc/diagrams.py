"""Tamari diagrams, dual Tamari diagrams and Tamari interval diagrams"""
from __future__ import annotations

__all__ = [
    'TamariDiagram', 'DualTamariDiagram', 'TamariIntervalDiagram',
    'validate_tamari', 'validate_dual_tamari', 'reverse_duality', 'check_compatible',
    'enumerate_tamari_diagrams', 'enumerate_dual_tamari_diagrams', 'enumerate_tids'
]

from dataclasses import dataclass
from typing import Any, ClassVar, Iterable, Iterator, List, Optional, Sequence, Tuple, Type, TypeVar

from .types import Condition, SizeError, ValidationError, Verdict, Word
from .util import format_word, parse_word, sized

_W = TypeVar('_W', bound='_Word')


def _letters(word: Sequence[int], func_name: str) -> Word:
    if len(word) == 0:
        raise SizeError(f'{func_name}: empty word')
    if any(isinstance(x, bool) or not isinstance(x, int) for x in word):
        raise TypeError(f'{func_name}: letters must be integers')
    return tuple(word)


def validate_tamari(word: Sequence[int]) -> Verdict:
    """Checks the two conditions of a Tamari diagram:
    ``0 <= u_i <= n - i`` (bound) and ``u_{i+j} <= u_i - j`` for ``0 <= j <= u_i`` (slope).

    Args:
        word (Sequence[int]): Letters u_1 ... u_n.

    Raises:
        SizeError: Empty word.

    Returns:
        Verdict: ok, or the smallest violating index ``i`` with the offset ``j`` for a slope failure.
    """
    u = _letters(word, 'validate_tamari')
    n = len(u)
    for i in range(1, n + 1):
        ui = u[i - 1]
        if not 0 <= ui <= n - i:
            return Verdict.violation(Condition.BOUND, i, message=f'u_{i} = {ui} is not in [0, {n - i}]')
        for j in range(1, ui + 1):
            if u[i + j - 1] > ui - j:
                return Verdict.violation(
                    Condition.SLOPE, i, j, f'u_{i + j} = {u[i + j - 1]} > u_{i} - {j} = {ui - j}'
                )
    return Verdict.valid()


def validate_dual_tamari(word: Sequence[int]) -> Verdict:
    """Checks the two conditions of a dual Tamari diagram:
    ``0 <= v_i <= i - 1`` (bound) and ``v_{i-j} <= v_i - j`` for ``0 <= j <= v_i`` (slope).

    Args:
        word (Sequence[int]): Letters v_1 ... v_n.

    Raises:
        SizeError: Empty word.

    Returns:
        Verdict: ok, or the smallest violating index ``i`` with the offset ``j`` for a slope failure.
    """
    v = _letters(word, 'validate_dual_tamari')
    for i in range(1, len(v) + 1):
        vi = v[i - 1]
        if not 0 <= vi <= i - 1:
            return Verdict.violation(Condition.BOUND, i, message=f'v_{i} = {vi} is not in [0, {i - 1}]')
        for j in range(1, vi + 1):
            if v[i - j - 1] > vi - j:
                return Verdict.violation(
                    Condition.SLOPE, i, j, f'v_{i - j} = {v[i - j - 1]} > v_{i} - {j} = {vi - j}'
                )
    return Verdict.valid()


def reverse_duality(word: Sequence[int]) -> Word:
    """Reversal. A word is a dual Tamari diagram iff its reversal is a Tamari diagram."""
    return tuple(reversed(word))


def check_compatible(u: Sequence[int], v: Sequence[int]) -> Verdict:
    """Checks that for all ``i < j`` with ``j - i <= u_i`` one has ``v_j < j - i``.

    Args:
        u (Sequence[int]): Tamari diagram.

        v (Sequence[int]): Dual Tamari diagram of the same size.

    Raises:
        SizeError: Sizes differ.

    Returns:
        Verdict: ok, or the first violating pair of positions ``(i, j)``.
    """
    if len(u) != len(v):
        raise SizeError(f'check_compatible: sizes differ ({len(u)} != {len(v)})')
    n = len(u)
    for i in range(1, n + 1):
        for j in range(i + 1, min(n, i + u[i - 1]) + 1):
            if v[j - 1] >= j - i:
                return Verdict.violation(
                    Condition.COMPATIBILITY, i, j, f'v_{j} = {v[j - 1]} >= {j - i} while u_{i} = {u[i - 1]}'
                )
    return Verdict.valid()


class _Word(tuple[int, ...]):
    """Immutable validated integer word"""
    _what: ClassVar[str] = 'word'

    def __new__(cls: Type[_W], letters: Iterable[int], /) -> _W:
        word = tuple(letters)
        verdict = cls.validate(word)
        if not verdict:
            raise ValidationError(verdict, cls._what)
        return super().__new__(cls, word)  # type: ignore[misc]

    @classmethod
    def validate(cls, word: Sequence[int]) -> Verdict:
        raise NotImplementedError

    @classmethod
    def _unchecked(cls: Type[_W], letters: Iterable[int]) -> _W:
        return tuple.__new__(cls, letters)

    @classmethod
    def from_text(cls: Type[_W], text: str) -> _W:
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        return len(self)

    def letter(self, i: int) -> int:
        """1-based access"""
        if not 1 <= i <= len(self):
            raise IndexError(f'{type(self).__name__}.letter: index {i} out of [1, {len(self)}]')
        return self[i - 1]

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f'<{type(self).__name__} object: \'{self}\'>'

    def __getnewargs__(self) -> Tuple[Any, ...]:
        return (tuple(self), )


class TamariDiagram(_Word):
    """Word u with ``0 <= u_i <= n - i`` and ``u_{i+j} <= u_i - j``.
    Letter ``u_i`` is the size of the right subtree of the i-th node (infix order) of a binary tree."""
    _what = 'Tamari diagram'

    @classmethod
    def validate(cls, word: Sequence[int]) -> Verdict:
        return validate_tamari(word)

    def dual(self) -> DualTamariDiagram:
        """The reversal, a dual Tamari diagram"""
        return DualTamariDiagram._unchecked(reverse_duality(self))


class DualTamariDiagram(_Word):
    """Word v with ``0 <= v_i <= i - 1`` and ``v_{i-j} <= v_i - j``.
    Letter ``v_i`` is the size of the left subtree of the i-th node (infix order) of a binary tree."""
    _what = 'dual Tamari diagram'

    @classmethod
    def validate(cls, word: Sequence[int]) -> Verdict:
        return validate_dual_tamari(word)

    def dual(self) -> TamariDiagram:
        """The reversal, a Tamari diagram"""
        return TamariDiagram._unchecked(reverse_duality(self))


@dataclass(frozen=True)
class TamariIntervalDiagram:
    """Compatible pair (u, v) of a Tamari diagram and a dual Tamari diagram of the same size"""
    u: TamariDiagram
    v: DualTamariDiagram

    def __post_init__(self) -> None:
        if not isinstance(self.u, TamariDiagram):
            object.__setattr__(self, 'u', TamariDiagram(self.u))
        if not isinstance(self.v, DualTamariDiagram):
            object.__setattr__(self, 'v', DualTamariDiagram(self.v))
        verdict = check_compatible(self.u, self.v)
        if not verdict:
            raise ValidationError(verdict, 'Tamari interval diagram')

    @classmethod
    def _unchecked(cls, u: TamariDiagram, v: DualTamariDiagram) -> TamariIntervalDiagram:
        tid = object.__new__(cls)
        object.__setattr__(tid, 'u', u)
        object.__setattr__(tid, 'v', v)
        return tid

    @property
    def n(self) -> int:
        return len(self.u)

    def is_synchronized(self) -> bool:
        """``u_i != 0`` or ``v_{i+1} != 0`` for every i in [n - 1]"""
        return all(self.u[i] or self.v[i + 1] for i in range(self.n - 1))

    def __str__(self) -> str:
        return f'({self.u}; {self.v})'


@sized
def enumerate_tamari_diagrams(n: int) -> Iterator[TamariDiagram]:
    """Every Tamari diagram of size ``n``, in lexicographic order. There are Catalan(n) of them.

    Args:
        n (int): Size, at least 1.

    Raises:
        SizeError: ``n < 1``.

    Returns:
        Iterator[TamariDiagram]: Stream of diagrams.
    """
    word = [0] * n

    def _extend(i: int) -> Iterator[TamariDiagram]:
        if i == n:
            yield TamariDiagram._unchecked(word)
            return
        hi = n - 1 - i
        for k in range(i):
            if k + word[k] >= i:
                hi = min(hi, word[k] - (i - k))
        for x in range(hi + 1):
            word[i] = x
            yield from _extend(i + 1)
        word[i] = 0

    return _extend(0)


@sized
def enumerate_dual_tamari_diagrams(n: int, caps: Optional[Sequence[int]] = None) -> Iterator[DualTamariDiagram]:
    """Every dual Tamari diagram of size ``n``, in lexicographic order.

    Args:
        n (int): Size, at least 1.

        caps (Sequence[int], optional):
            Letter-wise upper bounds, ``v_i <= caps[i - 1]``. Defaults to None.

    Returns:
        Iterator[DualTamariDiagram]: Stream of diagrams.
    """
    if caps is not None and len(caps) != n:
        raise SizeError(f'enumerate_dual_tamari_diagrams: {len(caps)} caps for size {n}')
    word = [0] * n

    def _extend(i: int) -> Iterator[DualTamariDiagram]:
        if i == n:
            yield DualTamariDiagram._unchecked(word)
            return
        hi = i if caps is None else min(i, caps[i])
        for x in range(hi + 1):
            if all(word[i - j] <= x - j for j in range(1, x + 1)):
                word[i] = x
                yield from _extend(i + 1)
        word[i] = 0

    return _extend(0)


def _compatible_caps(u: Sequence[int]) -> List[int]:
    """Largest v_j allowed by u, 0-based"""
    n = len(u)
    caps = list(range(n))
    for i in range(n):
        for j in range(i + 1, min(n - 1, i + u[i]) + 1):
            caps[j] = min(caps[j], j - i - 1)
    return caps


@sized
def enumerate_tids(n: int) -> Iterator[TamariIntervalDiagram]:
    """Every Tamari interval diagram of size ``n``, ordered lexicographically by (u, v).
    There are 2(4n+1)! / ((n+1)! (3n+2)!) of them.

    Args:
        n (int): Size, at least 1.

    Returns:
        Iterator[TamariIntervalDiagram]: Stream of compatible pairs.
    """
    for u in enumerate_tamari_diagrams(n):
        for v in enumerate_dual_tamari_diagrams(n, _compatible_caps(u)):
            yield TamariIntervalDiagram._unchecked(u, v)
