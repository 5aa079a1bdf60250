from __future__ import annotations

__all__ = [
    'Order', 'Condition', 'Representation', 'Target', 'RealizeFormat', 'CoordFilter',
    'Verdict',
    'TamariError', 'SizeError', 'ValidationError', 'IndexRangeError', 'SizeCapError',
    'PreconditionError', 'InvariantError', 'ParseError',
    'SIZE_CAP'
]

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Literal, Optional, Tuple, TypeVar

# Raw integer word, 1-based in every message and verdict
Word = Tuple[int, ...]
# Strict relation x_j ⊲ x_i stored as (j, i)
Relation = Tuple[int, int]
# Cover edge of a materialised poset, (lower index, upper index)
Edge = Tuple[int, int]
JSONDict = Dict[str, Any]
# Generic function
F = TypeVar('F', bound=Callable[..., Any])

SIZE_CAP = 8

REPRESENTATION = Literal['cc', 'tid', 'poset', 'interval']
TARGET = Literal['cc', 'tid', 'poset', 'interval', 'tree-pair']


class Order(str, Enum):
    """Outcome of comparing two cubic coordinates"""
    LE = 'LE'
    GE = 'GE'
    EQ = 'EQ'
    INCOMPARABLE = 'INCOMPARABLE'


class Condition(str, Enum):
    """Identifier of the axiom a value failed"""
    SIZE = 'size'
    BOUND = 'bound'
    SLOPE = 'slope'
    COMPATIBILITY = 'compatibility'
    ANTISYMMETRY = 'antisymmetry'
    DECREASING = 'decreasing'
    INCREASING = 'increasing'


class Representation(str, Enum):
    """Input side of ``tamaricc convert``"""
    CC = 'cc'
    TID = 'tid'
    POSET = 'poset'
    INTERVAL = 'interval'


class Target(str, Enum):
    """Output side of ``tamaricc convert``"""
    CC = 'cc'
    TID = 'tid'
    POSET = 'poset'
    INTERVAL = 'interval'
    TREE_PAIR = 'tree-pair'


class RealizeFormat(str, Enum):
    JSON = 'json'
    DOT = 'dot'
    CSV = 'csv'


class CoordFilter(str, Enum):
    ALL = 'all'
    SYNCHRONIZED = 'synchronized'
    NEW = 'new'
    MINIMAL_CELLULAR = 'minimal-cellular'


@dataclass(frozen=True)
class Verdict:
    """Result of a validation. Truthy iff the value is valid.

    ``index`` is always 1-based. ``other`` depends on ``condition``: the offset ``j`` for ``SLOPE``,
    the second position ``j`` for ``COMPATIBILITY``, the second vertex for the interval-poset conditions.
    """
    ok: bool
    condition: Optional[Condition] = None
    index: Optional[int] = None
    other: Optional[int] = None
    message: str = ''

    @classmethod
    def valid(cls) -> Verdict:
        return cls(True)

    @classmethod
    def violation(cls, condition: Condition, index: Optional[int] = None,
                  other: Optional[int] = None, message: str = '') -> Verdict:
        return cls(False, condition, index, other, message)

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return 'ok'
        where = ', '.join(f'{k}={v}' for k, v in (('i', self.index), ('j', self.other)) if v is not None)
        assert self.condition
        return f'{self.condition.value} violation ({where}): {self.message}' if where \
            else f'{self.condition.value} violation: {self.message}'

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {'ok': self.ok}
        if not self.ok:
            assert self.condition
            out |= dict(condition=self.condition.value, i=self.index, j=self.other, message=self.message)
        return out


class TamariError(Exception):
    """Base class of every error raised by tamaricc."""


class SizeError(TamariError, ValueError):
    """Raised when a size is not positive or two sizes do not match."""


class ValidationError(TamariError, ValueError):
    """Raised when a value does not satisfy the axioms of its type."""
    verdict: Verdict

    def __init__(self, verdict: Verdict, what: str = 'value') -> None:
        self.verdict = verdict
        super().__init__(f'invalid {what}: {verdict}')


class IndexRangeError(TamariError, IndexError):
    """Raised when a coordinate or vertex index is out of range."""


class SizeCapError(TamariError):
    """Raised when a size exceeds the configured cap."""


class PreconditionError(TamariError, ValueError):
    """Raised when an operation is called outside of its domain."""


class InvariantError(TamariError):
    """Raised when a structural invariant fails. This would falsify a known theorem."""


class ParseError(TamariError, ValueError):
    """Raised when text or JSON input cannot be decoded."""
