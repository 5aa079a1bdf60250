"""Helper functions for the main functions in this module"""
from __future__ import annotations

__all__ = [
    'catalan', 'tamari_interval_count',
    'check_size', 'check_cap', 'sized',
    'format_word', 'parse_word'
]

import inspect
import warnings
from functools import partial, wraps
from math import comb, factorial
from typing import Any, Callable, Iterable, Optional, cast, overload

from .types import SIZE_CAP, F, ParseError, SizeCapError, SizeError, Word


def catalan(n: int) -> int:
    """Number of binary trees with ``n`` nodes."""
    return comb(2 * n, n) // (n + 1)


def tamari_interval_count(n: int) -> int:
    """Number of Tamari intervals of size ``n``, 2(4n+1)! / ((n+1)! (3n+2)!), in exact arithmetic.

    Args:
        n (int): Size, at least 1.

    Returns:
        int: Interval count.
    """
    check_size(n, 'tamari_interval_count')
    num = 2 * factorial(4 * n + 1)
    den = factorial(n + 1) * factorial(3 * n + 2)
    if num % den:
        raise ArithmeticError(f'tamari_interval_count: non integral value at n={n}')
    return num // den


def check_size(n: int, func_name: str) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f'{func_name}: size must be an integer, not {type(n).__name__}')
    if n < 1:
        raise SizeError(f'{func_name}: size must be at least 1, got {n}')
    return n


def check_cap(n: int, cap: int, func_name: str) -> int:
    if cap > SIZE_CAP:
        warnings.warn(f'{func_name}: cap {cap} is above the default of {SIZE_CAP}, memory use grows quickly')
    if n > cap:
        raise SizeCapError(f'{func_name}: size {n} is above the cap of {cap}')
    return n


@overload
def sized(*, limit: Optional[int] = None) -> Callable[[F], F]:
    ...


@overload
def sized(func: F, /) -> F:
    ...


def sized(func: Optional[F] = None, /, *, limit: Optional[int] = None) -> Callable[[F], F] | F:
    """
    Decorator checking the size passed as first argument.
    The size must be at least 1, at most ``limit`` when given,
    and at most the ``cap`` keyword of the decorated function when it has one.
    """
    if func is None:
        return cast(Callable[[F], F], partial(sized, limit=limit))

    params = inspect.signature(func).parameters
    default_cap = params['cap'].default if 'cap' in params else None

    @wraps(func)
    def _wrapper(n: int, *args: Any, **kwargs: Any) -> Any:
        assert func
        check_size(n, func.__name__)
        if limit is not None and n > limit:
            raise SizeCapError(f'{func.__name__}: size {n} is above the limit of {limit}')
        if default_cap is not None:
            check_cap(n, kwargs.get('cap', default_cap), func.__name__)
        return func(n, *args, **kwargs)

    return cast(F, _wrapper)


def format_word(word: Iterable[int]) -> str:
    """Canonical text form, comma-separated integers. The empty word is the empty string."""
    return ','.join(str(x) for x in word)


def parse_word(text: str) -> Word:
    """Inverse of ``format_word``. Surrounding whitespace and brackets are tolerated."""
    text = text.strip().strip('()[]').strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(','))
    except ValueError as err:
        raise ParseError(f'parse_word: "{text}" is not a comma-separated list of integers') from err
