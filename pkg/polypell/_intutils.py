"""Exact integer helpers and range partitioning for the scans."""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import chain
from math import gcd, isqrt
from typing import Callable, TypeVar

_R = TypeVar("_R")

_logger = logging.getLogger(__name__)


def check_int(value: object, name: str) -> int:
    """Return *value* if it is a genuine :class:`int`, else raise :class:`TypeError`."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"Argument '{name}' must be of type int, not {type(value)!r}")
    return value


def exact_sqrt(n: int) -> int | None:
    """Return :math:`\\sqrt n` if *n* is a perfect square, else :code:`None`.

    Negative numbers are never squares.
    """
    if n < 0:
        return None
    root = isqrt(n)
    return root if root * root == n else None


def is_square(n: int) -> bool:
    """Whether *n* is the square of an integer."""
    return exact_sqrt(n) is not None


def is_squarefree(n: int) -> bool:
    """Whether no square of a prime divides the positive integer *n*.

    Trial division, which is plenty for the multipliers used here.
    """
    if n < 1:
        return False
    if n % 4 == 0:
        return False
    if n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        p += 2
    return True


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def split_range(start: int, stop: int, parts: int) -> list[range]:
    """Split :code:`range(start, stop)` into at most *parts* contiguous ranges.

    The pieces are returned in order and cover the range exactly once.
    """
    total = max(stop - start, 0)
    if total == 0:
        return []
    parts = max(1, min(parts, total))
    size = -(-total // parts)
    return [range(lo, min(lo + size, stop)) for lo in range(start, stop, size)]


def ordered_scan(
    worker: Callable[[range], list[_R]],
    start: int,
    stop: int,
    jobs: int = 1
) -> list[_R]:
    """Run *worker* over :code:`range(start, stop)` and concatenate the results.

    With *jobs* greater than one the range is split into contiguous chunks which
    are processed in a :class:`~concurrent.futures.ProcessPoolExecutor`. The
    chunks are merged in range order, so the output is identical to a serial
    run. *worker* must be picklable (a module-level function or a
    :func:`functools.partial` of one).
    """
    if jobs <= 1 or stop - start < 2:
        return worker(range(start, stop))
    pieces = split_range(start, stop, jobs * 4)
    _logger.debug("Scanning [%d, %d) in %d chunks on %d workers", start, stop, len(pieces), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(chain.from_iterable(pool.map(worker, pieces)))
