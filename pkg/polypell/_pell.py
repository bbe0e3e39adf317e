"""The Pell equation :math:`x^2 - my^2 = 1` and its group of solutions."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import count, cycle, islice
from math import isqrt
from typing import Any, Iterator, overload

from ._exceptions import InvalidInput, MixedModulus, PerfectSquareInput
from ._intutils import check_int, exact_sqrt, is_square
from ._types import PairT

_logger = logging.getLogger(__name__)


def check_multiplier(m: int) -> int:
    """Validate that *m* is an integer :math:`> 1` which is not a perfect square.

    Square-free *m* is not required.

    :raises InvalidInput: if :math:`m \\le 1`.
    :raises PerfectSquareInput: if *m* is a perfect square.
    """
    check_int(m, "m")
    if m <= 1:
        raise InvalidInput(f"m must be greater than 1, not {m}")
    if is_square(m):
        raise PerfectSquareInput(m)
    return m


@dataclass(frozen=True, eq=False)
class NormFormElement:
    """An element :math:`x + y\\sqrt m` of :math:`\\mathbb Z[\\sqrt m]`.

    This is the integer pair :code:`(x, y)` together with the multiplier *m*
    it belongs to. Its :attr:`norm` is :math:`x^2 - my^2`; elements of norm 1
    are the solutions of the Pell equation (:class:`PellSolution`), elements of
    norm -1 are :class:`NegativePellSolution` and elements of a stated norm
    *N* are :class:`GeneralizedPellSolution`.

    Elements compare equal when they have the same *m*, *x* and *y*,
    regardless of which of these classes they are, and unpack like a tuple::

        >>> x, y = fundamental_solution(2)
        >>> (x, y)
        (3, 2)

    Multiplication is the composition law :func:`compose` and ``**`` is
    :func:`power`.
    """

    m: int
    x: int
    y: int

    def __post_init__(self) -> None:
        check_multiplier(self.m)
        check_int(self.x, "x")
        check_int(self.y, "y")

    @property
    def norm(self) -> int:
        """The norm :math:`x^2 - my^2`."""
        return self.x * self.x - self.m * self.y * self.y

    @property
    def pair(self) -> PairT:
        """The bare pair :code:`(x, y)`."""
        return (self.x, self.y)

    def conjugate(self) -> NormFormElement:
        """Returns :math:`x - y\\sqrt m`, the inverse of a Pell solution."""
        return _classify(self.m, self.x, -self.y, isinstance(self, GeneralizedPellSolution))

    def sign_variants(self) -> Iterator[NormFormElement]:
        """Yields the four elements :math:`(\\pm x, \\pm y)` (duplicates removed)."""
        seen: set[PairT] = set()
        generalized = isinstance(self, GeneralizedPellSolution)
        for sx in (1, -1):
            for sy in (1, -1):
                pair = (sx * self.x, sy * self.y)
                if pair not in seen:
                    seen.add(pair)
                    yield _classify(self.m, pair[0], pair[1], generalized)

    def __neg__(self) -> NormFormElement:
        return _classify(self.m, -self.x, -self.y, isinstance(self, GeneralizedPellSolution))

    def __mul__(self, other: Any) -> NormFormElement:
        if not isinstance(other, (NormFormElement, tuple)):
            return NotImplemented
        return compose(self, other)

    def __rmul__(self, other: Any) -> NormFormElement:
        if not isinstance(other, tuple):
            return NotImplemented
        return compose(other, self)

    def __pow__(self, n: int) -> NormFormElement:
        return power(self, n)

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormFormElement):
            return NotImplemented
        return (self.m, self.x, self.y) == (other.m, other.x, other.y)

    def __hash__(self) -> int:
        return hash((self.m, self.x, self.y))


@dataclass(frozen=True, eq=False)
class GeneralizedPellSolution(NormFormElement):
    """A solution :math:`(X, Y)` of :math:`X^2 - mY^2 = N` for the stated *rhs* :math:`N`.

    Composing it with a :class:`PellSolution` gives another solution with the
    same right-hand side.
    """

    rhs: int

    def __post_init__(self) -> None:
        super().__post_init__()
        check_int(self.rhs, "rhs")
        if self.norm != self.rhs:
            raise InvalidInput(
                f"({self.x}, {self.y}) has norm {self.norm} for m = {self.m}, not {self.rhs}"
            )


@dataclass(frozen=True, eq=False)
class PellSolution(NormFormElement):
    """A solution of :math:`x^2 - my^2 = 1`.

    The trivial solution :code:`(1, 0)` is representable. The solutions with
    :math:`x > 0` form a cyclic group generated by the fundamental solution,
    see :func:`fundamental_solution`.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.norm != 1:
            raise InvalidInput(
                f"({self.x}, {self.y}) is not a solution of x^2 - {self.m}y^2 = 1"
            )

    def powers(self, start: int = 1) -> Iterator[PellSolution]:
        """Yields :math:`g^{start}, g^{start + 1}, \\ldots` for this solution :math:`g`."""
        current = power(self, start)
        while True:
            yield current
            current = _as_pell(compose(current, self))


@dataclass(frozen=True, eq=False)
class NegativePellSolution(NormFormElement):
    """A solution of :math:`x^2 - my^2 = -1`, a unit of norm -1."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.norm != -1:
            raise InvalidInput(
                f"({self.x}, {self.y}) is not a solution of x^2 - {self.m}y^2 = -1"
            )


def _classify(m: int, x: int, y: int, generalized: bool = False) -> NormFormElement:
    """Wrap :code:`(x, y)` in the most specific element type its norm allows."""
    norm = x * x - m * y * y
    if norm == 1:
        return PellSolution(m, x, y)
    if norm == -1:
        return NegativePellSolution(m, x, y)
    if generalized:
        return GeneralizedPellSolution(m, x, y, norm)
    return NormFormElement(m, x, y)


def _as_pell(element: NormFormElement) -> PellSolution:
    assert isinstance(element, PellSolution)
    return element


def _as_element(value: NormFormElement | PairT, m: int | None) -> NormFormElement:
    if isinstance(value, NormFormElement):
        if m is not None and value.m != m:
            raise MixedModulus(value.m, m)
        return value
    if isinstance(value, tuple) and len(value) == 2:
        if m is None:
            raise TypeError("Argument 'm' is required when composing bare (x, y) pairs")
        return NormFormElement(m, value[0], value[1])
    raise TypeError(
        f"Expected NormFormElement or tuple[int, int], not {type(value)!r}"
    )


@dataclass(frozen=True)
class CFExpansion:
    """The continued fraction :math:`[a_0; \\overline{a_1, \\ldots, a_k}]` of :math:`\\sqrt m`.

    *period* is the minimal repeating block; its last term is :math:`2a_0`.
    """

    m: int
    a0: int
    period: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.period)

    def terms(self) -> Iterator[int]:
        """Yields the partial quotients :math:`a_0, a_1, a_2, \\ldots` forever."""
        yield self.a0
        yield from cycle(self.period)

    def convergents(self) -> Iterator[PairT]:
        """Yields the convergents :math:`p_k / q_k` as pairs :code:`(p_k, q_k)`."""
        p_prev, p = 1, self.a0
        q_prev, q = 0, 1
        yield (p, q)
        for a in cycle(self.period):
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
            yield (p, q)

    def convergent(self, k: int) -> PairT:
        """Returns the *k*-th convergent (counting from :math:`p_0/q_0 = a_0/1`)."""
        return next(islice(self.convergents(), k, None))


def cf_expansion(m: int) -> CFExpansion:
    """Computes the continued fraction expansion of :math:`\\sqrt m`.

    Uses the exact recurrence for quadratic irrationals
    :math:`(\\sqrt m + P_k)/Q_k`, so no floating point is involved.

    :param m: An integer :math:`> 1` which is not a perfect square.
    :returns: the expansion with its minimal period.
    :raises InvalidInput: if :math:`m \\le 1`.
    :raises PerfectSquareInput: if *m* is a perfect square.
    """
    check_multiplier(m)
    a0 = isqrt(m)
    period: list[int] = []
    p, q, a = 0, 1, a0
    while a != 2 * a0:
        p = q * a - p
        q = (m - p * p) // q
        a = (a0 + p) // q
        period.append(a)
    _logger.debug("sqrt(%d) has period length %d", m, len(period))
    return CFExpansion(m, a0, tuple(period))


def fundamental_solution(m: int) -> PellSolution:
    """Returns the fundamental solution :math:`(x_1, y_1)` of :math:`x^2 - my^2 = 1`.

    It is read off the convergent at the end of the first period of
    :math:`\\sqrt m` when the period length is even, and at the end of the
    second period when it is odd.

    :Example:

        >>> fundamental_solution(61)
        PellSolution(m=61, x=1766319049, y=226153980)

    :raises InvalidInput: if :math:`m \\le 1`.
    :raises PerfectSquareInput: if *m* is a perfect square.
    """
    expansion = cf_expansion(m)
    length = expansion.period_length
    index = length - 1 if length % 2 == 0 else 2 * length - 1
    x, y = expansion.convergent(index)
    return PellSolution(m, x, y)


def naive_fundamental_solution(m: int, y_max: int | None = None) -> PellSolution | None:
    """Finds the fundamental solution by trying :math:`y = 1, 2, 3, \\ldots`.

    Stops as soon as :math:`1 + my^2` is a perfect square. This is only
    practical for small *m* and serves as an independent check of
    :func:`fundamental_solution`.

    :param y_max: Give up (returning :code:`None`) after this many values of *y*.
    """
    check_multiplier(m)
    ys = count(1) if y_max is None else range(1, y_max + 1)
    for y in ys:
        x = exact_sqrt(1 + m * y * y)
        if x is not None:
            return PellSolution(m, x, y)
    return None


def negative_pell_fundamental(m: int) -> NegativePellSolution | None:
    """Returns the least positive solution of :math:`x^2 - my^2 = -1`, if there is one.

    The equation is solvable exactly when the period of :math:`\\sqrt m` has
    odd length; the solution is then the convergent at the end of the first
    period.

    :raises PerfectSquareInput: if *m* is a perfect square.
    """
    expansion = cf_expansion(m)
    length = expansion.period_length
    if length % 2 == 0:
        return None
    x, y = expansion.convergent(length - 1)
    return NegativePellSolution(m, x, y)


@overload
def compose(p: PellSolution, q: PellSolution, m: int | None = None) -> PellSolution:
    ...


@overload
def compose(
    p: NormFormElement | PairT,
    q: NormFormElement | PairT,
    m: int | None = None
) -> NormFormElement:
    ...


def compose(
    p: NormFormElement | PairT,
    q: NormFormElement | PairT,
    m: int | None = None
) -> NormFormElement:
    """Composes two elements: :math:`(x, y) * (x', y') = (xx' + myy', xy' + x'y)`.

    This is multiplication in :math:`\\mathbb Z[\\sqrt m]`, so the norm is
    multiplicative. Neither argument needs to have norm 1; bare
    :code:`(x, y)` tuples are accepted when *m* is given.

    :param p: The first element or pair.
    :param q: The second element or pair.
    :param m: The multiplier, required only if both *p* and *q* are bare tuples.
    :returns: the product, as the most specific element type for its norm
        (:class:`PellSolution` for norm 1 etc.).
    :raises MixedModulus: if the arguments belong to different *m*.
    """
    if m is None:
        m = next((v.m for v in (p, q) if isinstance(v, NormFormElement)), None)
    a = _as_element(p, m)
    b = _as_element(q, m)
    if a.m != b.m:
        raise MixedModulus(a.m, b.m)
    x = a.x * b.x + a.m * a.y * b.y
    y = a.x * b.y + b.x * a.y
    generalized = isinstance(a, GeneralizedPellSolution) or isinstance(b, GeneralizedPellSolution)
    return _classify(a.m, x, y, generalized)


def inverse(s: PellSolution) -> PellSolution:
    """Returns the inverse :math:`(x, -y)` of a Pell solution."""
    return PellSolution(s.m, s.x, -s.y)


@overload
def power(g: PellSolution, n: int) -> PellSolution:
    ...


@overload
def power(g: NormFormElement, n: int) -> NormFormElement:
    ...


def power(g: NormFormElement, n: int) -> NormFormElement:
    """Returns :math:`g^n`, the *n*-fold composition of *g* with itself.

    Uses binary exponentiation, so large *n* take :math:`O(\\log n)`
    compositions. :math:`g^0` is the identity :code:`(1, 0)`.

    :raises InvalidInput: if *n* is negative.
    """
    check_int(n, "n")
    if n < 0:
        raise InvalidInput(f"Exponent n must be non-negative, not {n}")
    result: NormFormElement = PellSolution(g.m, 1, 0)
    base = g
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def sqrt_approx(m: int, n: int) -> Fraction:
    """Returns :math:`x_n / y_n` for :math:`(x_n, y_n) = g^n`, an approximation of :math:`\\sqrt m`.

    The error is exact: :math:`(x_n/y_n)^2 - m = 1/y_n^2`.

    :param m: An integer :math:`> 1` which is not a perfect square.
    :param n: A positive exponent.
    :raises InvalidInput: if :math:`n < 1`.
    """
    check_int(n, "n")
    if n < 1:
        raise InvalidInput(f"n must be at least 1, not {n}")
    x, y = power(fundamental_solution(m), n)
    return Fraction(x, y)
