"""Polygonal numbers which are fixed multiples of other polygonal numbers.

The relation :math:`P(\\ell, r) = mP(\\ell, s)` is equivalent, after completing
squares, to the generalized Pell equation :math:`X^2 - mY^2 = (1 - m)c^2` with
:math:`X = qr - c` and :math:`Y = qs - c`, where *q* and *c* depend on
:math:`\\ell \\bmod 4` (see :class:`GonalTransform`). Solutions come from
composing the two base solutions :math:`(\\pm c, c)` with powers of the
fundamental solution of :math:`x^2 - my^2 = 1` and keeping those which land on
:math:`X \\equiv Y \\equiv -c \\pmod q`.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from functools import partial
from math import gcd
from typing import Callable, Iterable

from ._congruence import SatisfyingPower, group_info, satisfying_power_of
from ._exceptions import InvalidInput, NoTheoremSolutions, UnsupportedEll
from ._intutils import check_int, exact_sqrt, is_square, is_squarefree, ordered_scan
from ._pell import GeneralizedPellSolution, PellSolution, check_multiplier, compose, \
    fundamental_solution
from ._types import ModeT, PairT

_logger = logging.getLogger(__name__)

DEFAULT_ORACLE_BOUND = 10**6
"""Default upper bound for the brute-force scans."""

DEFAULT_MAX_POWER = 64
"""Default number of Pell powers tried by the constructions."""

DEFAULT_COUNT = 5
"""Default number of pairs listed on the command line."""


def _polygonal(ell: int, r: int) -> int:
    return ((ell - 2) * r * r - (ell - 4) * r) // 2


def _check_ell(ell: int) -> int:
    check_int(ell, "ell")
    if ell < 3:
        raise InvalidInput(f"ell must be at least 3, not {ell}")
    return ell


def polygonal_number(ell: int, r: int) -> int:
    """Returns the *r*-th :math:`\\ell`-gonal number :math:`((\\ell-2)r^2 - (\\ell-4)r)/2`.

    :Example:

        >>> polygonal_number(3, 5), polygonal_number(5, 4)
        (15, 22)

    :raises InvalidInput: if :math:`\\ell < 3` or :math:`r < 1`.
    """
    _check_ell(ell)
    check_int(r, "r")
    if r < 1:
        raise InvalidInput(f"r must be at least 1, not {r}")
    return _polygonal(ell, r)


def _index(ell: int, v: int) -> int | None:
    root = exact_sqrt((ell - 4) ** 2 + 8 * (ell - 2) * v)
    if root is None:
        return None
    r, rem = divmod(ell - 4 + root, 2 * (ell - 2))
    return r if rem == 0 and r >= 1 else None


def polygonal_index(ell: int, v: int) -> int | None:
    """Returns *r* with :math:`P(\\ell, r) = v`, or :code:`None` if *v* is not :math:`\\ell`-gonal.

    Solves the quadratic exactly: *v* is :math:`\\ell`-gonal iff
    :math:`(\\ell-4)^2 + 8(\\ell-2)v` is a perfect square whose root makes the
    numerator divisible by :math:`2(\\ell-2)`.

    :raises InvalidInput: if :math:`\\ell < 3` or :math:`v < 1`.
    """
    _check_ell(ell)
    check_int(v, "v")
    if v < 1:
        raise InvalidInput(f"v must be at least 1, not {v}")
    return _index(ell, v)


@dataclass(frozen=True)
class PolygonalNumber:
    """The *r*-th :math:`\\ell`-gonal number together with its position."""

    ell: int
    r: int
    value: int

    def __post_init__(self) -> None:
        if polygonal_number(self.ell, self.r) != self.value:
            raise InvalidInput(f"{self.value} is not P({self.ell}, {self.r})")

    @classmethod
    def of(cls, ell: int, r: int) -> PolygonalNumber:
        return cls(ell, r, polygonal_number(ell, r))


@dataclass(frozen=True)
class GonalTransform:
    """The constants turning :math:`P(\\ell, r) = mP(\\ell, s)` into a generalized Pell equation.

    ==================  ===================  ===================
    :math:`\\ell`        *q*                  *c*
    ==================  ===================  ===================
    odd                 :math:`2\\ell - 4`    :math:`\\ell - 4`
    :math:`2 \\bmod 4`   :math:`\\ell - 2`     :math:`(\\ell - 4)/2`
    :math:`0 \\bmod 4`   :math:`\\ell/2 - 1`   :math:`(\\ell - 4)/4`
    ==================  ===================  ===================

    With :math:`X = qr - c`, :math:`Y = qs - c` the relation is
    :math:`X^2 - mY^2 =` *rhs* :math:`= (1 - m)c^2`.
    """

    ell: int
    m: int
    q: int
    c: int
    rhs: int

    def to_x(self, r: int) -> int:
        """Maps an index *r* to :math:`X = qr - c`."""
        return self.q * r - self.c

    def index_of(self, x: int) -> int | None:
        """Maps :math:`X \\equiv -c \\pmod q` back to :math:`r = (X + c)/q \\ge 1`."""
        r, rem = divmod(x + self.c, self.q)
        return r if rem == 0 and r >= 1 else None

    def base_solutions(self) -> tuple[GeneralizedPellSolution, GeneralizedPellSolution]:
        """The obvious solutions :math:`(\\pm |c|, |c|)` of the transformed equation."""
        c = abs(self.c)
        return (
            GeneralizedPellSolution(self.m, c, c, self.rhs),
            GeneralizedPellSolution(self.m, -c, c, self.rhs),
        )


def transform_for(ell: int, m: int) -> GonalTransform:
    """Returns the :class:`GonalTransform` for :math:`\\ell`-gonal numbers and multiplier *m*.

    :raises UnsupportedEll: for :math:`\\ell = 4`, where the relation is
        :math:`r^2 = ms^2`.
    :raises InvalidInput: if :math:`\\ell < 3` or *m* is not a valid multiplier.
    """
    _check_ell(ell)
    if ell == 4:
        raise UnsupportedEll(ell, "squares r^2 = m s^2 are not a Pell problem")
    check_multiplier(m)
    if ell % 2 == 1:
        q, c = 2 * ell - 4, ell - 4
    elif ell % 4 == 2:
        q, c = ell - 2, (ell - 4) // 2
    else:
        q, c = ell // 2 - 1, (ell - 4) // 4
    assert gcd(c, q) == 1
    return GonalTransform(ell, m, q, c, (1 - m) * c * c)


@dataclass(frozen=True)
class GonalPair:
    """A solution of :math:`P(\\ell, r) = mP(\\ell, s)`: *value_big* is *m* times *value_small*."""

    ell: int
    m: int
    r: int
    s: int
    value_big: int
    value_small: int

    def __post_init__(self) -> None:
        if (polygonal_number(self.ell, self.r) != self.value_big
                or polygonal_number(self.ell, self.s) != self.value_small
                or self.value_big != self.m * self.value_small):
            raise InvalidInput(
                f"P({self.ell}, {self.r}) = {self.m} * P({self.ell}, {self.s}) does not hold"
            )

    @classmethod
    def of(cls, ell: int, m: int, r: int, s: int) -> GonalPair:
        return cls(ell, m, r, s, _polygonal(ell, r), _polygonal(ell, s))


@dataclass(frozen=True)
class TheoremWitness:
    """What the Pell construction knows about a given :math:`(\\ell, m)` before enumerating.

    *satisfying* is the least power of the fundamental solution meeting a
    congruence condition modulo :attr:`GonalTransform.q`, or :code:`None` when
    there is none (a certified negative for the construction).
    """

    transform: GonalTransform
    fundamental: PellSolution
    order: int
    satisfying: SatisfyingPower | None

    @property
    def solvable(self) -> bool:
        return self.satisfying is not None


@dataclass(frozen=True)
class TriangularRatioPair:
    """Triangular numbers :math:`\\Delta = P(3, r)` and :math:`\\Delta' = P(3, s)`.

    They satisfy :math:`a\\Delta = b\\Delta'`.
    """

    a: int
    b: int
    r: int
    s: int
    delta: int
    delta_prime: int

    def __post_init__(self) -> None:
        if (polygonal_number(3, self.r) != self.delta
                or polygonal_number(3, self.s) != self.delta_prime
                or self.a * self.delta != self.b * self.delta_prime):
            raise InvalidInput(
                f"{self.a} * T({self.r}) = {self.b} * T({self.s}) does not hold"
            )


def theorem_witness(ell: int, m: int) -> TheoremWitness:
    """Computes :math:`q`, :math:`g_m(q)` and the least qualifying power for :math:`(\\ell, m)`.

    :raises UnsupportedEll: for :math:`\\ell = 4`.
    """
    transform = transform_for(ell, m)
    info = group_info(m, transform.q)
    return TheoremWitness(
        transform, fundamental_solution(m), info.order, satisfying_power_of(info)
    )


def _enumerate_by_powers(
    g: PellSolution,
    bases: Iterable[GeneralizedPellSolution],
    accept: Callable[[int, int], PairT | None],
    x_for_r: Callable[[int], int],
    count: int | None,
    limit: int | None,
    max_power: int
) -> list[PairT]:
    """Composes each base with :math:`g^0, g^1, \\ldots` and collects accepted index pairs.

    *accept* maps a positive :math:`(X, Y)` to an index pair :code:`(r, s)` or
    :code:`None`; *x_for_r* is the (increasing) value of *X* belonging to
    index *r*. For :math:`n \\ge 1` the *X* of each base increases with *n*, so
    once every base has passed the *X* of the largest index still of interest
    no smaller pair can appear and the scan stops early.
    """
    bases = tuple(bases)
    found: set[PairT] = set()
    for n, unit in enumerate(g.powers(start=0)):
        if n > max_power:
            _logger.debug("Stopped at the power limit %d with %d pairs", max_power, len(found))
            break
        xs: list[int] = []
        for base in bases:
            x, y = compose(base, unit)
            if x > 0:
                xs.append(x)
            if x > 0 and y > 0:
                pair = accept(x, y)
                if pair is not None:
                    found.add(pair)
        if n == 0 or len(xs) < len(bases):
            continue
        cap = x_for_r(limit) if limit is not None else None
        if count is not None and len(found) >= count:
            kth = sorted(found)[count - 1][0]
            cap = x_for_r(kth) if cap is None else min(cap, x_for_r(kth))
        if cap is not None and min(xs) > cap:
            break
    pairs = sorted(found)
    if limit is not None:
        pairs = [p for p in pairs if p[0] <= limit]
    return pairs if count is None else pairs[:count]


def _search_chunk(ell: int, m: int, s_range: range, count: int | None = None) -> list[GonalPair]:
    pairs: list[GonalPair] = []
    for s in s_range:
        small = _polygonal(ell, s)
        r = _index(ell, m * small)
        if r is not None:
            pairs.append(GonalPair(ell, m, r, s, m * small, small))
            if count is not None and len(pairs) >= count:
                break
    return pairs


def _oracle_chunk(ell: int, m: int, r_range: range) -> list[GonalPair]:
    pairs: list[GonalPair] = []
    for r in r_range:
        big = _polygonal(ell, r)
        if big % m:
            continue
        s = _index(ell, big // m)
        if s is not None:
            pairs.append(GonalPair(ell, m, r, s, big, big // m))
    return pairs


def _check_count(count: int | None) -> int | None:
    if count is not None:
        check_int(count, "count")
        if count < 1:
            raise InvalidInput(f"count must be at least 1, not {count}")
    return count


def _check_bound(bound: int | None, name: str = "bound") -> int | None:
    if bound is not None:
        check_int(bound, name)
        if bound < 1:
            raise InvalidInput(f"{name} must be at least 1, not {bound}")
    return bound


def solve_multiple(
    ell: int,
    m: int,
    count: int | None = None,
    mode: ModeT = "theorem",
    bound: int | None = None,
    *,
    max_power: int = DEFAULT_MAX_POWER,
    jobs: int = 1
) -> list[GonalPair]:
    """Finds pairs :math:`P(\\ell, r) = mP(\\ell, s)`, ordered by *r*.

    In ``"theorem"`` mode the pairs are built from Pell units: the base
    solutions :math:`(\\pm c, c)` are composed with :math:`g^n` for
    :math:`n \\le` *max_power* and the results with
    :math:`X \\equiv Y \\equiv -c \\pmod q` are mapped back to indices. The
    first *count* pairs are returned, all with :math:`r \\le` *bound* if a
    bound is given. This mode can miss solutions which are not related to
    :math:`(\\pm c, c)` by a unit. If the least qualifying power exceeds *max_power* a
    warning is logged and the result is empty.

    In ``"search"`` mode every :math:`s \\le` *bound* (default
    :data:`DEFAULT_ORACLE_BOUND`) is tried; *jobs* > 1 spreads the scan over
    several processes.

    :param ell: The polygon order :math:`\\ell \\ge 3`, :math:`\\ell \\ne 4`.
    :param m: The multiplier, an integer > 1 that is not a perfect square.
    :param count: The maximal number of pairs to return (:code:`None`: all found).
    :param mode: ``"theorem"`` or ``"search"``.
    :param bound: Upper bound for *r* (theorem mode) or *s* (search mode).
    :raises UnsupportedEll: for :math:`\\ell = 4`.
    :raises NoTheoremSolutions: in theorem mode, when no power of the
        fundamental solution meets the congruence conditions.
    """
    transform = transform_for(ell, m)
    _check_count(count)
    _check_bound(bound)
    if mode == "theorem":
        witness = theorem_witness(ell, m)
        if not witness.solvable:
            raise NoTheoremSolutions(ell, m, transform.q, witness.order)
        assert witness.satisfying is not None
        if witness.satisfying.exponent > max_power:
            _logger.warning(
                "ell = %d, m = %d: the least qualifying power g^%d is beyond max_power = %d, "
                "raise max_power to find pairs", ell, m, witness.satisfying.exponent, max_power
            )

        def accept(x: int, y: int) -> PairT | None:
            r, s = transform.index_of(x), transform.index_of(y)
            return (r, s) if r is not None and s is not None else None

        pairs = _enumerate_by_powers(
            witness.fundamental, transform.base_solutions(), accept, transform.to_x,
            count, bound, max_power
        )
        return [GonalPair.of(ell, m, r, s) for r, s in pairs]
    if mode == "search":
        limit = DEFAULT_ORACLE_BOUND if bound is None else bound
        _logger.debug("Searching s <= %d for ell = %d, m = %d", limit, ell, m)
        if jobs <= 1:
            return _search_chunk(ell, m, range(1, limit + 1), count)
        found = ordered_scan(partial(_search_chunk, ell, m), 1, limit + 1, jobs)
        return found if count is None else found[:count]
    raise InvalidInput(f"Unknown mode {mode!r}, must be 'theorem' or 'search'")


def enumerate_multiples_oracle(ell: int, m: int, r_max: int, *, jobs: int = 1) -> list[GonalPair]:
    """Finds every pair with :math:`r \\le r_{max}` by testing each :math:`P(\\ell, r)/m`.

    An exhaustive check independent of the Pell machinery, ordered by *r*.
    """
    _check_ell(ell)
    check_int(m, "m")
    if m < 2:
        raise InvalidInput(f"m must be at least 2, not {m}")
    _check_bound(r_max, "r_max")
    _logger.debug("Scanning r <= %d for ell = %d, m = %d", r_max, ell, m)
    return ordered_scan(partial(_oracle_chunk, ell, m), 1, r_max + 1, jobs)


def solve_triangular_ratio(
    a: int,
    b: int,
    count: int | None = None,
    bound: int | None = None,
    *,
    max_power: int = DEFAULT_MAX_POWER
) -> list[TriangularRatioPair]:
    """Finds triangular numbers with :math:`a\\Delta = b\\Delta'`, ordered by :math:`\\Delta`.

    Multiplying :math:`ar(r+1) = bs(s+1)` by :math:`4a` gives
    :math:`X^2 - abY^2 = a(a - b)` with :math:`X = a(2r+1)` and
    :math:`Y = 2s + 1`. The base solutions :math:`(a, \\pm 1)` are composed with
    the powers of the fundamental solution for :math:`ab`, and those with
    :math:`X/a` and *Y* odd are kept.

    :param a: The larger coefficient.
    :param b: The smaller coefficient, :math:`1 \\le b < a`.
    :param count: The maximal number of pairs to return.
    :param bound: Upper bound for *r*.
    :raises InvalidInput: unless *a* and *b* are coprime, square-free and
        :math:`a > b \\ge 1`.
    """
    check_int(a, "a")
    check_int(b, "b")
    if not a > b >= 1:
        raise InvalidInput(f"Need a > b >= 1, got a = {a} and b = {b}")
    if gcd(a, b) != 1:
        raise InvalidInput(f"a = {a} and b = {b} are not coprime")
    if not (is_squarefree(a) and is_squarefree(b)):
        raise InvalidInput(f"a = {a} and b = {b} must both be square-free")
    if is_square(a * b):
        raise InvalidInput(f"ab = {a * b} is a perfect square")
    _check_count(count)
    _check_bound(bound)
    m = a * b
    rhs = a * (a - b)
    bases = (GeneralizedPellSolution(m, a, 1, rhs), GeneralizedPellSolution(m, a, -1, rhs))

    def accept(x: int, y: int) -> PairT | None:
        odd_x, rem = divmod(x, a)
        if rem or odd_x % 2 == 0 or y % 2 == 0:
            return None
        r, s = (odd_x - 1) // 2, (y - 1) // 2
        return (r, s) if r >= 1 and s >= 1 else None

    pairs = _enumerate_by_powers(
        fundamental_solution(m), bases, accept, lambda r: a * (2 * r + 1), count, bound, max_power
    )
    return [
        TriangularRatioPair(a, b, r, s, _polygonal(3, r), _polygonal(3, s)) for r, s in pairs
    ]
