"""Pell solutions modulo *q* and the congruence conditions of the polygonal construction."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from math import gcd

from ._exceptions import InvalidModulus
from ._intutils import check_int
from ._pell import NormFormElement, check_multiplier, fundamental_solution
from ._types import PairT, Variant

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CongruenceClass:
    """The residues :math:`(x \\bmod q, y \\bmod q)` of an integer pair."""

    q: int
    xr: int
    yr: int

    @property
    def pair(self) -> PairT:
        return (self.xr, self.yr)

    def satisfies_pell(self, m: int) -> bool:
        """Whether :math:`x_r^2 - m y_r^2 \\equiv 1 \\pmod q`."""
        return (self.xr * self.xr - m * self.yr * self.yr - 1) % self.q == 0

    def is_identity(self) -> bool:
        return self.xr == 1 % self.q and self.yr == 0


@dataclass(frozen=True)
class CongruenceGroupInfo:
    """The cyclic group :math:`G_{m,q}` of Pell solutions modulo *q*.

    *classes* lists the residues of :math:`g, g^2, \\ldots, g^{order}` for the
    fundamental solution *g*; the last one is the identity :code:`(1, 0)` and
    *order* is :math:`g_m(q)`.
    """

    m: int
    q: int
    order: int
    classes: tuple[CongruenceClass, ...]

    @property
    def identity(self) -> CongruenceClass:
        return self.classes[self.order - 1]

    def class_of_power(self, n: int) -> CongruenceClass:
        """Returns the residue class of :math:`g^n` for any :math:`n \\ge 0`."""
        check_int(n, "n")
        k = n % self.order
        return self.classes[k - 1] if k else self.identity


@dataclass(frozen=True)
class SatisfyingPower:
    """The least power :math:`g^n` meeting one of the congruence conditions."""

    exponent: int
    variant: Variant
    residue: CongruenceClass


def _check_modulus(q: int) -> int:
    check_int(q, "q")
    if q < 2:
        raise InvalidModulus(q)
    return q


def _residue_pair(s: NormFormElement | PairT | CongruenceClass) -> PairT:
    if isinstance(s, CongruenceClass):
        return s.pair
    if isinstance(s, NormFormElement):
        return s.pair
    x, y = s
    return (check_int(x, "x"), check_int(y, "y"))


def reduce_mod(s: NormFormElement | PairT, q: int) -> CongruenceClass:
    """Reduces the pair *s* componentwise to non-negative residues modulo *q*.

    :raises InvalidModulus: if :math:`q < 2`.
    """
    _check_modulus(q)
    x, y = _residue_pair(s)
    return CongruenceClass(q, x % q, y % q)


def group_info(m: int, q: int) -> CongruenceGroupInfo:
    """Computes :math:`G_{m,q}` by reducing successive powers of the fundamental solution.

    The powers are iterated modulo *q* until the identity :code:`(1, 0)`
    recurs, which happens after at most :math:`q^2` steps.

    :raises InvalidModulus: if :math:`q < 2`.
    :raises PerfectSquareInput: if *m* is a perfect square.
    """
    check_multiplier(m)
    _check_modulus(q)
    g = fundamental_solution(m)
    gx, gy = g.x % q, g.y % q
    x, y = gx, gy
    classes = [CongruenceClass(q, x, y)]
    while (x, y) != (1, 0):
        x, y = (x * gx + m * y * gy) % q, (x * gy + gx * y) % q
        classes.append(CongruenceClass(q, x, y))
    _logger.debug("g_%d(%d) = %d", m, q, len(classes))
    return CongruenceGroupInfo(m, q, len(classes), tuple(classes))


def check_xy_condition(s: NormFormElement | PairT | CongruenceClass, m: int, q: int) -> bool:
    """Whether :math:`x + my \\equiv -1` and :math:`x + y \\equiv -1 \\pmod q`."""
    _check_modulus(q)
    x, y = _residue_pair(s)
    return (x + m * y + 1) % q == 0 and (x + y + 1) % q == 0


def check_x_minus_y_condition(s: NormFormElement | PairT | CongruenceClass, m: int, q: int) -> bool:
    """Whether :math:`my - x \\equiv -1` and :math:`x - y \\equiv -1 \\pmod q`."""
    _check_modulus(q)
    x, y = _residue_pair(s)
    return (m * y - x + 1) % q == 0 and (x - y + 1) % q == 0


def find_satisfying_power(m: int, q: int) -> SatisfyingPower | None:
    """Finds the least :math:`n \\ge 1` such that :math:`g^n` meets a congruence condition.

    Only :math:`n = 1, \\ldots, g_m(q)` need to be checked since the residues
    repeat with that period, so :code:`None` certifies that **no** power of the
    fundamental solution satisfies either condition. When one power satisfies
    both, :attr:`Variant.XY` is reported.
    """
    return satisfying_power_of(group_info(m, q))


def satisfying_power_of(info: CongruenceGroupInfo) -> SatisfyingPower | None:
    """Scans the classes of an already computed group, see :func:`find_satisfying_power`."""
    m, q = info.m, info.q
    for n, residue in enumerate(info.classes, start=1):
        if check_xy_condition(residue, m, q):
            return SatisfyingPower(n, Variant.XY, residue)
        if check_x_minus_y_condition(residue, m, q):
            return SatisfyingPower(n, Variant.X_MINUS_Y, residue)
    _logger.info("m = %d, q = %d: no power of the fundamental solution qualifies", m, q)
    return None


def xy_candidate_classes(m: int, q: int) -> list[CongruenceClass]:
    """Lists the only residues that can satisfy :math:`x + my \\equiv x + y \\equiv -1 \\pmod q`.

    With :math:`d = \\gcd(m - 1, q)` this is :math:`(-1, 0)` and, when *d* is
    even, additionally :math:`(q/2 - 1, q/2)`.
    """
    check_int(m, "m")
    _check_modulus(q)
    candidates = [CongruenceClass(q, q - 1, 0)]
    if gcd(m - 1, q) % 2 == 0:
        candidates.append(CongruenceClass(q, q // 2 - 1, q // 2))
    return candidates
