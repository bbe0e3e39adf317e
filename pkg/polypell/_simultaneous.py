"""Simultaneous multiples :math:`P(\\ell, r) = mP(\\ell, s) = nP(\\ell, t)`.

With :math:`a = 2(\\ell - 2)`, :math:`b = \\ell - 4` and the witnesses
:math:`u = ar - b`, :math:`v = as - b`, :math:`w = at - b` the two relations
become :math:`u^2 - mv^2 = -(m-1)b^2` and :math:`mv^2 - nw^2 = (m-n)b^2`; setting
:math:`X = m^2nv^2` turns them into a single integer point on the cubic

.. math::

    Y^2 = X(X - A)(X - B), \\quad A = mn(m-1)b^2, \\quad B = mn(m-n)b^2.

Such a curve has only finitely many integer points, so there are only finitely
many triples. There is no effective bound for them however, so every search
here is complete only up to the bound it was given.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Iterable, Iterator

from ._exceptions import InvalidInput, InvalidOrdering, UnsupportedEll
from ._intutils import check_int, exact_sqrt, ordered_scan
from ._gonal import polygonal_number, polygonal_index

_logger = logging.getLogger(__name__)

DEFAULT_V_BOUND = 10**6
"""Default bound for the witness *v* scanned by :func:`constrained_integer_points`."""


@dataclass(frozen=True)
class CurveSpec:
    """The curve :math:`Y^2 = X(X - A)(X - B)` belonging to :math:`(\\ell, m, n)`."""

    ell: int
    m: int
    n: int
    a: int
    b: int
    A: int
    B: int

    def rhs(self, x: int) -> int:
        """Evaluates :math:`X(X - A)(X - B)`."""
        return x * (x - self.A) * (x - self.B)

    def on_curve(self, x: int, y: int) -> bool:
        return y * y == self.rhs(x)


@dataclass(frozen=True)
class TripleWitness:
    """The witnesses :math:`(u, v, w)` of an integer point together with the point itself.

    *X* is :math:`m^2nv^2` and *Y* is :math:`m^2n^2uvw`.
    """

    u: int
    v: int
    w: int
    X: int
    Y: int

    def sign_variants(self) -> Iterator[tuple[int, int, int]]:
        """Yields the distinct :math:`(\\pm u, \\pm v, \\pm w)`."""
        seen: set[tuple[int, int, int]] = set()
        for su, sv, sw in product((1, -1), repeat=3):
            choice = (su * self.u, sv * self.v, sw * self.w)
            if choice not in seen:
                seen.add(choice)
                yield choice


@dataclass(frozen=True)
class CurvePoint:
    """An integer point found by :func:`constrained_integer_points`.

    *witness* is :code:`None` when *X* and *Y* meet the divisibility
    conditions but :math:`X - A` or :math:`X - B` is not of the required
    square shape.
    """

    X: int
    Y: int
    witness: TripleWitness | None = None


@dataclass(frozen=True)
class SimultaneousTriple:
    """A solved triple: *value* is *m* times *value_m* and *n* times *value_n*."""

    ell: int
    m: int
    n: int
    r: int
    s: int
    t: int
    value: int
    value_m: int
    value_n: int

    def __post_init__(self) -> None:
        if (polygonal_number(self.ell, self.r) != self.value
                or polygonal_number(self.ell, self.s) != self.value_m
                or polygonal_number(self.ell, self.t) != self.value_n
                or self.value != self.m * self.value_m
                or self.value != self.n * self.value_n):
            raise InvalidInput(
                f"P({self.ell}, {self.r}) = {self.m} P({self.ell}, {self.s}) "
                f"= {self.n} P({self.ell}, {self.t}) does not hold"
            )

    @classmethod
    def of(cls, ell: int, m: int, n: int, r: int, s: int, t: int) -> SimultaneousTriple:
        return cls(
            ell, m, n, r, s, t,
            polygonal_number(ell, r), polygonal_number(ell, s), polygonal_number(ell, t)
        )


def _check_multipliers(ell: int, m: int, n: int) -> None:
    check_int(ell, "ell")
    check_int(m, "m")
    check_int(n, "n")
    if ell < 3:
        raise InvalidInput(f"ell must be at least 3, not {ell}")
    if not m > n > 1:
        raise InvalidOrdering(m, n)


def curve_params(ell: int, m: int, n: int) -> CurveSpec:
    """Returns the :class:`CurveSpec` for :math:`(\\ell, m, n)`.

    :Example:

        >>> spec = curve_params(5, 6, 3)
        >>> spec.A, spec.B
        (90, 54)

    :raises InvalidOrdering: unless :math:`m > n > 1`.
    :raises UnsupportedEll: for :math:`\\ell = 4`, where :math:`b = 0` and the
        curve degenerates.
    """
    _check_multipliers(ell, m, n)
    if ell == 4:
        raise UnsupportedEll(ell, "the curve degenerates for squares (b = 0)")
    a, b = 2 * (ell - 2), ell - 4
    return CurveSpec(ell, m, n, a, b, m * n * (m - 1) * b * b, m * n * (m - n) * b * b)


def _witness_at(spec: CurveSpec, v: int) -> CurvePoint | None:
    m, n = spec.m, spec.n
    x = m * m * n * v * v
    y = exact_sqrt(spec.rhs(x))
    if y is None or y % (m * m * n * n):
        return None
    u2, u_rem = divmod(x - spec.A, m * n)
    w2, w_rem = divmod(x - spec.B, m * n * n)
    u = exact_sqrt(u2) if u_rem == 0 else None
    w = exact_sqrt(w2) if w_rem == 0 else None
    if u is None or w is None:
        return CurvePoint(x, y)
    assert y == m * m * n * n * u * v * w
    return CurvePoint(x, y, TripleWitness(u, v, w, x, y))


def _point_chunk(spec: CurveSpec, v_range: range) -> list[CurvePoint]:
    points = []
    for v in v_range:
        point = _witness_at(spec, v)
        if point is not None:
            points.append(point)
    return points


def constrained_integer_points(
    spec: CurveSpec,
    v_bound: int = DEFAULT_V_BOUND,
    *,
    jobs: int = 1
) -> list[CurvePoint]:
    """Lists the integer points with :math:`X = m^2nv^2` for :math:`0 \\le v \\le` *v_bound*.

    A point is accepted when :math:`X(X-A)(X-B)` is a perfect square
    :math:`Y^2` with :math:`m^2n^2 \\mid Y`; its witness is attached when
    additionally :math:`X - A = mnu^2` and :math:`X - B = mn^2w^2`. The
    points are ordered by *X* and all have :math:`Y \\ge 0`.

    :param spec: The curve, see :func:`curve_params`.
    :param v_bound: The largest *v* to try.
    :param jobs: The number of worker processes.
    """
    check_int(v_bound, "v_bound")
    if v_bound < 1:
        raise InvalidInput(f"v_bound must be at least 1, not {v_bound}")
    _logger.debug("Scanning v <= %d on Y^2 = X(X - %d)(X - %d)", v_bound, spec.A, spec.B)
    points = ordered_scan(partial(_point_chunk, spec), 0, v_bound + 1, jobs)
    _logger.debug("Found %d constrained points", len(points))
    return points


def _indices(spec: CurveSpec, u: int, v: int, w: int) -> tuple[int, int, int] | None:
    indices = []
    for z in (u, v, w):
        k, rem = divmod(z + spec.b, spec.a)
        if rem or k < 1:
            return None
        indices.append(k)
    return indices[0], indices[1], indices[2]


def recover_rst(
    witness: TripleWitness | tuple[int, int, int],
    spec: CurveSpec
) -> tuple[int, int, int] | None:
    """Maps a witness back to the indices :math:`r = (u + b)/a` and likewise *s*, *t*.

    All sign choices of *u*, *v* and *w* are tried; at most one of them makes
    all three indices positive integers.

    :returns: :code:`(r, s, t)` or :code:`None` if no sign choice works.
    """
    if not isinstance(witness, TripleWitness):
        u, v, w = witness
        witness = TripleWitness(u, v, w, 0, 0)
    for u, v, w in witness.sign_variants():
        found = _indices(spec, u, v, w)
        if found is not None:
            return found
    return None


def solve_simultaneous(
    ell: int,
    m: int,
    n: int,
    v_bound: int = DEFAULT_V_BOUND,
    *,
    jobs: int = 1
) -> list[SimultaneousTriple]:
    """Finds the triples :math:`P(\\ell, r) = mP(\\ell, s) = nP(\\ell, t)` up to *v_bound*.

    Since :math:`v = as - b`, this covers all :math:`s \\le (v_{bound} + b)/a`.
    The triples are re-validated and ordered by *r*.

    :raises InvalidOrdering: unless :math:`m > n > 1`.
    :raises UnsupportedEll: for :math:`\\ell = 4`.
    """
    spec = curve_params(ell, m, n)
    return triples_from_points(spec, constrained_integer_points(spec, v_bound, jobs=jobs))


def triples_from_points(spec: CurveSpec, points: Iterable[CurvePoint]) -> list[SimultaneousTriple]:
    """Recovers the triples belonging to already computed points, ordered by *r*."""
    ell, m, n = spec.ell, spec.m, spec.n
    found: dict[int, SimultaneousTriple] = {}
    for point in points:
        if point.witness is None:
            continue
        indices = recover_rst(point.witness, spec)
        if indices is None:
            _logger.debug("Point (%d, %d) does not give positive indices", point.X, point.Y)
            continue
        r, s, t = indices
        found.setdefault(r, SimultaneousTriple.of(ell, m, n, r, s, t))
    return [found[r] for r in sorted(found)]


def _brute_chunk(ell: int, m: int, n: int, r_range: range) -> list[SimultaneousTriple]:
    triples = []
    for r in r_range:
        value = polygonal_number(ell, r)
        if value % m or value % n:
            continue
        s = polygonal_index(ell, value // m)
        t = polygonal_index(ell, value // n)
        if s is not None and t is not None:
            triples.append(SimultaneousTriple(ell, m, n, r, s, t, value, value // m, value // n))
    return triples


def brute_force_simultaneous(
    ell: int,
    m: int,
    n: int,
    r_max: int,
    *,
    jobs: int = 1
) -> list[SimultaneousTriple]:
    """Tests every :math:`r \\le r_{max}` directly; an oracle for :func:`solve_simultaneous`."""
    _check_multipliers(ell, m, n)
    check_int(r_max, "r_max")
    if r_max < 1:
        raise InvalidInput(f"r_max must be at least 1, not {r_max}")
    return ordered_scan(partial(_brute_chunk, ell, m, n), 1, r_max + 1, jobs)
