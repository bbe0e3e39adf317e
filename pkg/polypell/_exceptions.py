"""Exceptions raised by the solvers."""
from __future__ import annotations


class PolyPellError(Exception):
    """Base class for all errors raised by :mod:`polypell`."""


class InvalidInput(PolyPellError, ValueError):
    """An argument is outside the domain of the operation."""


class PerfectSquareInput(InvalidInput):
    """The multiplier *m* is a perfect square, so the Pell equation is degenerate."""

    def __init__(self, m: int) -> None:
        super().__init__(f"m = {m} is a perfect square")
        self.m = m


class MixedModulus(InvalidInput):
    """Two elements of different rings :math:`\\mathbb Z[\\sqrt m]` were combined."""

    def __init__(self, m1: int, m2: int) -> None:
        super().__init__(f"Cannot compose elements with m = {m1} and m = {m2}")
        self.m1 = m1
        self.m2 = m2


class InvalidModulus(InvalidInput):
    """A congruence modulus smaller than 2 was given."""

    def __init__(self, q: int) -> None:
        super().__init__(f"Modulus q must be at least 2, not {q}")
        self.q = q


class UnsupportedEll(InvalidInput):
    """The polygon order is outside what the operation supports (:math:`\\ell = 4`)."""

    def __init__(self, ell: int, reason: str = "squares are not supported") -> None:
        super().__init__(f"ell = {ell}: {reason}")
        self.ell = ell


class InvalidOrdering(InvalidInput):
    """The multipliers of a simultaneous system violate :math:`m > n > 1`."""

    def __init__(self, m: int, n: int) -> None:
        super().__init__(f"Multipliers must satisfy m > n > 1, got m = {m} and n = {n}")
        self.m = m
        self.n = n


class NoTheoremSolutions(PolyPellError):
    """No power of the fundamental solution meets the congruence conditions.

    This is a certified negative for the construction of solutions from Pell
    units: the residues of the powers of the fundamental solution modulo *q*
    repeat with period *order*, and none of them satisfies either condition.
    It is **not** a proof that :math:`P(\\ell, r) = mP(\\ell, s)` has no
    solutions at all.
    """

    def __init__(self, ell: int, m: int, q: int, order: int) -> None:
        super().__init__(
            f"ell = {ell}, m = {m}: no power of the fundamental solution satisfies "
            f"the congruence conditions modulo q = {q} (group order {order})"
        )
        self.ell = ell
        self.m = m
        self.q = q
        self.order = order
