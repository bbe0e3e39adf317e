"""Pell equations and polygonal numbers which are multiples of each other.

This package solves the Pell equation :math:`x^2 - my^2 = 1` exactly via
continued fractions (:func:`fundamental_solution`) and uses its solutions to
find :math:`\\ell`-gonal numbers :math:`P(\\ell, r)` which are *m* times
another :math:`\\ell`-gonal number (:func:`solve_multiple`), triangular
numbers in a given ratio (:func:`solve_triangular_ratio`) and triples with
:math:`P(\\ell, r) = mP(\\ell, s) = nP(\\ell, t)` (:func:`solve_simultaneous`).

The congruence conditions which decide whether the Pell construction applies
are available separately (:func:`group_info`, :func:`find_satisfying_power`),
as are brute-force oracles for every solver. All arithmetic is exact.

The package logs to the ``polypell`` logger and attaches a
:class:`logging.NullHandler` to it, so nothing is printed unless the
application configures logging.
"""
import logging

from ._types import ModeT, PairT, Variant
from ._exceptions import InvalidInput, InvalidModulus, InvalidOrdering, MixedModulus, \
    NoTheoremSolutions, PerfectSquareInput, PolyPellError, UnsupportedEll
from ._pell import CFExpansion, GeneralizedPellSolution, NegativePellSolution, NormFormElement, \
    PellSolution, cf_expansion, compose, fundamental_solution, inverse, \
    naive_fundamental_solution, negative_pell_fundamental, power, sqrt_approx
from ._congruence import CongruenceClass, CongruenceGroupInfo, SatisfyingPower, \
    check_x_minus_y_condition, check_xy_condition, find_satisfying_power, group_info, \
    reduce_mod, xy_candidate_classes
from ._gonal import DEFAULT_COUNT, DEFAULT_MAX_POWER, DEFAULT_ORACLE_BOUND, GonalPair, \
    GonalTransform, PolygonalNumber, TheoremWitness, TriangularRatioPair, \
    enumerate_multiples_oracle, polygonal_index, polygonal_number, solve_multiple, \
    solve_triangular_ratio, theorem_witness, transform_for
from ._simultaneous import DEFAULT_V_BOUND, CurvePoint, CurveSpec, SimultaneousTriple, \
    TripleWitness, brute_force_simultaneous, constrained_integer_points, curve_params, \
    recover_rst, solve_simultaneous, triples_from_points

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    # Types
    "PairT",
    "ModeT",
    "Variant",
    # Exceptions
    "PolyPellError",
    "InvalidInput",
    "PerfectSquareInput",
    "MixedModulus",
    "InvalidModulus",
    "UnsupportedEll",
    "InvalidOrdering",
    "NoTheoremSolutions",
    # Pell equations
    "NormFormElement",
    "PellSolution",
    "NegativePellSolution",
    "GeneralizedPellSolution",
    "CFExpansion",
    "cf_expansion",
    "fundamental_solution",
    "naive_fundamental_solution",
    "negative_pell_fundamental",
    "compose",
    "inverse",
    "power",
    "sqrt_approx",
    # Congruences
    "CongruenceClass",
    "CongruenceGroupInfo",
    "SatisfyingPower",
    "reduce_mod",
    "group_info",
    "check_xy_condition",
    "check_x_minus_y_condition",
    "find_satisfying_power",
    "xy_candidate_classes",
    # Polygonal numbers
    "DEFAULT_COUNT",
    "DEFAULT_MAX_POWER",
    "DEFAULT_ORACLE_BOUND",
    "PolygonalNumber",
    "GonalTransform",
    "GonalPair",
    "TheoremWitness",
    "TriangularRatioPair",
    "polygonal_number",
    "polygonal_index",
    "transform_for",
    "theorem_witness",
    "solve_multiple",
    "solve_triangular_ratio",
    "enumerate_multiples_oracle",
    # Simultaneous multiples
    "DEFAULT_V_BOUND",
    "CurveSpec",
    "CurvePoint",
    "TripleWitness",
    "SimultaneousTriple",
    "curve_params",
    "constrained_integer_points",
    "recover_rst",
    "triples_from_points",
    "solve_simultaneous",
    "brute_force_simultaneous"
]
