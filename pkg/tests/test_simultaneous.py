import pytest  # noqa: F401
from polypell import (
    CurvePoint, InvalidInput, InvalidOrdering, SimultaneousTriple, TripleWitness, UnsupportedEll,
    brute_force_simultaneous, constrained_integer_points, curve_params, polygonal_number,
    recover_rst, solve_simultaneous
)
from common import SIMULTANEOUS_TRIPLES


class TestCurveParams:

    def test_pentagonal(self):
        """a = 6, b = 1 and the roots 90, 54 for (5, 6, 3)."""
        spec = curve_params(5, 6, 3)
        assert (spec.a, spec.b, spec.A, spec.B) == (6, 1, 90, 54)

    def test_triangular(self):
        """For triangular numbers b is negative."""
        spec = curve_params(3, 6, 2)
        assert (spec.a, spec.b, spec.A, spec.B) == (2, -1, 60, 48)

    def test_invalid(self):
        """m > n > 1 is required and squares are not supported."""
        with pytest.raises(InvalidOrdering) as excinfo:
            curve_params(5, 3, 3)
        assert "m > n > 1" in str(excinfo.value)
        with pytest.raises(InvalidOrdering):
            curve_params(5, 6, 1)
        with pytest.raises(InvalidInput):
            curve_params(5, 2, 3)
        with pytest.raises(UnsupportedEll):
            curve_params(4, 6, 3)
        with pytest.raises(InvalidInput):
            curve_params(2, 6, 3)

    @pytest.mark.parametrize("ell,m,n,r,s,t,value,value_m,value_n", SIMULTANEOUS_TRIPLES)
    def test_substitution(self, ell, m, n, r, s, t, value, value_m, value_n):
        """The witnesses of a known triple satisfy both quadratics and give a point."""
        spec = curve_params(ell, m, n)
        a, b = spec.a, spec.b
        u, v, w = a * r - b, a * s - b, a * t - b
        assert u * u - m * v * v == -(m - 1) * b * b
        assert m * v * v - n * w * w == (m - n) * b * b
        assert spec.on_curve(m * m * n * v * v, m * m * n * n * u * v * w)


class TestConstrainedPoints:

    def test_pentagonal_points(self):
        """Exactly three points for (5, 6, 3) with v <= 10^4."""
        spec = curve_params(5, 6, 3)
        points = constrained_integer_points(spec, 10**4)
        assert [(p.X, p.Y) for p in points] == [(0, 0), (108, 324), (90828, 27351756)]
        assert points[0].witness is None
        assert (points[1].witness.u, points[1].witness.v, points[1].witness.w) == (1, 1, 1)
        assert (points[2].witness.u, points[2].witness.v, points[2].witness.w) == (71, 29, 41)

    @pytest.mark.parametrize("ell,m,n", [(3, 6, 2), (5, 6, 3), (7, 12, 2), (6, 20, 8)])
    def test_points_are_constrained(self, ell, m, n):
        """Every point lies on the curve with m^2 n | X and m^2 n^2 | Y."""
        spec = curve_params(ell, m, n)
        points = constrained_integer_points(spec, 5000, jobs=2)
        assert points
        assert [p.X for p in points] == sorted(p.X for p in points)
        for p in points:
            assert spec.on_curve(p.X, p.Y)
            assert p.Y >= 0
            assert p.X % (m * m * n) == 0
            assert p.Y % (m * m * n * n) == 0
            if p.witness is not None:
                assert p.X - spec.A == m * n * p.witness.u ** 2
                assert p.X - spec.B == m * n * n * p.witness.w ** 2

    def test_jobs_agree(self):
        """Splitting the scan across processes changes nothing."""
        spec = curve_params(7, 12, 2)
        assert constrained_integer_points(spec, 3000, jobs=3) == \
            constrained_integer_points(spec, 3000)

    def test_invalid_bound(self):
        """v_bound must be positive."""
        with pytest.raises(InvalidInput):
            constrained_integer_points(curve_params(5, 6, 3), 0)


class TestRecoverRst:

    def test_examples(self):
        """(71, 29, 41) gives (12, 5, 7), the trivial witness gives nothing."""
        spec = curve_params(5, 6, 3)
        assert recover_rst((71, 29, 41), spec) == (12, 5, 7)
        assert recover_rst((-71, -29, -41), spec) == (12, 5, 7)
        assert recover_rst((1, 1, 1), spec) is None
        witness = TripleWitness(71, 29, 41, 90828, 27351756)
        assert recover_rst(witness, spec) == (12, 5, 7)

    def test_sign_variants(self):
        """Zero coordinates are not repeated."""
        assert len(list(TripleWitness(3, 0, 2, 0, 0).sign_variants())) == 4
        assert len(list(TripleWitness(3, 1, 2, 0, 0).sign_variants())) == 8


class TestSolveSimultaneous:

    def test_pentagonal(self):
        """210 = 6 * 35 = 3 * 70."""
        triple, = solve_simultaneous(5, 6, 3, 10**4)
        assert (triple.r, triple.s, triple.t) == (12, 5, 7)
        assert (triple.value, triple.value_m, triple.value_n) == (210, 35, 70)

    @pytest.mark.parametrize("ell,m,n,r,s,t,value,value_m,value_n", SIMULTANEOUS_TRIPLES)
    def test_against_brute_force(self, ell, m, n, r, s, t, value, value_m, value_n):
        """Both searches find exactly the known triple with r <= 10^4."""
        r_max = 10**4
        spec = curve_params(ell, m, n)
        expected = SimultaneousTriple(ell, m, n, r, s, t, value, value_m, value_n)
        assert brute_force_simultaneous(ell, m, n, r_max) == [expected]
        found = solve_simultaneous(ell, m, n, spec.a * r_max)
        assert [triple for triple in found if triple.r <= r_max] == [expected]

    def test_brute_force(self):
        """Direct scans, including squares."""
        assert [(x.r, x.s, x.t) for x in brute_force_simultaneous(3, 6, 2, 100)] == [(3, 1, 2)]
        assert [(x.r, x.s, x.t) for x in brute_force_simultaneous(4, 9, 4, 10)] == [(6, 2, 3)]
        assert brute_force_simultaneous(5, 6, 3, 100, jobs=2) == \
            brute_force_simultaneous(5, 6, 3, 100)
        with pytest.raises(InvalidInput):
            brute_force_simultaneous(5, 6, 3, 0)

    def test_triple_validates(self):
        """SimultaneousTriple checks both relations."""
        triple = SimultaneousTriple.of(5, 6, 3, 12, 5, 7)
        assert triple.value == polygonal_number(5, 12) == 210
        with pytest.raises(InvalidInput):
            SimultaneousTriple.of(5, 6, 3, 12, 5, 6)
        with pytest.raises(InvalidInput):
            SimultaneousTriple(5, 6, 3, 12, 5, 7, 211, 35, 70)

    def test_point_default_witness(self):
        assert CurvePoint(0, 0).witness is None
