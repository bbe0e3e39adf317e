import pytest  # noqa: F401
from math import isqrt
from polypell import (
    CongruenceClass, InvalidModulus, PellSolution, Variant, check_x_minus_y_condition,
    check_xy_condition, find_satisfying_power, fundamental_solution, group_info, power,
    reduce_mod, xy_candidate_classes
)

SMALL_NON_SQUARES = [m for m in range(2, 51) if isqrt(m) ** 2 != m]


class TestReduceMod:

    def test_reduce(self):
        """Componentwise non-negative residues."""
        assert reduce_mod((17, 12), 6).pair == (5, 0)
        assert reduce_mod((1, 0), 7).pair == (1, 0)
        assert reduce_mod((-1, 1), 4).pair == (3, 1)
        assert reduce_mod(PellSolution(2, 99, 70), 6) == CongruenceClass(6, 3, 4)

    def test_invalid_modulus(self):
        """q must be at least 2."""
        with pytest.raises(InvalidModulus) as excinfo:
            reduce_mod((3, 2), 1)
        assert "at least 2, not 1" in str(excinfo.value)
        with pytest.raises(ValueError):
            group_info(2, 0)
        with pytest.raises(TypeError):
            reduce_mod((3, 2), 6.0)


class TestGroupInfo:

    def test_m2_q6(self):
        """The powers of (3, 2) modulo 6."""
        info = group_info(2, 6)
        assert info.order == 4
        assert [c.pair for c in info.classes] == [(3, 2), (5, 0), (3, 4), (1, 0)]
        assert info.identity.is_identity()

    @pytest.mark.parametrize(
        "m,q,order", [(2, 4, 2), (11, 6, 2), (10, 6, 1), (13, 6, 1), (2, 2, 1)]
    )
    def test_orders(self, m, q, order):
        """Known group orders."""
        assert group_info(m, q).order == order

    @pytest.mark.parametrize("m", SMALL_NON_SQUARES)
    def test_periodic(self, m):
        """Classes are Pell solutions mod q and repeat with period g_m(q)."""
        g = fundamental_solution(m)
        for q in range(2, 13):
            info = group_info(m, q)
            assert all(c.satisfies_pell(m) for c in info.classes)
            assert all(not c.is_identity() for c in info.classes[:-1])
            for n in range(0, 3 * info.order + 1):
                assert reduce_mod(power(g, n), q) == info.class_of_power(n)


class TestConditions:

    def test_pentagonal_examples(self):
        """Which powers of the m = 2 and m = 12 units qualify modulo 6."""
        assert not check_xy_condition((3, 2), 2, 6)
        assert not check_x_minus_y_condition((3, 2), 2, 6)
        assert check_xy_condition((17, 12), 2, 6)
        assert check_x_minus_y_condition((99, 70), 2, 6)
        assert check_x_minus_y_condition(fundamental_solution(12), 12, 6)

    def test_q2_is_vacuous(self):
        """Modulo 2 the identity already satisfies x + my = x + y = -1."""
        assert check_xy_condition((1, 0), 5, 2)

    def test_find_satisfying_power(self):
        """Least exponent and variant."""
        found = find_satisfying_power(2, 6)
        assert (found.exponent, found.variant) == (2, Variant.XY)
        assert found.residue.pair == (5, 0)
        found = find_satisfying_power(12, 6)
        assert (found.exponent, found.variant) == (1, Variant.X_MINUS_Y)
        assert str(found.variant) == "XminusY"
        assert find_satisfying_power(10, 6) is None

    @pytest.mark.parametrize("m", [3, 6, 7, 8, 11])
    def test_hexagonal_solvable(self, m):
        """Modulo 4 these multipliers have a qualifying power."""
        assert find_satisfying_power(m, 4) is not None

    @pytest.mark.parametrize("m", [2, 5, 10, 12, 13])
    def test_hexagonal_unsolvable(self, m):
        """Modulo 4 these multipliers have none."""
        assert find_satisfying_power(m, 4) is None

    @pytest.mark.parametrize("m", [2, 3, 5, 6, 7, 8, 12])
    def test_octagonal_solvable(self, m):
        """Modulo 3 these multipliers have a qualifying power."""
        assert find_satisfying_power(m, 3) is not None

    @pytest.mark.parametrize("m", [10, 11, 13])
    def test_octagonal_unsolvable(self, m):
        """Modulo 3 these multipliers have none."""
        assert find_satisfying_power(m, 3) is None

    @pytest.mark.parametrize("m", SMALL_NON_SQUARES)
    def test_round_trip(self, m):
        """A reported power really meets the reported condition."""
        for q in range(2, 13):
            found = find_satisfying_power(m, q)
            if found is None:
                continue
            residue = reduce_mod(power(fundamental_solution(m), found.exponent), q)
            assert residue == found.residue
            if found.variant is Variant.XY:
                assert check_xy_condition(residue, m, q)
            else:
                assert check_x_minus_y_condition(residue, m, q)
                assert not check_xy_condition(residue, m, q)

    @pytest.mark.parametrize("m", SMALL_NON_SQUARES)
    def test_odd_order_excludes_xy(self, m):
        """For q >= 3 no class of a group of odd order satisfies x + my = x + y = -1."""
        for q in range(3, 13):
            info = group_info(m, q)
            if info.order % 2 == 1:
                assert not any(check_xy_condition(c, m, q) for c in info.classes)


class TestCandidateClasses:

    def test_examples(self):
        """One candidate when gcd(m - 1, q) is odd, two when it is even."""
        assert [c.pair for c in xy_candidate_classes(2, 6)] == [(5, 0)]
        assert [c.pair for c in xy_candidate_classes(3, 6)] == [(5, 0), (2, 3)]
        assert [c.pair for c in xy_candidate_classes(2, 2)] == [(1, 0)]

    @pytest.mark.parametrize("m", SMALL_NON_SQUARES)
    def test_candidates_cover_group(self, m):
        """Every class meeting x + my = x + y = -1 is a candidate."""
        for q in range(2, 13):
            candidates = xy_candidate_classes(m, q)
            for c in group_info(m, q).classes:
                if check_xy_condition(c, m, q):
                    assert c in candidates
