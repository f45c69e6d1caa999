"""Tests for the complete domination criterion and the min/max baseline."""

import pytest

from src.domination import (
    MarginOverflowError,
    domination_margin,
    dominates,
    dominates_point,
    minmax_dominates,
    minmax_margin,
)
from src.geometry import IncompatibleOperandsError, LpNorm, Point, Rect


class TestDominationMargin:
    """Worked example: a=(0,2), b=(0,0), R=[2,10]x[2,4] under L2."""

    def test_golden_margin(
        self, example_a: Rect, example_b: Rect, example_r: Rect, l2: LpNorm
    ) -> None:
        verdict = domination_margin(example_a, example_b, example_r, l2)
        assert verdict.dominated is True
        assert verdict.margin == -4.0
        assert verdict.per_dim_terms == (0.0, -4.0)

    def test_critical_corner(
        self, example_a: Rect, example_b: Rect, example_r: Rect, l2: LpNorm
    ) -> None:
        verdict = domination_margin(example_a, example_b, example_r, l2)
        # dimension 0 ties (0 at both ends) and resolves to the lower endpoint
        assert verdict.critical_corner == Point.of(2, 2)

    def test_second_dimension_with_either_endpoint(self, l2: LpNorm) -> None:
        # a_2 = 2, b_2 = 0: r=2 gives 0-4, r=4 gives 4-16, r=10 gives 64-100
        a_i, b_i = Rect.from_point([2]), Rect.from_point([0])
        assert domination_margin(a_i, b_i, Rect.from_pairs([[2, 4]]), l2).margin == -4.0
        assert domination_margin(a_i, b_i, Rect.from_pairs([[2, 10]]), l2).margin == -4.0

    def test_swapped_not_dominated(
        self, example_a: Rect, example_b: Rect, example_r: Rect, l2: LpNorm
    ) -> None:
        verdict = domination_margin(example_b, example_a, example_r, l2)
        assert verdict.dominated is False
        assert verdict.margin > 0

    @pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
    def test_identical_operands(self, p: float) -> None:
        a = Rect.from_pairs([[0, 1], [3, 5], [-2, -2]])
        r = Rect.from_pairs([[4, 9], [0, 1], [1, 2]])
        verdict = domination_margin(a, a, r, LpNorm(p))
        assert verdict.dominated is False
        assert verdict.margin >= 0
        assert all(term >= 0 for term in verdict.per_dim_terms)

    def test_zero_margin_is_not_domination(self) -> None:
        # r equidistant from the points a=0 and b=2
        verdict = domination_margin(
            Rect.from_point([0]), Rect.from_point([2]), Rect.from_point([1]), LpNorm(1)
        )
        assert verdict.margin == 0.0
        assert verdict.dominated is False

    def test_dimension_mismatch(self, example_a: Rect, example_b: Rect, l2: LpNorm) -> None:
        with pytest.raises(IncompatibleOperandsError):
            domination_margin(example_a, example_b, Rect.from_pairs([[0, 1]]), l2)


class TestDominates:
    def test_worked_example(
        self, example_a: Rect, example_b: Rect, example_r: Rect, l2: LpNorm
    ) -> None:
        assert dominates(example_a, example_b, example_r, l2)

    def test_one_dimensional_points(self) -> None:
        a, b, r = Rect.from_point([0]), Rect.from_point([5]), Rect.from_point([1])
        assert dominates(a, b, r, LpNorm(1))

    def test_point_helper(self) -> None:
        assert dominates_point(Point.of(0), Point.of(5), Point.of(1), LpNorm(1))
        assert not dominates_point(Point.of(0), Point.of(2), Point.of(1), LpNorm(1))


class TestMinmaxBaseline:
    def test_misses_worked_example(
        self, example_a: Rect, example_b: Rect, example_r: Rect, l2: LpNorm
    ) -> None:
        # MaxDist(a, R)^2 = 104, MinDist(b, R)^2 = 8
        assert minmax_margin(example_a, example_b, example_r, l2) == 104.0 - 8.0
        assert not minmax_dominates(example_a, example_b, example_r, l2)

    def test_well_separated(self, l2: LpNorm) -> None:
        unit = Rect.from_pairs([[0, 1], [0, 1]])
        far = Rect.from_pairs([[10, 11], [10, 11]])
        assert minmax_dominates(unit, far, unit, l2)
        assert dominates(unit, far, unit, l2)

    def test_identical_operands(self, example_r: Rect, l2: LpNorm) -> None:
        a = Rect.from_pairs([[0, 1], [0, 1]])
        assert not minmax_dominates(a, a, example_r, l2)


class TestPoweredOverflow:
    """Finite coordinates whose powered distances exceed a double."""

    def test_both_powers_infinite(self, l2: LpNorm) -> None:
        a = b = Rect.from_point([-1e200])
        with pytest.raises(MarginOverflowError) as exc_info:
            domination_margin(a, b, Rect.from_point([1e200]), l2)
        assert exc_info.value.dimension == 0

    def test_opposite_infinite_terms(self, l2: LpNorm) -> None:
        a, b = Rect.from_point([0, 1e200]), Rect.from_point([1e200, 0])
        with pytest.raises(MarginOverflowError):
            dominates(a, b, Rect.from_point([1e200, 1e200]), l2)

    def test_general_order_saturates(self) -> None:
        a = b = Rect.from_point([-1e200])
        with pytest.raises(MarginOverflowError):
            domination_margin(a, b, Rect.from_point([1e200]), LpNorm(3))

    def test_baseline_overflow(self, l2: LpNorm) -> None:
        a = b = Rect.from_point([-1e200])
        with pytest.raises(MarginOverflowError):
            minmax_margin(a, b, Rect.from_point([1e200]), l2)

    def test_large_but_representable(self, l2: LpNorm) -> None:
        a, b, r = Rect.from_point([1e150]), Rect.from_point([-1e150]), Rect.from_point([1e150])
        assert dominates(a, b, r, l2)
