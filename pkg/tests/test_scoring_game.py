import sys
from pathlib import Path

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from fractions import Fraction

import pytest

from intensity_distortion.scoring_game import (
    distortion_bound,
    optimal_vector,
    padded_scores,
    payoff_matrix,
    recurrences,
    solve_game,
    verify_equilibrium,
)

ALPHAS = [
    Fraction(1, 10),
    Fraction(1, 4),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(3, 4),
    Fraction(9, 10),
    Fraction(1),
]


class TestRecurrences:
    """Tests for the mixing recurrences."""

    @pytest.mark.unit
    def test_first_step(self) -> None:
        """Test w_1 = (a+1)/(3a+1) and t_1 = (1-a)/(3a+1)."""
        solution = recurrences(1, Fraction(1, 2))

        assert solution.w == (Fraction(3, 5),)
        assert solution.t == (Fraction(1, 5),)
        assert solution.value == Fraction(1, 5)

    @pytest.mark.unit
    def test_alpha_one(self) -> None:
        """Test that alpha = 1 mixes uniformly."""
        solution = optimal_vector(2, Fraction(1))

        assert solution.t == (0, Fraction(1, 3))
        assert solution.r == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))

    @pytest.mark.unit
    def test_alpha_zero_is_computed(self) -> None:
        """Test that the recurrences are defined at alpha = 0."""
        solution = recurrences(3, Fraction(0))

        assert solution.w == (1, 1, 1)
        assert solution.t == (1, 1, 1)

    @pytest.mark.unit
    def test_k_zero(self) -> None:
        """Test the empty recurrence and r^0 = (1)."""
        assert recurrences(0, Fraction(1, 2)).value == 0
        assert optimal_vector(0, Fraction(1, 2)).r == (1,)
        assert optimal_vector(0, Fraction(0)).r == (1,)

    @pytest.mark.unit
    def test_invalid_arguments(self) -> None:
        """Test range validation."""
        with pytest.raises(ValueError, match="non-negative"):
            recurrences(-1, Fraction(1, 2))
        with pytest.raises(ValueError, match="alpha must lie"):
            recurrences(1, Fraction(3, 2))
        with pytest.raises(ValueError, match="alpha > 0"):
            optimal_vector(1, Fraction(0))

    @pytest.mark.unit
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_values_increase_with_k(self, alpha: Fraction) -> None:
        """Test that t_k is non-decreasing and below 1."""
        t = recurrences(10, alpha).t

        assert all(a <= b for a, b in zip(t, t[1:], strict=False))
        assert all(0 <= value <= 1 for value in t)


class TestOptimalVector:
    """Tests for the scoring vector r^k."""

    @pytest.mark.unit
    def test_first_vector(self) -> None:
        """Test r^1 = (w_1, 1 - w_1)."""
        assert optimal_vector(1, Fraction(1, 2)).r == (Fraction(3, 5), Fraction(2, 5))

    @pytest.mark.unit
    @pytest.mark.parametrize("k", [1, 3, 6])
    def test_vector_is_distribution(self, k: int) -> None:
        """Test that r^k is a probability vector of length k+1."""
        r = optimal_vector(k, Fraction(1, 3)).r

        assert len(r) == k + 1
        assert sum(r) == 1
        assert all(value >= 0 for value in r)

    @pytest.mark.unit
    def test_padded_scores(self) -> None:
        """Test zero padding to m entries."""
        assert padded_scores(1, Fraction(1, 2), 4) == (
            Fraction(3, 5),
            Fraction(2, 5),
            0,
            0,
        )
        with pytest.raises(ValueError, match="more than m = 3"):
            padded_scores(3, Fraction(1, 2), 3)


class TestPayoffMatrix:
    """Tests for the scoring game matrix."""

    @pytest.mark.unit
    def test_shape_and_entries(self) -> None:
        """Test diagonal, upper and lower entries."""
        matrix = payoff_matrix(2, Fraction(1, 2))

        assert matrix == (
            (-1, 1, 1),
            (2, -1, 1),
            (4, 2, -1),
        )

    @pytest.mark.unit
    def test_invalid_arguments(self) -> None:
        """Test that k >= 1 and alpha > 0 are required."""
        with pytest.raises(ValueError, match="at least 1"):
            payoff_matrix(0, Fraction(1, 2))
        with pytest.raises(ValueError, match="alpha in"):
            payoff_matrix(2, Fraction(0))


class TestGameOracle:
    """Tests comparing the recurrences against the LP game value."""

    @pytest.mark.integration
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_recurrence_matches_game_value(self, alpha: Fraction) -> None:
        """Test t_k == value of the matrix game for k = 1..10."""
        for k in range(1, 11):
            # Act
            game = solve_game(k, alpha)

            # Assert
            assert game.value == recurrences(k, alpha).value, f"k={k}"

    @pytest.mark.unit
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_equilibrium_identity(self, alpha: Fraction) -> None:
        """Test r^T M = t 1^T and M reversed(r) = t 1 for k = 1..10."""
        for k in range(1, 11):
            assert verify_equilibrium(k, alpha) == recurrences(k, alpha).value


class TestDistortionBound:
    """Tests for the 2 + max(alpha, t_ell) guarantee."""

    @pytest.mark.unit
    def test_bound_values(self) -> None:
        """Test the bound for ell = 0 and ell = 1."""
        assert distortion_bound(0, Fraction(1, 2)) == Fraction(5, 2)
        assert distortion_bound(1, Fraction(1, 2)) == Fraction(5, 2)
        assert distortion_bound(1, Fraction(1, 10)) == 2 + Fraction(9, 13)

    @pytest.mark.unit
    def test_bound_at_most_three(self) -> None:
        """Test that the guarantee never exceeds the classic bound of 3."""
        for alpha in ALPHAS:
            for ell in range(6):
                assert distortion_bound(ell, alpha) <= 3
