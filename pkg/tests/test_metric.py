import sys
from pathlib import Path

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import random
from fractions import Fraction

import pytest

from intensity_distortion.core.metric import (
    ConsistencyMode,
    MetricMatrix,
    check_consistency,
    check_triangle,
    cost_ratio,
    scaled,
    social_cost,
)
from intensity_distortion.core.profile import Profile, preference

ALPHAS = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]


def _random_metric(rng: random.Random, n: int, m: int) -> MetricMatrix:
    return MetricMatrix(
        tuple(tuple(Fraction(rng.randint(0, 8), 2) for _ in range(m)) for _ in range(n))
    )


def _profile_near(rng: random.Random, metric: MetricMatrix, alpha: Fraction) -> Profile:
    """Ballots read off the metric, with some rankings and flags perturbed."""
    m = metric.num_alternatives
    prefs = []
    for row in metric.distances:
        ranking = sorted(range(m), key=lambda a: (row[a], a))
        if rng.random() < 0.2:
            rng.shuffle(ranking)
        intense = {
            j + 1
            for j in range(m - 1)
            if (row[ranking[j]] <= alpha * row[ranking[j + 1]]) != (rng.random() < 0.15)
        }
        prefs.append(preference(ranking, intense=intense))
    return Profile(tuple(f"a{j + 1}" for j in range(m)), tuple(prefs), alpha)


class TestMetricMatrix:
    """Tests for the distance table."""

    @pytest.mark.unit
    def test_from_rows_is_exact(self) -> None:
        """Test that string and int entries become Fractions."""
        metric = MetricMatrix.from_rows([["1/3", 2], ["0.5", "0"]])

        assert metric.distance(0, 0) == Fraction(1, 3)
        assert metric.distance(1, 0) == Fraction(1, 2)
        assert metric.column(1) == (Fraction(2), Fraction(0))
        assert (metric.num_agents, metric.num_alternatives) == (2, 2)

    @pytest.mark.unit
    @pytest.mark.parametrize(
        ("rows", "message"),
        [
            ([], "at least one agent"),
            ([[]], "at least one alternative"),
            ([[1, 2], [1]], "Row 1 has 1 entries"),
            ([[1, "-1"]], "Negative distance"),
        ],
    )
    def test_invalid_tables(self, rows: list, message: str) -> None:
        """Test shape and sign validation."""
        with pytest.raises(ValueError, match=message):
            MetricMatrix.from_rows(rows)


class TestSocialCost:
    """Tests for social cost and cost ratios."""

    @pytest.mark.unit
    def test_social_cost_and_ratio(self) -> None:
        """Test sums over agents and their ratio."""
        metric = MetricMatrix.from_rows([[1, 3], [1, "1/2"]])

        assert social_cost(metric, 0) == 2
        assert social_cost(metric, 1) == Fraction(7, 2)
        assert cost_ratio(metric, 1, 0) == Fraction(7, 4)

    @pytest.mark.unit
    def test_ratio_is_scale_invariant(self) -> None:
        """Test that scaling every distance keeps the ratio."""
        metric = MetricMatrix.from_rows([[1, 3], [2, "1/2"]])

        assert cost_ratio(scaled(metric, Fraction(5, 7)), 1, 0) == cost_ratio(metric, 1, 0)

    @pytest.mark.unit
    def test_zero_reference_cost(self) -> None:
        """Test that a zero-cost reference is rejected."""
        metric = MetricMatrix.from_rows([[0, 1], [0, 1]])

        with pytest.raises(ValueError, match="zero social cost"):
            cost_ratio(metric, 1, 0)

    @pytest.mark.unit
    def test_unknown_alternative(self) -> None:
        """Test index validation."""
        with pytest.raises(ValueError, match="outside"):
            social_cost(MetricMatrix.from_rows([[1]]), 1)


class TestCheckTriangle:
    """Tests for the 4-point triangle check."""

    @pytest.mark.unit
    def test_line_metric_has_no_violations(self) -> None:
        """Test a metric induced by points on a line."""
        # agents at 0 and 3, alternatives at 1 and 4
        metric = MetricMatrix.from_rows([[1, 4], [2, 1]])

        assert check_triangle(metric) == []

    @pytest.mark.unit
    def test_violation_reported(self) -> None:
        """Test that d(0,a) > d(0,b) + d(1,b) + d(1,a) is caught."""
        metric = MetricMatrix.from_rows([[10, 1], [1, 1]])

        # Act
        violations = check_triangle(metric)

        # Assert
        assert len(violations) == 1
        violation = violations[0]
        assert (violation.agent, violation.other_agent, violation.alt, violation.via) == (
            0,
            1,
            0,
            1,
        )
        assert violation.slack == -7


class TestCheckConsistency:
    """Tests for ballot consistency in the three modes."""

    @pytest.mark.unit
    def test_intense_gap(self, polar_m2: Profile) -> None:
        """Test the alpha-gap required by an Intense flag."""
        # agent 0 reports a1 >> a2 at alpha 1/2
        ok = MetricMatrix.from_rows([[1, 2], [2, 1]])
        bad = MetricMatrix.from_rows([[3, 4], [2, 1]])

        assert check_consistency(polar_m2, ok, ConsistencyMode.MANDATORY_CLOSED) == []
        violations = check_consistency(polar_m2, bad, ConsistencyMode.VOLUNTARY)
        assert [(v.agent, v.position, v.kind) for v in violations] == [(0, 1, "intense-gap")]

    @pytest.mark.unit
    def test_mild_gap_strict_closed_and_voluntary(self, polar_m2: Profile) -> None:
        """Test that Mild on the gap boundary is closed-consistent but not strict."""
        # agent 1 reports a2 > a1 with d(a2) = alpha * d(a1)
        boundary = MetricMatrix.from_rows([[1, 2], [2, 1]])
        wide = MetricMatrix.from_rows([[1, 2], [4, 1]])

        strict = check_consistency(polar_m2, boundary, ConsistencyMode.MANDATORY_STRICT)
        assert [(v.agent, v.kind) for v in strict] == [(1, "mild-gap")]
        assert check_consistency(polar_m2, boundary, ConsistencyMode.MANDATORY_CLOSED) == []
        closed = check_consistency(polar_m2, wide, ConsistencyMode.MANDATORY_CLOSED)
        assert [(v.agent, v.kind) for v in closed] == [(1, "mild-gap")]
        assert check_consistency(polar_m2, wide, ConsistencyMode.VOLUNTARY) == []

    @pytest.mark.unit
    def test_order_violation(self, polar_m2: Profile) -> None:
        """Test that ranking order is enforced in every mode."""
        reversed_order = MetricMatrix.from_rows([[2, 1], [2, 1]])

        violations = check_consistency(polar_m2, reversed_order, ConsistencyMode.VOLUNTARY)

        assert [(v.agent, v.kind) for v in violations] == [(0, "order")]

    @pytest.mark.unit
    def test_dimension_mismatch(self, polar_m2: Profile) -> None:
        """Test that the metric must match the profile's shape."""
        with pytest.raises(ValueError, match="Metric is 1x2"):
            check_consistency(
                polar_m2, MetricMatrix.from_rows([[1, 2]]), ConsistencyMode.VOLUNTARY
            )


class TestMetricProperties:
    """Properties that hold for every metric and profile."""

    @pytest.mark.unit
    def test_consistency_modes_are_nested(self) -> None:
        """Test strict pass => closed pass => voluntary pass."""
        rng = random.Random(3)
        strict_passes = 0
        for _ in range(200):
            # Arrange
            n, m = rng.randint(1, 3), rng.randint(2, 4)
            metric = _random_metric(rng, n, m)
            profile = _profile_near(rng, metric, rng.choice(ALPHAS))

            # Act
            strict = check_consistency(profile, metric, ConsistencyMode.MANDATORY_STRICT)
            closed = check_consistency(profile, metric, ConsistencyMode.MANDATORY_CLOSED)
            voluntary = check_consistency(profile, metric, ConsistencyMode.VOLUNTARY)

            # Assert
            if not strict:
                strict_passes += 1
                assert closed == []
            if not closed:
                assert voluntary == []
        assert strict_passes >= 10

    @pytest.mark.unit
    def test_voluntary_order_matches_sorted_distances(self) -> None:
        """Test that order violations are empty iff distances rise along each ranking."""
        rng = random.Random(4)
        for _ in range(200):
            n, m = rng.randint(1, 3), rng.randint(2, 4)
            metric = _random_metric(rng, n, m)
            profile = _profile_near(rng, metric, rng.choice(ALPHAS))

            violations = check_consistency(profile, metric, ConsistencyMode.VOLUNTARY)

            for i, pref in enumerate(profile.preferences):
                along = [metric.distance(i, a) for a in pref.ranking]
                nondecreasing = all(x <= y for x, y in zip(along, along[1:]))
                ordered = not [v for v in violations if v.agent == i and v.kind == "order"]
                assert ordered == nondecreasing

    @pytest.mark.unit
    def test_social_cost_is_linear_in_a_column(self) -> None:
        """Test that scaling one column scales its cost and leaves the others alone."""
        rng = random.Random(6)
        for _ in range(50):
            # Arrange
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            metric = _random_metric(rng, n, m)
            column = rng.randrange(m)
            factor = Fraction(rng.randint(0, 9), rng.randint(1, 5))
            rows = [list(row) for row in metric.distances]
            for row in rows:
                row[column] *= factor

            # Act
            stretched = MetricMatrix.from_rows(rows)

            # Assert
            for a in range(m):
                expected = social_cost(metric, a) * (factor if a == column else 1)
                assert social_cost(stretched, a) == expected

    @pytest.mark.unit
    def test_uniform_scaling_scales_every_cost(self) -> None:
        """Test social_cost(scaled(d, c), a) == c * social_cost(d, a)."""
        rng = random.Random(7)
        for _ in range(50):
            metric = _random_metric(rng, rng.randint(1, 4), rng.randint(1, 4))
            factor = Fraction(rng.randint(1, 9), rng.randint(1, 9))

            result = scaled(metric, factor)

            for a in range(metric.num_alternatives):
                assert social_cost(result, a) == factor * social_cost(metric, a)
