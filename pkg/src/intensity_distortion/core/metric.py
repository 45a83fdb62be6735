"""Agent-to-alternative distance tables and the checks run against them."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from intensity_distortion.core.profile import Intensity, Profile
from intensity_distortion.core.rational import format_rational, to_fraction

logger = logging.getLogger(__name__)


class ConsistencyMode(StrEnum):
    """How strictly a metric must agree with the reported intensities."""

    MANDATORY_STRICT = "mandatory-strict"
    MANDATORY_CLOSED = "mandatory-closed"
    VOLUNTARY = "voluntary"


@dataclass(frozen=True)
class MetricMatrix:
    """Entry (i, a) is the distance from agent i to alternative a."""

    distances: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.distances:
            raise ValueError("A metric needs at least one agent row")
        width = len(self.distances[0])
        if width == 0:
            raise ValueError("A metric needs at least one alternative column")
        for i, row in enumerate(self.distances):
            if len(row) != width:
                raise ValueError(f"Row {i} has {len(row)} entries, expected {width}")
            for a, value in enumerate(row):
                if value < 0:
                    raise ValueError(
                        f"Negative distance d({i}, {a}) = {format_rational(value)}"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> "MetricMatrix":
        return cls(tuple(tuple(to_fraction(v) for v in row) for row in rows))

    @property
    def num_agents(self) -> int:
        return len(self.distances)

    @property
    def num_alternatives(self) -> int:
        return len(self.distances[0])

    def distance(self, agent: int, alt: int) -> Fraction:
        return self.distances[agent][alt]

    def column(self, alt: int) -> tuple[Fraction, ...]:
        return tuple(row[alt] for row in self.distances)


@dataclass(frozen=True)
class TriangleViolation:
    agent: int
    other_agent: int
    alt: int
    via: int
    slack: Fraction


@dataclass(frozen=True)
class ConsistencyViolation:
    """A failed ballot condition; `position` is the 1-based flag position."""

    agent: int
    position: int
    kind: str
    detail: str


def social_cost(metric: MetricMatrix, alt: int) -> Fraction:
    if not 0 <= alt < metric.num_alternatives:
        raise ValueError(f"Alternative index {alt} outside 0..{metric.num_alternatives - 1}")
    return sum(metric.column(alt), Fraction(0))


def cost_ratio(metric: MetricMatrix, chosen: int, reference: int) -> Fraction:
    """sc(chosen) / sc(reference); the reference cost must be positive."""
    denominator = social_cost(metric, reference)
    if denominator == 0:
        raise ValueError(f"Reference alternative {reference} has zero social cost")
    return social_cost(metric, chosen) / denominator


def check_triangle(metric: MetricMatrix) -> list[TriangleViolation]:
    """Check d(i,a) <= d(i,b) + d(i',b) + d(i',a) for every i != i', a != b."""
    d = metric.distances
    violations = []
    for i in range(metric.num_agents):
        for i2 in range(metric.num_agents):
            if i == i2:
                continue
            for a in range(metric.num_alternatives):
                for b in range(metric.num_alternatives):
                    if a == b:
                        continue
                    slack = d[i][b] + d[i2][b] + d[i2][a] - d[i][a]
                    if slack < 0:
                        violations.append(TriangleViolation(i, i2, a, b, slack))
    if violations:
        logger.debug(f"Metric has {len(violations)} triangle violations")
    return violations


def check_consistency(
    profile: Profile, metric: MetricMatrix, mode: ConsistencyMode
) -> list[ConsistencyViolation]:
    """List every adjacent pair where the metric disagrees with a ballot."""
    if (metric.num_agents, metric.num_alternatives) != (
        profile.num_agents,
        profile.num_alternatives,
    ):
        raise ValueError(
            f"Metric is {metric.num_agents}x{metric.num_alternatives}, profile has "
            f"{profile.num_agents} agents and {profile.num_alternatives} alternatives"
        )

    alpha = profile.alpha
    violations = []
    for i, pref in enumerate(profile.preferences):
        for j, flag in enumerate(pref.intensities):
            upper = metric.distance(i, pref.ranking[j])
            lower = metric.distance(i, pref.ranking[j + 1])
            position = j + 1
            shown = f"d={format_rational(upper)} vs {format_rational(lower)}"

            if upper > lower:
                violations.append(ConsistencyViolation(i, position, "order", shown))
                continue
            if flag is Intensity.INTENSE:
                if upper > alpha * lower:
                    violations.append(ConsistencyViolation(i, position, "intense-gap", shown))
            elif mode is ConsistencyMode.MANDATORY_STRICT:
                if not upper > alpha * lower:
                    violations.append(ConsistencyViolation(i, position, "mild-gap", shown))
            elif mode is ConsistencyMode.MANDATORY_CLOSED:
                if upper < alpha * lower:
                    violations.append(ConsistencyViolation(i, position, "mild-gap", shown))
    return violations


def scaled(metric: MetricMatrix, factor: Fraction) -> MetricMatrix:
    return MetricMatrix(tuple(tuple(v * factor for v in row) for row in metric.distances))

