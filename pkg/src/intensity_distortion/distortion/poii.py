"""Intensity-oblivious optimum and the price of ignoring intensities."""

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from intensity_distortion.core.errors import (
    BudgetExceededError,
    DegenerateProfileError,
    InfinitePoIIError,
)
from intensity_distortion.core.profile import Intensity, Profile
from intensity_distortion.core.rational import ExtendedValue
from intensity_distortion.distortion.engine import alternative_distortions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationBudget:
    """Upper limits for enumerating every intensity assignment of a profile."""

    max_alternatives: int = 6
    max_agents: int = 4
    max_assignments: int = 4096

    def check(self, profile: Profile) -> int:
        """Return the number of assignments, or raise when over budget."""
        m, n = profile.num_alternatives, profile.num_agents
        if m > self.max_alternatives:
            raise BudgetExceededError(
                f"{m} alternatives exceed the enumeration limit of {self.max_alternatives}"
            )
        if n > self.max_agents:
            raise BudgetExceededError(
                f"{n} agents exceed the enumeration limit of {self.max_agents}"
            )
        count = 2 ** (n * max(m - 1, 0))
        if count > self.max_assignments:
            raise BudgetExceededError(
                f"{count} intensity assignments exceed the limit of {self.max_assignments}"
            )
        return count


def intensity_assignments(profile: Profile) -> Iterator[tuple[tuple[Intensity, ...], ...]]:
    """Every per-agent choice of flag vector, Mild-first in lexicographic order."""
    flag_vectors = list(
        itertools.product((Intensity.MILD, Intensity.INTENSE), repeat=profile.num_alternatives - 1)
    )
    yield from itertools.product(flag_vectors, repeat=profile.num_agents)


def _ratio(numerator: ExtendedValue, denominator: ExtendedValue) -> ExtendedValue:
    if numerator.is_infinite:
        return numerator if not denominator.is_infinite else ExtendedValue(Fraction(1))
    return ExtendedValue(numerator.value / denominator.value)


def _argmin(values: list[ExtendedValue]) -> int:
    return min(range(len(values)), key=lambda a: (values[a], a))


def poii_by_alternative(
    profile: Profile, budget: EnumerationBudget | None = None
) -> list[ExtendedValue]:
    """Worst ratio dist(a) / dist(intensity-aware optimum) over all assignments, per a."""
    budget = budget or EnumerationBudget()
    count = budget.check(profile)
    logger.info(f"Enumerating {count} intensity assignments")

    worst = [ExtendedValue(Fraction(1))] * profile.num_alternatives
    skipped = 0
    for assignment in intensity_assignments(profile):
        candidate = profile.with_intensities(assignment)
        try:
            values = alternative_distortions(candidate)
        except DegenerateProfileError:
            skipped += 1
            continue
        reference = values[_argmin(values)]
        for alt, value in enumerate(values):
            ratio = _ratio(value, reference)
            if ratio > worst[alt]:
                worst[alt] = ratio

    if skipped:
        logger.warning(f"Skipped {skipped} intensity assignments with no consistent metric")
    return worst


def intensity_oblivious_opt(
    profile: Profile, budget: EnumerationBudget | None = None
) -> tuple[int, ExtendedValue]:
    """Alternative with the smallest worst-case PoII; ties go to the lowest index."""
    worst = poii_by_alternative(profile, budget)
    best = _argmin(worst)
    logger.debug(f"Intensity-oblivious optimum is {best} with worst PoII {worst[best]}")
    return best, worst[best]


def poii(
    profile: Profile,
    budget: EnumerationBudget | None = None,
    oblivious: int | None = None,
) -> Fraction:
    """dist(oblivious optimum) / dist(intensity-aware optimum) under the profile's own flags."""
    if oblivious is None:
        oblivious, _ = intensity_oblivious_opt(profile, budget)
    values = alternative_distortions(profile)
    numerator = values[oblivious]
    if numerator.is_infinite:
        raise InfinitePoIIError(
            f"Oblivious optimum {oblivious} has infinite distortion on this profile"
        )
    return numerator.value / values[_argmin(values)].value
