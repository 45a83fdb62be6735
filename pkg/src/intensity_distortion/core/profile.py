"""Elections with ranked preferences and intensity flags."""

import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, replace
from enum import StrEnum
from fractions import Fraction

from intensity_distortion.core.errors import NoModerateRankError, ProfileFormatError
from intensity_distortion.core.rational import format_rational, parse_rational

logger = logging.getLogger(__name__)

_SEPARATOR = re.compile(r"\s*(>>|>)\s*")


class Intensity(StrEnum):
    """Flag between two adjacent alternatives of a ranking."""

    MILD = ">"
    INTENSE = ">>"


class ElicitationMode(StrEnum):
    MANDATORY = "mandatory"
    VOLUNTARY = "voluntary"


@dataclass(frozen=True)
class IntensivePreference:
    """One agent's strict ranking plus the m-1 adjacent-pair flags.

    `ranking[0]` is the most preferred alternative; `intensities[j]` sits
    between `ranking[j]` and `ranking[j + 1]`.
    """

    ranking: tuple[int, ...]
    intensities: tuple[Intensity, ...]

    def __post_init__(self) -> None:
        m = len(self.ranking)
        if m == 0:
            raise ValueError("A ranking needs at least one alternative")
        if sorted(self.ranking) != list(range(m)):
            raise ValueError(f"Ranking {self.ranking} is not a permutation of 0..{m - 1}")
        if len(self.intensities) != m - 1:
            raise ValueError(
                f"Ranking of {m} alternatives needs {m - 1} intensity flags, "
                f"got {len(self.intensities)}"
            )

    @property
    def num_alternatives(self) -> int:
        return len(self.ranking)

    def rank_of(self, alt: int) -> int:
        """1-based rank of an alternative."""
        return self.ranking.index(alt) + 1

    def ranks(self) -> list[int]:
        """1-based rank of every alternative, indexed by alternative."""
        result = [0] * len(self.ranking)
        for position, alt in enumerate(self.ranking):
            result[alt] = position + 1
        return result

    def with_intensities(self, intensities: Iterable[Intensity]) -> "IntensivePreference":
        return IntensivePreference(self.ranking, tuple(intensities))


def preference(ranking: Sequence[int], intense: Iterable[int] = ()) -> IntensivePreference:
    """Build a preference with Intense flags at the given 1-based positions.

    Position j is the flag between the j-th and (j+1)-th ranked alternatives.
    """
    m = len(ranking)
    positions = set(intense)
    for position in positions:
        if not 1 <= position <= m - 1:
            raise ValueError(f"Intensity position {position} outside 1..{m - 1}")
    flags = tuple(
        Intensity.INTENSE if j + 1 in positions else Intensity.MILD for j in range(m - 1)
    )
    return IntensivePreference(tuple(ranking), flags)


@dataclass(frozen=True)
class Profile:
    """An election: shared alternatives, one preference per agent, α and mode."""

    alternative_names: tuple[str, ...]
    preferences: tuple[IntensivePreference, ...]
    alpha: Fraction
    mode: ElicitationMode = ElicitationMode.MANDATORY

    def __post_init__(self) -> None:
        m = len(self.alternative_names)
        if m < 1:
            raise ValueError("A profile needs at least one alternative")
        if len(set(self.alternative_names)) != m:
            raise ValueError(f"Duplicate alternative names: {self.alternative_names}")
        if not 0 <= self.alpha <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {format_rational(self.alpha)}")
        for agent, pref in enumerate(self.preferences):
            if pref.num_alternatives != m:
                raise ValueError(
                    f"Agent {agent} ranks {pref.num_alternatives} alternatives, expected {m}"
                )

    @property
    def num_alternatives(self) -> int:
        return len(self.alternative_names)

    @property
    def num_agents(self) -> int:
        return len(self.preferences)

    def alternative_index(self, name: str) -> int:
        try:
            return self.alternative_names.index(name)
        except ValueError as e:
            raise ValueError(f"Unknown alternative: {name!r}") from e

    def with_intensities(self, flag_vectors: Sequence[Sequence[Intensity]]) -> "Profile":
        """Same rankings, new intensity flags per agent."""
        if len(flag_vectors) != self.num_agents:
            raise ValueError(
                f"Expected {self.num_agents} flag vectors, got {len(flag_vectors)}"
            )
        prefs = tuple(
            pref.with_intensities(flags)
            for pref, flags in zip(self.preferences, flag_vectors, strict=True)
        )
        return replace(self, preferences=prefs)

    def with_mode(self, mode: ElicitationMode) -> "Profile":
        return replace(self, mode=mode)

    def with_alpha(self, alpha: Fraction) -> "Profile":
        return replace(self, alpha=alpha)

    def restricted_to(self, agents: Iterable[int]) -> "Profile":
        """Sub-profile keeping only the listed agents, in the given order."""
        return replace(self, preferences=tuple(self.preferences[i] for i in agents))


def intensity_rank(pref: IntensivePreference) -> int:
    """The k for which the preference is moderate-up-to-k.

    The first k flags are Mild and flag k+1 is Intense; without any Intense
    flag the result is m-1. A leading Intense flag gives 0.
    """
    if pref.num_alternatives < 2:
        raise NoModerateRankError("Intensity rank needs at least two alternatives")
    for j, flag in enumerate(pref.intensities):
        if flag is Intensity.INTENSE:
            return j
    return pref.num_alternatives - 1


def plurality_score(profile: Profile, alt: int) -> int:
    """Number of agents ranking `alt` first."""
    _check_alternative(profile, alt)
    return sum(1 for pref in profile.preferences if pref.ranking[0] == alt)


def _check_alternative(profile: Profile, alt: int) -> None:
    if not 0 <= alt < profile.num_alternatives:
        raise ValueError(
            f"Alternative index {alt} outside 0..{profile.num_alternatives - 1}"
        )


def parse_profile(text: str) -> Profile:
    """Parse the line-oriented profile format.

    Lines are `alternatives: ...`, `alpha: ...`, `mode: ...` and one
    `agent: a >> b > c` per agent; `#` starts a comment.
    """
    names: tuple[str, ...] | None = None
    alpha: Fraction | None = None
    mode = ElicitationMode.MANDATORY
    agent_lines: list[tuple[int, str]] = []

    for line_number, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ProfileFormatError(f"Line {line_number}: expected 'key: value', got {line!r}")
        key = key.strip().lower()
        value = value.strip()

        if key == "alternatives":
            names = tuple(value.split())
            if not names:
                raise ProfileFormatError(f"Line {line_number}: no alternatives listed")
            if len(set(names)) != len(names):
                raise ProfileFormatError(f"Line {line_number}: duplicate alternative name")
        elif key == "alpha":
            try:
                alpha = parse_rational(value)
            except ValueError as e:
                raise ProfileFormatError(f"Line {line_number}: {e}") from e
            if not 0 <= alpha <= 1:
                raise ProfileFormatError(
                    f"Line {line_number}: alpha must lie in [0, 1], got {value}"
                )
        elif key == "mode":
            try:
                mode = ElicitationMode(value.lower())
            except ValueError as e:
                raise ProfileFormatError(f"Line {line_number}: unknown mode {value!r}") from e
        elif key == "agent":
            agent_lines.append((line_number, value))
        else:
            raise ProfileFormatError(f"Line {line_number}: unknown key {key!r}")

    if names is None:
        raise ProfileFormatError("Missing 'alternatives:' line")
    if alpha is None:
        raise ProfileFormatError("Missing 'alpha:' line")

    index = {name: i for i, name in enumerate(names)}
    prefs = tuple(_parse_agent(line_number, body, index) for line_number, body in agent_lines)
    logger.debug(f"Parsed profile with {len(names)} alternatives and {len(prefs)} agents")
    return Profile(names, prefs, alpha, mode)


def _parse_agent(line_number: int, body: str, index: dict[str, int]) -> IntensivePreference:
    tokens = _SEPARATOR.split(body.strip())
    names = tokens[0::2]
    separators = tokens[1::2]
    if any(not name or " " in name for name in names):
        raise ProfileFormatError(f"Line {line_number}: malformed separator in {body!r}")

    ranking = []
    for name in names:
        if name not in index:
            raise ProfileFormatError(f"Line {line_number}: unknown alternative {name!r}")
        if index[name] in ranking:
            raise ProfileFormatError(f"Line {line_number}: duplicate alternative {name!r}")
        ranking.append(index[name])

    if len(ranking) != len(index):
        raise ProfileFormatError(
            f"Line {line_number}: ranking lists {len(ranking)} of {len(index)} alternatives"
        )
    return IntensivePreference(tuple(ranking), tuple(Intensity(s) for s in separators))


def format_profile(profile: Profile) -> str:
    """Render a profile in the text format read by `parse_profile`."""
    names = profile.alternative_names
    lines = [
        f"alternatives: {' '.join(names)}",
        f"alpha: {format_rational(profile.alpha)}",
        f"mode: {profile.mode.value}",
    ]
    for pref in profile.preferences:
        parts = [names[pref.ranking[0]]]
        for flag, alt in zip(pref.intensities, pref.ranking[1:], strict=True):
            parts.append(f"{flag.value} {names[alt]}")
        lines.append(f"agent: {' '.join(parts)}")
    return "\n".join(lines) + "\n"
