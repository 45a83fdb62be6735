"""Lower-bound constructions for general metrics and for the line."""

import logging
from fractions import Fraction

from intensity_distortion.bounds import (
    intense_position_bound,
    line_general_bound,
    reversed_profile_bound,
    two_alternative_line_bounds,
)
from intensity_distortion.core.metric import ConsistencyMode, MetricMatrix
from intensity_distortion.core.profile import Profile, preference
from intensity_distortion.instances.bundle import (
    InstanceKind,
    InstanceParams,
    LowerBoundInstance,
)
from intensity_distortion.line import (
    LineCounts,
    line_metric,
    profile_from_counts,
    worst_case_metrics,
)

logger = logging.getLogger(__name__)


def _names(m: int) -> tuple[str, ...]:
    return tuple(f"a{j + 1}" for j in range(m))


def general_reversed(m: int, alpha: Fraction) -> LowerBoundInstance:
    """Two agents with reversed Mild rankings.

    Agent 1 is at distance 1 from everything; agent 2's distances grow by a
    factor 1/alpha per rank for floor(m/2) ranks and then stay flat.
    """
    alpha = Fraction(alpha)
    if m < 2:
        raise ValueError(f"general-reversed needs m >= 2, got {m}")
    if not 0 <= alpha < 1:
        raise ValueError(f"general-reversed needs alpha in [0, 1), got {alpha}")

    half = m // 2
    first = preference(range(m))
    second = preference(range(m - 1, -1, -1))
    profile = Profile(_names(m), (first, second), alpha)

    if alpha == 0:
        far = [Fraction(2)] * m
        far[m - 1] = Fraction(0)
        row = far
    else:
        inverse = 1 / alpha
        scale = 2 / (inverse**half - 1)
        row = [inverse ** min(second.rank_of(b) - 1, half) * scale for b in range(m)]
    witness = MetricMatrix((tuple([Fraction(1)] * m), tuple(row)))

    expected = reversed_profile_bound(m, alpha)
    return LowerBoundInstance(
        kind=InstanceKind.GENERAL_REVERSED,
        profile=profile,
        witness_metric=witness,
        expected_ratio=expected,
        witness_ratio=expected,
        chosen=(m + 1) // 2 - 1,
        reference=m - 1,
        consistency=ConsistencyMode.MANDATORY_CLOSED,
        params=InstanceParams(m, alpha),
    )


def general_intense(m: int, alpha: Fraction, k: int = 1) -> LowerBoundInstance:
    """Reversed rankings where both agents report a single Intense flag, at position k."""
    alpha = Fraction(alpha)
    if m < 2:
        raise ValueError(f"general-intense needs m >= 2, got {m}")
    if not 1 <= k <= m // 2:
        raise ValueError(f"general-intense needs 1 <= k <= {m // 2}, got {k}")
    if not 0 < alpha <= 1:
        raise ValueError(f"general-intense needs alpha in (0, 1], got {alpha}")

    inverse = 1 / alpha
    first = preference(range(m), intense=(k,))
    second = preference(range(m - 1, -1, -1), intense=(k,))
    profile = Profile(_names(m), (first, second), alpha)

    witness = MetricMatrix(
        (
            tuple(Fraction(0) if first.rank_of(b) <= k else 1 + inverse for b in range(m)),
            tuple(Fraction(1) if second.rank_of(b) <= k else inverse for b in range(m)),
        )
    )
    expected = intense_position_bound(alpha)
    return LowerBoundInstance(
        kind=InstanceKind.GENERAL_INTENSE,
        profile=profile,
        witness_metric=witness,
        expected_ratio=expected,
        witness_ratio=expected,
        chosen=m - 1,
        reference=0,
        consistency=ConsistencyMode.MANDATORY_CLOSED,
        params=InstanceParams(m, alpha, k),
    )


def line_two_alt_mild(alpha: Fraction) -> LowerBoundInstance:
    """One mild supporter of each alternative, the opponent pushed past a2."""
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"line-two-alt-mild needs alpha in (0, 1), got {alpha}")
    counts = LineCounts(1, 1, 0, 0)
    _, witness = worst_case_metrics(counts, alpha, target=0)
    expected = two_alternative_line_bounds(alpha)[0]
    return LowerBoundInstance(
        kind=InstanceKind.LINE_TWO_ALT_MILD,
        profile=profile_from_counts(counts, alpha),
        witness_metric=witness,
        expected_ratio=expected,
        witness_ratio=expected,
        chosen=0,
        reference=1,
        consistency=ConsistencyMode.MANDATORY_CLOSED,
        params=InstanceParams(2, alpha),
    )


def line_two_alt_intense(alpha: Fraction) -> LowerBoundInstance:
    """One intense supporter of each alternative."""
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"line-two-alt-intense needs alpha in (0, 1], got {alpha}")
    counts = LineCounts(0, 0, 1, 1)
    witness, _ = worst_case_metrics(counts, alpha, target=0)
    expected = two_alternative_line_bounds(alpha)[1]
    return LowerBoundInstance(
        kind=InstanceKind.LINE_TWO_ALT_INTENSE,
        profile=profile_from_counts(counts, alpha),
        witness_metric=witness,
        expected_ratio=expected,
        witness_ratio=expected,
        chosen=0,
        reference=1,
        consistency=ConsistencyMode.MANDATORY_CLOSED,
        params=InstanceParams(2, alpha),
    )


def line_general(m: int, alpha: Fraction) -> LowerBoundInstance:
    """Two agents on a line over a1..ah (co-located) and b1..bh.

    Agent 1 ranks the a's first, agent 2 the b's; both Mild throughout. b_j
    sits at distance 2/alpha^(j-1) from agent 2. For odd m an extra
    alternative c, ranked last with an Intense flag by both agents, is parked
    far to the right.
    """
    alpha = Fraction(alpha)
    if m < 2:
        raise ValueError(f"line-general needs m >= 2, got {m}")
    if not 0 < alpha <= 1:
        raise ValueError(f"line-general needs alpha in (0, 1], got {alpha}")

    half = m // 2
    inverse = 1 / alpha
    a_side = list(range(half))
    b_side = list(range(half, 2 * half))
    names = [f"a{j + 1}" for j in range(half)] + [f"b{j + 1}" for j in range(half)]

    first_agent = inverse**half + 1
    second_agent = 2 * inverse**half
    positions = [Fraction(0)] * half + [second_agent + 2 * inverse**j for j in range(half)]

    if m % 2:
        names.append("c")
        diameter = max(positions + [second_agent])
        positions.append(diameter + 10 * diameter / alpha)
        first = preference([*a_side, *b_side, m - 1], intense=(m - 1,))
        second = preference([*b_side, *a_side, m - 1], intense=(m - 1,))
    else:
        first = preference([*a_side, *b_side])
        second = preference([*b_side, *a_side])

    profile = Profile(tuple(names), (first, second), alpha)
    witness = line_metric([first_agent, second_agent], positions)
    expected = line_general_bound(m, alpha)
    logger.debug(f"line-general m={m}: agents at {first_agent}, {second_agent}")
    return LowerBoundInstance(
        kind=InstanceKind.LINE_GENERAL,
        profile=profile,
        witness_metric=witness,
        expected_ratio=expected,
        witness_ratio=expected,
        chosen=0,
        reference=half,
        consistency=ConsistencyMode.MANDATORY_CLOSED,
        params=InstanceParams(m, alpha),
    )
