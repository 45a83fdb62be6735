"""Two alternatives on a line: closed-form worst case, the threshold rule and its sweep.

Agents fall into four types by their ballot over (a1, a2): n1 mild for a1,
n2 mild for a2, n3 intense for a1 and n4 intense for a2.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from intensity_distortion.bounds import two_alternative_line_bounds
from intensity_distortion.core.metric import MetricMatrix
from intensity_distortion.core.profile import Intensity, Profile, preference
from intensity_distortion.core.rational import ExtendedValue

logger = logging.getLogger(__name__)

_ONE = (1, 1)


@dataclass(frozen=True)
class LineCounts:
    n1: int
    n2: int
    n3: int
    n4: int

    def __post_init__(self) -> None:
        if min(self.as_tuple()) < 0:
            raise ValueError(f"Counts must be non-negative, got {self.as_tuple()}")
        if self.total < 1:
            raise ValueError("Counts must describe at least one agent")

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.n1, self.n2, self.n3, self.n4

    def swapped(self) -> "LineCounts":
        """The same electorate seen from a2: (n2, n1, n4, n3)."""
        return LineCounts(self.n2, self.n1, self.n4, self.n3)


def classify_counts(profile: Profile) -> LineCounts:
    if profile.num_alternatives != 2:
        raise ValueError(
            f"Line counts need exactly two alternatives, got {profile.num_alternatives}"
        )
    counts = [0, 0, 0, 0]
    for pref in profile.preferences:
        favors_second = pref.ranking[0] == 1
        intense = pref.intensities[0] is Intensity.INTENSE
        counts[2 * intense + favors_second] += 1
    return LineCounts(*counts)


def profile_from_counts(counts: LineCounts, alpha: Fraction) -> Profile:
    """Mandatory profile over (a1, a2) listing agents in the order n1, n2, n3, n4."""
    prefs = (
        [preference((0, 1))] * counts.n1
        + [preference((1, 0))] * counts.n2
        + [preference((0, 1), intense=(1,))] * counts.n3
        + [preference((1, 0), intense=(1,))] * counts.n4
    )
    return Profile(("a1", "a2"), tuple(prefs), Fraction(alpha))


def _split_alpha(alpha: Fraction) -> tuple[int, int]:
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"Line bounds need alpha in (0, 1], got {alpha}")
    return alpha.numerator, alpha.denominator


def _branch_terms(
    n1: int, n2: int, n3: int, n4: int, p: int, q: int
) -> list[tuple[int, int]]:
    """(numerator, denominator) of each branch, scaled to integers."""
    terms = [
        (
            (q + p) * n1 + 2 * q * n2 + 2 * p * n3 + 2 * (p + q) * n4,
            (q + p) * n1 + 2 * p * n2 + 2 * q * n3,
        )
    ]
    if p < q:
        gap = q - p
        terms.append(
            (
                (q + p) * gap * n1 + 2 * q * (p + q) * n2 + 2 * p * gap * n3 + 2 * (p + q) * gap * n4,
                (q + p) * gap * n1 + 2 * p * (p + q) * n2 + 2 * q * gap * n3,
            )
        )
    return terms


def _less(left: tuple[int, int], right: tuple[int, int]) -> bool:
    """Compare non-negative ratios; a zero denominator is +infinity."""
    if left[1] == 0:
        return False
    if right[1] == 0:
        return True
    return left[0] * right[1] < right[0] * left[1]


def _clipped_max(terms: Iterable[tuple[int, int]]) -> tuple[int, int]:
    best = _ONE
    for term in terms:
        if _less(best, term):
            best = term
    return best


def _extended(term: tuple[int, int]) -> ExtendedValue:
    if term[1] == 0:
        return ExtendedValue.infinity()
    return ExtendedValue(Fraction(*term))


def d_branches(counts: LineCounts, alpha: Fraction) -> tuple[ExtendedValue, ExtendedValue | None]:
    """Unclipped values of both branches; the second is None at alpha = 1."""
    p, q = _split_alpha(alpha)
    terms = [_extended(t) for t in _branch_terms(*counts.as_tuple(), p, q)]
    return terms[0], terms[1] if len(terms) > 1 else None


def eval_d(counts: LineCounts, alpha: Fraction) -> ExtendedValue:
    """Worst-case distortion of a1: the larger branch, clipped below at 1."""
    p, q = _split_alpha(alpha)
    return _extended(_clipped_max(_branch_terms(*counts.as_tuple(), p, q)))


def tal_choice(counts: LineCounts, alpha: Fraction) -> tuple[int, ExtendedValue]:
    first = eval_d(counts, alpha)
    second = eval_d(counts.swapped(), alpha)
    if first <= second:
        return 0, first
    return 1, second


def tal_winner(profile: Profile) -> tuple[int, ExtendedValue]:
    """Pick the alternative whose worst-case distortion is smaller; ties go to a1."""
    return tal_choice(classify_counts(profile), profile.alpha)


def line_metric(
    agent_positions: Sequence[Fraction], alternative_positions: Sequence[Fraction]
) -> MetricMatrix:
    return MetricMatrix(
        tuple(
            tuple(abs(Fraction(agent) - Fraction(alt)) for alt in alternative_positions)
            for agent in agent_positions
        )
    )


def worst_case_metrics(
    counts: LineCounts, alpha: Fraction, target: int
) -> tuple[MetricMatrix, MetricMatrix | None]:
    """Line embeddings attaining each branch for `target` (0 for a1, 1 for a2).

    The target sits at 0 and the other alternative at 2 + 2/alpha. The second
    embedding moves mild opponents past the other alternative and does not
    exist at alpha = 1.
    """
    if target not in (0, 1):
        raise ValueError(f"Target must be 0 or 1, got {target}")
    alpha = Fraction(alpha)
    _split_alpha(alpha)
    inverse = 1 / alpha
    other = 2 + 2 * inverse

    mild_for = 1 + inverse
    intense_for = Fraction(2)
    intense_against = other
    near_against = 2 * inverse

    # per-type positions in canonical order n1, n2, n3, n4
    def positions(mild_against: Fraction) -> list[Fraction]:
        if target == 0:
            by_type = (mild_for, mild_against, intense_for, intense_against)
        else:
            by_type = (mild_against, mild_for, intense_against, intense_for)
        result = []
        for position, count in zip(by_type, counts.as_tuple(), strict=True):
            result.extend([position] * count)
        return result

    alternatives = (Fraction(0), other) if target == 0 else (other, Fraction(0))
    first = line_metric(positions(near_against), alternatives)
    if alpha == 1:
        return first, None
    far_against = 2 * inverse * (1 + inverse) / (inverse - 1)
    return first, line_metric(positions(far_against), alternatives)


def conjectured_bound(alpha: Fraction) -> Fraction:
    return max(two_alternative_line_bounds(alpha))


@dataclass(frozen=True)
class ConjectureRow:
    alpha: Fraction
    max_min_distortion: Fraction
    witness: LineCounts
    conjectured_bound: Fraction
    within_resolution: bool


def conjecture_point(total: int, alpha: Fraction) -> ConjectureRow:
    """Largest distortion the threshold rule suffers over every electorate of `total` agents."""
    if total < 1:
        raise ValueError(f"total must be at least 1, got {total}")
    p, q = _split_alpha(alpha)

    best: tuple[int, int] | None = None
    witness = (0, 0, 0, 0)
    for n1 in range(total + 1):
        for n2 in range(total - n1 + 1):
            for n3 in range(total - n1 - n2 + 1):
                n4 = total - n1 - n2 - n3
                first = _clipped_max(_branch_terms(n1, n2, n3, n4, p, q))
                second = _clipped_max(_branch_terms(n2, n1, n4, n3, p, q))
                chosen = second if _less(second, first) else first
                if best is None or _less(best, chosen):
                    best = chosen
                    witness = (n1, n2, n3, n4)

    if best is None or best[1] == 0:
        raise RuntimeError(f"Sweep over {total} agents found no finite distortion")
    value = Fraction(*best)
    bound = conjectured_bound(Fraction(alpha))
    within = bound - Fraction(2, total) <= value <= bound
    if value > bound:
        logger.warning(f"alpha={alpha}: sweep value {value} exceeds the conjectured bound {bound}")
    elif not within:
        logger.warning(
            f"alpha={alpha}: sweep value {value} falls short of {bound} beyond grid resolution"
        )
    return ConjectureRow(Fraction(alpha), value, LineCounts(*witness), bound, within)


def conjecture_sweep(total: int, alphas: Iterable[Fraction]) -> list[ConjectureRow]:
    rows = [conjecture_point(total, alpha) for alpha in alphas]
    logger.info(f"Conjecture sweep over {len(rows)} alpha values finished")
    return rows
