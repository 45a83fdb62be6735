"""Worst-case distortion of an alternative as a family of exact LPs.

For a chosen alternative and a forced optimum b, the adversary picks
agent-to-alternative distances x[i, c] consistent with the ballots and the
4-point triangle family, normalizes sc(b) = 1, keeps every other social
cost at least 1, and maximizes sc(chosen). Distortion is the maximum over b.
"""

import logging
from fractions import Fraction

from intensity_distortion.core.errors import DegenerateProfileError
from intensity_distortion.core.profile import ElicitationMode, Intensity, Profile
from intensity_distortion.core.rational import ExtendedValue
from intensity_distortion.lp.simplex import (
    Constraint,
    LpProblem,
    OutcomeStatus,
    Relation,
    Sense,
    solve,
)

logger = logging.getLogger(__name__)


def build_distortion_lp(
    profile: Profile, alt: int, optimum: int, prune: bool = True
) -> LpProblem:
    """LP whose value is the worst sc(alt)/sc(optimum) with `optimum` forced optimal.

    Row labels are ("triangle", i, i2, c, c2), ("order", i, j),
    ("intensity", i, j) and ("cost", c), all 0-based. With `prune`, triangle
    rows already implied by agent i's ordering (c ranked above c2) are left out.
    """
    m, n = profile.num_alternatives, profile.num_agents
    for index in (alt, optimum):
        if not 0 <= index < m:
            raise ValueError(f"Alternative index {index} outside 0..{m - 1}")
    num_vars = n * m
    alpha = profile.alpha

    def x(i: int, c: int) -> int:
        return i * m + c

    constraints: list[Constraint] = []
    ranks = [pref.ranks() for pref in profile.preferences]
    for i in range(n):
        for i2 in range(n):
            if i == i2:
                continue
            for c in range(m):
                for c2 in range(m):
                    if c == c2 or (prune and ranks[i][c] < ranks[i][c2]):
                        continue
                    terms = {x(i, c): 1, x(i, c2): -1, x(i2, c2): -1, x(i2, c): -1}
                    constraints.append(
                        Constraint.sparse(
                            num_vars, terms, Relation.LE, 0, ("triangle", i, i2, c, c2)
                        )
                    )

    for i, pref in enumerate(profile.preferences):
        for j, flag in enumerate(pref.intensities):
            upper, lower = x(i, pref.ranking[j]), x(i, pref.ranking[j + 1])
            constraints.append(
                Constraint.sparse(
                    num_vars, {upper: 1, lower: -1}, Relation.LE, 0, ("order", i, j)
                )
            )
            if flag is Intensity.INTENSE:
                terms = {upper: Fraction(1), lower: -alpha}
            elif profile.mode is ElicitationMode.MANDATORY:
                terms = {lower: alpha, upper: Fraction(-1)}
            else:
                continue
            constraints.append(
                Constraint.sparse(num_vars, terms, Relation.LE, 0, ("intensity", i, j))
            )

    for c in range(m):
        relation = Relation.EQ if c == optimum else Relation.GE
        terms = {x(i, c): 1 for i in range(n)}
        constraints.append(Constraint.sparse(num_vars, terms, relation, 1, ("cost", c)))

    objective = [Fraction(0)] * num_vars
    for i in range(n):
        objective[x(i, alt)] = Fraction(1)
    return LpProblem(num_vars, tuple(objective), tuple(constraints), Sense.MAXIMIZE)


def forced_optimum_value(
    profile: Profile, alt: int, optimum: int
) -> ExtendedValue | None:
    """Value of one LP: None when infeasible, infinity when unbounded."""
    outcome = solve(build_distortion_lp(profile, alt, optimum))
    logger.debug(f"LP(alt={alt}, optimum={optimum}): {outcome.status}")
    if outcome.status is OutcomeStatus.INFEASIBLE:
        return None
    if outcome.status is OutcomeStatus.UNBOUNDED or outcome.value is None:
        return ExtendedValue.infinity()
    return ExtendedValue(outcome.value)


def distortion(profile: Profile, alt: int) -> ExtendedValue:
    """Worst-case sc(alt) / min_b sc(b) over all metrics consistent with the ballots."""
    m = profile.num_alternatives
    if not 0 <= alt < m:
        raise ValueError(f"Alternative index {alt} outside 0..{m - 1}")

    best: ExtendedValue | None = None
    for optimum in range(m):
        if optimum == alt:
            continue
        value = forced_optimum_value(profile, alt, optimum)
        if value is None:
            continue
        if value.is_infinite:
            return value
        if best is None or value > best:
            best = value

    if best is None:
        # alt is optimal under every consistent metric, if any exists
        best = forced_optimum_value(profile, alt, alt)
    if best is None:
        raise DegenerateProfileError(
            f"No metric is consistent with the ballots and alternative {alt}"
        )
    return best


def alternative_distortions(profile: Profile) -> list[ExtendedValue]:
    return [distortion(profile, alt) for alt in range(profile.num_alternatives)]


def intensity_aware_opt(profile: Profile) -> tuple[int, ExtendedValue]:
    """Alternative with the smallest distortion; ties go to the lowest index."""
    values = alternative_distortions(profile)
    best = min(range(len(values)), key=lambda a: (values[a], a))
    return best, values[best]
