"""The polar instance and the PoII constructions built on its rankings."""

import logging
from fractions import Fraction

from intensity_distortion.bounds import (
    poii_mandatory_bound,
    poii_voluntary_bound,
    polar_distortion,
)
from intensity_distortion.core.metric import ConsistencyMode, MetricMatrix
from intensity_distortion.core.profile import (
    ElicitationMode,
    Intensity,
    IntensivePreference,
    Profile,
    preference,
)
from intensity_distortion.distortion.certificate import (
    CertificateSetting,
    polar_certificate,
    polar_profile,
)
from intensity_distortion.distortion.poii import EnumerationBudget, intensity_oblivious_opt
from intensity_distortion.instances.bundle import (
    InstanceKind,
    InstanceParams,
    LowerBoundInstance,
)

logger = logging.getLogger(__name__)


def _check(m: int, alpha: Fraction, kind: InstanceKind) -> Fraction:
    alpha = Fraction(alpha)
    if m < 2:
        raise ValueError(f"{kind} needs m >= 2, got {m}")
    if not 0 < alpha < 1:
        raise ValueError(f"{kind} needs alpha in (0, 1), got {alpha}")
    return alpha


def _append_last(pref: IntensivePreference, alt: int) -> IntensivePreference:
    """Extend a preference by one alternative ranked last behind a Mild flag."""
    return IntensivePreference((*pref.ranking, alt), (*pref.intensities, Intensity.MILD))


def _extend_profile(profile: Profile, m: int) -> Profile:
    """Odd m: the even construction plus a_m ranked last by every agent."""
    if m == profile.num_alternatives:
        return profile
    prefs = tuple(_append_last(pref, m - 1) for pref in profile.preferences)
    return Profile(tuple(f"a{j + 1}" for j in range(m)), prefs, profile.alpha, profile.mode)


def polar_witness(m: int, alpha: Fraction) -> MetricMatrix:
    """Distances attaining the polar distortion of a1 (even m).

    With A = 1/alpha, h = m/2 and Z = A^m + 1, agent 1's j-th ranked
    alternative is at (A^(h+j-1) - A^(j-1))/Z and agent 2's at
    (A^(h+j-1) + A^(j-1))/Z, both capped at rank h+1.
    """
    inverse = 1 / Fraction(alpha)
    half = m // 2
    total = inverse**m + 1
    profile = polar_profile(m, alpha)

    rows = []
    for agent, sign in ((0, -1), (1, 1)):
        pref = profile.preferences[agent]
        row = [Fraction(0)] * m
        for position, alt in enumerate(pref.ranking, 1):
            j = min(position, half + 1)
            row[alt] = (inverse ** (half + j - 1) + sign * inverse ** (j - 1)) / total
        rows.append(tuple(row))
    return MetricMatrix(tuple(rows))


def polar(m: int, alpha: Fraction) -> LowerBoundInstance:
    alpha = _check(m, alpha, InstanceKind.POLAR)
    even = m - m % 2
    witness = polar_witness(even, alpha)
    profile = _extend_profile(polar_profile(even, alpha), m)
    if m != even:
        # the extra alternative copies each agent's last-ranked distance
        rows = []
        for row, pref in zip(witness.distances, profile.preferences, strict=True):
            rows.append((*row, row[pref.ranking[-2]]))
        witness = MetricMatrix(tuple(rows))

    expected = polar_distortion(m, alpha)
    certificate = None
    if m == even:
        certificate = polar_certificate(m, alpha, CertificateSetting.MANDATORY_POLAR)
    return LowerBoundInstance(
        kind=InstanceKind.POLAR,
        profile=profile,
        witness_metric=witness,
        expected_ratio=expected,
        witness_ratio=expected,
        chosen=0,
        reference=even // 2,
        consistency=ConsistencyMode.MANDATORY_CLOSED,
        params=InstanceParams(m, alpha),
        certificate=certificate,
    )


def poii_rankings(m: int, alpha: Fraction, mode: ElicitationMode) -> Profile:
    """The polar rankings with every flag Mild."""
    even = m - m % 2
    half = even // 2
    first = preference(range(even))
    second = preference([*range(half, even), *range(half)])
    base = Profile(tuple(f"a{j + 1}" for j in range(even)), (first, second), Fraction(alpha), mode)
    return _extend_profile(base, m)


def poii_instance(
    kind: InstanceKind,
    m: int,
    alpha: Fraction,
    oblivious: int | None = None,
    budget: EnumerationBudget | None = None,
) -> LowerBoundInstance:
    """Flags chosen against the intensity-oblivious optimum.

    The agent whose ranking puts the oblivious optimum in its lower half
    reports Intense over its first h pairs, so its own top becomes the
    anchor: an alternative of distortion at most the polar value, while
    the oblivious optimum is pushed to distortion 3.
    """
    if not kind.is_poii:
        raise ValueError(f"{kind} is not a PoII construction")
    alpha = _check(m, alpha, kind)
    mode = (
        ElicitationMode.MANDATORY
        if kind is InstanceKind.POII_MANDATORY
        else ElicitationMode.VOLUNTARY
    )
    even = m - m % 2
    half = even // 2
    rankings = poii_rankings(m, alpha, mode)

    if oblivious is None:
        oblivious, _ = intensity_oblivious_opt(rankings, budget)
    if not 0 <= oblivious < m:
        raise ValueError(f"Oblivious optimum {oblivious} outside 0..{m - 1}")
    logger.info(f"{kind} m={m}: oblivious optimum a{oblivious + 1}")

    first, second = rankings.preferences
    leading = range(1, half + 1)
    if first.rank_of(oblivious) <= half:
        # agent 2 carries the Intense flags; its top a_{h+1} is the anchor
        second = preference(second.ranking, intense=leading)
        anchor, informed = half, 1
    else:
        first = preference(first.ranking, intense=leading)
        anchor, informed = 0, 0
    profile = Profile(rankings.alternative_names, (first, second), alpha, mode)

    informed_pref = profile.preferences[informed]
    rows = [[Fraction(1)] * m, [Fraction(1)] * m]
    rows[informed] = [
        Fraction(0) if informed_pref.rank_of(b) <= half else Fraction(2) for b in range(m)
    ]
    witness = MetricMatrix(tuple(tuple(row) for row in rows))

    if kind is InstanceKind.POII_MANDATORY:
        expected = poii_mandatory_bound(m, alpha)
        setting = CertificateSetting.MANDATORY_POLAR
        consistency = ConsistencyMode.MANDATORY_CLOSED
    else:
        expected = poii_voluntary_bound(m, alpha)
        setting = CertificateSetting.VOLUNTARY_POLAR
        consistency = ConsistencyMode.VOLUNTARY
    certificate = polar_certificate(m, alpha, setting) if m == even else None

    return LowerBoundInstance(
        kind=kind,
        profile=profile,
        witness_metric=witness,
        expected_ratio=expected,
        witness_ratio=Fraction(3),
        chosen=oblivious,
        reference=anchor,
        consistency=consistency,
        params=InstanceParams(m, alpha),
        certificate=certificate,
    )
