"""Closed-form dual solutions for the polar instance and their verification."""

import logging
from collections.abc import Hashable
from dataclasses import dataclass, field, replace
from enum import StrEnum
from fractions import Fraction

from intensity_distortion.core.profile import ElicitationMode, Profile, preference
from intensity_distortion.distortion.engine import build_distortion_lp
from intensity_distortion.lp.duality import check_dual_feasibility

logger = logging.getLogger(__name__)


class CertificateSetting(StrEnum):
    MANDATORY_POLAR = "mandatory-polar"
    VOLUNTARY_POLAR = "voluntary-polar"

    @property
    def mode(self) -> ElicitationMode:
        if self is CertificateSetting.MANDATORY_POLAR:
            return ElicitationMode.MANDATORY
        return ElicitationMode.VOLUNTARY


@dataclass(frozen=True)
class DualCertificate:
    """Dual values keyed by the distortion-LP row labels they price."""

    setting: CertificateSetting
    m: int
    alpha: Fraction
    variables: dict[Hashable, Fraction] = field(default_factory=dict, hash=False)

    def with_value(self, label: Hashable, value: Fraction) -> "DualCertificate":
        return replace(self, variables={**self.variables, label: Fraction(value)})


def polar_profile(
    m: int, alpha: Fraction, mode: ElicitationMode = ElicitationMode.MANDATORY
) -> Profile:
    """Two agents with rotated rankings; agent 1 is Intense over its first half.

    Agent 1 ranks a1 .. am with Intense flags on the first m/2 pairs; agent 2
    ranks a_{m/2+1} .. am, a1 .. a_{m/2} with Mild flags only.
    """
    if m < 2 or m % 2:
        raise ValueError(f"The polar instance needs an even m >= 2, got {m}")
    half = m // 2
    first = preference(range(m), intense=range(1, half + 1))
    second = preference([*range(half, m), *range(half)])
    names = tuple(f"a{j + 1}" for j in range(m))
    return Profile(names, (first, second), Fraction(alpha), mode)


def polar_certificate(m: int, alpha: Fraction, setting: CertificateSetting) -> DualCertificate:
    """Dual solution bounding dist(a1) on the polar instance from above."""
    alpha = Fraction(alpha)
    if m < 2 or m % 2:
        raise ValueError(f"Polar certificates exist for even m >= 2 only, got {m}")
    if not 0 < alpha < 1:
        raise ValueError(f"Polar certificates need alpha in (0, 1), got {alpha}")

    half = m // 2
    inverse = 1 / alpha
    variables: dict[Hashable, Fraction] = {}
    if setting is CertificateSetting.MANDATORY_POLAR:
        y = 2 / (inverse**m + 1)
        for j in range(half):
            variables[("intensity", 0, j)] = y * inverse ** (2 * half - j)
            variables[("intensity", 1, j)] = y * inverse ** (half - j)
        variables[("triangle", 1, 0, 0, half)] = 1 - y
        variables[("cost", half)] = y * (inverse**half - 1) + 1
    else:
        x = 2 * alpha**half
        for j in range(half):
            variables[("intensity", 0, j)] = x * inverse ** (half - j)
        variables[("triangle", 1, 0, 0, half)] = Fraction(1)
        variables[("cost", half)] = 1 + x

    return DualCertificate(setting, m, alpha, variables)


def verify_dual_certificate(cert: DualCertificate) -> Fraction:
    """Check the certificate against the full distortion LP of a1; return its objective.

    The LP forces a_{m/2+1} to be optimal, so by weak duality the returned
    value bounds the worst sc(a1)/sc(a_{m/2+1}) from above.
    """
    if cert.m < 2 or cert.m % 2:
        raise ValueError(f"Certificate m must be even and at least 2, got {cert.m}")
    if not 0 < cert.alpha < 1:
        raise ValueError(f"Certificate alpha must lie in (0, 1), got {cert.alpha}")

    profile = polar_profile(cert.m, cert.alpha, cert.setting.mode)
    problem = build_distortion_lp(profile, alt=0, optimum=cert.m // 2, prune=False)
    value = check_dual_feasibility(problem, cert.variables)
    logger.debug(f"{cert.setting} certificate for m={cert.m}, alpha={cert.alpha}: {value}")
    return value
