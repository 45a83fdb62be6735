"""Machine-check the computational content of a lower-bound instance."""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from intensity_distortion.bounds import polar_distortion
from intensity_distortion.core.errors import (
    DegenerateProfileError,
    InfeasibleCertificateError,
    InfinitePoIIError,
)
from intensity_distortion.core.metric import (
    check_consistency,
    check_triangle,
    cost_ratio,
)
from intensity_distortion.core.rational import ExtendedValue, format_extended, format_rational
from intensity_distortion.distortion.certificate import verify_dual_certificate
from intensity_distortion.distortion.engine import distortion
from intensity_distortion.distortion.poii import poii
from intensity_distortion.instances.bundle import InstanceKind, LowerBoundInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    kind: InstanceKind
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))
        if not passed:
            logger.warning(f"{self.kind}: check {name} failed ({detail})")


def _lp_distortion(instance: LowerBoundInstance, alt: int) -> ExtendedValue | None:
    try:
        return distortion(instance.profile, alt)
    except DegenerateProfileError:
        return None


def _compare(
    report: VerificationReport,
    name: str,
    value: ExtendedValue | None,
    target: Fraction,
    accept: Callable[[ExtendedValue, ExtendedValue], bool],
) -> None:
    if value is None:
        report.add(name, False, "no consistent metric")
        return
    report.add(
        name,
        accept(value, ExtendedValue(target)),
        f"{format_extended(value)} vs {format_rational(target)}",
    )


def verify(instance: LowerBoundInstance) -> VerificationReport:
    """Run every check that applies to the instance's kind."""
    report = VerificationReport(instance.kind)
    witness = instance.witness_metric

    if witness is not None:
        triangle = check_triangle(witness)
        report.add("witness-triangle", not triangle, f"{len(triangle)} violations")
        consistency = check_consistency(instance.profile, witness, instance.consistency)
        report.add(
            "witness-consistency",
            not consistency,
            "; ".join(f"agent {v.agent} pos {v.position} {v.kind}" for v in consistency),
        )
        ratio = cost_ratio(witness, instance.chosen, instance.reference)
        report.add(
            "witness-ratio",
            ratio == instance.witness_ratio,
            f"{format_rational(ratio)} vs {format_rational(instance.witness_ratio)}",
        )

    if instance.kind.is_poii:
        _verify_poii(instance, report)
    else:
        chosen = _lp_distortion(instance, instance.chosen)
        if instance.kind is InstanceKind.POLAR:
            _compare(report, "lp-distortion", chosen, instance.expected_ratio, lambda a, b: a == b)
        else:
            _compare(report, "lp-distortion", chosen, instance.expected_ratio, lambda a, b: a >= b)
        if instance.certificate is not None:
            _verify_certificate(report, instance, lambda v: v == instance.expected_ratio)

    logger.info(
        f"Verified {instance.kind} m={instance.params.m}: "
        f"{len(report.checks) - len(report.failures())}/{len(report.checks)} checks passed"
    )
    return report


def _verify_certificate(
    report: VerificationReport,
    instance: LowerBoundInstance,
    accept: Callable[[Fraction], bool],
) -> Fraction | None:
    assert instance.certificate is not None
    try:
        value = verify_dual_certificate(instance.certificate)
    except InfeasibleCertificateError as e:
        report.add("certificate", False, str(e))
        return None
    report.add("certificate", accept(value), format_rational(value))
    return value


def _verify_poii(instance: LowerBoundInstance, report: VerificationReport) -> None:
    m, alpha = instance.params.m, instance.params.alpha
    _compare(
        report,
        "oblivious-distortion",
        _lp_distortion(instance, instance.chosen),
        Fraction(3),
        lambda a, b: a == b,
    )

    try:
        value = poii(instance.profile, oblivious=instance.chosen)
        report.add(
            "poii-bound",
            value >= instance.expected_ratio,
            f"{format_rational(value)} vs {format_rational(instance.expected_ratio)}",
        )
    except (InfinitePoIIError, DegenerateProfileError) as e:
        report.add("poii-bound", False, str(e))

    anchor = _lp_distortion(instance, instance.reference)
    if instance.kind is InstanceKind.POII_MANDATORY:
        polar_value = polar_distortion(m, alpha)
        _compare(report, "anchor-distortion", anchor, polar_value, lambda a, b: a == b)
        if instance.certificate is not None:
            _verify_certificate(report, instance, lambda v: v == polar_value)
    else:
        upper = 1 + 2 * alpha ** (m // 2)
        _compare(report, "anchor-distortion", anchor, upper, lambda a, b: a <= b)
        if instance.certificate is not None:
            _verify_certificate(report, instance, lambda v: v == upper)
