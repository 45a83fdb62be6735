"""The bundle every lower-bound generator returns."""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from intensity_distortion.core.metric import ConsistencyMode, MetricMatrix
from intensity_distortion.core.profile import Profile
from intensity_distortion.distortion.certificate import DualCertificate


class InstanceKind(StrEnum):
    GENERAL_REVERSED = "general-reversed"
    GENERAL_INTENSE = "general-intense"
    LINE_TWO_ALT_MILD = "line-two-alt-mild"
    LINE_TWO_ALT_INTENSE = "line-two-alt-intense"
    LINE_GENERAL = "line-general"
    POLAR = "polar"
    POII_MANDATORY = "poii-mandatory"
    POII_VOLUNTARY = "poii-voluntary"

    @property
    def is_poii(self) -> bool:
        return self in (InstanceKind.POII_MANDATORY, InstanceKind.POII_VOLUNTARY)


@dataclass(frozen=True)
class InstanceParams:
    m: int
    alpha: Fraction
    k: int | None = None


@dataclass(frozen=True)
class LowerBoundInstance:
    """A construction plus the evidence that it forces its bound.

    `witness_metric` makes sc(chosen)/sc(reference) equal `witness_ratio`.
    For most kinds that ratio is `expected_ratio` itself; the PoII kinds
    use it to show the oblivious optimum reaches distortion 3, and
    `expected_ratio` is the PoII bound.
    """

    kind: InstanceKind
    profile: Profile
    witness_metric: MetricMatrix | None
    expected_ratio: Fraction
    witness_ratio: Fraction
    chosen: int
    reference: int
    consistency: ConsistencyMode
    params: InstanceParams
    certificate: DualCertificate | None = None
