"""Lower-bound constructions with witnesses, certificates and a verifier."""

from fractions import Fraction

from intensity_distortion.distortion.poii import EnumerationBudget
from intensity_distortion.instances.bundle import (
    InstanceKind,
    InstanceParams,
    LowerBoundInstance,
)
from intensity_distortion.instances.lower_bounds import (
    general_intense,
    general_reversed,
    line_general,
    line_two_alt_intense,
    line_two_alt_mild,
)
from intensity_distortion.instances.polar import poii_instance, polar
from intensity_distortion.instances.verify import Check, VerificationReport, verify


def generate(
    kind: InstanceKind | str,
    m: int,
    alpha: Fraction,
    k: int | None = None,
    oblivious: int | None = None,
    budget: EnumerationBudget | None = None,
) -> LowerBoundInstance:
    """Build the instance of the given kind.

    `k` is the Intense position of general-intense (default 1). `oblivious`
    skips the enumeration the PoII kinds otherwise run to find the
    intensity-oblivious optimum.
    """
    kind = InstanceKind(kind)
    alpha = Fraction(alpha)
    if kind in (InstanceKind.LINE_TWO_ALT_MILD, InstanceKind.LINE_TWO_ALT_INTENSE) and m != 2:
        raise ValueError(f"{kind} is defined for m = 2 only, got {m}")

    match kind:
        case InstanceKind.GENERAL_REVERSED:
            return general_reversed(m, alpha)
        case InstanceKind.GENERAL_INTENSE:
            return general_intense(m, alpha, 1 if k is None else k)
        case InstanceKind.LINE_TWO_ALT_MILD:
            return line_two_alt_mild(alpha)
        case InstanceKind.LINE_TWO_ALT_INTENSE:
            return line_two_alt_intense(alpha)
        case InstanceKind.LINE_GENERAL:
            return line_general(m, alpha)
        case InstanceKind.POLAR:
            return polar(m, alpha)
        case _:
            return poii_instance(kind, m, alpha, oblivious, budget)


__all__ = [
    "Check",
    "InstanceKind",
    "InstanceParams",
    "LowerBoundInstance",
    "VerificationReport",
    "generate",
    "verify",
]
