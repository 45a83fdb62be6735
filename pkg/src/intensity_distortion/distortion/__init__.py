"""Exact distortion, optimal alternatives, PoII and dual certificates."""

from intensity_distortion.core.rational import ExtendedValue
from intensity_distortion.distortion.certificate import (
    CertificateSetting,
    DualCertificate,
    polar_certificate,
    polar_profile,
    verify_dual_certificate,
)
from intensity_distortion.distortion.engine import (
    alternative_distortions,
    build_distortion_lp,
    distortion,
    intensity_aware_opt,
)
from intensity_distortion.distortion.poii import (
    EnumerationBudget,
    intensity_oblivious_opt,
    poii,
    poii_by_alternative,
)

__all__ = [
    "CertificateSetting",
    "DualCertificate",
    "EnumerationBudget",
    "ExtendedValue",
    "alternative_distortions",
    "build_distortion_lp",
    "distortion",
    "intensity_aware_opt",
    "intensity_oblivious_opt",
    "poii",
    "poii_by_alternative",
    "polar_certificate",
    "polar_profile",
    "verify_dual_certificate",
]
