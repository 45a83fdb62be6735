"""Elections, metrics, exact numbers and configuration."""

from intensity_distortion.core.metric import (
    ConsistencyMode,
    MetricMatrix,
    check_consistency,
    check_triangle,
    social_cost,
)
from intensity_distortion.core.profile import (
    ElicitationMode,
    Intensity,
    IntensivePreference,
    Profile,
    format_profile,
    intensity_rank,
    parse_profile,
    plurality_score,
    preference,
)

__all__ = [
    "ConsistencyMode",
    "ElicitationMode",
    "Intensity",
    "IntensivePreference",
    "MetricMatrix",
    "Profile",
    "check_consistency",
    "check_triangle",
    "format_profile",
    "intensity_rank",
    "parse_profile",
    "plurality_score",
    "preference",
    "social_cost",
]
