"""Tables behind the bound plots, as string-valued DataFrames."""

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction

import pandas as pd

from intensity_distortion.bounds import (
    intense_position_bound,
    line_general_bound,
    poii_mandatory_bound,
    poii_voluntary_bound,
    polar_distortion,
    reversed_profile_bound,
    two_alternative_line_bounds,
)
from intensity_distortion.core.rational import format_rational
from intensity_distortion.line import conjecture_sweep
from intensity_distortion.scoring_game import distortion_bound

logger = logging.getLogger(__name__)


def _frame(rows: list[dict[str, str]], columns: Sequence[str]) -> pd.DataFrame:
    table = pd.DataFrame(rows, columns=list(columns), dtype="string")
    logger.debug(f"Built table with {len(table)} rows and columns {list(columns)}")
    return table


def lower_bound_table(m: int, alphas: Iterable[Fraction], digits: int = 0) -> pd.DataFrame:
    """Both mandatory lower bounds for m alternatives and their maximum."""
    rows = []
    for alpha in alphas:
        reversed_bound = reversed_profile_bound(m, alpha)
        intense_bound = intense_position_bound(alpha)
        rows.append(
            {
                "alpha": format_rational(Fraction(alpha), digits),
                "reversed_profile": format_rational(reversed_bound, digits),
                "intense_position": format_rational(intense_bound, digits),
                "max": format_rational(max(reversed_bound, intense_bound), digits),
            }
        )
    return _frame(rows, ["alpha", "reversed_profile", "intense_position", "max"])


def upper_bound_table(
    ells: Iterable[int], alphas: Iterable[Fraction], digits: int = 0
) -> pd.DataFrame:
    """2 + max(alpha, t_ell) over the product grid, alpha-major."""
    ells = list(ells)
    if any(ell < 0 for ell in ells):
        raise ValueError(f"ell values must be non-negative, got {ells}")
    rows = [
        {
            "alpha": format_rational(Fraction(alpha), digits),
            "ell_max": str(ell),
            "bound": format_rational(distortion_bound(ell, alpha), digits),
        }
        for alpha in alphas
        for ell in ells
    ]
    return _frame(rows, ["alpha", "ell_max", "bound"])


def line_bound_table(alphas: Iterable[Fraction], digits: int = 0) -> pd.DataFrame:
    rows = []
    for alpha in alphas:
        mild_pair, intense_pair = two_alternative_line_bounds(alpha)
        rows.append(
            {
                "alpha": format_rational(Fraction(alpha), digits),
                "mild_pair": format_rational(mild_pair, digits),
                "intense_pair": format_rational(intense_pair, digits),
                "max": format_rational(max(mild_pair, intense_pair), digits),
            }
        )
    return _frame(rows, ["alpha", "mild_pair", "intense_pair", "max"])


def line_general_table(
    ms: Iterable[int], alphas: Iterable[Fraction], digits: int = 0
) -> pd.DataFrame:
    ms = list(ms)
    rows = [
        {
            "alpha": format_rational(Fraction(alpha), digits),
            "m": str(m),
            "bound": format_rational(line_general_bound(m, alpha), digits),
        }
        for alpha in alphas
        for m in ms
    ]
    return _frame(rows, ["alpha", "m", "bound"])


def poii_bound_table(
    ms: Iterable[int], alphas: Iterable[Fraction], digits: int = 0
) -> pd.DataFrame:
    ms = list(ms)
    if any(m < 2 for m in ms):
        raise ValueError(f"PoII bounds need m >= 2, got {ms}")
    rows = [
        {
            "alpha": format_rational(Fraction(alpha), digits),
            "m": str(m),
            "polar_distortion": format_rational(polar_distortion(m, alpha), digits),
            "poii_mandatory": format_rational(poii_mandatory_bound(m, alpha), digits),
            "poii_voluntary": format_rational(poii_voluntary_bound(m, alpha), digits),
        }
        for alpha in alphas
        for m in ms
    ]
    return _frame(
        rows, ["alpha", "m", "polar_distortion", "poii_mandatory", "poii_voluntary"]
    )


def conjecture_table(total: int, alphas: Iterable[Fraction], digits: int = 0) -> pd.DataFrame:
    """Max-min distortion of the two-alternative threshold rule per alpha."""
    rows = []
    for row in conjecture_sweep(total, alphas):
        n1, n2, n3, n4 = row.witness.as_tuple()
        rows.append(
            {
                "alpha": format_rational(row.alpha, digits),
                "max_min_distortion": format_rational(row.max_min_distortion, digits),
                "n1": str(n1),
                "n2": str(n2),
                "n3": str(n3),
                "n4": str(n4),
                "conjectured_bound": format_rational(row.conjectured_bound, digits),
                "within_resolution": str(row.within_resolution).lower(),
            }
        )
    return _frame(
        rows,
        [
            "alpha",
            "max_min_distortion",
            "n1",
            "n2",
            "n3",
            "n4",
            "conjectured_bound",
            "within_resolution",
        ],
    )
