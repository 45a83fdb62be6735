"""Closed-form distortion and PoII bounds of the lower-bound constructions."""

from fractions import Fraction


def _check_alpha(alpha: Fraction) -> Fraction:
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def even_floor(m: int) -> int:
    """Largest even integer not above m."""
    return m - m % 2


def reversed_profile_bound(m: int, alpha: Fraction) -> Fraction:
    """1 + 2(1 - a^k)/(1 + a^k) with k = floor(m/2); 3 at alpha = 0."""
    alpha = _check_alpha(alpha)
    power = alpha ** (m // 2)
    return 1 + 2 * (1 - power) / (1 + power)


def intense_position_bound(alpha: Fraction) -> Fraction:
    return 1 + 2 * _check_alpha(alpha)


def mandatory_lower_bound(m: int, alpha: Fraction) -> Fraction:
    return max(reversed_profile_bound(m, alpha), intense_position_bound(alpha))


def two_alternative_line_bounds(alpha: Fraction) -> tuple[Fraction, Fraction]:
    """((3 - a)/(1 + a), 2a + 1) for two alternatives on a line."""
    alpha = _check_alpha(alpha)
    return (3 - alpha) / (1 + alpha), 2 * alpha + 1


def line_general_bound(m: int, alpha: Fraction) -> Fraction:
    """(1 + 3A)/(3 + A) with A = alpha^-floor(m/2); the alpha -> 0 limit is 3."""
    alpha = _check_alpha(alpha)
    if alpha == 0:
        return Fraction(3)
    growth = (1 / alpha) ** (m // 2)
    return (1 + 3 * growth) / (3 + growth)


def polar_distortion(m: int, alpha: Fraction) -> Fraction:
    """Exact distortion of a1 on the polar instance."""
    alpha = _check_alpha(alpha)
    if m < 2:
        raise ValueError(f"The polar instance needs m >= 2, got {m}")
    half = alpha ** (m // 2)
    full = alpha ** even_floor(m)
    return (1 + 2 * half - full) / (full + 1)


def poii_mandatory_bound(m: int, alpha: Fraction) -> Fraction:
    return 3 / polar_distortion(m, alpha)


def poii_voluntary_bound(m: int, alpha: Fraction) -> Fraction:
    alpha = _check_alpha(alpha)
    return 3 / (2 * alpha ** (m // 2) + 1)
