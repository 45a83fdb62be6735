"""Optimal positional scores from the mixing recurrences and their matrix game."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from intensity_distortion.core.errors import IdentityViolatedError
from intensity_distortion.lp.game import GameValue, solve_zero_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GameSolution:
    """Recurrence values w_1..w_k, t_1..t_k and, once filled, the vector r^k."""

    k: int
    alpha: Fraction
    w: tuple[Fraction, ...]
    t: tuple[Fraction, ...]
    r: tuple[Fraction, ...] = ()

    @property
    def value(self) -> Fraction:
        """t_k, or 0 for k = 0."""
        return self.t[-1] if self.t else Fraction(0)


def recurrences(k: int, alpha: Fraction) -> GameSolution:
    """Compute w_j and t_j for j = 1..k exactly."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")

    w: list[Fraction] = []
    t: list[Fraction] = []
    if k >= 1:
        w.append((alpha + 1) / (3 * alpha + 1))
        t.append((1 - alpha) / (3 * alpha + 1))
    for _ in range(2, k + 1):
        w_prev, t_prev = w[-1], t[-1]
        w_next = 1 - 2 * alpha / ((1 - alpha) * t_prev + 2 * w_prev + 2 * alpha)
        w.append(w_next)
        t.append(w_next + (1 - w_next) * t_prev)
    return GameSolution(k, alpha, tuple(w), tuple(t))


def optimal_vector(k: int, alpha: Fraction) -> GameSolution:
    """Recurrences plus r^k = (w_k, w_{k-1}(1 - w_k), ..., prod (1 - w_j))."""
    if k >= 1 and alpha == 0:
        raise ValueError("Optimal scoring vectors need alpha > 0 when k >= 1")
    solution = recurrences(k, alpha)

    scores = []
    remaining = Fraction(1)
    for w_j in reversed(solution.w):
        scores.append(w_j * remaining)
        remaining *= 1 - w_j
    scores.append(remaining)

    return GameSolution(solution.k, solution.alpha, solution.w, solution.t, tuple(scores))


def padded_scores(k: int, alpha: Fraction, m: int) -> tuple[Fraction, ...]:
    """r^k followed by zeros up to length m."""
    if k + 1 > m:
        raise ValueError(f"r^{k} has {k + 1} entries, more than m = {m}")
    r = optimal_vector(k, alpha).r
    return r + (Fraction(0),) * (m - len(r))


def payoff_matrix(k: int, alpha: Fraction) -> tuple[tuple[Fraction, ...], ...]:
    """(k+1)x(k+1) matrix: -1 on the diagonal, 1 above it, (1/alpha)^(i-j) below."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"Payoff matrix needs alpha in (0, 1], got {alpha}")
    inverse = 1 / alpha
    size = k + 1
    return tuple(
        tuple(
            Fraction(-1) if i == j else Fraction(1) if j > i else inverse ** (i - j)
            for j in range(size)
        )
        for i in range(size)
    )


def verify_equilibrium(k: int, alpha: Fraction) -> Fraction:
    """Check r^T M = t_k 1^T and M reversed(r) = t_k 1 exactly; return t_k."""
    solution = optimal_vector(k, alpha)
    matrix = payoff_matrix(k, alpha)
    r = solution.r
    reverse = tuple(reversed(r))
    target = solution.value
    size = k + 1

    for j in range(size):
        column_value = sum((r[i] * matrix[i][j] for i in range(size)), Fraction(0))
        if column_value != target:
            raise IdentityViolatedError(
                f"(r^T M)[{j}] = {column_value}, expected t_{k} = {target}"
            )
    for i in range(size):
        row_value = sum((matrix[i][j] * reverse[j] for j in range(size)), Fraction(0))
        if row_value != target:
            raise IdentityViolatedError(
                f"(M r^R)[{i}] = {row_value}, expected t_{k} = {target}"
            )

    logger.debug(f"Equilibrium identity holds for k={k}, alpha={alpha}: t={target}")
    return target


def solve_game(k: int, alpha: Fraction) -> GameValue:
    """Solve the payoff matrix as a zero-sum game; its value is t_k."""
    result = solve_zero_sum(payoff_matrix(k, alpha))
    logger.debug(f"Game k={k}, alpha={alpha} has value {result.value}")
    return result


def distortion_bound(ell: int, alpha: Fraction) -> Fraction:
    """Guarantee 2 + max(alpha, t_ell) of the scoring-matching rule; ell = 0 gives 2 + alpha."""
    alpha = Fraction(alpha)
    return 2 + max(alpha, recurrences(ell, alpha).value)
