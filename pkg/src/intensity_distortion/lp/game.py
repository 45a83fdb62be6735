"""Two-player zero-sum matrix games solved as a pair of LPs."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from intensity_distortion.core.errors import LpError
from intensity_distortion.lp.simplex import (
    Constraint,
    LpProblem,
    Relation,
    Sense,
    solve,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GameValue:
    value: Fraction
    row_strategy: tuple[Fraction, ...]
    col_strategy: tuple[Fraction, ...]


def solve_zero_sum(payoff: Sequence[Sequence[Fraction | int]]) -> GameValue:
    """Value and optimal mixed strategies of the game with the given payoffs.

    The row player pays `M[i][j]` and picks `r` minimizing `max_j (r^T M)_j`;
    the column player picks `c` maximizing `min_i (M c)_i`. Free game
    values are split into a positive and a negative part.
    """
    matrix = [[Fraction(v) for v in row] for row in payoff]
    rows = len(matrix)
    if rows == 0 or not matrix[0]:
        raise ValueError("Payoff matrix must be non-empty")
    cols = len(matrix[0])
    if any(len(row) != cols for row in matrix):
        raise ValueError("Payoff matrix rows must have equal length")

    row_value, row_strategy = _row_player(matrix, rows, cols)
    col_value, col_strategy = _column_player(matrix, rows, cols)
    if row_value != col_value:
        raise LpError(f"Minimax values disagree: {row_value} vs {col_value}")

    logger.debug(f"Solved {rows}x{cols} game, value {row_value}")
    return GameValue(row_value, row_strategy, col_strategy)


def _row_player(
    matrix: list[list[Fraction]], rows: int, cols: int
) -> tuple[Fraction, tuple[Fraction, ...]]:
    num_vars = rows + 2
    plus, minus = rows, rows + 1
    constraints = []
    for j in range(cols):
        terms = {i: matrix[i][j] for i in range(rows)}
        terms[plus] = Fraction(-1)
        terms[minus] = Fraction(1)
        constraints.append(Constraint.sparse(num_vars, terms, Relation.LE, 0, ("column", j)))
    constraints.append(
        Constraint.sparse(num_vars, dict.fromkeys(range(rows), 1), Relation.EQ, 1, "simplex")
    )
    objective = [Fraction(0)] * num_vars
    objective[plus], objective[minus] = Fraction(1), Fraction(-1)

    outcome = solve(LpProblem(num_vars, tuple(objective), tuple(constraints), Sense.MINIMIZE))
    if not outcome.is_optimal or outcome.value is None:
        raise LpError(f"Row player's LP ended {outcome.status}")
    return outcome.value, outcome.assignment[:rows]


def _column_player(
    matrix: list[list[Fraction]], rows: int, cols: int
) -> tuple[Fraction, tuple[Fraction, ...]]:
    num_vars = cols + 2
    plus, minus = cols, cols + 1
    constraints = []
    for i in range(rows):
        terms = {j: matrix[i][j] for j in range(cols)}
        terms[plus] = Fraction(-1)
        terms[minus] = Fraction(1)
        constraints.append(Constraint.sparse(num_vars, terms, Relation.GE, 0, ("row", i)))
    constraints.append(
        Constraint.sparse(num_vars, dict.fromkeys(range(cols), 1), Relation.EQ, 1, "simplex")
    )
    objective = [Fraction(0)] * num_vars
    objective[plus], objective[minus] = Fraction(1), Fraction(-1)

    outcome = solve(LpProblem(num_vars, tuple(objective), tuple(constraints), Sense.MAXIMIZE))
    if not outcome.is_optimal or outcome.value is None:
        raise LpError(f"Column player's LP ended {outcome.status}")
    return outcome.value, outcome.assignment[:cols]
