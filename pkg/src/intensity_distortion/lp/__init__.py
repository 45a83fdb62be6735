"""Exact linear programming and matrix games."""

from intensity_distortion.lp.duality import check_dual_feasibility
from intensity_distortion.lp.game import GameValue, solve_zero_sum
from intensity_distortion.lp.simplex import (
    Constraint,
    LpOutcome,
    LpProblem,
    OutcomeStatus,
    Relation,
    Sense,
    solve,
)

__all__ = [
    "Constraint",
    "GameValue",
    "LpOutcome",
    "LpProblem",
    "OutcomeStatus",
    "Relation",
    "Sense",
    "check_dual_feasibility",
    "solve",
    "solve_zero_sum",
]
