"""Weak-duality checks for labelled maximization problems."""

import logging
from collections.abc import Hashable, Mapping
from fractions import Fraction

from intensity_distortion.core.errors import InfeasibleCertificateError
from intensity_distortion.lp.simplex import Constraint, LpProblem, Relation, Sense

logger = logging.getLogger(__name__)


def check_dual_feasibility(
    problem: LpProblem, duals: Mapping[Hashable, Fraction]
) -> Fraction:
    """Check a dual solution of `max c·x, Ax (<=,=,>=) b, x >= 0`; return b·y.

    Duals are keyed by constraint label; constraints without an entry get 0.
    Signs: y >= 0 on `<=` rows, y <= 0 on `>=` rows, free on `=` rows. Every
    column must satisfy (A^T y)_j >= c_j. A feasible y bounds the primal
    optimum from above.
    """
    if problem.sense is not Sense.MAXIMIZE:
        raise ValueError("Dual feasibility is checked for maximization problems only")

    by_label: dict[Hashable, Constraint] = {}
    for constraint in problem.constraints:
        if constraint.label is None:
            continue
        if constraint.label in by_label:
            raise ValueError(f"Duplicate constraint label {constraint.label!r}")
        by_label[constraint.label] = constraint

    column_sums = [Fraction(0)] * problem.num_vars
    objective = Fraction(0)
    for label, value in duals.items():
        constraint = by_label.get(label)
        if constraint is None:
            raise InfeasibleCertificateError(f"Unknown dual variable {label!r}")
        value = Fraction(value)
        if constraint.relation is Relation.LE and value < 0:
            raise InfeasibleCertificateError(f"Dual of <= row {label!r} is negative: {value}")
        if constraint.relation is Relation.GE and value > 0:
            raise InfeasibleCertificateError(f"Dual of >= row {label!r} is positive: {value}")
        if not value:
            continue
        for j, coefficient in enumerate(constraint.coefficients):
            if coefficient:
                column_sums[j] += value * coefficient
        objective += value * constraint.rhs

    for j, (lhs, cost) in enumerate(zip(column_sums, problem.objective, strict=True)):
        if lhs < cost:
            raise InfeasibleCertificateError(
                f"Dual constraint for variable {j} fails: {lhs} < {cost}"
            )

    logger.debug(f"Dual solution with {len(duals)} entries is feasible, objective {objective}")
    return objective
