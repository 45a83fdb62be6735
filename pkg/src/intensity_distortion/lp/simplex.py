"""Exact two-phase simplex over the rationals.

Rows are kept sparse as {column: coefficient} dicts. Entering and leaving
columns follow Bland's rule, so the pivot sequence is fixed for a given
problem and the method cannot cycle.
"""

import logging
from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from intensity_distortion.core.errors import LpError

logger = logging.getLogger(__name__)


class Relation(StrEnum):
    LE = "<="
    EQ = "="
    GE = ">="


class Sense(StrEnum):
    MAXIMIZE = "max"
    MINIMIZE = "min"


class OutcomeStatus(StrEnum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    """`coefficients · x  relation  rhs`, optionally tagged with a label."""

    coefficients: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction
    label: Hashable | None = None

    @classmethod
    def sparse(
        cls,
        num_vars: int,
        terms: Mapping[int, Fraction | int],
        relation: Relation,
        rhs: Fraction | int,
        label: Hashable | None = None,
    ) -> "Constraint":
        coefficients = [Fraction(0)] * num_vars
        for index, value in terms.items():
            coefficients[index] += Fraction(value)
        return cls(tuple(coefficients), relation, Fraction(rhs), label)


@dataclass(frozen=True)
class LpProblem:
    """Optimize `objective · x` subject to the constraints and x >= 0."""

    num_vars: int
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    sense: Sense = Sense.MAXIMIZE

    def __post_init__(self) -> None:
        if len(self.objective) != self.num_vars:
            raise ValueError(
                f"Objective has {len(self.objective)} coefficients, expected {self.num_vars}"
            )
        for k, constraint in enumerate(self.constraints):
            if len(constraint.coefficients) != self.num_vars:
                raise ValueError(
                    f"Constraint {k} has {len(constraint.coefficients)} coefficients, "
                    f"expected {self.num_vars}"
                )

    def constraint_by_label(self, label: Hashable) -> Constraint:
        for constraint in self.constraints:
            if constraint.label == label:
                return constraint
        raise KeyError(label)


@dataclass(frozen=True)
class LpOutcome:
    status: OutcomeStatus
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] = field(default_factory=tuple)

    @property
    def is_optimal(self) -> bool:
        return self.status is OutcomeStatus.OPTIMAL


class _Tableau:
    """Canonical-form tableau: each basic column appears only in its own row."""

    def __init__(self) -> None:
        self.rows: list[dict[int, Fraction]] = []
        self.rhs: list[Fraction] = []
        self.basis: list[int] = []
        self.reduced: dict[int, Fraction] = {}
        self.value = Fraction(0)
        self.pivots = 0

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        piv = row[col]
        row = {k: v / piv for k, v in row.items()}
        self.rows[r] = row
        self.rhs[r] /= piv

        for k, other in enumerate(self.rows):
            if k == r or col not in other:
                continue
            factor = other[col]
            for j, v in row.items():
                updated = other.get(j, 0) - factor * v
                if updated:
                    other[j] = updated
                else:
                    other.pop(j, None)
            self.rhs[k] -= factor * self.rhs[r]

        factor = self.reduced.get(col, Fraction(0))
        if factor:
            for j, v in row.items():
                updated = self.reduced.get(j, 0) - factor * v
                if updated:
                    self.reduced[j] = updated
                else:
                    self.reduced.pop(j, None)
            self.value += factor * self.rhs[r]

        self.basis[r] = col
        self.pivots += 1

    def optimize(self, allowed: int) -> bool:
        """Run Bland pivots over columns below `allowed`; False when unbounded."""
        while True:
            candidates = [j for j, v in self.reduced.items() if v > 0 and j < allowed]
            if not candidates:
                return True
            col = min(candidates)

            leaving = None
            best: Fraction | None = None
            for r, row in enumerate(self.rows):
                coefficient = row.get(col)
                if coefficient is None or coefficient <= 0:
                    continue
                ratio = self.rhs[r] / coefficient
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and self.basis[r] < self.basis[leaving])
                ):
                    best = ratio
                    leaving = r
            if leaving is None:
                return False
            self.pivot(leaving, col)

    def drop_row(self, r: int) -> None:
        del self.rows[r]
        del self.rhs[r]
        del self.basis[r]


def solve(problem: LpProblem) -> LpOutcome:
    """Solve an LP exactly; the optimal assignment is a vertex."""
    v = problem.num_vars
    tableau = _Tableau()

    normalized = []
    num_extra = 0
    for constraint in problem.constraints:
        terms = {j: c for j, c in enumerate(constraint.coefficients) if c}
        relation, rhs = constraint.relation, constraint.rhs
        if rhs < 0:
            terms = {j: -c for j, c in terms.items()}
            rhs = -rhs
            relation = {Relation.LE: Relation.GE, Relation.GE: Relation.LE}.get(
                relation, Relation.EQ
            )
        normalized.append((terms, relation, rhs))
        if relation is not Relation.EQ:
            num_extra += 1

    first_artificial = v + num_extra
    next_extra = v
    next_artificial = first_artificial
    for terms, relation, rhs in normalized:
        row = dict(terms)
        if relation is Relation.LE:
            row[next_extra] = Fraction(1)
            basic = next_extra
            next_extra += 1
        else:
            if relation is Relation.GE:
                row[next_extra] = Fraction(-1)
                next_extra += 1
            row[next_artificial] = Fraction(1)
            basic = next_artificial
            next_artificial += 1
        tableau.rows.append(row)
        tableau.rhs.append(Fraction(rhs))
        tableau.basis.append(basic)

    logger.debug(
        f"Solving LP with {v} variables, {len(tableau.rows)} rows, "
        f"{next_artificial - first_artificial} artificials"
    )

    if next_artificial > first_artificial:
        for r, basic in enumerate(tableau.basis):
            if basic < first_artificial:
                continue
            for j, coefficient in tableau.rows[r].items():
                if j < first_artificial:
                    tableau.reduced[j] = tableau.reduced.get(j, 0) + coefficient
            tableau.value -= tableau.rhs[r]
        tableau.reduced = {j: c for j, c in tableau.reduced.items() if c}

        tableau.optimize(first_artificial)
        if tableau.value < 0:
            logger.debug(f"LP infeasible after {tableau.pivots} pivots")
            return LpOutcome(OutcomeStatus.INFEASIBLE)

        r = 0
        while r < len(tableau.rows):
            if tableau.basis[r] >= first_artificial:
                columns = [j for j in tableau.rows[r] if j < first_artificial]
                if columns:
                    tableau.pivot(r, min(columns))
                else:
                    tableau.drop_row(r)
                    continue
            r += 1
        for row in tableau.rows:
            for j in [j for j in row if j >= first_artificial]:
                del row[j]

    sign = Fraction(1) if problem.sense is Sense.MAXIMIZE else Fraction(-1)
    costs = [sign * c for c in problem.objective]
    tableau.reduced = {j: c for j, c in enumerate(costs) if c}
    tableau.value = Fraction(0)
    for r, basic in enumerate(tableau.basis):
        cost = costs[basic] if basic < v else 0
        if not cost:
            continue
        for j, coefficient in tableau.rows[r].items():
            updated = tableau.reduced.get(j, 0) - cost * coefficient
            if updated:
                tableau.reduced[j] = updated
            else:
                tableau.reduced.pop(j, None)
        tableau.value += cost * tableau.rhs[r]

    if not tableau.optimize(first_artificial):
        logger.debug(f"LP unbounded after {tableau.pivots} pivots")
        return LpOutcome(OutcomeStatus.UNBOUNDED)

    assignment = [Fraction(0)] * v
    for r, basic in enumerate(tableau.basis):
        if basic < v:
            assignment[basic] = tableau.rhs[r]
    value = sign * tableau.value

    _post_check(problem, assignment, value)
    logger.debug(f"LP optimal value {value} after {tableau.pivots} pivots")
    return LpOutcome(OutcomeStatus.OPTIMAL, value, tuple(assignment))


def _post_check(problem: LpProblem, assignment: Sequence[Fraction], value: Fraction) -> None:
    if any(x < 0 for x in assignment):
        raise LpError("Simplex returned a negative variable")
    for k, constraint in enumerate(problem.constraints):
        lhs = sum((c * x for c, x in zip(constraint.coefficients, assignment, strict=True)), Fraction(0))
        satisfied = {
            Relation.LE: lhs <= constraint.rhs,
            Relation.EQ: lhs == constraint.rhs,
            Relation.GE: lhs >= constraint.rhs,
        }[constraint.relation]
        if not satisfied:
            raise LpError(f"Simplex assignment violates constraint {constraint.label or k}")
    achieved = sum((c * x for c, x in zip(problem.objective, assignment, strict=True)), Fraction(0))
    if achieved != value:
        raise LpError(f"Objective residual {achieved - value} after simplex")
