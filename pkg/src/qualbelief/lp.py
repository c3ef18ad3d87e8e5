"""Exact rational linear programming.

A small two-phase tableau simplex over :class:`fractions.Fraction`,
falling back to Bland's rule on degenerate stretches.  It is sized for representability questions
(a handful of variables, at most a few thousand constraints) and trades
speed for exact, reproducible verdicts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InternalError, LpValidationError

log = logging.getLogger(__name__)

SENSES = (">=", "=", "<=")

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[Fraction, ...]
    sense: str
    rhs: Fraction
    label: str = ""


@dataclass
class LinearSystem:
    """Maximize ``objective . x`` subject to ``constraints``.

    Variables are nonnegative unless listed in ``free``.
    """

    variables: list[str]
    constraints: list[Constraint] = field(default_factory=list)
    objective: tuple[Fraction, ...] | None = None
    free: frozenset[str] = frozenset()

    def _vector(self, coefficients: Mapping[str, object] | Sequence) -> tuple[Fraction, ...]:
        if isinstance(coefficients, Mapping):
            unknown = set(coefficients) - set(self.variables)
            if unknown:
                raise LpValidationError(f"unknown variables {sorted(unknown)}")
            return tuple(Fraction(coefficients.get(v, 0)) for v in self.variables)
        vec = tuple(Fraction(c) for c in coefficients)
        if len(vec) != len(self.variables):
            raise LpValidationError(f"expected {len(self.variables)} coefficients, got {len(vec)}")
        return vec

    def add(self, coefficients, sense: str, rhs, label: str = "") -> None:
        if sense not in SENSES:
            raise LpValidationError(f"sense must be one of {SENSES}, not {sense!r}")
        self.constraints.append(Constraint(self._vector(coefficients), sense, Fraction(rhs), label))

    def maximize(self, coefficients) -> None:
        self.objective = self._vector(coefficients)

    def validate(self) -> None:
        if not self.variables:
            raise LpValidationError("no variables")
        if len(set(self.variables)) != len(self.variables):
            raise LpValidationError("duplicate variable names")
        if not set(self.free) <= set(self.variables):
            raise LpValidationError("free set names unknown variables")
        n = len(self.variables)
        if self.objective is not None and len(self.objective) != n:
            raise LpValidationError("objective length does not match the variables")
        for c in self.constraints:
            if len(c.coefficients) != n or c.sense not in SENSES:
                raise LpValidationError(f"malformed constraint {c!r}")
            if not all(isinstance(x, Fraction) for x in c.coefficients + (c.rhs,)):
                raise LpValidationError("coefficients must be exact rationals")

    def satisfied_by(self, x: Mapping[str, Fraction]) -> bool:
        for v in self.variables:
            if v not in self.free and x[v] < 0:
                return False
        for c in self.constraints:
            lhs = sum(a * x[v] for a, v in zip(c.coefficients, self.variables))
            if c.sense == ">=" and lhs < c.rhs:
                return False
            if c.sense == "<=" and lhs > c.rhs:
                return False
            if c.sense == "=" and lhs != c.rhs:
                return False
        return True

    def dump(self) -> str:
        """Plain-text listing, one constraint per line."""

        def term_list(vec):
            terms = [f"{a}*{v}" for a, v in zip(vec, self.variables) if a]
            return " + ".join(terms) if terms else "0"

        lines = []
        if self.objective is not None:
            lines.append(f"maximize {term_list(self.objective)}")
        for c in self.constraints:
            tag = f"  [{c.label}]" if c.label else ""
            lines.append(f"{term_list(c.coefficients)} {c.sense} {c.rhs}{tag}")
        bounded = [v for v in self.variables if v not in self.free]
        if bounded:
            lines.append(", ".join(bounded) + " >= 0")
        return "\n".join(lines)


@dataclass
class LpOutcome:
    status: str
    optimal_value: Fraction | None = None
    assignment: dict[str, Fraction] | None = None


_DEGENERATE_LIMIT = 20


class _Tableau:
    def __init__(self, rows, rhs, basis, ncols):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols
        self.cost = None
        self.reduced = None

    def set_objective(self, cost):
        self.cost = cost
        reduced = list(cost)
        for row, b in zip(self.rows, self.basis):
            cb = cost[b]
            if cb:
                for j, a in enumerate(row):
                    if a:
                        reduced[j] -= cb * a
        self.reduced = reduced

    def value(self):
        return sum(self.cost[b] * r for b, r in zip(self.basis, self.rhs))

    def pivot(self, r, col):
        row = self.rows[r]
        p = row[col]
        if p != 1:
            row[:] = [a / p for a in row]
            self.rhs[r] /= p
        nz = [(j, a) for j, a in enumerate(row) if a]
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[col]
                if f:
                    for j, a in nz:
                        other[j] -= f * a
                    self.rhs[i] -= f * self.rhs[r]
        f = self.reduced[col]
        if f:
            for j, a in nz:
                self.reduced[j] -= f * a
        self.basis[r] = col

    def run(self, allowed):
        """Simplex iterations; returns False if unbounded.

        Uses the largest reduced cost, switching to Bland's rule while
        pivots are degenerate so that cycling cannot occur.
        """
        stalled = 0
        while True:
            candidates = [j for j in range(self.ncols) if allowed[j] and self.reduced[j] > 0]
            if not candidates:
                return True
            if stalled >= _DEGENERATE_LIMIT:
                col = candidates[0]
            else:
                col = max(candidates, key=lambda j: (self.reduced[j], -j))
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            stalled = stalled + 1 if self.rhs[best[1]] == 0 else 0
            self.pivot(best[1], col)


def solve(system: LinearSystem) -> LpOutcome:
    """Solve ``system`` exactly.

    Pivoting is deterministic, so identical systems give identical
    assignments.  Optimal assignments are re-checked against every
    constraint before being returned.
    """
    system.validate()
    objective = system.objective or tuple(Fraction(0) for _ in system.variables)

    # Column layout: one column per nonnegative variable, two (x+, x-) per free one.
    columns: list[tuple[int, int]] = []
    for k, v in enumerate(system.variables):
        columns.append((k, 1))
        if v in system.free:
            columns.append((k, -1))
    nstruct = len(columns)

    rows, rhs, kinds = [], [], []
    for c in system.constraints:
        coeffs = [c.coefficients[k] * sign for k, sign in columns]
        b, sense = c.rhs, c.sense
        # Negating also turns "... >= 0" into a slack row that needs no artificial.
        if b < 0 or (b == 0 and sense == ">="):
            coeffs = [-a for a in coeffs]
            b = -b
            sense = {">=": "<=", "<=": ">=", "=": "="}[sense]
        rows.append(coeffs)
        rhs.append(b)
        kinds.append(sense)

    nslack = sum(1 for k in kinds if k != "=")
    nart = sum(1 for k in kinds if k != "<=")
    ncols = nstruct + nslack + nart
    basis = []
    slack_at, art_at = nstruct, nstruct + nslack
    artificial = set()
    for i, k in enumerate(kinds):
        rows[i] = rows[i] + [Fraction(0)] * (nslack + nart)
        if k == "<=":
            rows[i][slack_at] = Fraction(1)
            basis.append(slack_at)
            slack_at += 1
        else:
            if k == ">=":
                rows[i][slack_at] = Fraction(-1)
                slack_at += 1
            rows[i][art_at] = Fraction(1)
            basis.append(art_at)
            artificial.add(art_at)
            art_at += 1

    tab = _Tableau(rows, rhs, basis, ncols)
    allowed = [True] * ncols

    if artificial:
        tab.set_objective([Fraction(-1) if j in artificial else Fraction(0) for j in range(ncols)])
        tab.run(allowed)
        if tab.value() < 0:
            log.debug("phase 1 optimum %s < 0: infeasible", tab.value())
            return LpOutcome(INFEASIBLE)
        # Drive zero-valued artificials out of the basis; drop redundant rows.
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] in artificial:
                col = next(
                    (j for j in range(ncols) if j not in artificial and tab.rows[i][j] != 0),
                    None,
                )
                if col is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1
        for j in artificial:
            allowed[j] = False

    cost = [Fraction(0)] * ncols
    for j, (k, sign) in enumerate(columns):
        cost[j] = objective[k] * sign
    tab.set_objective(cost)
    if not tab.run(allowed):
        return LpOutcome(UNBOUNDED)

    values = [Fraction(0)] * ncols
    for b, r in zip(tab.basis, tab.rhs):
        values[b] = r
    assignment = {v: Fraction(0) for v in system.variables}
    for j, (k, sign) in enumerate(columns):
        assignment[system.variables[k]] += sign * values[j]
    if not system.satisfied_by(assignment):
        raise InternalError("simplex returned an assignment violating the constraints")
    optimum = sum(c * assignment[v] for c, v in zip(objective, system.variables))
    return LpOutcome(OPTIMAL, optimum, assignment)
