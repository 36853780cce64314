"""Exact linear programming over equality systems with nonnegative variables.

The tableau is kept fraction-free: every row holds integers and the true
tableau is ``T / det`` where ``det`` is the current basis determinant
(integer pivoting, as in Edmonds/Bareiss).  Divisions are exact, so the
arithmetic never leaves the integers until a solution is read off as
``Fraction``.  Bland's rule is used for both entering and leaving choices,
which guarantees termination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "FeasibilitySystem",
    "LPResult",
    "lp_feasible",
    "lp_optimize",
]


@dataclass(frozen=True)
class FeasibilitySystem:
    """Constraints ``A x = b`` with ``x >= 0``."""

    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    n_vars: int

    def __init__(self, A: Sequence[Sequence], b: Sequence, n_vars: int | None = None):
        rows = tuple(tuple(Fraction(v) for v in row) for row in A)
        rhs = tuple(Fraction(v) for v in b)
        if len(rows) != len(rhs):
            raise ValueError(f"{len(rows)} constraint rows but {len(rhs)} right-hand sides")
        if n_vars is None:
            if not rows:
                raise ValueError("n_vars is required when there are no constraints")
            n_vars = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != n_vars:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n_vars}")
        object.__setattr__(self, "A", rows)
        object.__setattr__(self, "b", rhs)
        object.__setattr__(self, "n_vars", n_vars)

    @property
    def n_rows(self) -> int:
        return len(self.b)

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.n_vars or any(v < 0 for v in x):
            return False
        return all(
            sum((a * v for a, v in zip(row, x)), Fraction(0)) == rhs
            for row, rhs in zip(self.A, self.b)
        )


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def _integer_row(coeffs: Sequence[Fraction]) -> list[int]:
    scale = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (scale // c.denominator) for c in coeffs]


class _Tableau:
    def __init__(self, sys: FeasibilitySystem):
        n, m = sys.n_vars, sys.n_rows
        self.n, self.m = n, m
        self.rhs = n + m
        rows = []
        for i, (row, b) in enumerate(zip(sys.A, sys.b)):
            ints = _integer_row(list(row) + [b])
            if ints[-1] < 0:
                ints = [-v for v in ints]
            art = [0] * m
            art[i] = 1
            rows.append(ints[:n] + art + [ints[-1]])
        self.rows = rows
        self.basis = [n + i for i in range(m)]
        self.det = 1
        # phase-1 reduced costs: minimise the sum of artificials
        cost = [0] * (n + m + 1)
        for row in rows:
            for j in range(n):
                cost[j] -= row[j]
            cost[self.rhs] -= row[self.rhs]
        self.cost = cost

    def pivot(self, r: int, s: int) -> None:
        prow = self.rows[r]
        if prow[s] < 0:
            prow = [-v for v in prow]
            self.rows[r] = prow
        p, d = prow[s], self.det
        width = len(prow)
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[s]
            if f == 0:
                if p != d:
                    self.rows[i] = [v * p // d for v in row]
                continue
            self.rows[i] = [(row[j] * p - f * prow[j]) // d for j in range(width)]
        f = self.cost[s]
        self.cost = [(self.cost[j] * p - f * prow[j]) // d for j in range(width)]
        self.det = p
        self.basis[r] = s

    def run(self, allowed: int) -> bool:
        """Bland-rule simplex over columns ``< allowed``; False if unbounded."""
        while True:
            s = next((j for j in range(allowed) if self.cost[j] < 0), None)
            if s is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[s]
                if a <= 0:
                    continue
                if best is None:
                    best = i
                    continue
                lhs = row[self.rhs] * self.rows[best][s]
                rhs = self.rows[best][self.rhs] * a
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                    best = i
            if best is None:
                return False
            self.pivot(best, s)

    def drive_out_artificials(self) -> None:
        for r, var in enumerate(self.basis):
            if var < self.n:
                continue
            row = self.rows[r]
            s = next((j for j in range(self.n) if row[j] != 0), None)
            # s is None: redundant row; its artificial stays basic at zero
            if s is not None:
                self.pivot(r, s)

    def set_objective(self, c: Sequence[Fraction]) -> None:
        ints = _integer_row(list(c)) + [0] * (self.m + 1)
        cb = [ints[v] if v < self.n else 0 for v in self.basis]
        cost = []
        for j in range(self.n + self.m + 1):
            acc = ints[j] * self.det
            for coef, row in zip(cb, self.rows):
                if coef:
                    acc -= coef * row[j]
            cost.append(acc)
        self.cost = cost

    def solution(self) -> tuple[Fraction, ...]:
        x = [Fraction(0)] * self.n
        for r, var in enumerate(self.basis):
            if var < self.n:
                x[var] = Fraction(self.rows[r][self.rhs], self.det)
        return tuple(x)


def _phase_one(sys: FeasibilitySystem) -> _Tableau | None:
    tab = _Tableau(sys)
    tab.run(tab.n)
    if tab.cost[tab.rhs] != 0:
        return None
    tab.drive_out_artificials()
    return tab


def lp_feasible(sys: FeasibilitySystem) -> tuple[Fraction, ...] | None:
    """Return a basic feasible solution of ``sys``, or None if there is none."""
    tab = _phase_one(sys)
    if tab is None:
        return None
    return tab.solution()


def lp_optimize(sys: FeasibilitySystem, objective: Sequence, sense: str = "min") -> LPResult:
    """Optimise ``objective . x`` over ``sys`` exactly.

    ``sense`` is ``"min"`` or ``"max"``.  The reported value is recomputed
    from the returned vertex, so it always matches ``objective . x``.
    """
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    c = [Fraction(v) for v in objective]
    if len(c) != sys.n_vars:
        raise ValueError(f"objective has {len(c)} entries, expected {sys.n_vars}")
    tab = _phase_one(sys)
    if tab is None:
        return LPResult("infeasible")
    tab.set_objective([-v for v in c] if sense == "max" else c)
    if not tab.run(tab.n):
        return LPResult("unbounded")
    x = tab.solution()
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", value, x)
