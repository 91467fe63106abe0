"""
Exact two-phase simplex over Fractions with Bland's rule
"""
from fractions import Fraction
from typing import List, Optional, Sequence

from core.logger import logger


class SimplexTableau:
    """
    Minimize c·x subject to A x = b, x ≥ 0.

    The tableau is dense and exact. Artificial variables occupy the columns
    after the structural ones; Bland's smallest-index rule prevents cycling.
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        rows = []
        for row, rhs in zip(A, b):
            row = [Fraction(v) for v in row]
            rhs = Fraction(rhs)
            if rhs < 0:
                row, rhs = [-v for v in row], -rhs
            identity = [Fraction(1 if i == len(rows) else 0) for i in range(self.m)]
            rows.append(row + identity + [rhs])
        self.T = rows
        self.basis = [self.n + i for i in range(self.m)]
        self.allowed = set(range(self.n + self.m))

    def _pivot(self, r: int, c: int):
        piv = self.T[r][c]
        self.T[r] = [v / piv for v in self.T[r]]
        for i in range(len(self.T)):
            if i != r and self.T[i][c] != 0:
                f = self.T[i][c]
                self.T[i] = [a - f * p for a, p in zip(self.T[i], self.T[r])]
        self.basis[r] = c

    def _reduced_costs(self, cost: List[Fraction]) -> List[Fraction]:
        width = self.n + self.m
        reduced = list(cost[:width])
        for i, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                for j in range(width):
                    reduced[j] -= cb * self.T[i][j]
        return reduced

    def _run(self, cost: List[Fraction]) -> str:
        while True:
            reduced = self._reduced_costs(cost)
            entering = next(
                (j for j in sorted(self.allowed) if reduced[j] < 0 and j not in self.basis),
                None
            )
            if entering is None:
                return 'optimal'
            candidates = [
                (self.T[i][-1] / self.T[i][entering], self.basis[i], i)
                for i in range(len(self.T)) if self.T[i][entering] > 0
            ]
            if not candidates:
                return 'unbounded'
            _, _, r = min(candidates)
            self._pivot(r, entering)

    def _value(self, cost: List[Fraction]) -> Fraction:
        return sum((cost[bv] * self.T[i][-1] for i, bv in enumerate(self.basis)), Fraction(0))

    def solve(self, objective: Sequence) -> Optional[List[Fraction]]:
        """Optimal x, or None when the constraints are infeasible"""
        width = self.n + self.m
        phase_one = [Fraction(0)] * self.n + [Fraction(1)] * self.m
        self._run(phase_one)
        if self._value(phase_one) > 0:
            logger.debug("Simplex phase one ended with positive infeasibility")
            return None

        # Drive remaining artificial variables out of the basis
        redundant = []
        for i, bv in enumerate(self.basis):
            if bv < self.n:
                continue
            col = next((j for j in range(self.n) if self.T[i][j] != 0), None)
            if col is None:
                redundant.append(i)
            else:
                self._pivot(i, col)
        for i in reversed(redundant):
            del self.T[i]
            del self.basis[i]

        self.allowed = set(range(self.n))
        cost = [Fraction(v) for v in objective] + [Fraction(0)] * self.m
        if self._run(cost[:width]) == 'unbounded':
            logger.debug("Simplex phase two is unbounded, keeping the feasible vertex")

        x = [Fraction(0)] * self.n
        for i, bv in enumerate(self.basis):
            if bv < self.n:
                x[bv] = self.T[i][-1]
        return x


def find_ample_vector(wall_degrees: Sequence[Sequence[int]], m: int) -> Optional[List[Fraction]]:
    """
    Smallest-norm h ∈ QQ^m with h·d ≥ 1 for every wall class d, or None.

    Variables are h⁺, h⁻ ≥ 0 and one surplus per wall.
    """
    walls = [list(d) for d in wall_degrees]
    if not walls:
        return [Fraction(0)] * m
    A = []
    for k, d in enumerate(walls):
        surplus = [Fraction(-1) if j == k else Fraction(0) for j in range(len(walls))]
        A.append([Fraction(v) for v in d] + [Fraction(-v) for v in d] + surplus)
    b = [Fraction(1)] * len(walls)
    objective = [Fraction(1)] * (2 * m) + [Fraction(0)] * len(walls)
    x = SimplexTableau(A, b).solve(objective)
    if x is None:
        return None
    return [x[i] - x[m + i] for i in range(m)]
