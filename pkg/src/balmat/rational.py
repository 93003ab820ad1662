"""Exact rational scalars, matrices, rank, and a two-phase simplex LP solver.

Everything downstream (balance certificates, fractional matching numbers,
homology ranks) runs on `fractions.Fraction`; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction."""
    return Fraction(s.strip())


def format_rational(q) -> str:
    """Render a Fraction as "p/q", or just "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def ceil_frac(q) -> int:
    q = Fraction(q)
    return ceil_div(q.numerator, q.denominator)


def floor_frac(q) -> int:
    q = Fraction(q)
    return q.numerator // q.denominator


class RationalMatrix:
    """Dense matrix of Fractions.  Desk scale only; no sparsity tricks."""

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence]):
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.entries = [[Fraction(x) for x in row] for row in entries]

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def rank(self) -> int:
        return rank_of_rows(self.entries)


def rank_of_rows(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals by exact Gaussian elimination.

    Rows are given as dense sequences; sparse callers may pass dicts
    {col: value} instead, which avoids shuffling zeros around.
    """
    sparse: List[dict] = []
    for row in rows:
        if isinstance(row, dict):
            r = {c: Fraction(v) for c, v in row.items() if v}
        else:
            r = {c: Fraction(v) for c, v in enumerate(row) if v}
        if r:
            sparse.append(r)
    rank = 0
    # pivots: col -> eliminated row (with leading coefficient 1)
    pivots: dict = {}
    for row in sparse:
        row = dict(row)
        while row:
            col = min(row)
            if col in pivots:
                coef = row.pop(col)
                for c, v in pivots[col].items():
                    if c == col:
                        continue
                    nv = row.get(c, ZERO) - coef * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                lead = row[col]
                pivots[col] = {c: v / lead for c, v in row.items()}
                rank += 1
                break
    return rank


# --- Linear programming -----------------------------------------------------

LE, EQ, GE = "<=", "=", ">="

MAX, MIN, FEASIBILITY = "max", "min", "feasibility"


@dataclass
class LPProblem:
    variables: int
    constraints: List[Tuple[Sequence, str, object]]  # (coeffs, relation, rhs)
    objective: Optional[Sequence] = None
    sense: str = MAX

    def check(self):
        for coeffs, rel, _ in self.constraints:
            if len(coeffs) != self.variables:
                raise ValueError("constraint length mismatch")
            if rel not in (LE, EQ, GE):
                raise ValueError(f"bad relation {rel!r}")
        if self.sense not in (MAX, MIN, FEASIBILITY):
            raise ValueError(f"bad sense {self.sense!r}")
        if self.sense != FEASIBILITY and self.objective is None:
            raise ValueError("objective required unless feasibility")


@dataclass
class Optimal:
    value: Fraction
    point: List[Fraction]


class _Tag:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


INFEASIBLE = _Tag("Infeasible")
UNBOUNDED = _Tag("Unbounded")


def lp_solve(p: LPProblem):
    """Exact two-phase simplex with Bland's anti-cycling rule.

    Variables are implicitly >= 0.  Returns Optimal(value, point),
    INFEASIBLE, or UNBOUNDED.  In feasibility mode any feasible point is
    returned with value 0.
    """
    p.check()
    n = p.variables
    if p.sense == FEASIBILITY:
        obj = [ZERO] * n
    elif p.sense == MIN:
        obj = [-Fraction(c) for c in p.objective]
    else:
        obj = [Fraction(c) for c in p.objective]

    # Normalize constraints to nonnegative rhs.
    rows = []
    for coeffs, rel, rhs in p.constraints:
        coeffs = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        rows.append((coeffs, rel, rhs))

    m = len(rows)
    if m == 0:
        # Only x >= 0; optimum is 0 unless some objective coefficient is positive.
        if any(c > 0 for c in obj):
            return UNBOUNDED
        point = [ZERO] * n
        return _finish(point, p)

    n_slack = sum(1 for _, rel, _ in rows if rel != EQ)
    n_art = sum(1 for _, rel, _ in rows if rel != LE)
    total = n + n_slack + n_art

    tableau: List[List[Fraction]] = []
    basis: List[int] = []
    si = n
    ai = n + n_slack
    art_cols = []
    for coeffs, rel, rhs in rows:
        row = coeffs + [ZERO] * (n_slack + n_art) + [rhs]
        if rel == LE:
            row[si] = ONE
            basis.append(si)
            si += 1
        elif rel == GE:
            row[si] = -ONE
            si += 1
            row[ai] = ONE
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        else:
            row[ai] = ONE
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        tableau.append(row)

    if art_cols:
        # Phase 1: maximize -(sum of artificials).
        cost = [ZERO] * (total + 1)
        for c in art_cols:
            cost[c] = -ONE
        _reduce_cost(cost, tableau, basis)
        _pivot_until_optimal(tableau, basis, cost, total)
        if -cost[total] != ZERO:  # leftover artificial infeasibility
            return INFEASIBLE
        _drive_out_artificials(tableau, basis, art_cols, n + n_slack)

    # Phase 2.
    cost = [ZERO] * (total + 1)
    for j, c in enumerate(obj):
        cost[j] = c
    _reduce_cost(cost, tableau, basis)
    blocked = set(art_cols)
    if not _pivot_until_optimal(tableau, basis, cost, total, blocked):
        return UNBOUNDED

    point = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            point[b] = tableau[i][total]
    return _finish(point, p)


def _finish(point, p: LPProblem):
    if p.sense == FEASIBILITY:
        return Optimal(ZERO, point)
    value = sum((Fraction(c) * x for c, x in zip(p.objective, point)), ZERO)
    return Optimal(value, point)


def _reduce_cost(cost, tableau, basis):
    """Express the cost row in terms of nonbasic variables (price out basis)."""
    total = len(cost) - 1
    for i, b in enumerate(basis):
        coef = cost[b]
        if coef:
            row = tableau[i]
            for j in range(total + 1):
                if row[j]:
                    cost[j] -= coef * row[j]


def _pivot_until_optimal(tableau, basis, cost, total, blocked=frozenset()):
    """Bland's rule pivoting.  Returns False on unboundedness."""
    m = len(tableau)
    while True:
        enter = -1
        for j in range(total):
            if j in blocked:
                continue
            if cost[j] > 0:
                enter = j
                break
        if enter < 0:
            return True
        leave = -1
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][total] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return False
        _pivot(tableau, basis, cost, leave, enter, total)


def _pivot(tableau, basis, cost, leave, enter, total):
    row = tableau[leave]
    piv = row[enter]
    tableau[leave] = [x / piv for x in row]
    row = tableau[leave]
    for i, other in enumerate(tableau):
        if i == leave:
            continue
        coef = other[enter]
        if coef:
            tableau[i] = [o - coef * r for o, r in zip(other, row)]
    coef = cost[enter]
    if coef:
        for j in range(total + 1):
            cost[j] -= coef * row[j]
    basis[leave] = enter


def _drive_out_artificials(tableau, basis, art_cols, n_real):
    arts = set(art_cols)
    i = 0
    while i < len(tableau):
        if basis[i] in arts:
            row = tableau[i]
            enter = next((j for j in range(n_real) if row[j]), None)
            if enter is None:
                # Redundant constraint; drop the row.
                del tableau[i]
                del basis[i]
                continue
            dummy = [ZERO] * (len(row))
            _pivot(tableau, basis, dummy, i, enter, len(row) - 1)
        i += 1
