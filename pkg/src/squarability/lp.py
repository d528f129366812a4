"""Deciding order-preserving squarability by an exact linear feasibility problem.

For an arrangement of n rectangles with x-sequence a and y-sequence b there
are 4n - 2 gap variables: x_k is the distance between the k-th and (k+1)-th
side coordinate along x, y_k likewise along y, each at least 1.  Rectangle i
becomes a square exactly when the x-gaps spanned by its two vertical sides
add up to the y-gaps spanned by its two horizontal sides, which gives one
homogeneous equality per rectangle.  Any feasible point yields squares with
the same sequences by taking prefix sums, and conversely the gaps of such a
square arrangement, scaled so the smallest is 1, are feasible.

Feasibility is settled by a phase-one simplex over :class:`Fraction` with
Bland's rule, so the verdict is exact and the method terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import InfeasibleAssignment, NonPositiveValue
from .geometry import Arrangement, Interval, Box
from .sequences import AxisSequence, axis_sequence

ONE = Fraction(1)


@dataclass(frozen=True)
class LinearSystem:
    """Equalities ``rows · v = 0`` with bounds ``v >= 1``.

    Column ``k - 1`` holds x_k and column ``2n - 1 + k - 1`` holds y_k.
    """

    x_sequence: AxisSequence
    y_sequence: AxisSequence
    rows: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]
    lower_bound: Fraction = ONE

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def num_vars(self) -> int:
        return 4 * self.n - 2

    @property
    def half(self) -> int:
        return 2 * self.n - 1

    def x_column(self, k: int) -> int:
        return k - 1

    def y_column(self, k: int) -> int:
        return self.half + k - 1

    def variable_name(self, column: int) -> str:
        if column < self.half:
            return f"x{column + 1}"
        return f"y{column - self.half + 1}"

    def residuals(self, values: Sequence[Fraction]) -> list[Fraction]:
        return [sum(c * v for c, v in zip(row, values) if c) for row in self.rows]

    def is_satisfied(self, values: Sequence[Fraction]) -> bool:
        """Exact check of every equality and every lower bound."""
        if len(values) != self.num_vars:
            return False
        if any(v < self.lower_bound for v in values):
            return False
        return all(r == 0 for r in self.residuals(values))

    def describe_row(self, i: int) -> str:
        row = self.rows[i - 1]
        left = [self.variable_name(c) for c, v in enumerate(row) if v > 0]
        right = [self.variable_name(c) for c, v in enumerate(row) if v < 0]
        return f"{' + '.join(left)} = {' + '.join(right)}"

    def __str__(self):
        lines = [f"{self.num_vars} variables >= {self.lower_bound}, {self.n} equalities"]
        lines += [f"  [{self.labels[i - 1]}] {self.describe_row(i)}" for i in range(1, self.n + 1)]
        return "\n".join(lines)


def build_lp(arr: Arrangement) -> LinearSystem:
    """Gap-variable system for ``arr``; needs general position and n >= 1."""
    if len(arr) == 0:
        raise ValueError("need at least one rectangle")
    xs, ys = axis_sequence(arr, "x"), axis_sequence(arr, "y")
    n = len(arr)
    half = 2 * n - 1
    rows = []
    for i in arr.indices():
        row = [Fraction(0)] * (2 * half)
        j1, j2 = xs.pairs[i]
        for k in range(j1, j2):
            row[k - 1] = ONE
        j1, j2 = ys.pairs[i]
        for k in range(j1, j2):
            row[half + k - 1] = -ONE
        rows.append(tuple(row))
    return LinearSystem(xs, ys, tuple(rows), arr.labels)


@dataclass(frozen=True)
class Witness:
    assignment: tuple[Fraction, ...]
    squares: Arrangement


@dataclass(frozen=True)
class Feasible:
    witness: Witness
    pivots: int = 0

    feasible = True

    def __str__(self):
        return "FEASIBLE"


@dataclass(frozen=True)
class Infeasible:
    # Minimum total artificial slack at the end of phase one; positive.
    shortfall: Fraction = Fraction(0)
    pivots: int = 0

    feasible = False

    def __str__(self):
        return "INFEASIBLE"


Verdict = Union[Feasible, Infeasible]


class PhaseOneSimplex:
    """Sparse tableau for ``A z = b, z >= 0`` with one artificial per row.

    Rows are dicts ``column -> coefficient``; artificial columns are never
    stored, they only appear as basis markers ``ncols + i``.  Once an
    artificial leaves the basis it cannot return.
    """

    def __init__(self, rows: list[dict[int, Fraction]], rhs: list[Fraction], ncols: int):
        self.ncols = ncols
        self.rows = []
        self.rhs = []
        for row, b in zip(rows, rhs):
            if b < 0:
                row, b = {k: -v for k, v in row.items()}, -b
            self.rows.append(dict(row))
            self.rhs.append(b)
        self.basis = [ncols + i for i in range(len(self.rows))]
        self.cost: dict[int, Fraction] = {}
        for row in self.rows:
            for k, v in row.items():
                self.cost[k] = self.cost.get(k, 0) - v
        self.cost = {k: v for k, v in self.cost.items() if v}
        self.pivots = 0

    def entering(self) -> int | None:
        negative = [k for k, v in self.cost.items() if v < 0]
        return min(negative) if negative else None

    def leaving(self, col: int) -> int:
        best = None
        for i, row in enumerate(self.rows):
            a = row.get(col)
            if a is None or a <= 0:
                continue
            key = (self.rhs[i] / a, self.basis[i])
            if best is None or key < best[0]:
                best = (key, i)
        if best is None:
            # phase one is bounded below by zero, so this is a bug
            raise RuntimeError(f"unbounded column {col} in phase one")
        return best[1]

    def pivot(self, r: int, col: int) -> None:
        prow = self.rows[r]
        piv = prow[col]
        if piv != 1:
            prow = {k: v / piv for k, v in prow.items()}
            self.rows[r] = prow
            self.rhs[r] /= piv
        b = self.rhs[r]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row.get(col)
            if f is None:
                continue
            _axpy(row, -f, prow)
            if b:
                self.rhs[i] -= f * b
        f = self.cost.get(col)
        if f is not None:
            _axpy(self.cost, -f, prow)
        self.basis[r] = col
        self.pivots += 1

    def run(self) -> None:
        while (col := self.entering()) is not None:
            self.pivot(self.leaving(col), col)

    def shortfall(self) -> Fraction:
        return sum((b for b, v in zip(self.rhs, self.basis) if v >= self.ncols), Fraction(0))

    def solution(self) -> list[Fraction]:
        z = [Fraction(0)] * self.ncols
        for b, v in zip(self.rhs, self.basis):
            if v < self.ncols:
                z[v] = b
        return z


def _axpy(target: dict[int, Fraction], factor: Fraction, source: dict[int, Fraction]) -> None:
    for k, v in source.items():
        new = target.get(k, 0) + factor * v
        if new:
            target[k] = new
        else:
            target.pop(k, None)


def solve_feasibility(sys: LinearSystem) -> Verdict:
    """Exact verdict for ``sys``; a feasible verdict carries reconstructed squares."""
    lb = sys.lower_bound
    # v = z + lb turns the bounds into z >= 0 and the right-hand side into -rows·lb
    rows, rhs = [], []
    for row in sys.rows:
        sparse = {k: v for k, v in enumerate(row) if v}
        rows.append(sparse)
        rhs.append(-lb * sum(sparse.values()))
    tableau = PhaseOneSimplex(rows, rhs, sys.num_vars)
    tableau.run()
    gap = tableau.shortfall()
    if gap > 0:
        return Infeasible(gap, tableau.pivots)
    values = tuple(z + lb for z in tableau.solution())
    return Feasible(Witness(values, reconstruct_squares(sys, values)), tableau.pivots)


def _prefix(values: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)]
    for v in values:
        out.append(out[-1] + v)
    return out


def reconstruct_squares(sys: LinearSystem, assignment: Sequence[Fraction], arr: Arrangement | None = None) -> Arrangement:
    """Squares whose sides sit at prefix sums of the gaps.

    Rectangle i with x positions (j1, j2) gets ``l = x_1 + ... + x_{j1-1}``
    and ``r = x_1 + ... + x_{j2-1}``; likewise for b and t on y.
    """
    values = tuple(Fraction(v) for v in assignment)
    if not sys.is_satisfied(values):
        raise InfeasibleAssignment("assignment violates an equality or a lower bound")
    px = _prefix(values[: sys.half])
    py = _prefix(values[sys.half:])
    boxes = []
    for i in range(1, sys.n + 1):
        j1, j2 = sys.x_sequence.pairs[i]
        k1, k2 = sys.y_sequence.pairs[i]
        boxes.append(Box((Interval(px[j1 - 1], px[j2 - 1]), Interval(py[k1 - 1], py[k2 - 1]))))
    labels = arr.labels if arr is not None else sys.labels
    return Arrangement(tuple(boxes), labels)


def normalize_blowup(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale positive values by the reciprocal of their minimum when it is below 1."""
    values = tuple(Fraction(v) for v in values)
    if any(v <= 0 for v in values):
        raise NonPositiveValue("every gap must be strictly positive")
    if not values:
        return values
    low = min(values)
    if low >= 1:
        return values
    return tuple(v / low for v in values)


def extract_gaps(arr: Arrangement) -> tuple[Fraction, ...]:
    """Distances between consecutive side coordinates, x gaps first then y gaps."""
    gaps = []
    for c in (0, 1):
        coords = sorted(v for bx in arr for v in bx.axes[c])
        gaps.extend(b - a for a, b in zip(coords, coords[1:]))
    return tuple(gaps)


def decide(arr: Arrangement) -> Verdict:
    sys = build_lp(arr)
    verdict = solve_feasibility(sys)
    if verdict.feasible:
        squares = reconstruct_squares(sys, verdict.witness.assignment, arr)
        return Feasible(Witness(verdict.witness.assignment, squares), verdict.pivots)
    return verdict
