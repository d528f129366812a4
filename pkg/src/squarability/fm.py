"""Fourier-Motzkin elimination, used as an independent cross-check of the simplex.

Equalities are first solved for one variable each and substituted away; the
remaining inequalities ``a · v >= c`` are then eliminated one variable at a
time.  A feasible system also yields a point by back substitution, which is
checked exactly against the original system.

Elimination can blow up doubly exponentially, so both the variable count and
the number of live inequalities are budgeted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TooLarge

MAX_VARIABLES = 22
MAX_INEQUALITIES = 20_000

Row = tuple[Fraction, ...]


@dataclass(frozen=True)
class OracleVerdict:
    feasible: bool
    point: tuple[Fraction, ...] | None = None

    def __str__(self):
        return "FEASIBLE" if self.feasible else "INFEASIBLE"


def _normalize(coeffs: Row, rhs: Fraction) -> tuple[Row, Fraction]:
    scale = next((abs(c) for c in coeffs if c), None)
    if scale is None or scale == 1:
        return coeffs, rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def _add(system: dict[Row, Fraction], coeffs: Row, rhs: Fraction) -> bool:
    """Insert ``coeffs · v >= rhs``; False if it is the contradiction ``0 >= rhs > 0``."""
    if not any(coeffs):
        return rhs <= 0
    coeffs, rhs = _normalize(coeffs, rhs)
    if coeffs not in system or system[coeffs] < rhs:
        system[coeffs] = rhs
    return True


def _substitute(coeffs: Row, rhs: Fraction, var: int, expr: Row, const: Fraction) -> tuple[Row, Fraction]:
    """Replace ``v[var]`` by ``expr · v + const`` in ``coeffs · v (op) rhs``."""
    a = coeffs[var]
    if not a:
        return coeffs, rhs
    out = [c + a * e for c, e in zip(coeffs, expr)]
    out[var] = Fraction(0)
    return tuple(out), rhs - a * const


def fm_oracle(sys, max_variables: int = MAX_VARIABLES, max_inequalities: int = MAX_INEQUALITIES) -> OracleVerdict:
    """Decide ``rows · v = 0, v >= lower_bound`` for a :class:`LinearSystem`."""
    m = sys.num_vars
    if m > max_variables:
        raise TooLarge(f"{m} variables exceed the elimination budget of {max_variables}")
    lb = Fraction(sys.lower_bound)
    zero = Fraction(0)

    equalities = [(tuple(Fraction(c) for c in row), zero) for row in sys.rows]
    inequalities = [(tuple(Fraction(int(k == j)) for k in range(m)), lb) for j in range(m)]

    # v[var] = expr · v + const, recorded in substitution order
    substitutions: list[tuple[int, Row, Fraction]] = []
    while equalities:
        coeffs, rhs = equalities.pop(0)
        var = next((k for k, c in enumerate(coeffs) if c), None)
        if var is None:
            if rhs != 0:
                return OracleVerdict(False)
            continue
        a = coeffs[var]
        expr = tuple(zero if k == var else -c / a for k, c in enumerate(coeffs))
        const = rhs / a
        substitutions.append((var, expr, const))
        equalities = [_substitute(c, r, var, expr, const) for c, r in equalities]
        inequalities = [_substitute(c, r, var, expr, const) for c, r in inequalities]

    system: dict[Row, Fraction] = {}
    for coeffs, rhs in inequalities:
        if not _add(system, coeffs, rhs):
            return OracleVerdict(False)

    # stages[k] holds the constraints that mention the k-th eliminated variable
    stages: list[tuple[int, list[tuple[Row, Fraction]]]] = []
    live = {k for row in system for k, c in enumerate(row) if c}
    while live:
        var = min(live, key=lambda k: _cost(system, k))
        pos, neg, rest = [], [], {}
        for coeffs, rhs in system.items():
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, rhs))
            elif c < 0:
                neg.append((coeffs, rhs))
            else:
                rest[coeffs] = rhs
        stages.append((var, pos + neg))
        for pc, pr in pos:
            for nc, nr in neg:
                a, b = pc[var], -nc[var]
                combined = tuple(b * p + a * q for p, q in zip(pc, nc))
                if not _add(rest, combined, b * pr + a * nr):
                    return OracleVerdict(False)
                if len(rest) > max_inequalities:
                    raise TooLarge(f"more than {max_inequalities} inequalities during elimination")
        system = rest
        live = {k for row in system for k, c in enumerate(row) if c}

    point = [zero] * m
    for var, constraints in reversed(stages):
        point[var] = _pick(var, constraints, point)
    for var, expr, const in reversed(substitutions):
        point[var] = sum((e * v for e, v in zip(expr, point) if e), const)
    point = tuple(point)
    _verify(sys, point)
    return OracleVerdict(True, point)


def _cost(system: dict[Row, Fraction], var: int) -> tuple[int, int]:
    pos = sum(1 for row in system if row[var] > 0)
    neg = sum(1 for row in system if row[var] < 0)
    return pos * neg - pos - neg, var


def _pick(var: int, constraints: list[tuple[Row, Fraction]], point: list[Fraction]) -> Fraction:
    lower, upper = None, None
    for coeffs, rhs in constraints:
        a = coeffs[var]
        rest = sum((c * v for k, (c, v) in enumerate(zip(coeffs, point)) if k != var and c), Fraction(0))
        bound = (rhs - rest) / a
        if a > 0:
            lower = bound if lower is None else max(lower, bound)
        else:
            upper = bound if upper is None else min(upper, bound)
    if lower is not None:
        return lower
    return upper if upper is not None else Fraction(0)


def _verify(sys, point: tuple[Fraction, ...]) -> None:
    lb = sys.lower_bound
    ok = all(v >= lb for v in point) and all(
        sum(c * v for c, v in zip(row, point)) == 0 for row in sys.rows
    )
    if not ok:
        raise AssertionError("back substitution produced a point outside the system")
