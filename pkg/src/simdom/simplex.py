"""Dense two-phase primal simplex over exact rationals.

Input constraints are all of the form sum(coeffs) >= rhs with
nonnegative variables, which is the only shape the LP builder emits.
Bland's smallest-index rule picks both the entering column and, among
tied minimum ratios, the leaving basic variable, so the method cannot
cycle and every run is deterministic.

Arithmetic uses gmpy2 rationals when that package is installed and
falls back to fractions.Fraction; results are identical either way and
are returned as Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - environment without gmpy2
    _rat = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class SimplexResult:
    status: str
    objective: Fraction | None
    values: tuple[Fraction, ...] | None


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def simplex_min(
    num_vars: int,
    objective: Sequence[int],
    rows: Sequence[tuple[Mapping[int, int], int]],
) -> SimplexResult:
    """Minimize objective . z subject to each row holding as >= and z >= 0."""
    zero = _rat(0)
    one = _rat(1)

    # identical rows constrain nothing twice; drop repeats
    seen: set[tuple] = set()
    unique: list[tuple[Mapping[int, int], int]] = []
    for coeffs, rhs in rows:
        key = (tuple(sorted(coeffs.items())), rhs)
        if key not in seen:
            seen.add(key)
            unique.append((coeffs, rhs))

    nrows = len(unique)
    slack_start = num_vars
    art_start = num_vars + nrows
    art_cols = [art_start + i for i, (_, rhs) in enumerate(unique) if rhs > 0]
    ncols = art_start + len(art_cols)

    tableau: list[list] = []
    basis: list[int] = []
    next_art = art_start
    for i, (coeffs, rhs) in enumerate(unique):
        row = [zero] * (ncols + 1)
        if rhs > 0:
            for j, a in coeffs.items():
                row[j] = _rat(a)
            row[slack_start + i] = -one
            row[next_art] = one
            row[-1] = _rat(rhs)
            basis.append(next_art)
            next_art += 1
        else:
            for j, a in coeffs.items():
                row[j] = -_rat(a)
            row[slack_start + i] = one
            row[-1] = _rat(-rhs)
            basis.append(slack_start + i)
        tableau.append(row)

    def pivot(r: int, c: int, zrow: list) -> None:
        prow = tableau[r]
        piv = prow[c]
        if piv != one:
            inv = one / piv
            tableau[r] = prow = [a * inv for a in prow]
        for i, row in enumerate(tableau):
            if i != r and row[c] != zero:
                f = row[c]
                tableau[i] = [a - f * b for a, b in zip(row, prow)]
        if zrow[c] != zero:
            f = zrow[c]
            zrow[:] = [a - f * b for a, b in zip(zrow, prow)]
        basis[r] = c

    def bland(zrow: list, allowed: int) -> str:
        # allowed caps the entering column index (phase 2 excludes
        # artificial columns without rebuilding the tableau)
        while True:
            enter = -1
            for j in range(allowed):
                if zrow[j] < zero:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best = None
            for r in range(nrows):
                a = tableau[r][enter]
                if a > zero:
                    ratio = tableau[r][-1] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and basis[r] < basis[leave])
                    ):
                        best = ratio
                        leave = r
            if leave < 0:
                return UNBOUNDED
            pivot(leave, enter, zrow)

    if art_cols:
        zrow = [zero] * (ncols + 1)
        for j in range(art_start, ncols):
            zrow[j] = one
        for r in range(nrows):
            if basis[r] >= art_start:
                row = tableau[r]
                zrow = [a - b for a, b in zip(zrow, row)]
        status = bland(zrow, ncols)
        assert status == OPTIMAL, "phase 1 objective is bounded by zero"
        if -zrow[-1] != zero:
            return SimplexResult(INFEASIBLE, None, None)
        # degenerate artificials still in the basis: pivot them out on
        # any structural or slack column, or drop the redundant row
        for r in range(nrows - 1, -1, -1):
            if basis[r] < art_start:
                continue
            col = next(
                (j for j in range(art_start) if tableau[r][j] != zero), None
            )
            if col is None:
                del tableau[r]
                del basis[r]
                nrows -= 1
            else:
                pivot(r, col, zrow)

    zrow = [zero] * (ncols + 1)
    for j in range(num_vars):
        zrow[j] = _rat(objective[j])
    for r in range(nrows):
        cb = zrow[basis[r]]
        if cb != zero:
            row = tableau[r]
            zrow = [a - cb * b for a, b in zip(zrow, row)]
    status = bland(zrow, art_start)
    if status == UNBOUNDED:
        return SimplexResult(UNBOUNDED, None, None)

    values = [Fraction(0)] * num_vars
    for r in range(nrows):
        if basis[r] < num_vars:
            values[basis[r]] = _to_fraction(tableau[r][-1])
    return SimplexResult(OPTIMAL, _to_fraction(-zrow[-1]), tuple(values))
