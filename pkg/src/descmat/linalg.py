"""Exact linear algebra over the rationals.

Everything runs through fraction-free (Bareiss) elimination on integer
matrices obtained by clearing denominators row by row: no floating point,
no pivot tolerance, and the two-term update keeps intermediate entries at
minor-determinant size.
"""

from fractions import Fraction
from math import gcd, lcm


class SingularSystemError(ValueError):
    """The columns do not have full column rank: no unique solution."""


class InconsistentSystemError(ValueError):
    """The target vector is not in the span of the columns."""


def scale_row_to_int(row) -> list[int]:
    """Clear denominators of one rational row and divide out the content."""
    fr = [Fraction(x) for x in row]
    if not fr:
        return []
    mult = lcm(*(f.denominator for f in fr))
    ints = [f.numerator * (mult // f.denominator) for f in fr]
    g = gcd(*ints)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def int_row_rank(rows, stop_at: int | None = None) -> int:
    """Rank of an integer matrix by Bareiss elimination with row pivoting.

    ``stop_at`` allows early exit once the rank is known to reach it.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows or rank == stop_at:
            break
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for i in range(rank + 1, nrows):
            ri = m[i]
            f = ri[c]
            if f:
                for j in range(c + 1, ncols):
                    ri[j] = (pv * ri[j] - f * pr[j]) // prev
            elif pv != prev:
                for j in range(c + 1, ncols):
                    ri[j] = (pv * ri[j]) // prev
            ri[c] = 0
        prev = pv
        rank += 1
    return rank


def rational_rank(columns) -> int:
    """Rank of a family of rational column vectors."""
    rows = [scale_row_to_int(col) for col in columns]
    return int_row_rank(rows)


def solve_exact(columns, target) -> list[Fraction]:
    """Solve sum_j x_j columns[j] = target exactly, using every row.

    Elimination runs over all available rows, so a singular leading block
    simply recruits later rows as pivots; rows that never pivot act as
    consistency checks on the solution.  Raises
    :class:`SingularSystemError` when the columns are dependent (or too
    few rows carry a pivot) and :class:`InconsistentSystemError` when the
    target lies outside the column span.
    """
    ncols = len(columns)
    nrows = len(target)
    if any(len(col) != nrows for col in columns):
        raise ValueError("columns and target must have equal length")
    if nrows < ncols:
        raise SingularSystemError(f"{nrows} rows cannot pin down {ncols} unknowns")
    m = [
        scale_row_to_int([columns[j][i] for j in range(ncols)] + [target[i]])
        for i in range(nrows)
    ]
    rank = 0
    prev = 1
    pivots: list[tuple[int, int]] = []
    for c in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for i in range(rank + 1, nrows):
            ri = m[i]
            f = ri[c]
            if f:
                for j in range(c + 1, ncols + 1):
                    ri[j] = (pv * ri[j] - f * pr[j]) // prev
            elif pv != prev:
                for j in range(c + 1, ncols + 1):
                    ri[j] = (pv * ri[j]) // prev
            ri[c] = 0
        prev = pv
        pivots.append((rank, c))
        rank += 1
    if len(pivots) < ncols:
        raise SingularSystemError(
            f"column rank {len(pivots)} < {ncols}: system is singular"
        )
    for i in range(rank, nrows):
        if m[i][ncols]:
            raise InconsistentSystemError(
                f"row {i} is inconsistent: target is not in the column span"
            )
    x = [Fraction(0)] * ncols
    for r, c in reversed(pivots):
        s = Fraction(m[r][ncols])
        for j in range(c + 1, ncols):
            s -= m[r][j] * x[j]
        x[c] = s / m[r][c]
    return x
