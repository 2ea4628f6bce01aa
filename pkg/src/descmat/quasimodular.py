"""Weight-graded monomial bases in the three Eisenstein generators.

The graded piece of weight k is spanned by monomials E2^a E4^b E6^c with
2a + 4b + 6c = k.  Their order is frozen (heaviest E6 power first, then
heaviest E4 power) because printed matrices and tables elsewhere index
rows by it.
"""

from functools import cache
from typing import NamedTuple

from .linalg import InconsistentSystemError, SingularSystemError, solve_exact
from .qseries import QSeries, eisenstein_series


class InsufficientOrderError(ValueError):
    """The series carries too few coefficients to solve and cross-check."""


class EisensteinMonomial(NamedTuple):
    """Exponent triple (a, b, c) for E2^a E4^b E6^c."""

    a: int
    b: int
    c: int

    @property
    def weight(self) -> int:
        return 2 * self.a + 4 * self.b + 6 * self.c

    def weight_tuple(self) -> tuple[int, ...]:
        """The monomial as a tuple of generator weights, e.g. (6, 2)."""
        return (6,) * self.c + (4,) * self.b + (2,) * self.a


def qm_dimension(k: int) -> int:
    """Dimension of the weight-k graded piece.

    Counts partitions of k/2 with no part above 3, i.e. solutions of
    a + 2b + 3c = k/2.
    """
    if k < 0 or k % 2:
        raise ValueError(f"weight must be a nonnegative even integer, got {k}")
    half = k // 2
    return sum((half - 3 * c) // 2 + 1 for c in range(half // 3 + 1))


@cache
def eisenstein_monomials(k: int) -> tuple[EisensteinMonomial, ...]:
    """All weight-k monomials in the frozen row order."""
    if k < 2 or k % 2:
        raise ValueError(f"weight must be a positive even integer, got {k}")
    out = []
    for c in range(k // 6, -1, -1):
        rem = k - 6 * c
        for b in range(rem // 4, -1, -1):
            out.append(EisensteinMonomial((rem - 4 * b) // 2, b, c))
    return tuple(out)


@cache
def monomial_series(mono: EisensteinMonomial, order: int) -> QSeries:
    """q-expansion of one Eisenstein monomial."""
    series = QSeries([1], order=order)
    for weight, exponent in ((2, mono.a), (4, mono.b), (6, mono.c)):
        if exponent:
            series = series * eisenstein_series(weight, order) ** exponent
    return series


def expand_in_eisenstein(series: QSeries, k: int, margin: int = 5):
    """Coordinates of a weight-k series in the Eisenstein monomial basis.

    The series must carry at least ``qm_dimension(k) + margin``
    coefficients; rows beyond the pivot set are checked against the
    solution, which turns "not actually a weight-k form" from a silent
    wrong answer into :class:`~descmat.linalg.InconsistentSystemError`.
    Returns the full coefficient vector in monomial order.
    """
    dim = qm_dimension(k)
    monomials = eisenstein_monomials(k)
    if series.order < dim + margin:
        raise InsufficientOrderError(
            f"weight-{k} expansion needs order >= {dim + margin}, got {series.order}"
        )
    columns = [monomial_series(m, series.order).coeffs for m in monomials]
    return tuple(solve_exact(columns, series.coeffs))


__all__ = [
    "EisensteinMonomial",
    "InsufficientOrderError",
    "InconsistentSystemError",
    "SingularSystemError",
    "eisenstein_monomials",
    "expand_in_eisenstein",
    "monomial_series",
    "qm_dimension",
]
