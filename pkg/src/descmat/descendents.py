"""Stationary descendent series of an elliptic curve.

A descendent label is the multiset of insertion orders k_i >= 0, stored
as a descending tuple; its weight is sum(k_i + 2).  The degree-d
invariant is evaluated by the fast single-sum route

    sum over partitions lam of d of prod_i p_{k_i+1}(lam) / prod_i (k_i+1)!

(the character double sum collapses by row orthogonality; the character
route survives in :mod:`descmat.characters` as an oracle).  The empty
label is allowed and degenerates to the partition numbers.
"""

from fractions import Fraction
from functools import cache
from math import factorial, prod

from .partitions import partitions_of
from .qseries import QSeries, euler_function
from .quasimodular import (
    EisensteinMonomial,
    eisenstein_monomials,
    expand_in_eisenstein,
    qm_dimension,
)
from .shifted import shifted_power_sum

DescendentLabel = tuple[int, ...]

EXPANSION_MARGIN = 5


def as_label(insertions) -> DescendentLabel:
    """Canonical descending tuple of nonnegative insertion orders."""
    ks = tuple(sorted((int(k) for k in insertions), reverse=True))
    if ks and ks[-1] < 0:
        raise ValueError(f"insertion orders must be nonnegative: {ks}")
    return ks


def weight(label) -> int:
    """Weight sum(k_i + 2) of a label; even, and 0 only for the empty label."""
    return sum(k + 2 for k in label)


def gw_invariant(label, d: int) -> Fraction:
    """Degree-d stationary descendent invariant, as an exact rational."""
    return _gw_invariant(as_label(label), d)


@cache
def _gw_invariant(label: DescendentLabel, d: int) -> Fraction:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    total = Fraction(0)
    for lam in partitions_of(d):
        term = Fraction(1)
        for k in label:
            term *= shifted_power_sum(k + 1, lam)
        total += term
    return total / prod(factorial(k + 1) for k in label)


def bracket_series(label, order: int) -> QSeries:
    """(q)_inf * sum_d <tau_label>_d q^d, truncated at ``order``."""
    return _bracket_series(as_label(label), order)


@cache
def _bracket_series(label: DescendentLabel, order: int) -> QSeries:
    inner = QSeries([_gw_invariant(label, d) for d in range(order + 1)])
    return euler_function(order) * inner


def eisenstein_coordinates(label, order: int | None = None) -> tuple[Fraction, ...]:
    """Full coordinate vector of the bracket series in the weight-k basis.

    Weight-k monomial order, zeros kept.  Default order is
    qm_dimension(k) + 5, enough to solve plus the consistency margin.
    """
    lab = as_label(label)
    k = weight(lab)
    if k < 2:
        raise ValueError("the empty label has no Eisenstein expansion")
    if order is None:
        order = qm_dimension(k) + EXPANSION_MARGIN
    return _eisenstein_coordinates(lab, order)


@cache
def _eisenstein_coordinates(label: DescendentLabel, order: int) -> tuple[Fraction, ...]:
    return expand_in_eisenstein(_bracket_series(label, order), weight(label))


def to_eisenstein(label, order: int | None = None) -> dict[EisensteinMonomial, Fraction]:
    """Nonzero Eisenstein coordinates of the bracket series, as a mapping."""
    lab = as_label(label)
    coords = eisenstein_coordinates(lab, order)
    return {
        mono: coeff
        for mono, coeff in zip(eisenstein_monomials(weight(lab)), coords)
        if coeff
    }
