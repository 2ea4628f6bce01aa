"""Irreducible symmetric-group characters by rim-hook peeling.

The recursion removes a rim hook of length mu_1 from lam in every
possible way, with sign (-1)^(rows spanned - 1), and recurses on the
remaining cycle lengths.  Partitions are handled through their
first-column hook lengths (beta numbers), where hook removal is a single
bead move.  This module is deliberately slow-and-sure: it exists to
cross-check the fast evaluator in :mod:`descmat.descendents`, not to be
that evaluator.
"""

from fractions import Fraction
from functools import cache
from math import factorial, prod

from .partitions import as_partition, centralizer_order, partitions_of
from .shifted import shifted_power_sum


def character(lam, mu) -> int:
    """Character value chi^lam_mu; both arguments partitions of the same d."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(
            f"character requires |lam| = |mu|, got {sum(lam)} and {sum(mu)}"
        )
    return _rim_hook_character(lam, mu)


@cache
def _rim_hook_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    hook, rest = mu[0], mu[1:]
    nrows = len(lam)
    beta = [lam[i] + nrows - 1 - i for i in range(nrows)]
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - hook
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for other in beta if nb < other < b)
        new_beta = sorted(
            (other for j, other in enumerate(beta) if j != i), reverse=True
        )
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        n = len(new_beta)
        new_lam = tuple(new_beta[j] - (n - 1 - j) for j in range(n))
        new_lam = tuple(part for part in new_lam if part)
        sign = 1 if height % 2 == 0 else -1
        total += sign * _rim_hook_character(new_lam, rest)
    return total


@cache
def character_table(d: int) -> dict[tuple, int]:
    """All values chi^lam_mu for lam, mu of size d, keyed by (lam, mu).

    Materialized once per d; treat the returned mapping as read-only.
    """
    parts = partitions_of(d)
    return {(lam, mu): _rim_hook_character(lam, mu) for lam in parts for mu in parts}


def gw_character_oracle(label, d: int) -> Fraction:
    """Character-sum evaluation of the degree-d descendent invariant.

    (1 / prod (k_i+1)!) * sum over lam, mu of d of
    (chi^lam_mu)^2 / z_mu * prod_i p_{k_i+1}(lam).

    The 1/z weight sits on the conjugacy-class index mu (true row
    orthogonality), which is what reproduces the published values.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    label = tuple(sorted((int(k) for k in label), reverse=True))
    if label and label[-1] < 0:
        raise ValueError("insertion orders must be nonnegative")
    parts = partitions_of(d)
    table = character_table(d)
    total = Fraction(0)
    for lam in parts:
        p_product = Fraction(1)
        for k in label:
            p_product *= shifted_power_sum(k + 1, lam)
        row = Fraction(0)
        for mu in parts:
            chi = table[(lam, mu)]
            if chi:
                row += Fraction(chi * chi, centralizer_order(mu))
        total += row * p_product
    return total / prod(factorial(k + 1) for k in label)
