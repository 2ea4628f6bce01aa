"""Decompositions of the discriminant form and tau-function evaluations.

Two flavours of decomposition:

* linear — the discriminant written over a basis of weight-12 descendent
  series, one decomposition per basis of the positive restriction; the
  scale of each is the least positive integer clearing all denominators,
  recomputed here rather than read from anywhere.
* polynomial — the discriminant (or any weight-k form pinned by its
  leading coefficients) written in monomials of one of the eight
  generator triples in weights 2, 4, 6.

On top of the linear decompositions sits the pentagonal-pair evaluation
of tau(d), which is cross-checked against a divisor-sum closed form and
the direct q-expansion.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .descendents import DescendentLabel, as_label, bracket_series, gw_invariant, weight
from .linalg import solve_exact
from .matroid import descendent_labels
from .partitions import pentagonal_pairs
from .qseries import QSeries, discriminant, sigma
from .quasimodular import InsufficientOrderError, eisenstein_monomials, qm_dimension

SOLVE_MARGIN = 10


def default_solve_order(k: int) -> int:
    """Working order for weight-k linear solving (25 coefficients at k=12)."""
    return qm_dimension(k) + 17


@dataclass(frozen=True)
class LinearDecomposition:
    """Exact coefficients of a target form over a descendent basis."""

    basis: tuple[DescendentLabel, ...]
    coefficients: tuple[Fraction, ...]
    scale: int

    @property
    def scaled_coefficients(self) -> tuple[int, ...]:
        return tuple(int(c * self.scale) for c in self.coefficients)

    def coefficient_of(self, label) -> Fraction:
        return self.coefficients[self.basis.index(as_label(label))]


def solve_linear(basis, target: QSeries, k: int) -> LinearDecomposition:
    """Express ``target`` over the given weight-k descendent labels.

    The basis must have qm_dimension(k) elements and the target at least
    ten coefficients beyond that, which are all verified against the
    solution.  A dependent basis raises SingularSystemError; a target
    outside the span raises InconsistentSystemError.
    """
    labels = tuple(as_label(b) for b in basis)
    if len(set(labels)) != len(labels):
        raise ValueError("basis labels must be distinct")
    dim = qm_dimension(k)
    if len(labels) != dim:
        raise ValueError(f"a weight-{k} basis needs {dim} elements, got {len(labels)}")
    bad = [lab for lab in labels if weight(lab) != k]
    if bad:
        raise ValueError(f"labels of wrong weight for k={k}: {bad}")
    if target.order < dim + SOLVE_MARGIN:
        raise InsufficientOrderError(
            f"solving weight {k} needs target order >= {dim + SOLVE_MARGIN}, "
            f"got {target.order}"
        )
    columns = [bracket_series(lab, target.order).coeffs for lab in labels]
    x = tuple(solve_exact(columns, target.coeffs))
    scale = lcm(*(c.denominator for c in x))
    return LinearDecomposition(labels, x, scale)


def positive_ground_set(k: int = 12) -> tuple[DescendentLabel, ...]:
    """Positive weight-k labels in ground-set order (the table indexing)."""
    return descendent_labels(k, positive=True)


def basis_key(indices) -> str:
    """Table key for a basis given 1-based ground-set indices, e.g. (1234567)."""
    return "(" + "".join(str(i) for i in sorted(indices)) + ")"


def all_positive_decompositions(
    k: int = 12, order: int | None = None
) -> list[tuple[str, LinearDecomposition]]:
    """One discriminant decomposition per basis of the positive restriction.

    Weight 12 only: there the positive restriction is uniform of rank 7 on
    9 elements, so the bases are exactly the 36 seven-element subsets,
    listed in lexicographic order of their index tuples.
    """
    if k != 12:
        raise ValueError("positive-basis discriminant tables exist for weight 12 only")
    if order is None:
        order = default_solve_order(k)
    ground = positive_ground_set(k)
    dim = qm_dimension(k)
    target = discriminant(order)
    out = []
    for idxs in combinations(range(1, len(ground) + 1), dim):
        decomposition = solve_linear(
            [ground[i - 1] for i in idxs], target, k
        )
        out.append((basis_key(idxs), decomposition))
    return out


GENERATOR_TRIPLES: dict[int, tuple[DescendentLabel, ...]] = {
    1: ((0,), (0, 0), (0, 0, 0)),
    2: ((0,), (0, 0), (1, 1)),
    3: ((0,), (0, 0), (2, 0)),
    4: ((0,), (0, 0), (4,)),
    5: ((0,), (2,), (0, 0, 0)),
    6: ((0,), (2,), (1, 1)),
    7: ((0,), (2,), (2, 0)),
    8: ((0,), (2,), (4,)),
}


@dataclass(frozen=True)
class PolynomialDecomposition:
    """A weight-k form written in monomials of one generator triple.

    ``terms`` maps exponent triples (a, b, c) of the weight-2, 4, 6
    generators to coefficients, in the frozen monomial order.
    """

    triple_type: int
    generators: tuple[DescendentLabel, ...]
    terms: tuple[tuple[tuple[int, int, int], Fraction], ...]

    def terms_dict(self) -> dict[tuple[int, int, int], Fraction]:
        return dict(self.terms)

    def factor_form(self) -> list[tuple[tuple[DescendentLabel, ...], Fraction]]:
        """Each monomial as an explicit tuple of generator labels.

        The exponent triple (a, b, c) becomes the weight-6 label repeated
        c times, then the weight-4 label b times, then the weight-2 label
        a times, matching how such products are usually displayed.
        """
        w2, w4, w6 = self.generators
        out = []
        for (a, b, c), coeff in self.terms:
            out.append(((w6,) * c + (w4,) * b + (w2,) * a, coeff))
        return out

    def reconstruct(self, order: int) -> QSeries:
        """Re-expand the decomposition as a q-series."""
        total = QSeries([0], order=order)
        w2, w4, w6 = (bracket_series(g, order) for g in self.generators)
        for (a, b, c), coeff in self.terms:
            if coeff:
                total = total + coeff * (w2**a * w4**b * w6**c)
        return total


def poly_basis_expand(triple_type: int, k: int, leading_coeffs) -> PolynomialDecomposition:
    """Expand the weight-k form with the given leading q-coefficients.

    ``leading_coeffs`` must hold exactly qm_dimension(k) values; they pin
    down a unique weight-k form, whose expansion over the triple's
    weight-k monomials is solved exactly.  The monomial system being
    singular would contradict the triple generating the ring, so it is
    not handled specially and would surface as SingularSystemError.
    """
    if triple_type not in GENERATOR_TRIPLES:
        raise ValueError(f"triple type must be 1..8, got {triple_type}")
    generators = GENERATOR_TRIPLES[triple_type]
    dim = qm_dimension(k)
    coeffs = [Fraction(c) for c in leading_coeffs]
    if len(coeffs) != dim:
        raise ValueError(f"weight {k} needs exactly {dim} leading coefficients")
    exponents = [(m.a, m.b, m.c) for m in eisenstein_monomials(k)]
    order = dim - 1
    w2, w4, w6 = (bracket_series(g, order) for g in generators)
    columns = [(w2**a * w4**b * w6**c).coeffs for a, b, c in exponents]
    x = solve_exact(columns, coeffs)
    return PolynomialDecomposition(triple_type, generators, tuple(zip(exponents, x)))


def tau_direct(d: int) -> int:
    """tau(d) read off the q-expansion of the discriminant form."""
    if d < 1:
        raise ValueError("tau is defined for d >= 1")
    value = discriminant(d)[d]
    return int(value)


def tau_niebur(n: int) -> int:
    """Divisor-sum closed form for tau(n), exact integer arithmetic."""
    if n < 1:
        raise ValueError("tau is defined for n >= 1")
    s = [0] + [sigma(i, 1) for i in range(1, n)]
    correction = 24 * sum(
        i * i * (35 * i * i - 52 * i * n + 18 * n * n) * s[i] * s[n - i]
        for i in range(1, n)
    )
    return n**4 * sigma(n, 1) - correction


def tau_pentagonal(d: int, decomposition: LinearDecomposition) -> int:
    """tau(d) from a basis decomposition via pentagonal pairs.

    Sums (-1)^j a_b <tau_b>_m over all pairs 3j^2 - j + 2m = 2d and basis
    elements b.  The result must be an integer; anything else means the
    decomposition's coefficients are corrupt, and is raised.
    """
    if d < 1:
        raise ValueError("tau is defined for d >= 1")
    total = Fraction(0)
    for j, m in pentagonal_pairs(d):
        sign = 1 if j % 2 == 0 else -1
        inner = Fraction(0)
        for label, coeff in zip(decomposition.basis, decomposition.coefficients):
            inner += coeff * gw_invariant(label, m)
        total += sign * inner
    if total.denominator != 1:
        raise ArithmeticError(
            f"tau({d}) evaluated to the non-integer {total}: corrupt coefficients"
        )
    return int(total)


@dataclass(frozen=True)
class TauCheck:
    name: str
    cases: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class TauReport:
    max_d: int
    checks: tuple[TauCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


def _primes_upto(n: int) -> list[int]:
    flags = bytearray([1]) * (n + 1) if n >= 0 else bytearray()
    primes = []
    for p in range(2, n + 1):
        if flags[p]:
            primes.append(p)
            for m in range(p * p, n + 1, p):
                flags[m] = 0
    return primes


def tau_relation_report(max_d: int) -> TauReport:
    """Numerical sweep of the classical tau properties up to max_d.

    Checks multiplicativity on coprime factorizations, the prime-power
    recursion, the prime bound tau(p)^2 <= 4 p^11 (exact squaring, no
    square roots), and nonvanishing.  Violations are collected, not
    raised: any hit means a bug upstream, and the report is the evidence.
    """
    if max_d < 2:
        raise ValueError("the report needs max_d >= 2")
    series = discriminant(max_d)
    tau = [0] + [int(series[n]) for n in range(1, max_d + 1)]

    mult_violations = []
    mult_cases = 0
    for m in range(2, max_d + 1):
        for n in range(m, max_d // m + 1):
            if gcd(m, n) == 1:
                mult_cases += 1
                if tau[m] * tau[n] != tau[m * n]:
                    mult_violations.append(f"tau({m})tau({n}) != tau({m * n})")

    primes = _primes_upto(max_d)
    hecke_violations = []
    hecke_cases = 0
    for p in primes:
        r = 1
        while p ** (r + 1) <= max_d:
            hecke_cases += 1
            lhs = tau[p ** (r + 1)]
            rhs = tau[p] * tau[p**r] - p**11 * tau[p ** (r - 1)]
            if lhs != rhs:
                hecke_violations.append(f"recursion fails at p={p}, r={r}")
            r += 1

    bound_violations = []
    for p in primes:
        if tau[p] * tau[p] > 4 * p**11:
            bound_violations.append(f"tau({p})^2 > 4*{p}^11")

    zero_violations = [f"tau({d}) = 0" for d in range(1, max_d + 1) if tau[d] == 0]

    return TauReport(
        max_d,
        (
            TauCheck("multiplicativity", mult_cases, tuple(mult_violations)),
            TauCheck("hecke_recursion", hecke_cases, tuple(hecke_violations)),
            TauCheck("prime_bound", len(primes), tuple(bound_violations)),
            TauCheck("nonvanishing", max_d, tuple(zero_violations)),
        ),
    )
