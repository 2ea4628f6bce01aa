"""Linear matroids over the rationals, and the descendent matroids.

A :class:`LinearMatroid` wraps a labeled rational column matrix;
independence means exact linear independence, decided by fraction-free
integer elimination after clearing denominators column by column (column
scaling cannot change independence).  The weight-k descendent matroid is
built from the Eisenstein coordinate columns of every weight-k label in
the frozen ground-set order.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .descendents import eisenstein_coordinates
from .linalg import int_row_rank, scale_row_to_int
from .partitions import partitions_min_two
from .quasimodular import qm_dimension

DEFAULT_MAX_WEIGHT = 18
TUTTE_GROUND_CAP = 16


class TuttePolynomial:
    """Bivariate integer polynomial with coefficients keyed by (i, j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int]):
        self.coeffs = {key: int(c) for key, c in coeffs.items() if c}

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(i, j, coeff), total degree descending then x-degree descending."""
        keys = sorted(self.coeffs, key=lambda ij: (-(ij[0] + ij[1]), -ij[0]))
        return [(i, j, self.coeffs[(i, j)]) for i, j in keys]

    def __str__(self):
        terms = []
        for i, j, c in self.sorted_terms():
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            terms.append(("-" if c < 0 else "+", "*".join(factors)))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"TuttePolynomial({self.coeffs!r})"


class LinearMatroid:
    """Matroid of a labeled exact-rational column matrix.

    Values are immutable after construction; subset tests never mutate
    shared state, so instances are safe to use from several threads.
    """

    def __init__(self, columns, labels, nrows: int | None = None):
        columns = [tuple(Fraction(x) for x in col) for col in columns]
        labels = tuple(labels)
        if len(columns) != len(labels):
            raise ValueError("need exactly one label per column")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        heights = {len(col) for col in columns}
        if len(heights) > 1:
            raise ValueError("columns must share a common height")
        if heights:
            nrows = heights.pop()
        elif nrows is None:
            raise ValueError("an empty matroid needs an explicit row count")
        self.nrows = nrows
        self.columns = tuple(columns)
        self.labels = labels
        self._index = {label: i for i, label in enumerate(labels)}
        self._int_columns = tuple(tuple(scale_row_to_int(col)) for col in columns)
        self._rank: int | None = None

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return (
            f"<LinearMatroid rank {self.rank()} on {len(self)} elements "
            f"over {self.nrows} coordinates>"
        )

    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """Row-major copy of the representing matrix."""
        return tuple(
            tuple(col[i] for col in self.columns) for i in range(self.nrows)
        )

    def _indices_of(self, subset) -> list[int]:
        idxs = set()
        for label in subset:
            try:
                idxs.add(self._index[label])
            except KeyError:
                raise ValueError(f"unknown label: {label!r}") from None
        return sorted(idxs)

    def _subset_rank(self, idxs, stop_at: int | None = None) -> int:
        return int_row_rank([self._int_columns[i] for i in idxs], stop_at=stop_at)

    def rank(self) -> int:
        if self._rank is None:
            self._rank = self._subset_rank(range(len(self)))
        return self._rank

    def is_independent(self, subset) -> bool:
        idxs = self._indices_of(subset)
        return self._subset_rank(idxs) == len(idxs)

    def bases(self):
        """All bases, in lexicographic order of label indices."""
        r = self.rank()
        for idxs in combinations(range(len(self)), r):
            if self._subset_rank(idxs, stop_at=r) == r:
                yield tuple(self.labels[i] for i in idxs)

    def bases_count(self) -> int:
        r = self.rank()
        return sum(
            1
            for idxs in combinations(range(len(self)), r)
            if self._subset_rank(idxs, stop_at=r) == r
        )

    def tutte(self) -> TuttePolynomial:
        """Corank-nullity sum over all subsets of the ground set."""
        n = len(self)
        if n > TUTTE_GROUND_CAP:
            raise ValueError(
                f"Tutte enumeration is capped at {TUTTE_GROUND_CAP} elements, "
                f"ground set has {n}"
            )
        r = self.rank()
        acc: dict[tuple[int, int], int] = {}
        for size in range(n + 1):
            for idxs in combinations(range(n), size):
                ra = self._subset_rank(idxs)
                corank, nullity = r - ra, size - ra
                for i in range(corank + 1):
                    ci = comb(corank, i) * (-1) ** (corank - i)
                    for j in range(nullity + 1):
                        c = ci * comb(nullity, j) * (-1) ** (nullity - j)
                        acc[(i, j)] = acc.get((i, j), 0) + c
        return TuttePolynomial(acc)

    def restrict(self, subset) -> "LinearMatroid":
        """Restriction to a label subset, keeping the ground-set order."""
        keep = set(self._indices_of(subset))
        idxs = [i for i in range(len(self)) if i in keep]
        return LinearMatroid(
            [self.columns[i] for i in idxs],
            [self.labels[i] for i in idxs],
            nrows=self.nrows,
        )

    def is_uniform(self) -> tuple[int, int] | None:
        """(rank, size) when every rank-subset is a basis, else None."""
        r, n = self.rank(), len(self)
        return (r, n) if self.bases_count() == comb(n, r) else None


def descendent_labels(k: int, positive: bool = False) -> tuple:
    """Weight-k ground-set labels in the frozen order.

    Labels are partitions of k with parts >= 2, shifted down by 2; the
    positive flag keeps only labels with every insertion > 0.
    """
    labels = tuple(
        tuple(part - 2 for part in parts) for parts in partitions_min_two(k)
    )
    if positive:
        labels = tuple(lab for lab in labels if lab[-1] > 0)
    return labels


def descendent_matrix(
    k: int,
    positive: bool = False,
    order: int | None = None,
    max_weight: int = DEFAULT_MAX_WEIGHT,
) -> LinearMatroid:
    """The weight-k descendent matroid as a labeled coordinate matrix.

    Columns are Eisenstein coordinates of each ground-set label, rows in
    weight-k monomial order.  The weight cap is a desk-scale guard, not a
    mathematical limit; raise ``max_weight`` to go further.
    """
    if k % 2 or k < 2:
        raise ValueError(f"weight must be a positive even integer, got {k}")
    if k > max_weight:
        raise ValueError(f"weight {k} above the configured cap {max_weight}")
    labels = descendent_labels(k, positive)
    columns = [eisenstein_coordinates(lab, order) for lab in labels]
    return LinearMatroid(columns, labels, nrows=qm_dimension(k))


_NAMED_RESTRICTION_DROPS: dict[int, frozenset] = {
    14: frozenset({(3, 3, 2)}),
    16: frozenset({(4, 3, 3)}),
    18: frozenset({(4, 4, 4), (5, 4, 3), (5, 5, 2), (6, 3, 3)}),
}


def named_restriction(
    k: int, order: int | None = None, *, base: LinearMatroid | None = None
) -> LinearMatroid:
    """The curated positive restrictions in weights 14, 16 and 18.

    Keeps the positive labels with at most three insertions and removes a
    short weight-specific list of three-point labels; the removals are
    forced by the uniform-matroid sizes these restrictions hit (10, 14
    and 16 elements respectively).  ``base`` may supply a prebuilt
    positive weight-k matroid (e.g. from a cache) to restrict instead of
    building one.
    """
    try:
        drops = _NAMED_RESTRICTION_DROPS[k]
    except KeyError:
        raise ValueError(
            f"named restrictions exist for weights 14, 16, 18; got {k}"
        ) from None
    m = base if base is not None else descendent_matrix(k, positive=True, order=order)
    keep = [lab for lab in m.labels if len(lab) <= 3 and lab not in drops]
    return m.restrict(keep)
