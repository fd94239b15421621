"""Single linear equations ``sum(b_i * e_i) = 0`` and Rado's criteria.

The decision procedures work on the coefficient vector alone:

* regular: some nonempty subset of the coefficients sums to zero;
* distinct regular: additionally, the hyperplane ``b . lam = 0`` contains a
  point with pairwise distinct coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from partreg.algebra import all_distinct, dot
from partreg.errors import DegenerateEquationError, PartregError


@dataclass(frozen=True)
class LinearEquation:
    coeffs: tuple[int, ...]
    require_distinct: bool = False

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        for b in coeffs:
            if isinstance(b, bool) or not isinstance(b, int):
                raise PartregError(f"coefficients must be integers, got {b!r}")
        if len(coeffs) < 2:
            raise DegenerateEquationError("an equation needs at least two variables")
        if not any(coeffs):
            raise DegenerateEquationError("all coefficients are zero")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "require_distinct", bool(self.require_distinct))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "distinct": self.require_distinct}

    @classmethod
    def from_json(cls, data: dict) -> "LinearEquation":
        try:
            return cls(tuple(data["coeffs"]), bool(data.get("distinct", False)))
        except (KeyError, TypeError) as exc:
            raise PartregError(f"malformed equation object: {data!r}") from exc

    def __str__(self):
        lhs = " + ".join(f"{b}*e{i}" for i, b in enumerate(self.coeffs, 1))
        tag = ", distinct" if self.require_distinct else ""
        return f"{lhs} = 0{tag}"


def make_equation(coeffs: Iterable[int], require_distinct: bool = False) -> LinearEquation:
    return LinearEquation(tuple(coeffs), require_distinct)


def fox_equation(s: int) -> LinearEquation:
    """``x1 + s*x2 = x3 + ... + x_{s+3}`` with distinct unknowns.

    s = 0 collapses to ``x1 = x3``, which has no distinct solution, so it is
    rejected.
    """
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise DegenerateEquationError(f"fox_equation needs s >= 1, got {s!r}")
    return LinearEquation((1, s) + (-1,) * (s + 1), require_distinct=True)


def is_solution(eq: LinearEquation, values: Sequence[int]) -> bool:
    if len(values) != eq.n:
        raise PartregError(f"expected {eq.n} values, got {len(values)}")
    if dot(eq.coeffs, values) != 0:
        return False
    return not eq.require_distinct or all_distinct(values)


def _coeffs_of(eq_or_coeffs) -> tuple[int, ...]:
    if isinstance(eq_or_coeffs, LinearEquation):
        return eq_or_coeffs.coeffs
    return LinearEquation(tuple(eq_or_coeffs)).coeffs


def has_zero_subset_sum(coeffs) -> bool:
    """True iff some nonempty subset of the coefficients sums to 0.

    Plain enumeration over the 2^n - 1 nonempty subsets; n is small.
    """
    b = _coeffs_of(coeffs)
    for r in range(1, len(b) + 1):
        for subset in itertools.combinations(b, r):
            if sum(subset) == 0:
                return True
    return False


def is_regular(eq: LinearEquation) -> bool:
    if eq.require_distinct:
        raise PartregError(
            "is_regular is for equations without the distinctness requirement; "
            "use is_distinct_regular"
        )
    return has_zero_subset_sum(eq.coeffs)


def _is_two_term_difference(b: Sequence[int]) -> bool:
    # b is c*(e_i - e_j): exactly two nonzero entries, equal size, opposite sign
    nz = [x for x in b if x != 0]
    return len(nz) == 2 and nz[0] == -nz[1]


def _pivot(b: Sequence[int]) -> int:
    # first index of smallest nonzero magnitude; keeps witnesses integral when |b_j| = 1
    return min((i for i, x in enumerate(b) if x != 0), key=lambda i: (abs(b[i]), i))


def find_distinct_kernel_vector(coeffs) -> Optional[tuple[Fraction, ...]]:
    """A rational ``lam`` with pairwise distinct entries and ``b . lam = 0``.

    Returns None exactly when ``b`` is a multiple of ``e_i - e_j``, in which
    case the hyperplane is the diagonal ``lam_i = lam_j``.

    The witness is deterministic: solve for a pivot coordinate and fill the
    free coordinates with injective assignments from ``{1..m}`` in
    lexicographic order, starting from ``(1, 2, ..., n-1)`` and widening ``m``
    until the pivot value avoids every free value.
    """
    b = _coeffs_of(coeffs)
    n = len(b)
    if _is_two_term_difference(b):
        return None
    j = _pivot(b)
    free = [i for i in range(n) if i != j]
    m = n - 1
    while True:
        # only assignments that use the value m are new at this width
        for values in itertools.permutations(range(1, m + 1), n - 1):
            if m > n - 1 and m not in values:
                continue
            rest = sum(b[i] * v for i, v in zip(free, values))
            lam_j = Fraction(-rest, b[j])
            if lam_j in values:
                continue
            lam = [Fraction(0)] * n
            for i, v in zip(free, values):
                lam[i] = Fraction(v)
            lam[j] = lam_j
            return tuple(lam)
        m += 1


def is_distinct_regular(eq) -> bool:
    b = _coeffs_of(eq)
    return has_zero_subset_sum(b) and find_distinct_kernel_vector(b) is not None
