"""Exact rational scalars and short rational vectors.

Rationals are :class:`fractions.Fraction` values, which are kept in lowest
terms with a positive denominator from the moment they are built, so plain
``==`` is a valid equality test everywhere else in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from partreg.errors import PartregError

Rational = Fraction
RationalVector = tuple  # tuple[Fraction, ...]
Scalar = Union[int, Fraction]


def normalize(n: int, d: int = 1) -> Fraction:
    """Return ``n/d`` in canonical form.

    >>> normalize(3, -6)
    Fraction(-1, 2)
    """
    if isinstance(n, bool) or isinstance(d, bool):
        raise PartregError("booleans are not rationals")
    if d == 0:
        raise PartregError(f"zero denominator in {n}/{d}")
    return Fraction(n, d)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"n/d"`` or ``"n"`` (or pass ints and Fractions through).

    Floats are refused; decimal strings such as ``"0.5"`` are read exactly.
    """
    if isinstance(text, bool):
        raise PartregError("booleans are not rationals")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        raise PartregError(f"refusing float {text!r}; pass a string like '1/2'")
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PartregError(f"not a rational: {text!r}") from exc


def format_rational(q: Scalar) -> str:
    """Canonical text form: ``"n/d"``, or ``"n"`` when the denominator is 1."""
    return str(Fraction(q))


def vector(values: Iterable[Scalar | str]) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    if len(u) != len(v):
        raise PartregError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def all_distinct(values: Sequence) -> bool:
    return len(set(values)) == len(values)
