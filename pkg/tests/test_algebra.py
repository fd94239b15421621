from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partreg.algebra import dot, format_rational, normalize, parse_rational
from partreg.errors import PartregError

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


@pytest.mark.parametrize("n, d, expected", [
    (2, 4, Fraction(1, 2)),
    (3, -6, Fraction(-1, 2)),
    (0, 7, Fraction(0, 1)),
])
def test_normalize_examples(n, d, expected):
    q = normalize(n, d)
    assert q == expected
    assert q.denominator > 0


def test_normalize_zero_denominator():
    with pytest.raises(PartregError):
        normalize(1, 0)


def test_canonical_parts():
    q = normalize(0, 7)
    assert (q.numerator, q.denominator) == (0, 1)
    q = normalize(-10**30, -4 * 10**29)
    assert (q.numerator, q.denominator) == (5, 2)


@given(st.integers(), st.integers().filter(bool))
def test_normalize_idempotent(n, d):
    q = normalize(n, d)
    assert normalize(q.numerator, q.denominator) == q


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


def test_serialization():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(6, 3)) == "2"
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(PartregError):
        parse_rational(0.5)
    with pytest.raises(PartregError):
        parse_rational("1/0")


@pytest.mark.parametrize("u, v, expected", [
    ((1, 1, -1, -1), (1, 6, 3, 4), 0),
    ((1, 1, -1), (0, 0, 0), 0),
    ((1, -2, 1), (1, 2, 3), 0),
    ((Fraction(1, 2), 3), (4, Fraction(1, 3)), 3),
])
def test_dot(u, v, expected):
    assert dot(u, v) == expected


def test_dot_length_mismatch():
    with pytest.raises(PartregError):
        dot((1, 2), (1, 2, 3))


vecs = st.integers(1, 6).flatmap(lambda n: st.tuples(*[st.lists(rationals, min_size=n, max_size=n)] * 3))


@given(vecs)
def test_dot_bilinear(uvw):
    u, v, w = uvw
    vw = [a + b for a, b in zip(v, w)]
    assert dot(u, vw) == dot(u, v) + dot(u, w)
