"""Signature coloring of a rational vector space with basis ``b_0, b_1, ...``.

A vector is stored by its nonzero coordinates. Its *support* is the sorted
list of indices carrying them and its *signature* is the tuple of those
coordinates in support order. Coloring every vector by its signature uses
countably many colors, and no three distinct vectors of one color satisfy
``z - x = gamma * (y - x)`` for a fixed rational ``gamma`` outside {0, 1}.
"""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from partreg.algebra import format_rational, parse_rational
from partreg.errors import PartregError

Signature = tuple  # tuple[Fraction, ...], no zero entries


class SparseQVector:
    """Finite rational combination of basis vectors; immutable and hashable."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coords.items() if isinstance(coords, Mapping) else coords
        clean = {}
        for index, value in items:
            index = int(index)
            if index < 0:
                raise PartregError(f"basis index must be non-negative, got {index}")
            q = parse_rational(value)
            if q:
                clean[index] = clean.get(index, Fraction(0)) + q
        self._coords = tuple(sorted((i, q) for i, q in clean.items() if q))

    @classmethod
    def basis(cls, index: int, scale=1) -> "SparseQVector":
        return cls({index: scale})

    @property
    def coords(self) -> dict[int, Fraction]:
        return dict(self._coords)

    def __getitem__(self, index: int) -> Fraction:
        for i, q in self._coords:
            if i == index:
                return q
        return Fraction(0)

    def __add__(self, other: "SparseQVector") -> "SparseQVector":
        return SparseQVector(itertools.chain(self._coords, other._coords))

    def __sub__(self, other: "SparseQVector") -> "SparseQVector":
        return self + other.scale(-1)

    def scale(self, factor) -> "SparseQVector":
        f = parse_rational(factor)
        return SparseQVector((i, f * q) for i, q in self._coords)

    def __rmul__(self, factor) -> "SparseQVector":
        return self.scale(factor)

    def __eq__(self, other):
        return isinstance(other, SparseQVector) and self._coords == other._coords

    def __hash__(self):
        return hash(self._coords)

    def __bool__(self):
        return bool(self._coords)

    def __repr__(self):
        if not self._coords:
            return "SparseQVector(0)"
        terms = " + ".join(f"({format_rational(q)})*b{i}" for i, q in self._coords)
        return f"SparseQVector({terms})"

    def to_json(self) -> dict:
        return {str(i): format_rational(q) for i, q in self._coords}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "SparseQVector":
        if not isinstance(data, Mapping):
            raise PartregError("a vector is a JSON object mapping indices to rationals")
        try:
            return cls({int(k): v for k, v in data.items()})
        except ValueError as exc:
            raise PartregError(f"bad basis index in {data!r}") from exc


def support(w: SparseQVector) -> tuple[int, ...]:
    return tuple(i for i, _ in w._coords)


def signature(w: SparseQVector) -> Signature:
    return tuple(q for _, q in w._coords)


def signature_key(sig: Sequence[Fraction]) -> str:
    """Canonical text of a signature, e.g. ``"3,-1/2"``; ``""`` for the zero vector."""
    return ",".join(format_rational(q) for q in sig)


class ColorRegistry:
    """Maps signatures to small integers in order of first appearance.

    Registration is serialized by a lock so concurrent callers always agree
    on one id per signature.
    """

    def __init__(self):
        self._ids: dict[str, int] = {}
        self._lock = threading.Lock()

    def color_of_signature(self, sig: Sequence[Fraction]) -> int:
        key = signature_key(sig)
        found = self._ids.get(key)
        if found is not None:
            return found
        with self._lock:
            return self._ids.setdefault(key, len(self._ids))

    def color(self, w: SparseQVector) -> int:
        return self.color_of_signature(signature(w))

    def __len__(self):
        return len(self._ids)


default_registry = ColorRegistry()


def ceder_color_id(w: SparseQVector, registry: Optional[ColorRegistry] = None) -> int:
    return (registry or default_registry).color(w)


@dataclass(frozen=True)
class CederParams:
    gamma: Fraction

    def __post_init__(self):
        g = parse_rational(self.gamma)
        if g in (0, 1):
            raise PartregError(f"gamma must avoid 0 and 1, got {g}")
        object.__setattr__(self, "gamma", g)


def complete_triple(x: SparseQVector, y: SparseQVector, p: CederParams) -> SparseQVector:
    """The unique z with ``z - x = gamma * (y - x)``, i.e. ``gamma*y + (1-gamma)*x``."""
    g = p.gamma
    indices = sorted(set(support(x)) | set(support(y)))
    return SparseQVector((i, g * y[i] + (1 - g) * x[i]) for i in indices)


def gamma_from_triple(b1, b2, b3) -> Fraction:
    """Reduce ``b1*e1 + b2*e2 + b3*e3 = 0`` (with ``b1+b2+b3 = 0``) to ``gamma = -b2/b3``.

    >>> gamma_from_triple(1, -2, 1)
    Fraction(2, 1)
    """
    b1, b2, b3 = (parse_rational(b) for b in (b1, b2, b3))
    if b1 + b2 + b3 != 0:
        raise PartregError(f"coefficients must sum to 0, got {b1 + b2 + b3}")
    if b2 == 0 or b3 == 0:
        raise PartregError("b2 and b3 must be nonzero")
    gamma = -b2 / b3
    # b1 = -(b2 + b3) and b1 is then nonzero too, so gamma == 1 cannot happen
    assert gamma not in (0, 1)
    return gamma


def enumerate_universe(max_index: int, coord_grid: Sequence, max_support: Optional[int] = None
                       ) -> list[SparseQVector]:
    """Every vector with support in ``{0..max_index}`` and coordinates from the grid.

    Zero is always included. ``max_support`` caps the number of nonzero
    coordinates. Order is deterministic.
    """
    grid = sorted({parse_rational(v) for v in coord_grid} - {Fraction(0)})
    options = [Fraction(0)] + grid
    out = []
    for coords in itertools.product(options, repeat=max_index + 1):
        if max_support is not None and sum(1 for q in coords if q) > max_support:
            continue
        out.append(SparseQVector(enumerate(coords)))
    return out


@dataclass
class VerificationReport:
    gamma: Fraction
    universe_size: int
    ordered_triples: int
    solutions: int
    violations: int
    counterexample: Optional[tuple[SparseQVector, SparseQVector, SparseQVector]] = None

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_json(self) -> dict:
        return {
            "gamma": format_rational(self.gamma),
            "universe_size": self.universe_size,
            "ordered_triples": self.ordered_triples,
            "solutions": self.solutions,
            "violations": self.violations,
            "counterexample": None if self.counterexample is None
            else [v.to_json() for v in self.counterexample],
        }


def _scan(args):
    gamma, universe, colors, rows = args
    p = CederParams(gamma)
    index = {w: i for i, w in enumerate(universe)}
    solutions = violations = 0
    first = None
    for ix in rows:
        x = universe[ix]
        for iy, y in enumerate(universe):
            if iy == ix:
                continue
            iz = index.get(complete_triple(x, y, p))
            # z differs from x and y whenever x != y because gamma is not 0 or 1
            if iz is None or iz == ix or iz == iy:
                continue
            solutions += 1
            if colors[ix] == colors[iy] == colors[iz]:
                violations += 1
                if first is None:
                    first = (ix, iy, iz)
    return solutions, violations, first


def verify_ceder(p: CederParams, universe: Sequence[SparseQVector], threads: int = 1,
                 registry: Optional[ColorRegistry] = None) -> VerificationReport:
    """Count ordered triples of distinct vectors in ``universe`` with
    ``z - x = gamma*(y - x)``, and how many of them are monochromatic.

    For each ordered pair ``(x, y)`` the third vector is determined, so
    looking it up covers all ordered triples exactly.
    """
    universe = list(dict.fromkeys(universe))
    registry = registry or default_registry
    colors = [registry.color(w) for w in universe]
    n = len(universe)
    threads = max(1, int(threads))
    if threads == 1 or n < 64:
        parts = [_scan((p.gamma, universe, colors, range(n)))]
    else:
        chunks = [range(start, n, threads) for start in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_scan, [(p.gamma, universe, colors, c) for c in chunks]))
    solutions = sum(part[0] for part in parts)
    violations = sum(part[1] for part in parts)
    firsts = [part[2] for part in parts if part[2] is not None]
    counterexample = None
    if firsts:
        ix, iy, iz = min(firsts)
        counterexample = (universe[ix], universe[iy], universe[iz])
    return VerificationReport(p.gamma, n, n * (n - 1) * (n - 2), solutions, violations, counterexample)
