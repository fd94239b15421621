"""Level-by-level closure of a finite rational set under + - * /.

``C_0 = X`` and ``C_{n+1}`` adds every ``a+b, a-b, a*b`` and every ``a/b``
with ``b != 0`` for ``a, b`` in ``C_n``. The union of the levels is the
closure of X; membership is only ever confirmed, never refuted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from partreg.algebra import format_rational, parse_rational


def closure_step(c: Iterable) -> frozenset[Fraction]:
    level = frozenset(parse_rational(q) for q in c)
    out = set(level)
    for a in level:
        for b in level:
            out.add(a + b)
            out.add(a - b)
            out.add(a * b)
            if b:
                out.add(a / b)
    return frozenset(out)


@dataclass
class ClosureState:
    base: frozenset[Fraction]
    levels: list[frozenset[Fraction]] = field(default_factory=list)
    capped: bool = False

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def __contains__(self, q) -> bool:
        return parse_rational(q) in self.levels[-1]

    def level_of(self, q) -> int | None:
        """First level containing q, or None if it was not reached."""
        q = parse_rational(q)
        for i, level in enumerate(self.levels):
            if q in level:
                return i
        return None

    def to_json(self) -> dict:
        return {
            "base": sorted_strings(self.base),
            "depth": self.depth,
            "capped": self.capped,
            "level_sizes": [len(level) for level in self.levels],
        }


def sorted_strings(values: Iterable[Fraction]) -> list[str]:
    return [format_rational(q) for q in sorted(values)]


def closure_enumerate(x: Iterable, depth: int, cap: int = 10**6) -> ClosureState:
    """Compute ``C_0 .. C_depth``, stopping early once a level would exceed ``cap``.

    A level that breaks the cap is discarded and ``capped`` is set; the
    levels kept are always complete.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    base = frozenset(parse_rational(q) for q in x)
    state = ClosureState(base, [base])
    for _ in range(depth):
        current = state.levels[-1]
        nxt = closure_step(current)
        if len(nxt) > cap:
            state.capped = True
            break
        state.levels.append(nxt)
        if nxt == current:
            # fixed point: every later level is the same set
            state.levels.extend([nxt] * (depth - state.depth))
            break
    return state


def in_closure(q, x: Iterable, depth: int, cap: int = 10**6) -> bool:
    """True if q shows up within ``depth`` levels; False means only "not found yet"."""
    q = parse_rational(q)
    base = frozenset(parse_rational(v) for v in x)
    if q in base:
        return True
    current = base
    for _ in range(depth):
        nxt = closure_step(current)
        if len(nxt) > cap:
            return False
        if q in nxt:
            return True
        if nxt == current:
            return False
        current = nxt
    return False
