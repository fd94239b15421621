"""Finite colorings of ``[1..n]``: monochromatic solutions, k-APs, forcing numbers.

All finders return the lexicographically smallest witness so results are
reproducible. Forcing searches run a depth-first search over colorings of
``1, 2, 3, ...`` in canonical order (element 1 gets color 0, and color
``i + 1`` never appears before color ``i``), which removes exactly the
``c!`` relabelings without losing any coloring class.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from partreg.equations import LinearEquation, is_solution
from partreg.errors import MalformedCertificateError, PartregError, SearchLimitExceeded

ENGINE_VERSION = "partreg-search/1"


@dataclass(frozen=True)
class Coloring:
    """Colors of ``1..n``; ``colors[i]`` is the color of ``i + 1``."""

    n: int
    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if self.n < 0 or len(colors) != self.n:
            raise PartregError(f"coloring of [1..{self.n}] needs {self.n} colors, got {len(colors)}")
        if self.num_colors < 1:
            raise PartregError("num_colors must be positive")
        for c in colors:
            if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < self.num_colors:
                raise PartregError(f"color id {c!r} outside [0, {self.num_colors})")

    @classmethod
    def from_list(cls, colors: Sequence[int], num_colors: Optional[int] = None) -> "Coloring":
        colors = tuple(colors)
        if num_colors is None:
            num_colors = max(colors, default=0) + 1
        return cls(len(colors), colors, num_colors)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], int], num_colors: Optional[int] = None):
        return cls.from_list([fn(i) for i in range(1, n + 1)], num_colors)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise PartregError(f"{x} outside [1..{self.n}]")
        return self.colors[x - 1]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for x, c in enumerate(self.colors, 1):
            out[c].append(x)
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "num_colors": self.num_colors, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        try:
            return cls(int(data["n"]), tuple(data["colors"]), int(data["num_colors"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise PartregError(f"malformed coloring object: {exc}") from exc


@dataclass(frozen=True)
class Solution:
    values: tuple
    color: int

    def to_json(self) -> dict:
        return {"values": [str(v) if isinstance(v, Fraction) else v for v in self.values],
                "color": self.color}


@dataclass(frozen=True)
class APWitness:
    a: int
    d: int
    k: int

    @property
    def terms(self) -> tuple[int, ...]:
        return tuple(self.a + t * self.d for t in range(self.k))

    def to_json(self) -> dict:
        return {"a": self.a, "d": self.d, "k": self.k, "terms": list(self.terms)}


# -- single-coloring finders -------------------------------------------------


def find_mono_solution(col: Coloring, eq: LinearEquation) -> Optional[Solution]:
    """Lexicographically smallest monochromatic solution in ``[1..n]^len(b)``."""
    b = eq.coeffs
    nvars = len(b)
    n = col.n
    classes = col.classes()
    # bounds on sum(b_i * e_i) over positions i..end with every e_i in [1..n]
    lo = [0] * (nvars + 1)
    hi = [0] * (nvars + 1)
    for i in range(nvars - 1, -1, -1):
        lo[i] = lo[i + 1] + min(b[i], b[i] * n)
        hi[i] = hi[i + 1] + max(b[i], b[i] * n)

    def extend(prefix: list[int], partial: int, members: list[int], member_set: set[int]):
        i = len(prefix)
        if i == nvars - 1:
            if b[i] == 0:
                if partial != 0:
                    return None
                for v in members:
                    if not eq.require_distinct or v not in prefix:
                        return prefix + [v]
                return None
            v, r = divmod(-partial, b[i])
            if r or v not in member_set:
                return None
            if eq.require_distinct and v in prefix:
                return None
            return prefix + [v]
        for v in members:
            if eq.require_distinct and v in prefix:
                continue
            s = partial + b[i] * v
            if not lo[i + 1] <= -s <= hi[i + 1]:
                continue
            found = extend(prefix + [v], s, members, member_set)
            if found is not None:
                return found
        return None

    for e1 in range(1, n + 1):
        members = classes[col(e1)]
        s = b[0] * e1
        if nvars > 1 and not lo[1] <= -s <= hi[1]:
            continue
        found = extend([e1], s, members, set(members)) if nvars > 1 else ([e1] if s == 0 else None)
        if found is not None:
            return Solution(tuple(found), col(e1))
    return None


def find_mono_ap(col: Coloring, k: int) -> Optional[APWitness]:
    """Lexicographically smallest ``(a, d)`` whose k-AP is monochromatic."""
    if k < 3:
        raise PartregError(f"k must be at least 3, got {k}")
    n = col.n
    for a in range(1, n + 1):
        c = col(a)
        for d in range(1, (n - a) // (k - 1) + 1):
            if all(col(a + t * d) == c for t in range(1, k)):
                return APWitness(a, d, k)
    return None


def four_from_vdw(col: Coloring) -> Optional[Solution]:
    """Monochromatic distinct solution of ``e1 + e2 = e3 + e4`` from a 5-AP.

    With ``a, a+d, ..., a+4d`` one color, ``(a, a+4d, a+d, a+3d)`` works:
    both sides equal ``2a + 4d``.
    """
    ap = find_mono_ap(col, 5)
    if ap is None:
        return None
    a, d = ap.a, ap.d
    return Solution((a, a + 4 * d, a + d, a + 3 * d), col(a))


def four_from_ramsey(col: Coloring) -> Optional[Solution]:
    """Monochromatic distinct solution of ``e1 + e2 = e3 + e4`` from differences.

    Looks for ``a1 < a2 < a3 < a4`` whose six pairwise differences share one
    color and are pairwise distinct, then returns
    ``(a2-a1, a4-a2, a3-a1, a4-a3)``.
    """
    n = col.n
    # The condition only involves differences, so translating any witness to
    # a1 = 1 keeps it inside [1..n]; the lexicographically smallest has a1 = 1.
    a1 = 1
    for a2 in range(a1 + 1, n + 1):
        d12 = a2 - a1
        c = col(d12)
        for a3 in range(a2 + 1, n + 1):
            d13, d23 = a3 - a1, a3 - a2
            if col(d13) != c or col(d23) != c or d23 == d12:
                continue
            seen = {d12, d13, d23}
            for a4 in range(a3 + 1, n + 1):
                d14, d24, d34 = a4 - a1, a4 - a2, a4 - a3
                if col(d14) != c or col(d24) != c or col(d34) != c:
                    continue
                if len(seen | {d14, d24, d34}) != 6:
                    continue
                return Solution((d12, d24, d13, d34), c)
    return None


# -- forcing searches -------------------------------------------------------


@dataclass
class ForcingResult:
    """Outcome of a forcing search together with its avoider certificate.

    ``forcing_n`` is None when an avoider of the whole explored range was
    found. ``kind`` is ``"equation"`` (``equation`` set) or ``"ap"`` (``k`` set).
    """

    kind: str
    num_colors: int
    forcing_n: Optional[int]
    avoider: Coloring
    explored_bound: int
    equation: Optional[LinearEquation] = None
    k: Optional[int] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.forcing_n is not None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "equation": self.equation.to_json() if self.equation is not None else None,
            "k": self.k,
            "num_colors": self.num_colors,
            "forcing_n": self.forcing_n,
            "explored_bound": self.explored_bound,
            "avoider": self.avoider.to_json(),
            "engine_version": ENGINE_VERSION,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ForcingResult":
        try:
            kind = data.get("kind") or ("ap" if data.get("k") is not None else "equation")
            equation = data.get("equation")
            result = cls(
                kind=kind,
                num_colors=int(data["num_colors"]),
                forcing_n=None if data.get("forcing_n") is None else int(data["forcing_n"]),
                avoider=Coloring.from_json(data["avoider"]),
                explored_bound=int(data.get("explored_bound", data["avoider"]["n"])),
                equation=LinearEquation.from_json(equation) if equation is not None else None,
                k=None if data.get("k") is None else int(data["k"]),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise MalformedCertificateError(f"malformed certificate: {exc}") from exc
        return result


def _creates_solution_fn(eq: LinearEquation):
    """Return ``check(members, m)``: does ``members`` (which contains m) hold a
    solution using m? ``members`` is a set of earlier same-colored values plus m."""
    b = eq.coeffs
    nvars = len(b)
    distinct = eq.require_distinct

    def check(members: set[int], m: int) -> bool:
        pool = sorted(members)
        for i in range(nvars):
            pivots = [p for p in range(nvars) if p != i and b[p] != 0]
            if not pivots:
                continue
            p = pivots[0]
            others = [q for q in range(nvars) if q != i and q != p]
            base = b[i] * m
            for combo in itertools.product(pool, repeat=len(others)):
                s = base + sum(b[q] * v for q, v in zip(others, combo))
                v, r = divmod(-s, b[p])
                if r or v not in members:
                    continue
                if distinct:
                    vals = [m, v, *combo]
                    if len(set(vals)) != nvars:
                        continue
                return True
        return False

    return check


def _ap_check_fn(k: int):
    def check(colors: list[int], m: int, c: int) -> bool:
        # colors[x] for x in 1..m; any k-AP ending at m that is all color c
        for d in range(1, (m - 1) // (k - 1) + 1):
            if all(colors[m - t * d] == c for t in range(1, k)):
                return True
        return False

    return check


class _Reached(Exception):
    pass


def _canonical_dfs(c: int, n_max: int, creates: Callable[[list[int], list[set[int]], int, int], bool],
                   node_limit: Optional[int]):
    """Depth-first search over canonical colorings of 1, 2, ... up to n_max.

    Returns ``(best_colors, nodes)`` where ``best_colors`` is the
    lexicographically first avoider of maximal length (capped at n_max).
    Children are tried in color order, so the first node reached at each new
    depth is the lexicographically smallest avoider of that length.
    """
    colors = [-1] * (n_max + 1)
    classes: list[set[int]] = [set() for _ in range(c)]
    best: list[int] = []
    nodes = 0

    def visit(m: int, used: int):
        nonlocal best, nodes
        for color in range(min(c - 1, used + 1) + 1):
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise SearchLimitExceeded(
                    f"node limit {node_limit} exceeded",
                    {"best_length": len(best), "avoider": list(best), "nodes": nodes},
                )
            colors[m] = color
            classes[color].add(m)
            if not creates(colors, classes, m, color):
                if m > len(best):
                    best = colors[1:m + 1]
                    if m == n_max:
                        raise _Reached
                visit(m + 1, max(used, color))
            classes[color].discard(m)
            colors[m] = -1

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n_max + 200))
    try:
        visit(1, -1)
    except _Reached:
        pass
    finally:
        sys.setrecursionlimit(limit)
    return best, nodes


def forcing_number(eq: LinearEquation, c: int, n_max: int,
                   node_limit: Optional[int] = None) -> ForcingResult:
    """Smallest N <= n_max forcing a monochromatic solution in every c-coloring."""
    if c < 1 or n_max < 1:
        raise PartregError("need c >= 1 and n_max >= 1")
    check = _creates_solution_fn(eq)

    def creates(colors, classes, m, color):
        return check(classes[color], m)

    best, nodes = _canonical_dfs(c, n_max, creates, node_limit)
    forcing_n = None if len(best) == n_max else len(best) + 1
    return ForcingResult("equation", c, forcing_n, Coloring(len(best), tuple(best), c),
                         n_max, equation=eq, nodes=nodes)


def vdw_forcing(k: int, c: int, n_max: int, node_limit: Optional[int] = None) -> ForcingResult:
    """Smallest N <= n_max forcing a monochromatic k-AP in every c-coloring."""
    if k < 3:
        raise PartregError(f"k must be at least 3, got {k}")
    if c < 1 or n_max < 1:
        raise PartregError("need c >= 1 and n_max >= 1")
    check = _ap_check_fn(k)

    def creates(colors, classes, m, color):
        return check(colors, m, color)

    best, nodes = _canonical_dfs(c, n_max, creates, node_limit)
    forcing_n = None if len(best) == n_max else len(best) + 1
    return ForcingResult("ap", c, forcing_n, Coloring(len(best), tuple(best), c),
                         n_max, k=k, nodes=nodes)


# -- certificate checking ---------------------------------------------------
# Deliberately shares no code with the search above: plain scans over each
# color class.


def _class_has_solution(members: list[int], b: Sequence[int], distinct: bool) -> bool:
    member_set = set(members)
    nz = [i for i, x in enumerate(b) if x != 0]
    p = nz[-1]
    rest = [i for i in range(len(b)) if i != p]
    for combo in itertools.product(members, repeat=len(rest)):
        total = sum(b[i] * v for i, v in zip(rest, combo))
        if total % b[p]:
            continue
        v = -total // b[p]
        if v not in member_set:
            continue
        if distinct and len(set(combo) | {v}) != len(b):
            continue
        return True
    return False


def _class_has_ap(members: list[int], k: int) -> bool:
    member_set = set(members)
    for a in members:
        for x in members:
            if x <= a:
                continue
            d = x - a
            if all(a + t * d in member_set for t in range(2, k)):
                return True
    return False


def verify_certificate(cert) -> bool:
    """Check that the avoider in ``cert`` has no monochromatic solution / k-AP.

    Accepts a :class:`ForcingResult` or its JSON dict. Raises
    :class:`MalformedCertificateError` when the certificate is inconsistent.
    """
    if isinstance(cert, dict):
        cert = ForcingResult.from_json(cert)
    avoider = cert.avoider
    if avoider.num_colors > cert.num_colors:
        raise MalformedCertificateError("avoider uses more colors than the certificate claims")
    expected = cert.explored_bound if cert.forcing_n is None else cert.forcing_n - 1
    if avoider.n != expected:
        raise MalformedCertificateError(
            f"avoider covers [1..{avoider.n}] but the claim needs [1..{expected}]")
    if cert.kind == "equation":
        if cert.equation is None:
            raise MalformedCertificateError("equation certificate without an equation")
        b, distinct = cert.equation.coeffs, cert.equation.require_distinct
        return not any(_class_has_solution(cls, b, distinct) for cls in avoider.classes() if cls)
    if cert.kind == "ap":
        if cert.k is None or cert.k < 3:
            raise MalformedCertificateError("AP certificate needs k >= 3")
        return not any(_class_has_ap(cls, cert.k) for cls in avoider.classes() if cls)
    raise MalformedCertificateError(f"unknown certificate kind {cert.kind!r}")


def solution_check(eq: LinearEquation, col: Coloring, sol: Solution) -> bool:
    """True iff ``sol`` is a monochromatic solution of ``eq`` under ``col``."""
    return is_solution(eq, sol.values) and all(col(v) == sol.color for v in sol.values)
