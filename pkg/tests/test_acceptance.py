"""Exit criteria, one test per criterion, each under its time budget.

Every criterion prints a PASS/FAIL line, repeated in the terminal summary.
"""

import contextlib
import itertools
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from partreg.algebra import dot
from partreg.ceder import (CederParams, ColorRegistry, SparseQVector, ceder_color_id,
                           enumerate_universe, verify_ceder)
from partreg.closure import closure_enumerate, closure_step, in_closure
from partreg.equations import (find_distinct_kernel_vector, has_zero_subset_sum,
                               is_distinct_regular, make_equation)
from partreg.search import (Coloring, find_mono_ap, find_mono_solution, forcing_number,
                            four_from_ramsey, four_from_vdw, vdw_forcing, verify_certificate)

from conftest import ACCEPTANCE_LINES, all_colorings, naive_mono_solution


@contextlib.contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s / {budget}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_c1_rado_characterization():
    with criterion(1, "Rado subset-sum and distinct kernel witnesses, n<=4, entries in [-3,3]", 5):
        count_n4 = 0
        for n in range(2, 5):
            for b in itertools.product(range(-3, 4), repeat=n):
                if not any(b):
                    continue
                count_n4 += n == 4
                brute = any(sum(b[i] for i in range(n) if mask >> i & 1) == 0
                            for mask in range(1, 1 << n))
                assert has_zero_subset_sum(b) == brute, b
                if is_distinct_regular(b):
                    lam = find_distinct_kernel_vector(b)
                    assert lam is not None and dot(b, lam) == 0 and len(set(lam)) == n, b
        assert count_n4 == 2400


def test_c2_schur_forcing_numbers():
    with criterion(2, "Schur forcing numbers N=5 (c=2) and N=14 (c=3) with certificates", 60):
        schur = make_equation((1, 1, -1))
        has = lambda col: find_mono_solution(col, schur) is not None
        assert all(has(col) for col in all_colorings(5, 2))
        assert not all(has(col) for col in all_colorings(4, 2))
        r2 = forcing_number(schur, 2, 50)
        assert r2.forcing_n == 5 and verify_certificate(r2)
        r3 = forcing_number(schur, 3, 50)
        assert r3.forcing_n == 14 and r3.avoider.n == 13 and verify_certificate(r3)


def test_c3_van_der_waerden():
    with criterion(3, "vdw_forcing(k=3, c=2) = 9 with verified avoider on [1..8]", 10):
        r = vdw_forcing(3, 2, 100)
        assert r.forcing_n == 9 and r.avoider.n == 8
        assert verify_certificate(r)
        assert find_mono_ap(r.avoider, 3) is None


def test_c4_four_constructively():
    with criterion(4, "four_from_vdw / four_from_ramsey on 500 random 2-colorings of [1..200]", 10):
        rng = random.Random(4)
        hits = {"vdw": 0, "ramsey": 0}
        for _ in range(500):
            col = Coloring.from_list([rng.randrange(2) for _ in range(200)], 2)
            for name, finder in (("vdw", four_from_vdw), ("ramsey", four_from_ramsey)):
                sol = finder(col)
                if sol is None:
                    continue
                hits[name] += 1
                e1, e2, e3, e4 = sol.values
                assert len(set(sol.values)) == 4
                assert len({col(e) for e in sol.values}) == 1
                assert e1 + e2 == e3 + e4
        assert hits["vdw"] > 0 and hits["ramsey"] > 0
        mono = Coloring(9, (0,) * 9, 1)
        assert four_from_vdw(mono).values == (1, 5, 2, 4)
        assert four_from_ramsey(mono).values == (1, 6, 3, 4)


def dense_oracle(gamma: Fraction, vecs):
    """Brute force over every ordered triple: (solutions, monochromatic solutions)."""
    p, q = gamma.numerator, gamma.denominator
    sig = {v: tuple(c for c in v if c) for v in vecs}
    solutions = mono = 0
    for x, y, z in itertools.permutations(vecs, 3):
        if (q * (z[0] - x[0]) == p * (y[0] - x[0]) and q * (z[1] - x[1]) == p * (y[1] - x[1])
                and q * (z[2] - x[2]) == p * (y[2] - x[2])):
            solutions += 1
            mono += sig[x] == sig[y] == sig[z]
    return solutions, mono


def test_c5_ceder_desk_scale():
    with criterion(5, "Ceder coloring: no monochromatic distinct z-x=gamma(y-x), 125 vectors", 120):
        universe = enumerate_universe(2, [-2, -1, 1, 2])
        assert len(universe) == 125
        dense = list(itertools.product([0, -2, -1, 1, 2], repeat=3))
        for gamma in (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3)):
            report = verify_ceder(CederParams(gamma), universe)
            assert report.ordered_triples == 125 * 124 * 123
            assert report.violations == 0 and report.counterexample is None
            assert (report.solutions, 0) == dense_oracle(gamma, dense)


def test_c6_coloring_not_injective():
    with criterion(6, "1000 distinct vectors share the color of signature (1)", 1):
        reg = ColorRegistry()
        vectors = {SparseQVector.basis(i) for i in range(1000)}
        assert len(vectors) == 1000
        assert len({ceder_color_id(w, reg) for w in vectors}) == 1


def test_c7_closure_induction():
    with criterion(7, "closure step, membership of 3, base monotonicity on 100 nested pairs", 10):
        assert closure_step({2}) == {0, 1, 2, 4}
        assert in_closure(3, {2}, 2, 10**6)
        rng = random.Random(7)
        for _ in range(100):
            small = {Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(0, 2))}
            big = small | {Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(2)}
            for l1, l2 in zip(closure_enumerate(small, 2).levels, closure_enumerate(big, 2).levels):
                assert l1 <= l2


def test_c8_solver_oracle_equivalence():
    with criterion(8, "find_mono_solution == naive loop on all 256 2-colorings of [1..8]", 1):
        schur = make_equation((1, 1, -1))
        for colors in itertools.product(range(2), repeat=8):
            col = Coloring(8, colors, 2)
            sol = find_mono_solution(col, schur)
            assert (sol.values if sol else None) == naive_mono_solution(col, (1, 1, -1), False)


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "partreg.cli", *argv],
                          capture_output=True, text=True)


def test_c9_certificate_round_trip(tmp_path):
    with criterion(9, "CLI certificates re-verified by a separate process; mutation rejected", 60):
        jobs = {
            "schur2": ["forcing", "--coeffs", "1,1,-1", "--colors", "2", "--nmax", "20"],
            "schur3": ["forcing", "--coeffs", "1,1,-1", "--colors", "3", "--nmax", "20"],
            "central": ["forcing", "--coeffs", "1,1,-1,-1", "--distinct", "--colors", "2",
                        "--nmax", "30"],
            "vdw32": ["vdw", "--k", "3", "--colors", "2", "--nmax", "20"],
            "vdw42": ["vdw", "--k", "4", "--colors", "2", "--nmax", "40"],
        }
        for name, argv in jobs.items():
            path = tmp_path / f"{name}.json"
            emitted = _cli(*argv, "--out", str(path))
            assert emitted.returncode == 0, emitted.stderr
            assert json.loads(path.read_text()) == {
                k: v for k, v in json.loads(emitted.stdout).items() if k != "nodes"}
            check = _cli("verify", "--cert", str(path))
            assert check.returncode == 0, (name, check.stdout, check.stderr)

            cert = json.loads(path.read_text())
            colors = cert["avoider"]["colors"]
            for i in range(len(colors)):
                mutated = dict(cert, avoider=dict(cert["avoider"], colors=list(colors)))
                mutated["avoider"]["colors"][i] = (colors[i] + 1) % cert["num_colors"]
                if not verify_certificate(mutated):
                    break
            else:
                pytest.fail(f"no single flip breaks the {name} avoider")
            bad = tmp_path / f"{name}.mutated.json"
            bad.write_text(json.dumps(mutated))
            rejected = _cli("verify", "--cert", str(bad))
            assert rejected.returncode == 1, (name, rejected.stdout, rejected.stderr)
