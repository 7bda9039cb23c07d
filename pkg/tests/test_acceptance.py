"""The ten acceptance criteria, at their stated tolerances and time budgets."""
import math
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from skewbrace import braces as fb
from skewbrace import lie, postlie, presets
from skewbrace.enumeration import enumerate_braces
from skewbrace.errors import VerificationError
from skewbrace.grouplaw import (check_brace_numeric, extract_bracket, extract_triangle,
                                lambda_numeric, rationalize)
from skewbrace.groups import automorphisms, small_groups
from skewbrace.lie import LieAlgebraSC, sl2
from skewbrace.linalg import RationalSubspace, zero_tensor
from skewbrace.oracle import count_braces, group_tables
from skewbrace.postlie import PostLieAlgebra, check_postlie

ROOT = Path(__file__).resolve().parent.parent
F = Fraction


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "skewbrace", *args], capture_output=True, cwd=ROOT)
    return proc.returncode, proc.stdout


def span(*vectors):
    return RationalSubspace(3, [tuple(F(x) for x in v) for v in vectors])


A1_1_TRIANGLE = {(0, 1): (0, 1, 0), (0, 2): (0, 0, -1), (1, 2): (1, 0, 0), (2, 1): (1, 0, 0)}


def exact_tensor(entries, n=3):
    t = zero_tensor(n)
    for (i, j), v in entries.items():
        t[i][j] = [F(x) for x in v]
    return t


@pytest.mark.criterion(1, "A1-1 brace identity residual < 1e-8 over 1000 seeded triples, < 5 s")
def test_c1_a1_1_lsb_check():
    t0 = time.perf_counter()
    code, out = run_cli("lsb-check", "presets:a1_1_model", "--samples", "1000", "--tol", "1e-8", "--seed", "42")
    elapsed = time.perf_counter() - t0
    assert code == 0, out
    line = next(x for x in out.decode().splitlines() if x.startswith("max brace residual:"))
    assert float(line.split(":")[1]) < 1e-8
    assert elapsed < 5
    bl = presets.get("a1_1_model")
    assert check_brace_numeric(bl.dot, bl.circ, 1000, 1e-8, 42).residual < 1e-8


@pytest.mark.criterion(2, "A1-1 lambda at (1,0,0) equals diag(1, e, 1/e) within 1e-9")
def test_c2_a1_1_lambda_matrix():
    bl = presets.get("a1_1_model")
    m, _ = lambda_numeric(bl.dot, bl.circ, [1.0, 0.0, 0.0])
    np.testing.assert_allclose(m, np.diag([1.0, math.e, 1 / math.e]), rtol=0, atol=1e-9)


@pytest.mark.criterion(3, "A1-1 extracted brackets and triangle rationalize exactly and pass the post-Lie axioms")
def test_c3_a1_1_extraction():
    bl = presets.get("a1_1_model")
    circ = rationalize(extract_bracket(bl.circ), 64, 1e-6)
    expected = LieAlgebraSC.from_brackets(3, {(0, 1): (0, 1, 0), (0, 2): (0, 0, -1)})
    assert LieAlgebraSC(circ) == expected
    tri = rationalize(extract_triangle(bl.dot, bl.circ), 64, 1e-6)
    assert tri == exact_tensor(A1_1_TRIANGLE)
    dot = LieAlgebraSC(rationalize(extract_bracket(bl.dot), 64, 1e-6))
    assert dot.is_abelian()
    P = PostLieAlgebra(dot, tri)
    check_postlie(P)
    assert P.circ == expected


@pytest.mark.criterion(4, "A1-1 ideal lattice, triangle exclusion, brace simplicity and solvability")
def test_c4_a1_1_simplicity():
    P = postlie.a1_1_postlie()
    res = lie.all_ideals_lowdim(P.circ)
    assert not res.continuous
    expected = {span(), span((0, 1, 0)), span((0, 0, 1)), span((0, 1, 0), (0, 0, 1)),
                RationalSubspace.full(3)}
    assert set(res.subspaces) == expected and len(res.subspaces) == 5
    for s in res.proper_nonzero():
        r = postlie.brace_ideal_test(P, s)
        assert r.dot_ideal and r.circ_ideal and not r.triangle_stable
    assert postlie.is_simple_brace_infinitesimal(P)
    assert lie.is_solvable(P.dot) and lie.is_solvable(P.circ)
    series, solvable = postlie.brace_derived_series_infinitesimal(P)
    assert series[0].is_full() and series[-1].is_full() and not solvable
    # the first derived term is the closure of all products of L, which is L again
    gens = [f(u, v) for u in P.dot.basis() for v in P.dot.basis()
            for f in (P.dot.bracket, P.circ.bracket, P.act)]
    assert RationalSubspace(3, gens).is_full()


def _random_tensor(rng, n=3):
    num = rng.integers(-5, 6, size=(n, n, n))
    den = rng.integers(1, 5, size=(n, n, n))
    return [[[F(int(num[i, j, k]), int(den[i, j, k])) for k in range(n)] for j in range(n)] for i in range(n)]


@pytest.mark.criterion(5, "sl2 rigidity: case (i), case (ii), 10000 random triangle tensors fail the axioms")
def test_c5_rigidity():
    L = sl2()
    assert postlie.rigidity_classify(postlie.trivial_postlie(L)).case == "i"
    r = postlie.rigidity_classify(postlie.opposite_postlie(L))
    assert r.case == "ii" and r.detail == "case (ii): ▷ = −[·,·], circ = −dot"
    zero = zero_tensor(3)
    minus = [[[-x for x in c] for c in row] for row in L.c]
    rng = np.random.default_rng(42)
    checked = passed = 0
    while checked < 10_000:
        t = _random_tensor(rng)
        if t == zero or t == minus:
            continue
        checked += 1
        try:
            check_postlie(PostLieAlgebra(L, t))
            passed += 1
        except VerificationError:
            pass
    assert passed == 0


# frozen from the brute-force oracle
ORACLE_COUNTS = {"C1": 1, "C2": 1, "C3": 1, "C4": 2, "C2xC2": 4, "C5": 1, "C6": 2, "S3": 8}


@pytest.mark.criterion(6, "enumeration matches the brute-force oracle for all additive groups of order <= 6, < 60 s")
def test_c6_oracle_equivalence():
    t0 = time.perf_counter()
    seen = {}
    for n in range(1, 7):
        tables = group_tables(n)
        for g in small_groups(n):
            got = len(enumerate_braces(g))
            assert got == count_braces(g.rows, tables), g.name
            seen[g.name] = got
    assert seen == ORACLE_COUNTS
    assert time.perf_counter() - t0 < 60


def _braces_up_to(n):
    for k in range(1, n + 1):
        for g in small_groups(k):
            yield from enumerate_braces(g)


@pytest.mark.criterion(7, "finite laws over all braces of order <= 8 hold with zero violations")
def test_c7_finite_laws():
    violations = []
    count = 0
    for b in _braces_up_to(8):
        count += 1
        auts = automorphisms(b.dot)
        for h in b.dot.characteristic_subgroups(auts):
            r = fb.criterion_checks(b, h, auts)
            if r.fund_lemma_lhs != r.fund_lemma_rhs:
                violations.append(("fund lemma", b, h))
        for ideal in fb.all_ideals(b):
            q, _ = fb.quotient(b, ideal)
            if not fb.is_brace(q.dot, q.circ):
                violations.append(("quotient", b, ideal))
        if fb.is_solvable(b) and not (b.dot.is_solvable() and b.circ.is_solvable()):
            violations.append(("solvable", b))
        if not fb.lambda_is_homomorphism(b):
            violations.append(("lambda", b))
    assert count == 20 + 1 + 314
    assert violations == []


@pytest.mark.criterion(8, "C3 x C2^3 has a simple brace with multiplicative group S4, class neither, < 10 min")
def test_c8_simple_order24():
    t0 = time.perf_counter()
    code, out = run_cli("enumerate", "--additive", "presets:c3xc2cubed", "--report-simple")
    assert code == 0
    text = out.decode()
    rows = dict(line.split(": ", 1) for line in text.splitlines())
    k = int(rows["simple classes"])
    assert k >= 1
    assert any(rows[f"simple {i} multiplicative"] == "S4" and rows[f"simple {i} triviality"] == "neither"
               for i in range(1, k + 1))
    assert time.perf_counter() - t0 < 600


@pytest.mark.criterion(9, "2D affine model: residual < 1e-8 and circ bracket is [e2,e1] = e1")
def test_c9_affine2d():
    bl = presets.get("affine2d")
    assert check_brace_numeric(bl.dot, bl.circ).residual < 1e-8
    c = LieAlgebraSC(rationalize(extract_bracket(bl.circ), 64, 1e-6))
    assert c == LieAlgebraSC.from_brackets(2, {(1, 0): (1, 0)})
    assert lie.is_solvable(c) and not c.is_abelian()


DETERMINISM_RUNS = [
    ("lsb-check", "presets:a1_1_model"),
    ("extract", "presets:a1_1_model"),
    ("ideals", "presets:a1_1"),
    ("derived", "presets:a1_1"),
    ("rigidity", "presets:sl2_case1"),
    ("rigidity", "presets:sl2_case2"),
    ("check-brace", "data/s3_opposite.brace"),
    ("enumerate", "--additive", "presets:s3"),
    ("enumerate", "--additive", "presets:c2xc2xc2", "--report-simple"),
    ("lsb-check", "presets:affine2d"),
    ("extract", "presets:affine2d"),
]


@pytest.mark.criterion(10, "repeated runs with the same seed give byte-identical reports")
def test_c10_determinism():
    for args in DETERMINISM_RUNS:
        first = run_cli(*args)
        second = run_cli(*args)
        assert first[0] == 0, args
        assert first == second, args
    bl = presets.get("a1_1_model")
    a = check_brace_numeric(bl.dot, bl.circ, 500, 1e-8, 7)
    b = check_brace_numeric(bl.dot, bl.circ, 500, 1e-8, 7)
    assert a == b
