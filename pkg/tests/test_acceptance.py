"""One test per acceptance criterion.  Each records a PASS/FAIL line that the
terminal summary prints (see conftest.py), then asserts."""

import time

import numpy as np
import pytest

from mealygroup import AutomatonGroup, build_automaton
from mealygroup import fixtures as fx
from mealygroup.schreier import SIMPLICIAL, build_schreier, is_connected
from mealygroup.spectral import (
    block_eigenvalues,
    build_operator,
    eigen_decompose,
    kesten_bound_check,
    schur_block_probe,
    spectral_convergence,
)
from mealygroup.structure import activity_class, check_fractal, compute_nucleus, verify_contraction

from conftest import ACCEPTANCE_LINES
from oracles import charpoly_eigenvalues


def record(num, desc, ok, detail=""):
    ACCEPTANCE_LINES.append((num, desc, bool(ok), detail))
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc} ({detail})")
    assert ok, detail


@pytest.fixture(scope="module")
def ctx(pi):
    return fx.FixtureContext(pi)


def test_criterion_01_nucleus():
    g = AutomatonGroup(build_automaton("paper-Pi"))
    t0 = time.perf_counter()
    n = compute_nucleus(g)
    elapsed = time.perf_counter() - t0
    rep = fx.nucleus_fixture(fx.FixtureContext(g))
    ok = len(n) == 67 and rep.holds and elapsed < 300
    record(1, "nucleus has 67 elements and contains the listed U and its inverses", ok,
           f"size={len(n)}, missing={len(rep.counterexamples)}, {elapsed:.2f}s")


def test_criterion_02_contraction_depth_7(pi, ctx):
    contraction = verify_contraction(pi, ctx.nucleus, 7, ctx.table)
    appendix = fx.appendix_fixture(ctx, sample=10, seed=2024)
    closure = fx.closure_fixture(ctx)
    ok = contraction.holds and appendix.holds and closure.holds
    record(2, "contraction at depth 7, 10 random appendix rows, sections of ab", ok,
           f"contracting={contraction.verdict}, appendix failures={len(appendix.counterexamples)}, "
           f"ab at depth 7 matches={closure.holds}, depth<=7 closure has {len(closure.parameters['depth_le_7'])} elements")


def test_criterion_03_fractal_and_connected(pi):
    t0 = time.perf_counter()
    fractal = check_fractal(pi, search_radius=3)
    connected = [n for n in range(1, 13) if is_connected(build_schreier(pi, n, SIMPLICIAL))]
    elapsed = time.perf_counter() - t0
    ok = fractal.holds and connected == list(range(1, 13)) and elapsed < 120
    record(3, "fractal with radius <= 3 and connected simplicial graphs for levels 1..12", ok,
           f"fractal={fractal.verdict}, connected levels={len(connected)}/12, {elapsed:.2f}s")


def test_criterion_04_open_set(ctx):
    rep = fx.open_set_fixture(ctx)
    ok = rep.holds and len(rep.witnesses) == 67
    record(4, "every nucleus element has a trivial section at depth <= 4", ok,
           f"witnesses={len(rep.witnesses)}, failures={len(rep.counterexamples)}")


def test_criterion_05_activity(ctx):
    rep = fx.activity_fixture(ctx)
    adding = activity_class(build_automaton("adding-machine"))
    ok = rep.holds and adding.kind == "bounded"
    record(5, "exponential activity via two intersecting cycles; adding machine bounded", ok,
           f"{rep.parameters['activity']}, adding-machine={adding.kind}")


def test_criterion_06_weak_branch(ctx):
    rep = fx.weak_branch_fixture(ctx, k_max=3)
    ok = rep.holds and len(rep.witnesses) == 3
    record(6, "weak-branch witnesses [a, c^(-2^k)] for k = 1, 2, 3", ok,
           f"verified k={[w['k'] for w in rep.witnesses]}")


def test_criterion_07_stabilizers(ctx):
    laws = fx.stabilizer_law_fixture(ctx, n_max=3)
    stab = fx.stabilizer_list_fixture(ctx)
    rigid = fx.rigid_list_fixture(ctx)
    ok = laws.holds and stab.holds and rigid.holds
    record(7, "stabilizer power laws and listed level/rigid stabilizer generators", ok,
           f"laws {len(laws.witnesses)}/12, stabilizer elements {stab.parameters['checked'] - len(stab.counterexamples)}/{stab.parameters['checked']}, "
           f"rigid elements {rigid.parameters['checked'] - len(rigid.counterexamples)}/{rigid.parameters['checked']}")


def test_criterion_08_relations(ctx):
    t0 = time.perf_counter()
    listed = fx.relator_fixture(ctx)
    found = fx.enumeration_fixture(ctx, max_length=8)
    elapsed = time.perf_counter() - t0
    ok = listed.holds and found.holds and elapsed < 1800
    bad = ", ".join(c["relator"] for c in listed.counterexamples)
    record(8, "listed relators are trivial; length-8 search finds [d,d^a] and nothing of length <= 3", ok,
           f"nontrivial listed: {bad or 'none'} ({len(listed.counterexamples)}/{listed.parameters['expanded']}); "
           f"search found {found.witnesses}; {elapsed:.2f}s")


def test_criterion_09_portrait_table(ctx):
    rep = fx.portrait_fixture(ctx)
    bad = [f"{c['element']}@{c['level']}" for c in rep.counterexamples]
    record(9, "every portrait-table row reproduces", rep.holds,
           f"{len(rep.witnesses)}/{rep.parameters['rows']} rows match; mismatching: {', '.join(bad) or 'none'}")


def test_criterion_10_spectra(pi):
    problems = []
    worst = 0.0
    timing = {}
    for n in range(1, 13):
        lap = build_operator(pi, "laplacian", n)
        t0 = time.perf_counter()
        res = eigen_decompose(lap, select="none", residuals=True)
        timing[n] = time.perf_counter() - t0
        worst = max(worst, res.max_residual / res.norm)
        w = res.eigenvalues
        trace = np.trace(lap.matrix)
        if abs(w.sum() - trace) > 1e-6 * abs(trace):
            problems.append(f"trace at level {n}")
        if not (abs(w[0]) < 1e-9 and w[1] > 1e-9):
            problems.append(f"laplacian kernel at level {n}")
        mk = build_operator(pi, "markov", n)
        if n <= 11:
            m = eigen_decompose(mk, select=("largest", 1))
            top = m.eigenvectors[:, 0]
            const_vec = np.allclose(np.abs(top), 1 / np.sqrt(2**n), atol=1e-10)
        else:
            # the full level-12 eigenbasis was already checked above; here the
            # constant vector is checked directly against M
            m = eigen_decompose(mk, select="none", residuals=False)
            const_vec = np.allclose(mk.matrix @ np.ones(2**n), np.ones(2**n), atol=1e-12)
        mw = m.eigenvalues
        if mw[0] < -1 - 1e-12 or mw[-1] > 1 + 1e-12 or abs(mw[-1] - 1) > 1e-12 or mw[-2] > 1 - 1e-9 or not const_vec:
            problems.append(f"markov spectrum at level {n}")
        if abs(np.trace(mk.matrix) - mw.sum()) > 1e-6 * max(1.0, abs(np.trace(mk.matrix))):
            problems.append(f"markov trace at level {n}")
    ok = not problems and worst <= 1e-8 and timing[12] < 1800
    record(10, "level 1..12 Laplacian/Markov spectra: residuals, trace, ranges, kernels", ok,
           f"max residual/||A||={worst:.2e}, level-12 time {timing[12]:.1f}s, problems={problems or 'none'}")


def test_criterion_11_covering_containment(pi):
    rep = spectral_convergence(pi, "markov", 1, 7, tolerance=1e-6)
    gaps = max(rep.gaps.values())
    record(11, "spec(M_n) inside spec(M_n+1) within 1e-6 for n = 1..6", rep.holds and len(rep.gaps) == 6,
           f"max one-sided gap={gaps:.2e}, violations={len(rep.violations)}")


def test_criterion_12_oracle_equivalence(pi):
    worst = 0.0
    for n in range(1, 4):
        for kind, scale in (("markov", 8), ("laplacian", 1), ("laplacian-simplicial", 1), ("adjacency-simplicial", 1)):
            op = build_operator(pi, kind, n)
            got = eigen_decompose(op).eigenvalues
            exact = charpoly_eigenvalues(np.rint(op.matrix * scale), scale)
            worst = max(worst, float(np.max(np.abs(got - exact))))
    level1 = eigen_decompose(build_operator(pi, "laplacian", 1)).eigenvalues
    err1 = float(np.max(np.abs(level1 - [0.0, 4.0])))
    ok = worst <= 1e-8 and err1 <= 1e-12
    record(12, "eigenvalues match the characteristic-polynomial oracle for n <= 3; level 1 is {0, 4}", ok,
           f"max deviation={worst:.2e}, level-1 error={err1:.2e}")


def test_criterion_13_kesten(pi):
    rep = kesten_bound_check(pi, 10)
    expected = 2 * np.sqrt(7) / 8
    ok = abs(rep.bound - expected) <= 1e-6 and len(rep.second_eigenvalue) == 10 and rep.levels == tuple(range(1, 11))
    seq = ", ".join(f"{x:.6f}" for x in rep.second_eigenvalue)
    record(13, "Kesten bound 2 sqrt(7)/8 and second eigenvalues for n = 1..10", ok,
           f"bound={rep.bound:.10f}, second eigenvalues=[{seq}], below bound at n={list(rep.second_below_bound)}")


def test_criterion_14_schur_probe(pi):
    notes = []
    ok = True
    rng = np.random.default_rng(7)
    for n in range(2, 5):
        upper, lower = block_eigenvalues(pi, n)
        blocks = np.concatenate([upper, lower])
        gammas = [x for x in blocks if -1 <= x <= 1]
        singular = [x for x in gammas[:6] if (lambda r: r.upper_singular or r.lower_singular)(schur_block_probe(pi, n, float(x), include_blocks=False))]
        verified = 0
        tried = 0
        while verified < 10 and tried < 100:
            tried += 1
            gamma = float(rng.uniform(-1, 1))
            rep = schur_block_probe(pi, n, gamma, include_blocks=False)
            if rep.matrix_singular or rep.upper_singular or rep.lower_singular:
                continue
            if rep.verified:
                verified += 1
        ok = ok and bool(singular) and verified == 10
        notes.append(f"n={n}: singular-block gammas found={len(singular)}, verified factorizations={verified}")
    record(14, "Schur probe finds singular diagonal blocks and verifies det factorization at 10 gammas", ok, "; ".join(notes))
