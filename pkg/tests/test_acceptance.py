"""Acceptance gate: the ten headline checks, one pass/fail line each.

Run with -s (or read the -v test names) to see the per-criterion lines.
Shared fixtures build the instance corpus once; individual criteria assert
on slices of it.
"""
import sys
import time

import pytest

from conftest import fig1_complex, fig1_z2, fig2_dposet, fig3_dposet

from eqflag.complexes import GroupAction, color_automorphism_group
from eqflag.corpus import (m_three_graph, m_two_graph, random_complexes,
                           random_graphs, small_mixed_graphs,
                           tertispecial_double_posets)
from eqflag.doubleposet import (omega_qsym, to_mixed_graph,
                                verify_doubleposet_theorems)
from eqflag.flags import h_st, hilb, verify_eulerchar2, verify_intro1, \
    verify_intro2, verify_intro3
from eqflag.groups import (character_table, close_group, decompose,
                           inner_product, is_effective)
from eqflag.homology import hopf_trace_check
from eqflag.mixedgraph import (chromatic_qsym, coloring_complex,
                               verify_graphtocomplex, verify_mixedgraph_theorem)
from eqflag.qsym import m_to_f, principal_specialization, subsets
from eqflag.serre import serre_depth, verify_restriction_theorem

CORPUS_SIZE = 200
RANDOM_GRAPHS = 50
DPOSET_COUNT = 500


def announce(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d}: {status} - {detail}", file=sys.stderr)
    assert ok, f"criterion {num}: {detail}"


@pytest.fixture(scope="module")
def small_graphs():
    return small_mixed_graphs(max_n=4)


@pytest.fixture(scope="module")
def corpus(small_graphs):
    cxs = list(random_complexes(CORPUS_SIZE, seed=0))
    for g in small_graphs:
        cxs.append(coloring_complex(g)[0])
    return cxs


@pytest.fixture(scope="module")
def prepared(corpus):
    out = []
    for cx in corpus:
        grp = color_automorphism_group(cx)
        action = GroupAction(cx, grp)
        table = character_table(grp)
        out.append((cx, action, table, serre_depth(cx)))
    return out


def test_criterion_01_figure_example(fig1, fig1_action, fig1_table):
    t0 = time.time()
    q = hilb(fig1, fig1_action, basis="M")
    mults = {s: decompose(cf, fig1_table) for s, cf in q.coeffs.items()}
    elapsed = time.time() - t0
    ok = (mults == {(2,): [1, 0], (1, 2): [1, 1], (2, 3): [1, 1],
                    (1, 2, 3): [2, 2]}
          and elapsed < 1.0)
    announce(1, ok, f"cone example M-expansion with triv/sgn decomposition "
                    f"({elapsed:.2f}s)")


def test_criterion_02_double_poset_examples():
    t0 = time.time()
    results = []
    for build, m_expect, f_expect in (
        (fig2_dposet,
         {(2,): (1, 1), (1, 2): (2, 0), (1, 3): (2, 0), (2, 3): (2, 0),
          (1, 2, 3): (4, 0)},
         {(2,): (1, 1), (1, 2): (1, -1), (2, 3): (1, -1), (1, 3): (2, 0),
          (1, 2, 3): (-1, 1)}),
        (fig3_dposet,
         {(1,): (1, 1), (1, 3): (1, 1), (1, 2): (2, 0), (1, 2, 3): (2, 0)},
         {(1,): (1, 1), (1, 2): (1, -1)}),
    ):
        dp = build()
        q = omega_qsym(dp, dp.automorphism_group())
        got_m = {s: tuple(c.values) for s, c in q.coeffs.items() if not c.is_zero()}
        f = m_to_f(q)
        got_f = {s: tuple(c.values) for s, c in f.coeffs.items() if not c.is_zero()}
        results.append(got_m == m_expect and got_f == f_expect)
    elapsed = time.time() - t0
    announce(2, all(results) and elapsed < 2.0,
             f"double poset M/F expansions incl. the negative sign term "
             f"({elapsed:.2f}s)")


def test_criterion_03_graph_complex_identity(small_graphs):
    t0 = time.time()
    bad = [g for g in small_graphs if not verify_graphtocomplex(g)["ok"]]
    elapsed = time.time() - t0
    announce(3, not bad and elapsed < 300,
             f"coloring function = flag function for {len(small_graphs)} "
             f"exhaustive graphs on <= 4 vertices ({elapsed:.1f}s)")


def test_criterion_04_restriction_theorem(prepared):
    t0 = time.time()
    bad = []
    for cx, action, table, depth in prepared:
        if depth == 0:
            continue
        r = verify_restriction_theorem(cx, depth)
        if r["counterexamples"]:
            bad.append((cx, r))
    elapsed = time.time() - t0
    announce(4, not bad and elapsed < 600,
             f"depth survives every color restriction on {len(prepared)} "
             f"complexes ({elapsed:.1f}s)")


def test_criterion_05_euler_and_hopf(prepared):
    t0 = time.time()
    bad = []
    for cx, action, table, depth in prepared:
        if not verify_eulerchar2(cx, action)["ok"]:
            bad.append((cx, "euler"))
        ok, _ = hopf_trace_check(cx.faces, action.group)
        if not ok:
            bad.append((cx, "hopf"))
    elapsed = time.time() - t0
    announce(5, not bad,
             f"F-coefficients match homology characters and chain traces "
             f"match homology traces on all instances ({elapsed:.1f}s)")


def test_criterion_06_three_way_identity(prepared):
    t0 = time.time()
    checked = 0
    for cx, action, table, depth in prepared:
        for t in subsets(range(1, cx.d + 1)):
            for s in subsets(t):
                h_st(cx, action, frozenset(s), frozenset(t))  # raises on mismatch
                checked += 1
    elapsed = time.time() - t0
    announce(6, True,
             f"h refinement equal three ways on {checked} (S,T) pairs "
             f"({elapsed:.1f}s)")


def test_criterion_07_inequality_theorems(prepared):
    t0 = time.time()
    bad = []
    for cx, action, table, depth in prepared:
        if depth == 0:
            continue
        if not verify_intro1(cx, action, depth, table)["ok"]:
            bad.append((cx, "effectiveness"))
        if not verify_intro2(cx, action, depth, table)["ok"]:
            bad.append((cx, "h-inequalities"))
        r3 = verify_intro3(cx, action, depth, table)
        if not (r3.get("skipped") or r3["ok"]):
            bad.append((cx, "f-inequalities"))
    elapsed = time.time() - t0
    announce(7, not bad,
             f"effectiveness and flawlessness inequalities, zero "
             f"counterexamples ({elapsed:.1f}s)")


def test_criterion_08_depth_bound(small_graphs):
    t0 = time.time()
    graphs = list(small_graphs) + random_graphs(RANDOM_GRAPHS, seed=1)
    graphs += [m_two_graph(), m_three_graph()]
    spectrum = {}
    bad = []
    m_values = set()
    for g in graphs:
        st = g.stats()
        if not st["acyclic"] or st["near_cycles"]:
            continue
        cx, _ = coloring_complex(g)
        target = min(st["m"], cx.d)
        depth = serre_depth(cx, max_ell=target)
        m_values.add(st["m"])
        spectrum[(st["m"], depth)] = spectrum.get((st["m"], depth), 0) + 1
        if depth < target:
            bad.append((g, st["m"], depth))
    elapsed = time.time() - t0
    pairs = ", ".join(f"m={m}:depth>={d} x{c}"
                      for (m, d), c in sorted(spectrum.items()))
    announce(8, not bad and {2, 3} <= m_values,
             f"depth >= cycle bound on {len(graphs)} graphs "
             f"[{pairs}] ({elapsed:.1f}s)")


def test_criterion_09_tertispecial():
    t0 = time.time()
    sample = tertispecial_double_posets(DPOSET_COUNT, seed=0)
    bad = []
    for dp in sample:
        r = verify_doubleposet_theorems(dp)
        g_stats = to_mixed_graph(dp).stats()
        if not (r["ok"] and g_stats["acyclic"]
                and not g_stats["coherent_mixed_cycles"]):
            bad.append(dp)
    fig2 = fig2_dposet()
    f = m_to_f(omega_qsym(fig2, fig2.automorphism_group()))
    fig2_ok = (not fig2.is_tertispecial()
               and any(not is_effective(cf)[0] for cf in f.coeffs.values()))
    elapsed = time.time() - t0
    announce(9, len(sample) >= DPOSET_COUNT and not bad and fig2_ok,
             f"{len(sample)} tertispecial double posets all effective and "
             f"cycle-free; the non-tertispecial example has a negative "
             f"coefficient ({elapsed:.1f}s)")


def test_criterion_10_numerics(prepared, fig1_table):
    t0 = time.time()
    tables = [fig1_table] + [table for _, _, table, _ in prepared[:40]]
    for dp in (fig2_dposet(), fig3_dposet()):
        tables.append(character_table(dp.automorphism_group()))
    residual = 0.0
    for table in tables:
        for i, chi in enumerate(table.irreducibles):
            for j, psi in enumerate(table.irreducibles):
                ip = complex(inner_product(chi, psi))
                residual = max(residual, abs(ip - (1 if i == j else 0)))

    counts_ok = True
    for g in (m_two_graph(), m_three_graph()):
        grp = g.automorphism_group()
        p = principal_specialization(chromatic_qsym(g, grp))
        for k in range(1, g.n + 3):
            vals = p.evaluate(k)
            for rep in grp.class_reps:
                if vals.value_at(rep) != g.count_weak_colorings(k, rep):
                    counts_ok = False
    for dp in (fig2_dposet(), fig3_dposet()):
        grp = dp.automorphism_group()
        p = principal_specialization(omega_qsym(dp, grp))
        for k in range(1, dp.n + 3):
            vals = p.evaluate(k)
            for rep in grp.class_reps:
                if vals.value_at(rep) != len(dp.d_partitions(k, rep)):
                    counts_ok = False
    elapsed = time.time() - t0
    announce(10, residual < 1e-8 and counts_ok,
             f"orthogonality residual {residual:.1e} over {len(tables)} tables; "
             f"specializations match brute-force counts per class "
             f"({elapsed:.1f}s)")
