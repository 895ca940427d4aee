"""Acceptance suite: one test per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion.  Criterion 9 is expected to fail on its final clause: the
hom/injective bound 1 + 10/n is not attainable for this pattern/host
combination (the measured constant is about 21; see the test output).
"""

import itertools
import math
import random
from fractions import Fraction

import numpy as np

from copymax.classify import classify_type, search_counterexamples
from copymax.density import (
    asymptotic_exponent,
    clique_density,
    crossover_beta,
    star_density,
    t_density,
)
from copymax.graphs import (
    are_isomorphic,
    automorphism_count,
    complete_graph,
    cycle_graph,
    enumerate_connected_graphs,
    graph_from_edge_mask,
    independent_set_census,
    parse_graph6,
    path_graph,
    star_graph,
    write_graph6,
)
from copymax.hosts import (
    build_host,
    convergence_report,
    copies_count,
    injective_count,
    injective_count_from_spectrum,
)
from copymax.lp import duality_check
from copymax.weightings import fractional_independence_number, spectrum
from oracles import g6_interior_polynomial

Q_HALF = 1.0 / math.sqrt(2.0)


def _report(num, ok, detail):
    print(f"\ncriterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num:02d} failed: {detail}"


def test_criterion_01_g6_invariants(g6, g6_spec):
    alpha = independent_set_census(g6).alpha
    a = independent_set_census(g6).max_sets
    aut = automorphism_count(g6)
    ok = (alpha == 3 and g6_spec.alpha_star == Fraction(7, 2) and a == 3 and aut == 4)
    _report(1, ok, f"alpha={alpha} alpha*={g6_spec.alpha_star} A={a} |Aut|={aut}")


def test_criterion_02_spectrum_slice(g6_spec):
    got = g6_spec.y_zero_slice()
    want = {(6, 0, 0): 1, (5, 0, 1): 6, (4, 0, 2): 9, (3, 0, 3): 3}
    _report(2, got == want, f"y=0 slice {got}")


def test_criterion_03_interior_polynomial(g6_spec):
    worst = 0.0
    for beta in (0.005, 0.01, 0.016):
        ours = t_density(g6_spec, beta, Q_HALF)
        ref = g6_interior_polynomial(beta)
        worst = max(worst, abs(ours - ref) / ref)
    _report(3, worst <= 1e-12, f"max relative deviation {worst:.2e} (tol 1e-12)")


def test_criterion_04_crossover(g6_spec):
    root = crossover_beta(g6_spec, 1.0, Q_HALF, (0.01, 0.03), tol=1e-9)
    err = abs(root - 0.01613474)
    _report(4, err <= 1e-6, f"crossover {root:.9f}, |err| = {err:.2e} (tol 1e-6)")


def test_criterion_05_strict_ordering(g6_spec):
    margins = []
    for beta in (0.001, 0.004, 0.008, 0.012, 0.015):
        t_interior = t_density(g6_spec, beta, Q_HALF)
        t_clique = clique_density(g6_spec, beta)
        t_star = star_density(g6_spec, beta)
        margins.append(math.log(t_interior) - math.log(t_clique))
        margins.append(math.log(t_clique) - math.log(t_star))
    ok = all(m > 1e-15 for m in margins)
    _report(5, ok, f"min log-space margin {min(margins):.3e} (> 1e-15)")


def test_criterion_06_known_flips():
    p2_root = crossover_beta(spectrum(path_graph(2)), 0.0, 1.0, (0.3, 0.7), tol=1e-12)
    p4_root = crossover_beta(spectrum(path_graph(4)), 0.0, 1.0, (0.05, 0.12), tol=1e-9)
    ok = abs(p2_root - 0.5) <= 1e-9 and abs(p4_root - 0.0865) <= 5e-4
    _report(6, ok, f"P2 flip {p2_root:.12f} (tol 1e-9), P4 flip {p4_root:.6f} (tol 5e-4)")


def test_criterion_07_vanishing_beta(g6_spec):
    slopes = {q: asymptotic_exponent(g6_spec, q, 1e-6, 1e-4)
              for q in (1.0, Q_HALF, 0.0)}
    slope_ok = (abs(slopes[1.0] - 3.0) <= 0.05
                and abs(slopes[Q_HALF] - 2.5) <= 0.05
                and abs(slopes[0.0] - 3.0) <= 0.05)
    beta = 1e-6
    ratio_k = clique_density(g6_spec, beta) / beta ** 3
    ratio_t = t_density(g6_spec, beta, Q_HALF) / beta ** 2.5
    ratio_s = star_density(g6_spec, beta) / beta ** 3
    c1 = 1.0 / (8.0 * math.sqrt(2.0))
    ratio_ok = (abs(ratio_k - 1.0) <= 1e-6
                and abs(ratio_t - c1) <= 1e-3
                and abs(ratio_s - 0.375) <= 1e-3)
    _report(7, slope_ok and ratio_ok,
            f"slopes q=1:{slopes[1.0]:.4f} q=1/sqrt2:{slopes[Q_HALF]:.4f} "
            f"q=0:{slopes[0.0]:.4f}; ratios K:{ratio_k:.6f} T:{ratio_t:.6f} "
            f"(C1={c1:.6f}) S:{ratio_s:.6f} (C2=0.375)")


def test_criterion_08_oracle_identity(g6):
    patterns = [complete_graph(2), path_graph(2), complete_graph(3), path_graph(4), g6]
    settings = [(0.1, 0.0, 30), (0.2, Q_HALF, 30), (0.5, 1.0, 30), (0.2, Q_HALF, 60)]
    pairs = 0
    for pat in patterns:
        spec = spectrum(pat)
        for beta, q, n in settings:
            host = build_host(n, beta, q)
            if injective_count(pat, host) != injective_count_from_spectrum(spec, host):
                _report(8, False, f"mismatch for pattern v={pat.n} at {(beta, q, n)}")
            pairs += 1
    c7 = copies_count(path_graph(4), cycle_graph(7))
    k5 = copies_count(path_graph(4), complete_graph(5))
    ok = pairs >= 20 and c7 == 7 and k5 == 60
    _report(8, ok, f"{pairs} exact (pattern, host) identities; "
                   f"copies(P4,C7)={c7}, copies(P4,K5)={k5}")


def test_criterion_09_convergence(g6):
    result = convergence_report(g6, 0.2, Q_HALF, [30, 60, 120])
    gaps = [r.gap for r in result.reports]
    decreasing = gaps[0] > gaps[1] > gaps[2]
    c_fit = max(r.n * r.gap for r in result.reports)
    bounded = all(r.gap <= c_fit / r.n * (1 + 1e-12) for r in result.reports)
    ratios = [r.hom / r.injective for r in result.reports]
    bounds = [1.0 + 10.0 / r.n for r in result.reports]
    ratio_ok = all(r <= b for r, b in zip(ratios, bounds))
    ok = decreasing and bounded and ratio_ok
    _report(9, ok,
            f"gaps={[f'{g:.3e}' for g in gaps]} decreasing={decreasing}, "
            f"fitted C={c_fit:.4f} bound ok={bounded}; hom/inj="
            f"{[f'{r:.4f}' for r in ratios]} vs 1+10/n="
            f"{[f'{b:.4f}' for b in bounds]} -> {ratio_ok} "
            f"(measured constant (ratio-1)*n = "
            f"{[f'{(r - 1) * rep.n:.1f}' for r, rep in zip(ratios, result.reports)]})")


def test_criterion_10_lp_duality():
    eps_values = (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2))
    graphs = list(enumerate_connected_graphs(6))
    for g in graphs:
        for eps in eps_values:
            rep = duality_check(g, eps)
            want = g.n - eps * (g.n - fractional_independence_number(g))
            if not (rep.primal == rep.dual == rep.formula == want):
                _report(10, False, f"mismatch on {write_graph6(g)} at eps={eps}")
    _report(10, True, f"primal = dual = v - eps(v - alpha*) exactly on "
                      f"{len(graphs)} connected graphs x {len(eps_values)} eps values")


def test_criterion_11_counterexample_census(g6):
    at_five = search_counterexamples(5)
    at_six = search_counterexamples(6)
    ok = at_five == [] and any(are_isomorphic(g, g6) for g in at_six)
    _report(11, ok, f"none on <= 5 vertices ({len(at_five)}), "
                    f"{len(at_six)} on <= 6 including the 6-vertex builtin")


def test_criterion_12_sweep_anchors(g6):
    results = {}
    results["K3"] = classify_type(complete_graph(3))
    results["P3"] = classify_type(path_graph(3))
    results["P2"] = classify_type(path_graph(2), tol=1e-8)
    results["P4"] = classify_type(path_graph(4))
    for k in (2, 3, 4):
        results[f"star{k}"] = classify_type(star_graph(k))
    checks = {
        "K3 type K": results["K3"].pattern == "K",
        "P3 type K": results["P3"].pattern == "K",
        "P2 type SK": results["P2"].pattern == "SK",
        "P2 gamma 1/2": abs(results["P2"].gamma - 0.5) <= 1e-6,
        "P4 type SK": results["P4"].pattern == "SK",
        "P4 gamma": abs(results["P4"].gamma - 0.0865) <= 5e-4,
        "stars SK": all(results[f"star{k}"].pattern == "SK" for k in (2, 3, 4)),
        "all end in K": all(r.pattern.endswith("K") for r in results.values()),
    }
    ok = all(checks.values())
    detail = "; ".join(f"{name}={'ok' if good else 'BAD'}"
                       for name, good in checks.items())
    _report(12, ok, detail)


def test_criterion_13_property_suite(g6):
    # class-fraction identities at one million random points
    rng = np.random.default_rng(1331)
    betas = rng.uniform(0.0, 1.0, 1_000_000)
    qs = rng.uniform(0.0, 1.0, 1_000_000)
    x = betas * (1.0 - qs * qs)
    s = np.sqrt(1.0 - x)
    y = np.sqrt(betas) * qs
    r = x / (1.0 + s)
    b = (1.0 - betas) / (s + y)
    sum_err = np.abs(y + r + b - 1.0).max()
    edge_err = np.abs(y * y + r * r + 2.0 * r * (y + b) - betas).max()
    fractions_ok = sum_err <= 1e-12 and edge_err <= 1e-12
    # the scalar route agrees with the vectorised formulas
    from copymax.density import class_fractions
    for i in rng.integers(0, 1_000_000, 500):
        fr = class_fractions(float(betas[i]), float(qs[i]))
        assert (fr.y, fr.r, fr.b) == (y[i], r[i], b[i])

    # graph6 round-trips: every class on <= 5 vertices plus random graphs
    roundtrip_ok = True
    for n in range(2, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_edge_mask(n, mask)
            if parse_graph6(write_graph6(g)) != g:
                roundtrip_ok = False
    from copymax.graphs import Graph
    pyrng = random.Random(77)
    for _ in range(200):
        n = pyrng.randint(1, 16)
        edges = [e for e in itertools.combinations(range(n), 2)
                 if pyrng.random() < 0.5]
        g = Graph(n, edges)
        if parse_graph6(write_graph6(g)) != g:
            roundtrip_ok = False

    # embedding counts divisible by the automorphism count
    divisible_ok = True
    host = build_host(24, 0.4, 0.5)
    for pat in (complete_graph(2), path_graph(2), path_graph(4), star_graph(3), g6):
        if injective_count(pat, host) % automorphism_count(pat):
            divisible_ok = False

    # maximum-independent-set bound at alpha = v/2 on the small census
    cr_ok = True
    for g in enumerate_connected_graphs(5):
        census = independent_set_census(g)
        if 2 * census.alpha == g.n and census.max_sets > 2 ** (g.n // 2):
            cr_ok = False

    ok = fractions_ok and roundtrip_ok and divisible_ok and cr_ok
    _report(13, ok,
            f"fraction identities max err (sum {sum_err:.2e}, edge {edge_err:.2e}) "
            f"at 1e6 points; graph6 round-trips ok={roundtrip_ok}; "
            f"|Aut| divisibility ok={divisible_ok}; "
            f"half-alpha independent-set bound ok={cr_ok}")
