#!/usr/bin/env python3
"""The linear program behind the interior exponent, solved exactly.

Maximising sum x_u under x_u + x_w <= 2 - eps on edges (and a unit box)
yields exactly v - eps (v - alpha*), witnessed by x_u = 1 - eps (1 - phi(u))
for any maximal weighting phi.  The dual covering program certifies it.
Everything below is exact rational arithmetic: no tolerances anywhere.
"""

from fractions import Fraction

from copymax import (
    builtin_graph,
    complete_graph,
    cycle_graph,
    duality_check,
    enumerate_connected_graphs,
    epsilon_for_density,
    fractional_independence_number,
)

for g, name in ((builtin_graph("G6"), "G6"), (cycle_graph(5), "C5"),
                (complete_graph(2), "K2")):
    eps = Fraction(1, 10)
    rep = duality_check(g, eps)
    print(f"{name}: alpha* = {fractional_independence_number(g)}, eps = {eps}")
    print(f"  primal optimum  {rep.primal}")
    print(f"  dual optimum    {rep.dual}")
    print(f"  v - eps(v - a*) {rep.formula}")
    print(f"  complementary slackness holds: {rep.complementary_slackness_ok}")
    print(f"  witness x: {[str(v) for v in rep.witness_x.values()]}")

print("exhaustive check over every connected graph on up to 5 vertices:")
count = 0
for g in enumerate_connected_graphs(5):
    for eps in (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), Fraction(1)):
        rep = duality_check(g, eps)
        assert rep.primal == rep.dual == rep.formula
        count += 1
print(f"  {count} exact duality identities verified")

print("\nthe density-to-eps dictionary (n^-eps = beta/2):")
for beta, n in ((0.02, 1000), (0.2, 100), (2 / 50, 50)):
    print(f"  beta = {beta:<5} n = {n:<5} -> eps = {epsilon_for_density(beta, n):.6f}")
