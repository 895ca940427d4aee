#!/usr/bin/env python3
"""Ground truth: exact counts on explicit finite hosts.

Two completely different routes to the embedding count must agree to the
integer: backtracking search over the host's adjacency bitsets, and the
weighting census paired with falling factorials of the class sizes.  The
normalised counts then converge to the limiting density like 1/n.
"""

import math

from copymax import (
    build_host,
    builtin_graph,
    convergence_report,
    copies_count,
    hom_count,
    injective_count,
    injective_count_from_spectrum,
    path_graph,
    spectrum,
    t_density,
)

Q = 1.0 / math.sqrt(2.0)
g6 = builtin_graph("G6")
spec = spectrum(g6)

print("classic sanity values:")
from copymax import complete_graph, cycle_graph
print("  copies of the 4-edge path in the 7-cycle:", copies_count(path_graph(4), cycle_graph(7)))
print("  copies of the 4-edge path in K5:        ", copies_count(path_graph(4), complete_graph(5)))

host = build_host(60, 0.2, Q)
print(f"\nhost at n = 60, beta = 0.2, q = 1/sqrt2: classes {host.class_sizes}, "
      f"{host.graph.edge_count} edges (target {host.target_edges:.0f})")
search = injective_count(g6, host)
census = injective_count_from_spectrum(spec, host)
print(f"embeddings by backtracking search: {search}")
print(f"embeddings by census + falling factorials: {census}")
print("exact match:", search == census)
print(f"homomorphisms (collisions included): {hom_count(g6, host)}")

print("\nconvergence to the limit density:")
result = convergence_report(g6, 0.2, Q, [30, 60, 120])
t_ref = t_density(spec, 0.2, Q)
print(f"  limit t = {t_ref:.8f}")
print(f"  {'n':>4} {'injective':>14} {'inj/n^6':>12} {'gap':>10} {'n*gap':>7}")
for r in result.reports:
    print(f"  {r.n:>4} {r.injective:>14} {r.normalised:>12.8f} "
          f"{r.gap:>10.2e} {r.n * r.gap:>7.4f}")
print(f"  fitted decay exponent of the gap: {result.decay_rate:.2f} (1 = pure 1/n)")
