"""Closed-form ensemble results for Erdos-Renyi and geometric random graphs.

The ER node reliability collapses to exp(-p N exp(-N p p_l)), which puts
the connectivity threshold, curve crossings between different ensembles,
and the width of the 0-to-1 transition all within reach of a calculator.
"""

import math

from relpoly import (
    ErModel,
    RggModel,
    er_intersection,
    er_node_reliability,
    er_transition_width,
    rgg_node_reliability,
)

# threshold behavior: p_l = (log N + c)/N lands at exp(-exp(-c)) for p = 1
n = 10**4
print("connectivity threshold at p = 1:")
for c in (-1, 0, 1):
    model = ErModel(n, (math.log(n) + c) / n)
    print(f"  c={c:+d}: formula {er_node_reliability(model, 1.0):.4f}, limit {math.exp(-math.exp(-c)):.4f}")

# crossing of two ensembles: the sparser one has more nodes
res = er_intersection(ErModel(100, 0.05), ErModel(10000, 0.0012))
print(f"\ncurves of ER(100, k=5) and ER(10000, k=12) cross at p={res.p:.4f}, value={res.value:.4f}")

# sharper transitions for denser ensembles
print("\ntransition width from level 0.01 to 0.99:")
for mean_degree in (10, 20, 40):
    model = ErModel(1000, mean_degree / 1000)
    print(f"  N p_l = {mean_degree}: width {er_transition_width(model, 0.01, 0.99):.4f}")

# geometric ensemble
print("\nrandom geometric graph, N=100, r=0.2:")
model = RggModel(100, 0.2)
for p in (0.2, 0.5, 1.0):
    print(f"  p={p}: {rgg_node_reliability(model, p):.5f}")
