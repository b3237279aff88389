"""Monte Carlo curve versus the exact polynomial.

Each run removes nodes in a random order and records, for every removal
count, whether the residual stays connected; the averaged indicators feed
the binomial mixture that reconstructs the curve. Watch the sup-norm error
shrink as the run count grows.
"""

from relpoly import (
    cycle_graph,
    enumerate_node_coefficients,
    estimate_node_cut_fractions,
    node_reliability_curve,
    node_reliability_s_form,
    probability_grid,
)

graph = cycle_graph(8)
coeffs = enumerate_node_coefficients(graph)
grid = probability_grid(101)

print(f"cycle C_8: exact cut fractions c_j = {[round(c, 4) for c in coeffs.cut_fractions]}")
print()
print(f"{'runs':>8}  {'sup gap':>10}")
for runs in (100, 1000, 10000, 100000):
    est = estimate_node_cut_fractions(graph, runs, seed=7)
    curve = node_reliability_curve(est, grid)
    gap = max(
        abs(v - node_reliability_s_form(coeffs, p)) for p, v in zip(curve.grid, curve.values)
    )
    print(f"{runs:>8}  {gap:>10.5f}")

print()
print("The per-coefficient standard deviation falls like 1/(2 sqrt(runs)),")
print("and the curve error is a convex mixture of coefficient errors.")
