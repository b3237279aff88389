"""Three ways to add k links, compared on the shared reliability surrogate.

Both stochastic reliability surrogates increase in 1 - phi_D(1-p), so link
addition reduces to raising that value. Pairing the lowest-degree nodes is
locally unimprovable under endpoint moves; pairing hubs is the worst thing
you can do with the budget.
"""

from relpoly import (
    generate_er,
    greedy_lowest_degree_addition,
    highest_degree_addition,
    random_pairing_addition,
)
from relpoly.kgrip import objective

base = generate_er(200, 0.015, seed=0)
k = 50
print(
    f"base ER(200, 0.015): L={base.num_links}, connected={base.is_connected()}, "
    f"isolated nodes={sum(1 for d in base.degrees() if d == 0)}"
)

greedy_g, greedy_plan = greedy_lowest_degree_addition(base, k)
random_g, _ = random_pairing_addition(base, k, seed=1)
highest_g, _ = highest_degree_addition(base, k)

print(f"after greedy lowest-degree pairing: connected={greedy_g.is_connected()}")
print(f"first five greedy additions: {greedy_plan.added[:5]}")

print(f"\n{'p':>4}  {'base':>8}  {'greedy':>8}  {'random':>8}  {'highest':>8}")
for p in (0.2, 0.4, 0.6, 0.8):
    row = [objective(g, p) for g in (base, greedy_g, random_g, highest_g)]
    print(f"{p:>4.1f}  " + "  ".join(f"{v:>8.4f}" for v in row))

print()
print("Moving an added link's endpoint from a node of effective degree d_n")
print("to one of degree d_m raises the objective exactly when d_n - 1 > d_m,")
print("so a plan that always pairs the lowest degrees admits no such move.")
