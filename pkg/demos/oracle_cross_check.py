"""Cross-check the closed forms against the independent bisection solver.

The closed-form consistency level comes from cube and fourth roots of
product imbalances; the oracle knows none of that and just bisects on "does
a consistent system exist within distance eta?".  They must agree.
"""

import random

from mbwm import diagnostics, feasible, solve, validate_pcs
from mbwm.sampling import random_pcs

pcs = validate_pcs(
    ["c1", "c2", "c3", "c4", "c5"], 1, 4, (2, 1, 5, 3, 8), (4, 8, 3, 3, 1)
)

analytic = diagnostics(pcs).eps_star
result = solve(pcs)
print(f"analytic eps* = {analytic:.10f}")
print(f"oracle   eta* = {result.eta_star:.10f}  ({result.iterations} bisections)")
print(f"difference    = {abs(analytic - result.eta_star):.2e}")

# Feasibility flips exactly at the optimum.
for eta in (analytic - 1e-3, analytic + 1e-6):
    print(f"feasible at {eta:.6f}? {feasible(pcs, eta)}")

# The witness the oracle returns is a genuinely consistent system within
# the requested distance.
ok, witness = feasible(pcs, 1.30, with_witness=True)
print("witness products:", [round(witness.product(i), 6) for i in witness.middle])
print("witness best-over-worst:", round(witness.a_bw, 6))

# And the agreement holds across thousands of random systems.
rng = random.Random(0)
worst_gap = 0.0
for k in range(2000):
    candidate = random_pcs(rng, grid=bool(k % 2))
    gap = abs(diagnostics(candidate).eps_star - solve(candidate).eta_star)
    worst_gap = max(worst_gap, gap)
print(f"max |analytic - oracle| over 2000 random systems: {worst_gap:.2e}")
