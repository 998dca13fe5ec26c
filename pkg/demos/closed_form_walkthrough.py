"""Walk through a full weight elicitation, step by step.

A decision maker has five criteria, says c2 matters most and c5 least, and
grades everything on the usual 1..9 scale.  The judgments are not perfectly
coherent, so we quantify by how much, repair them minimally, and read off
the weights.
"""

from mbwm import (
    best_modified_pcs,
    best_weight_set,
    consistency_ratio,
    deviation_profile,
    diagnostics,
    fixed_reference_values,
    interval_weights,
    validate_pcs,
)

pcs = validate_pcs(
    labels=["c1", "c2", "c3", "c4", "c5"],
    best=1,
    worst=4,
    best_to_other=(2, 1, 5, 3, 8),
    other_to_worst=(4, 8, 3, 3, 1),
)

# A coherent judge would satisfy a_bi * a_iw = a_bw for every middle
# criterion.  Here a_b3 * a_3w = 15 against a_bw = 8, so something has to
# give.  The diagnostics quantify the minimal multiplicative stretch eps*
# that makes everything fit.
diag = diagnostics(pcs)
print("chained products:", [pcs.product(i) for i in pcs.middle], "vs a_bw =", pcs.a_bw)
print(f"optimal consistency level eps* = {diag.eps_star:.4f} ({diag.case.value})")

# The consistency ratio needs only the inputs, no optimisation: instant
# feedback for the person entering judgments.
report = consistency_ratio(pcs)
print(f"CI = {report.consistency_index:.4f}, CR = {report.consistency_ratio:.4f}")

# Every minimally-repaired system shares the same best-over-worst value.
fixed = fixed_reference_values(pcs, diag)
print(f"every optimal repair uses best-over-worst = {fixed.a_bw:.4f}")

# Optimal weights are not unique; each criterion gets a range.
iw = interval_weights(pcs, diag)
for label, lo, hi in zip(iw.labels, iw.lower, iw.upper):
    print(f"  {label}: weight in [{lo:.4f}, {hi:.4f}]")

# Among all optimal repairs there is a single one that disturbs every
# criterion the least; its weights are the recommended point answer.
repaired = best_modified_pcs(pcs, diag)
weights = best_weight_set(pcs)
print("best repaired judgments:", [round(v, 4) for v in repaired.best_to_other])
print("best weights:", {l: round(v, 4) for l, v in zip(weights.labels, weights.values)})

# How far does each stated judgment sit from what the weights imply?
eta = deviation_profile(pcs, weights)
print("per-criterion deviation:", [round(v, 4) for v in eta])
