"""Instant consistency feedback while judgments are being entered.

Because the consistency ratio is a closed form of the raw inputs, it can be
recomputed after every keystroke without solving anything.  This script
replays an elicitation session: the judge enters values one at a time and
the ratio reacts.
"""

from mbwm import consistency_ratio, validate_pcs

labels = ["price", "quality", "delivery", "service", "risk"]
best, worst = 1, 4  # quality matters most, risk least

# The session starts neutral: every judgment at 1 except the cross value.
best_to_other = [1.0, 1.0, 1.0, 1.0, 8.0]
other_to_worst = [1.0, 8.0, 1.0, 1.0, 1.0]

edits = [
    ("best_to_other", 0, 2.0),
    ("other_to_worst", 0, 4.0),
    ("best_to_other", 2, 5.0),
    ("other_to_worst", 2, 3.0),   # 5 * 3 = 15 against a_bw = 8: tension
    ("best_to_other", 3, 3.0),
    ("other_to_worst", 3, 3.0),
]

for field, index, value in edits:
    vec = best_to_other if field == "best_to_other" else other_to_worst
    vec[index] = value
    pcs = validate_pcs(labels, best, worst, best_to_other, other_to_worst)
    report = consistency_ratio(pcs)
    gauge = (
        "green" if report.consistency_ratio < 0.25
        else "amber" if report.consistency_ratio < 0.5
        else "red"
    )
    print(
        f"set {field}[{labels[index]}] = {value:g}  ->  "
        f"eps* {report.eps_star:.4f}, CR {report.consistency_ratio:.4f} ({gauge})"
    )

# The final ratio pins down which judgments are most at fault.
from mbwm import diagnostics

diag = diagnostics(pcs)
if diag.j0 is not None:
    print(f"most overshooting criterion: {labels[diag.j0]}")
if diag.i0 is not None:
    print(f"most undershooting criterion: {labels[diag.i0]}")
