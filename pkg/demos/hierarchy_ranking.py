"""Rank forty leaf criteria organised in eight categories by four experts.

Each expert judged the categories against each other and the leaves inside
every category.  Expert weight sets are averaged per node, then each leaf's
global weight is its category weight times its local weight.
"""

import json
from pathlib import Path

from mbwm.app.schemas import parse_hierarchy
from mbwm.hierarchy import global_weights

fixture = Path(__file__).resolve().parent.parent / "fixtures" / "hierarchy_two_level.json"
spec = parse_hierarchy(json.loads(fixture.read_text()))

print(f"{len(spec.categories)} categories, "
      f"{sum(len(c.leaves) for c in spec.categories)} leaves, "
      f"{len(spec.category_expert_pcs)} experts")

ranking = global_weights(spec)

print("\ncategory weights:")
for name, weight in ranking.category_weights.items():
    print(f"  {name:<14} {weight:.4f}")

print("\ntop ten leaves:")
for leaf in sorted(ranking.leaves, key=lambda l: l.rank)[:10]:
    print(
        f"  #{leaf.rank:<3} {leaf.leaf:<10} global {leaf.global_weight:.4f} "
        f"(local {leaf.local_weight:.4f} in {leaf.category})"
    )

total = sum(l.global_weight for l in ranking.leaves)
print(f"\nglobal weights sum to {total:.12f}")
