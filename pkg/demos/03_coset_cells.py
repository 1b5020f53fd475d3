"""
Exploring Hilden double cosets
==============================

Grow cells from three seeds by Hilden moves inside the ball of radius 5 in
B_4, pick the Dehornoy-least braid of minimal length in each, and order the
cells by their canonical braids.
"""

import json

from platorder import Budget, order_classes, parse_word

budget = Budget(ball_radius=5, move_depth=4)
seeds = [parse_word(t, 4) for t in ("", "2", "2 2 2")]
report = order_classes(seeds, budget)

for cell in report.cells:
    print(f"seed {str(cell.seed) or '(identity)':>8}  members {len(cell.members):4d}  "
          f"c_min {cell.c_min}  canonical {str(cell.canonical) or '(identity)'}  "
          f"components {cell.signature.components}")

print("largest canonical complexity:", report.max_canonical_complexity)

# sigma_1 is itself a Hilden move, so these two seeds land in one cell
merged = order_classes([parse_word("1", 4), parse_word("", 4)], budget)
print(json.dumps(merged.to_json()["merges"], indent=2))
