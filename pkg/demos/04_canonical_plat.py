"""
Globally least braid for a link
===============================

Scan the ball for every braid whose plat has a given signature, take the
Dehornoy-least one of minimal complexity, and check that it is also the
canonical braid of its own cell.
"""

from platorder import Budget, can_plat_search, parse_word, plat_signature, signature_cells

for text, name, radius in [("2", "unknot", 3), ("2 2", "Hopf link", 3), ("2 2 2", "trefoil", 5)]:
    target = plat_signature(parse_word(text, 4))
    report = can_plat_search(target, 4, Budget(ball_radius=radius))
    print(f"{name:>10}: beta {report.beta_global}, minimal set "
          f"{[str(w) for w in report.global_min_set]}, {report.verdict}")

# every unknot plat of length <= 5 in B_4 falls into a single cell
cells = signature_cells(plat_signature(parse_word("2", 4)), 4, Budget())
print(cells.candidate_count, "candidates,", len(cells.cells), "cell:", cells.status)
