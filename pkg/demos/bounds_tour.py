"""
Bounds for a few three-color problems
=====================================

Prints every bound the library knows for a handful of problems, next to
the exact value when one is on record.
"""

from schur import ProblemSpec, best_bounds
from schur.search import load_table

known = {tuple(row.spec.ks): row.expected for row in load_table("table2")}

for ks in [(3, 3, 3), (3, 3, 5), (3, 4, 6), (4, 4, 4), (4, 5, 6), (6, 6, 6)]:
    report = best_bounds(ProblemSpec.of(*ks))
    print(report.to_text())
    print(f"  recorded value: {known[ks]}\n")

# the two-color case is closed: one formula covers every s <= t
print(best_bounds(ProblemSpec.of(5, 9)).to_text())
