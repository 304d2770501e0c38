"""
From integer colorings to edge colorings
========================================

Color the edge {a, b} of a complete graph by the color of |a - b|. A
monochromatic triangle then hands back a monochromatic x + y = z.
"""

import itertools
import random

from schur import Coloring, ProblemSpec
from schur.bounds import best_bounds, ramsey_brute_force
from schur.constructions import clique_to_solution, difference_edge_coloring

rng = random.Random(1)
coloring = Coloring(10, 3, tuple(rng.randint(1, 3) for _ in range(10)))
ec = difference_edge_coloring(coloring)
print("coloring:", coloring.colors, "-> K_%d" % ec.m)

spec = ProblemSpec.of(3, 3, 3)
shown = 0
for tri in itertools.combinations(range(ec.m), 3):
    colors = {ec.color_of(a, b) for a, b in itertools.combinations(tri, 2)}
    if len(colors) == 1:
        print(tri, "->", clique_to_solution(tri, coloring, spec))
        shown += 1
    if shown == 5:
        break

# brute force: some 2-coloring of K_5 avoids a mono triangle, none of K_6 does
print("K_5 avoidable:", ramsey_brute_force([3, 3], 5))
print("K_6 avoidable:", ramsey_brute_force([3, 3], 6))

# a known Ramsey number turns into an upper bound
print(best_bounds(spec, {"3,3,3": 17}).to_text())
