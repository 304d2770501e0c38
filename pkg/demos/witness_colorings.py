"""
Explicit colorings for S(3; 3, 3, u) and S(3; 3, 4, u)
======================================================

Builds the two families of colorings, checks them, and shows what a
failed check looks like.
"""

from schur import ProblemSpec, case1_coloring, case2_coloring, find_mono_solution

c = case1_coloring(5)
for color in (1, 2, 3):
    print(color, c.color_class(color))
print("valid:", find_mono_solution(c, ProblemSpec.of(3, 3, 5)) is None)

# the same coloring is too long for a smaller third equation
print("against (3, 3, 4):", find_mono_solution(c, ProblemSpec.of(3, 3, 4)))

for u in (4, 10, 30):
    w = case2_coloring(u)
    ok = find_mono_solution(w, ProblemSpec.of(3, 4, u)) is None
    print(f"case2 u={u}: colors [1, {w.n}], valid={ok}")
