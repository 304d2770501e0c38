"""
Exact values by SAT search
==========================

Encodes "a valid coloring of [1, n] exists" as CNF, decides it with the
embedded solver, and lets the search find the first unsatisfiable n.
"""

import logging

from schur import ProblemSpec, search_exact
from schur.sat import encode, solve, decode_model

spec = ProblemSpec.of(3, 3, 4)
cnf = encode(spec, 22)
print(f"{cnf.num_vars} variables, {cnf.num_clauses} clauses")

out = solve(cnf)
print(out.status, decode_model(out.model, spec, 22).colors)
print(solve(encode(spec, 23)).status)

logging.basicConfig(level=logging.INFO, format="  %(message)s")
result = search_exact(ProblemSpec.of(3, 4, 5))
print("S(3; 3, 4, 5) =", result.value, "after", len(result.probes), "probes")
