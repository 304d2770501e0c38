"""Competition-format front end for the python-sat solvers.

    SCHUR_EXT_SOLVER="python3 -m schur.sat.pysat_runner" schur search 3 3 3 8 --solver external

Reads a DIMACS file clause by clause (no full formula in memory), prints
``s SATISFIABLE`` / ``s UNSATISFIABLE`` and ``v`` lines, and exits 10 / 20
like a SAT-competition solver. Requires the optional ``python-sat`` package.
"""

import argparse
import sys


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("cnf")
    parser.add_argument("--solver", default="cadical195")
    args = parser.parse_args(argv)

    from pysat.solvers import Solver

    with Solver(name=args.solver) as solver, open(args.cnf) as fh:
        clause = []
        for line in fh:
            if line[:1] in ("c", "p", "\n", ""):
                continue
            for tok in line.split():
                lit = int(tok)
                if lit:
                    clause.append(lit)
                else:
                    solver.add_clause(clause)
                    clause = []
        if solver.solve():
            print("s SATISFIABLE")
            model = solver.get_model() or []
            for i in range(0, len(model), 20):
                print("v " + " ".join(map(str, model[i:i + 20])))
            print("v 0")
            return 10
        print("s UNSATISFIABLE")
        return 20


if __name__ == "__main__":
    sys.exit(main())
