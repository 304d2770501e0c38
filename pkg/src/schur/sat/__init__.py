"""SAT route: encoding, DIMACS, the embedded DPLL solver and the external bridge."""

from .cnf import (
    MAX_CLAUSES,
    CnfFormula,
    SatOutcome,
    check_budget,
    count_tuples,
    decode_model,
    encode,
    encoded_size,
    iter_clauses,
    parse_dimacs,
    to_dimacs,
    var_index,
    write_encoding,
)
from .solvers import (
    ENV_SOLVER,
    EmbeddedSolver,
    ExternalSolver,
    external_solve,
    parse_competition_output,
    solve,
)

__all__ = [
    "MAX_CLAUSES",
    "CnfFormula",
    "check_budget",
    "count_tuples",
    "iter_clauses",
    "write_encoding",
    "SatOutcome",
    "decode_model",
    "encode",
    "encoded_size",
    "parse_dimacs",
    "to_dimacs",
    "var_index",
    "ENV_SOLVER",
    "EmbeddedSolver",
    "ExternalSolver",
    "external_solve",
    "parse_competition_output",
    "solve",
]
