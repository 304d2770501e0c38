"""The embedded solver and the bridge to SAT-competition style executables."""

from __future__ import annotations

import os
import shlex
import subprocess
import tempfile
import time

from ..errors import SolverNotFoundError, SolverProtocolError, SolverUnknownError
from .cnf import (
    MAX_CLAUSES,
    CnfFormula,
    SatOutcome,
    check_budget,
    iter_clauses,
    to_dimacs,
    write_encoding,
)
from .dpll import dpll

ENV_SOLVER = "SCHUR_EXT_SOLVER"


def solve(cnf: CnfFormula, max_conflicts=None, time_limit=None) -> SatOutcome:
    """Embedded DPLL. Raises ``SolverUnknownError`` if a budget runs out."""
    return _embedded(cnf.num_vars, cnf.clauses, max_conflicts, time_limit, clean=False)


def _embedded(num_vars, clauses, max_conflicts, time_limit, clean):
    t0 = time.perf_counter()
    sat, model = dpll(num_vars, clauses, max_conflicts, time_limit, clean=clean)
    stats = {"elapsed": time.perf_counter() - t0}
    if sat:
        return SatOutcome("sat", tuple(model), stats)
    return SatOutcome("unsat", None, stats)


def parse_competition_output(text: str, num_vars: int):
    """Status and model from "s ..." / "v ..." lines; unset variables read False."""
    status = None
    values = {}
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("s "):
            word = line[2:].strip()
            if word == "SATISFIABLE":
                status = "sat"
            elif word == "UNSATISFIABLE":
                status = "unsat"
            elif word in ("UNKNOWN", "INDETERMINATE"):
                status = "unknown"
            else:
                raise SolverProtocolError(f"unrecognized status line {line!r}", text)
        elif line.startswith("v ") or line == "v":
            for tok in line[1:].split():
                try:
                    lit = int(tok)
                except ValueError:
                    raise SolverProtocolError(f"bad model token {tok!r}", text) from None
                if lit and abs(lit) <= num_vars:
                    values[abs(lit)] = lit > 0
    if status is None:
        return None, None
    if status != "sat":
        return status, None
    return status, tuple(values.get(v, False) for v in range(1, num_vars + 1))


def external_solve(cnf: CnfFormula, command: str | None = None, scratch_dir=None,
                   timeout=None) -> SatOutcome:
    """Run ``<command> <file.cnf>`` and read its competition-format answer."""
    return _run_external(lambda fh: fh.write(to_dimacs(cnf)), cnf.num_vars,
                         cnf.satisfied_by, command, scratch_dir, timeout)


def _run_external(write, num_vars, check_model, command, scratch_dir, timeout):
    command = command or os.environ.get(ENV_SOLVER)
    if not command:
        raise SolverNotFoundError(f"no solver command given and ${ENV_SOLVER} is unset")
    argv = shlex.split(command)
    t0 = time.perf_counter()
    fd, path = tempfile.mkstemp(suffix=".cnf", prefix="schur-", dir=scratch_dir)
    try:
        with os.fdopen(fd, "w") as fh:
            write(fh)
        try:
            proc = subprocess.run(argv + [path], capture_output=True, text=True,
                                  timeout=timeout)
        except FileNotFoundError:
            raise SolverNotFoundError(f"solver executable not found: {argv[0]}") from None
        except subprocess.TimeoutExpired:
            raise SolverUnknownError(f"external solver exceeded {timeout}s") from None
    finally:
        os.unlink(path)
    output = proc.stdout + proc.stderr
    status, model = parse_competition_output(proc.stdout, num_vars)
    if status is None:
        raise SolverProtocolError(
            f"solver exited with code {proc.returncode} without an 's' line", output
        )
    if status == "unknown":
        raise SolverUnknownError("external solver answered UNKNOWN")
    stats = {"elapsed": time.perf_counter() - t0, "returncode": proc.returncode}
    if status == "unsat":
        return SatOutcome("unsat", None, stats)
    if check_model is not None and not check_model(model):
        raise SolverProtocolError("reported model does not satisfy the formula", output)
    return SatOutcome("sat", model, stats)


def _tighter(a, b):
    if a is None:
        return b
    return a if b is None else min(a, b)


class EmbeddedSolver:
    """Callable wrapper around :func:`solve` carrying its budgets."""

    def __init__(self, max_conflicts=None, time_limit=None, max_clauses=MAX_CLAUSES):
        self.max_conflicts = max_conflicts
        self.time_limit = time_limit
        self.max_clauses = max_clauses

    @property
    def name(self):
        return "embedded-dpll"

    def __call__(self, cnf):
        return solve(cnf, self.max_conflicts, self.time_limit)

    def solve_instance(self, spec, n, time_limit=None):
        """Decide ``encode(spec, n)`` without materializing a CnfFormula."""
        check_budget(spec, n, max_clauses=self.max_clauses)
        return _embedded(n * spec.r, iter_clauses(spec, n), self.max_conflicts,
                         _tighter(self.time_limit, time_limit), clean=True)


class ExternalSolver:
    def __init__(self, command=None, scratch_dir=None, timeout=None):
        self.command = command or os.environ.get(ENV_SOLVER)
        if not self.command:
            raise SolverNotFoundError(f"no solver command given and ${ENV_SOLVER} is unset")
        self.scratch_dir = scratch_dir
        self.timeout = timeout

    @property
    def name(self):
        return f"external:{self.command}"

    def __call__(self, cnf):
        return external_solve(cnf, self.command, self.scratch_dir, self.timeout)

    def solve_instance(self, spec, n, time_limit=None):
        """Stream the encoding to disk and run the solver on it.

        The returned model is checked by decoding, not clause by clause.
        """
        check_budget(spec, n, max_clauses=None)
        return _run_external(lambda fh: write_encoding(spec, n, fh), n * spec.r, None,
                             self.command, self.scratch_dir,
                             _tighter(self.timeout, time_limit))
