"""Exact values by searching for the first unsatisfiable interval length.

Valid colorings are closed under restriction to a prefix, so "a valid
coloring of [1, n] exists" is true for every n below S(spec) and false from
S(spec) on. The search brackets that switch point and binary-searches it.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from .bounds import best_bounds
from .core import Coloring, ProblemSpec, verify_valid
from .errors import (
    CertificateError,
    ContractError,
    InconclusiveError,
    ResourceError,
    SolverUnknownError,
)
from .sat import EmbeddedSolver, decode_model

log = logging.getLogger(__name__)

__all__ = [
    "Probe",
    "SearchOutcome",
    "SearchAborted",
    "WitnessStore",
    "search_exact",
    "ConjectureCheck",
    "check_conjectured_value",
    "TableRow",
    "load_table",
    "reproduce_table",
]


@dataclass(frozen=True)
class Probe:
    n: int
    status: str  # "sat", "unsat" or "unknown"
    elapsed: float
    source: str = "solver"  # or "store" when a saved witness was reused


class SearchAborted(ResourceError):
    """A probe was undecided; ``partial`` holds the probes made so far."""


@dataclass(frozen=True)
class SearchOutcome:
    spec: ProblemSpec
    value: int
    witness: Coloring
    probes: tuple[Probe, ...]
    solver_id: str

    def __post_init__(self):
        if self.witness.n != self.value - 1:
            raise CertificateError(
                f"witness covers [1, {self.witness.n}], expected [1, {self.value - 1}]"
            )
        if not verify_valid(self.witness, self.spec):
            raise CertificateError(f"witness for {self.spec} is not valid")

    def to_dict(self) -> dict:
        return {
            "spec": {"r": self.spec.r, "ks": list(self.spec.ks)},
            "value": self.value,
            "witness": self.witness.to_dict(),
            "probes": [
                {"n": p.n, "status": p.status, "elapsed": round(p.elapsed, 6),
                 "source": p.source}
                for p in self.probes
            ],
            "solver": self.solver_id,
        }


class WitnessStore:
    """Directory of Coloring JSON files named ``<k0>-<k1>-..._n<NN>.json``."""

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path(self, spec: ProblemSpec, n: int) -> Path:
        return self.root / f"{spec.key}_n{n}.json"

    def save(self, spec: ProblemSpec, coloring: Coloring) -> Path:
        p = self.path(spec, coloring.n)
        p.write_text(coloring.to_json() + "\n")
        return p

    def load(self, spec: ProblemSpec, n: int) -> Coloring | None:
        """The stored witness for ``(spec, n)`` if present and still valid."""
        p = self.path(spec, n)
        if not p.exists():
            return None
        try:
            coloring = Coloring.from_json(p.read_text())
        except ValueError:
            log.warning("ignoring unreadable witness %s", p)
            return None
        if coloring.n != n or not verify_valid(coloring, spec):
            log.warning("ignoring stored witness %s: fails verification", p)
            return None
        return coloring


class _Prober:
    """Runs probes, records them, and keeps decoded witnesses by n."""

    def __init__(self, spec, solver, store, deadline):
        self.spec = spec
        self.solver = solver
        self.store = store
        self.deadline = deadline
        self.probes = []
        self.witnesses = {}

    def __call__(self, n):
        if n < 1:
            return True  # the empty coloring
        if n in self.witnesses:
            return True
        if self.store is not None:
            stored = self.store.load(self.spec, n)
            if stored is not None:
                self.witnesses[n] = stored
                self.probes.append(Probe(n, "sat", 0.0, "store"))
                return True
        remaining = None
        if self.deadline is not None:
            remaining = self.deadline - time.monotonic()
            if remaining <= 0:
                self._abort(n, 0.0, "search time budget exhausted")
        t0 = time.perf_counter()
        try:
            outcome = self.solver.solve_instance(self.spec, n, time_limit=remaining)
        except (SolverUnknownError, ResourceError) as exc:
            self._abort(n, time.perf_counter() - t0, str(exc))
        elapsed = time.perf_counter() - t0
        self.probes.append(Probe(n, outcome.status, elapsed))
        log.info("%s n=%d: %s (%.2fs)", self.spec, n, outcome.status, elapsed)
        if not outcome.is_sat:
            return False
        coloring = decode_model(outcome.model, self.spec, n)
        self.witnesses[n] = coloring
        if self.store is not None:
            self.store.save(self.spec, coloring)
        return True

    def _abort(self, n, elapsed, why):
        self.probes.append(Probe(n, "unknown", elapsed))
        raise SearchAborted(f"{self.spec}: probe at n={n} undecided ({why})",
                            partial=tuple(self.probes))


def search_exact(spec: ProblemSpec, start: int | None = None, solver=None,
                 time_budget: float | None = None, store: WitnessStore | None = None,
                 jobs: int = 1) -> SearchOutcome:
    """S(spec) as the least n whose encoding is unsatisfiable.

    Probing starts at ``start`` (default: the best proven lower bound), ramps
    outward with doubling steps until the switch point is bracketed, then
    bisects. With ``jobs > 1`` the bisection probes several interior points
    at once; the value and the witness at ``value - 1`` do not depend on it.
    """
    solver = solver if solver is not None else EmbeddedSolver()
    if start is None:
        start = best_bounds(spec.canonical()).max_lower
    if start < 1:
        raise ContractError(f"start must be >= 1, got {start}")
    deadline = None if time_budget is None else time.monotonic() + time_budget
    probe = _Prober(spec, solver, store, deadline)

    # lo: largest n known sat, hi: smallest n known unsat
    if probe(start):
        lo, step = start, 1
        while probe(lo + step):
            lo += step
            step *= 2
        hi = lo + step
    else:
        hi, step = start, 1
        while hi - step >= 1 and not probe(hi - step):
            hi -= step
            step *= 2
        lo = max(hi - step, 0)

    if jobs <= 1:
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if probe(mid):
                lo = mid
            else:
                hi = mid
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            while hi - lo > 1:
                gap = hi - lo
                points = sorted({lo + (gap * i) // (jobs + 1) for i in range(1, jobs + 1)}
                                - {lo, hi})
                results = dict(zip(points, pool.map(probe, points)))
                # downward closure: keep the largest sat below the smallest unsat
                unsat = [n for n in points if not results[n]]
                if unsat:
                    hi = min(unsat)
                sat = [n for n in points if results[n] and n < hi]
                if sat:
                    lo = max(sat)

    value = hi
    if value - 1 not in probe.witnesses:
        probe(value - 1)
    witness = probe.witnesses.get(value - 1)
    if witness is None:
        witness = Coloring(0, spec.r, ())
    return SearchOutcome(spec, value, witness, tuple(probe.probes),
                         getattr(solver, "name", type(solver).__name__))


@dataclass(frozen=True)
class ConjectureCheck:
    spec: ProblemSpec
    value: int
    sat_below: bool
    unsat_confirmed: bool
    witness: Coloring | None

    @property
    def confirmed(self) -> bool:
        return self.sat_below and self.unsat_confirmed

    def to_dict(self) -> dict:
        return {
            "spec": {"r": self.spec.r, "ks": list(self.spec.ks)},
            "value": self.value,
            "sat_below": self.sat_below,
            "unsat_confirmed": self.unsat_confirmed,
            "confirmed": self.confirmed,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def check_conjectured_value(spec: ProblemSpec, v: int, solver=None) -> ConjectureCheck:
    """Probe ``v - 1`` (expect sat) and ``v`` (expect unsat); report both."""
    if v < 2:
        raise ContractError(f"claimed value must be >= 2, got {v}")
    solver = solver if solver is not None else EmbeddedSolver()
    try:
        below = solver.solve_instance(spec, v - 1)
        at = solver.solve_instance(spec, v)
    except (SolverUnknownError, ResourceError) as exc:
        raise InconclusiveError(f"{spec} at {v}: {exc}") from exc
    witness = decode_model(below.model, spec, v - 1) if below.is_sat else None
    return ConjectureCheck(spec, v, below.is_sat, not at.is_sat, witness)


@dataclass(frozen=True)
class TableRow:
    spec: ProblemSpec
    expected: int
    kind: str  # "exact" or "lower"
    source: str
    computed: int | None = None
    status: str = "skipped"  # "agree", "disagree" or "skipped"
    note: str = ""
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def agreement(self) -> bool | None:
        return None if self.status == "skipped" else self.status == "agree"

    def to_dict(self) -> dict:
        return {
            "ks": list(self.spec.ks),
            "expected": self.expected,
            "kind": self.kind,
            "computed": self.computed,
            "status": self.status,
            "source": self.source,
            "note": self.note,
        }


TABLES = ("table1", "table2", "table3")


def load_table(name: str) -> list[TableRow]:
    if name not in TABLES:
        raise ContractError(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    text = resources.files("schur").joinpath("data/tables.json").read_text()
    rows = json.loads(text)[name]["rows"]
    return [
        TableRow(ProblemSpec.of(*row["ks"]), row["value"], row["kind"], row["source"],
                 note=row.get("note", ""))
        for row in rows
    ]


def reproduce_table(name: str, budget: float | None = 60.0, solver=None,
                    rows=None) -> list[TableRow]:
    """Search every row of a bundled table within ``budget`` seconds per row.

    Rows that run out of budget, or only record a lower bound, come back as
    ``skipped``; no value is ever guessed. ``rows`` optionally selects rows by
    their equation lengths.
    """
    out = []
    for row in load_table(name):
        if rows is not None and tuple(row.spec.ks) not in {tuple(r) for r in rows}:
            continue
        if row.kind != "exact":
            out.append(replace(row, note=_join(row.note, "lower bound only; not searched")))
            continue
        t0 = time.perf_counter()
        try:
            result = search_exact(row.spec, solver=solver, time_budget=budget)
        except ResourceError as exc:
            out.append(replace(row, note=_join(row.note, f"skipped: {exc}"),
                                elapsed=time.perf_counter() - t0))
            continue
        status = "agree" if result.value == row.expected else "disagree"
        out.append(replace(row, computed=result.value, status=status,
                            elapsed=time.perf_counter() - t0))
    return out


def _join(a, b):
    return f"{a}; {b}" if a else b
