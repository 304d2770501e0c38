"""CNF encoding of "a valid coloring of [1, n] exists", DIMACS I/O, and
model decoding."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from ..core import Coloring, ProblemSpec, enumerate_tuples, find_mono_solution
from ..errors import (
    ContractError,
    DimacsParseError,
    EncodingSoundnessError,
    ResourceError,
)

MAX_VARS = 10**7
MAX_CLAUSES = 5 * 10**6


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for i, clause in enumerate(clauses):
            seen = set()
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ContractError(f"clause {i}: literal {lit} out of range")
                if lit in seen:
                    raise ContractError(f"clause {i}: duplicate literal {lit}")
                if -lit in seen:
                    raise ContractError(f"clause {i}: contains {lit} and its negation")
                seen.add(lit)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, model: Sequence[bool]) -> bool:
        return all(
            any(model[abs(l) - 1] == (l > 0) for l in clause) for clause in self.clauses
        )


@dataclass(frozen=True)
class SatOutcome:
    status: str  # "sat" or "unsat"
    model: tuple[bool, ...] | None = None
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.status not in ("sat", "unsat"):
            raise ContractError(f"unknown status {self.status!r}")
        if (self.status == "sat") != (self.model is not None):
            raise ContractError("a model is present exactly when status is sat")

    @property
    def is_sat(self) -> bool:
        return self.status == "sat"


def var_index(i: int, c: int, r: int) -> int:
    """DIMACS variable of "integer i has color c"; frozen as (i - 1) * r + c."""
    if r < 1 or i < 1 or not 1 <= c <= r:
        raise ContractError(f"var_index({i}, {c}, {r}) out of range")
    return (i - 1) * r + c


def count_tuples(k: int, n: int) -> int:
    """Number of items ``enumerate_tuples(k, n)`` yields, by a partition count."""
    parts = k - 1
    # ways[j][m]: partitions of m into exactly j parts
    ways = [[0] * (n + 1) for _ in range(parts + 1)]
    ways[0][0] = 1
    for j in range(1, parts + 1):
        for m in range(j, n + 1):
            ways[j][m] = ways[j - 1][m - 1] + ways[j][m - j]
    return sum(ways[parts])


def encoded_size(spec: ProblemSpec, n: int) -> tuple[int, int]:
    """(num_vars, num_clauses) of ``encode(spec, n)`` without building it."""
    r = spec.r
    mono = sum(count_tuples(k, n) for k in spec.ks)
    return n * r, n * (1 + comb(r, 2)) + mono


def iter_clauses(spec: ProblemSpec, n: int) -> Iterator[tuple[int, ...]]:
    """Clauses of ``encode(spec, n)`` in order, generated lazily."""
    r = spec.r
    pairs = list(combinations(range(1, r + 1), 2))
    for i in range(1, n + 1):
        base = (i - 1) * r
        yield tuple(base + c for c in range(1, r + 1))
        for a, b in pairs:
            yield (-(base + a), -(base + b))
    for c in range(1, r + 1):
        for xs in enumerate_tuples(spec.ks[c - 1], n):
            members = dict.fromkeys(xs)
            members[sum(xs)] = None
            yield tuple(-((x - 1) * r + c) for x in members)


def check_budget(spec: ProblemSpec, n: int, max_vars=MAX_VARS, max_clauses=MAX_CLAUSES):
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    nv = n * spec.r
    if nv > max_vars:
        raise ResourceError(f"{nv} variables exceed the budget of {max_vars}")
    if max_clauses is not None:
        nc = encoded_size(spec, n)[1]
        if nc > max_clauses:
            raise ResourceError(f"{nc} clauses exceed the budget of {max_clauses}")


def encode(spec: ProblemSpec, n: int, max_vars: int = MAX_VARS,
           max_clauses: int | None = MAX_CLAUSES) -> CnfFormula:
    """Exactly-one color per integer (one at-least-one clause plus pairwise
    at-most-one clauses), then one blocking clause per candidate solution of
    each color, ordered by (color, lexicographic tuple)."""
    check_budget(spec, n, max_vars, max_clauses)
    return CnfFormula(n * spec.r, tuple(iter_clauses(spec, n)))


def write_encoding(spec: ProblemSpec, n: int, fh) -> None:
    """Stream ``to_dimacs(encode(spec, n))`` to ``fh`` without holding the clauses."""
    _, nc = encoded_size(spec, n)
    fh.write(f"p cnf {n * spec.r} {nc}\n")
    for clause in iter_clauses(spec, n):
        fh.write(" ".join(map(str, clause)) + " 0\n")


def decode_model(model: Sequence[bool], spec: ProblemSpec, n: int) -> Coloring:
    """Read the coloring back; refuses anything that is not a valid coloring."""
    r = spec.r
    if len(model) < n * r:
        raise EncodingSoundnessError(f"model has {len(model)} values, need {n * r}")
    colors = []
    for i in range(1, n + 1):
        on = [c for c in range(1, r + 1) if model[var_index(i, c, r) - 1]]
        if len(on) != 1:
            raise EncodingSoundnessError(f"integer {i} has colors {on} in the model")
        colors.append(on[0])
    coloring = Coloring(n, r, tuple(colors))
    bad = find_mono_solution(coloring, spec)
    if bad is not None:
        raise EncodingSoundnessError(f"decoded coloring has monochromatic solution {bad}")
    return coloring


def to_dimacs(cnf: CnfFormula) -> str:
    out = [f"p cnf {cnf.num_vars} {cnf.num_clauses}\n"]
    out.extend(" ".join(map(str, clause)) + " 0\n" if clause else "0\n"
               for clause in cnf.clauses)
    return "".join(out)


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise DimacsParseError("second header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsParseError(f"malformed header {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsParseError(f"malformed header {line!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsParseError("negative counts in header", lineno)
            continue
        if header is None:
            raise DimacsParseError("clause before header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > header[0]:
                raise DimacsParseError(
                    f"variable {abs(lit)} exceeds declared count {header[0]}", lineno
                )
            else:
                current.append(lit)
    if header is None:
        raise DimacsParseError("missing header", 0)
    if current:
        raise DimacsParseError("last clause is not terminated by 0", lineno)
    if len(clauses) != header[1]:
        raise DimacsParseError(
            f"header declares {header[1]} clauses, found {len(clauses)}", lineno
        )
    try:
        return CnfFormula(header[0], tuple(clauses))
    except ContractError as exc:
        raise DimacsParseError(str(exc), lineno) from None
