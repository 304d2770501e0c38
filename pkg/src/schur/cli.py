"""``schur`` command line.

Exit codes: 0 success, 1 certificate rejected (``verify``) or value refuted
(``check``), 2 usage or malformed input, 3 budget exhausted, 4 solver
protocol or missing solver, 5 encoding soundness failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import bounds as B
from .constructions import case1_coloring, case2_coloring
from .core import Coloring, ProblemSpec, find_mono_solution
from .errors import (
    CertificateError,
    ContractError,
    EncodingSoundnessError,
    InconclusiveError,
    MalformedCertificateError,
    ResourceError,
    SchurError,
    SolverNotFoundError,
    SolverProtocolError,
)
from .sat import (
    EmbeddedSolver,
    ExternalSolver,
    decode_model,
    parse_dimacs,
    solve,
    to_dimacs,
    external_solve,
    write_encoding,
)
from .search import WitnessStore, check_conjectured_value, reproduce_table, search_exact

EXIT_USAGE, EXIT_RESOURCE, EXIT_PROTOCOL, EXIT_SOUNDNESS = 2, 3, 4, 5


class UsageError(SchurError):
    pass


def _spec_from(args) -> ProblemSpec:
    if getattr(args, "stu", None):
        try:
            ks = [int(p) for p in args.stu.split(",")]
        except ValueError:
            raise UsageError(f"--stu expects s,t,u, got {args.stu!r}") from None
        if len(ks) != 3:
            raise UsageError("--stu expects exactly three values")
        return ProblemSpec(3, tuple(ks))
    nums = args.spec
    if not nums:
        raise UsageError("missing problem: give 'r k0 k1 ...' or --stu s,t,u")
    r, ks = nums[0], nums[1:]
    if len(ks) != r:
        raise UsageError(f"r={r} needs {r} equation lengths, got {len(ks)}")
    return ProblemSpec(r, tuple(ks))


def _solver_from(args):
    if args.solver == "external":
        return ExternalSolver(args.solver_cmd, args.scratch_dir, args.time_limit)
    return EmbeddedSolver(args.max_conflicts, args.time_limit)


def _emit(args, data, text, rows=None):
    fmt = args.format
    if fmt == "json":
        print(json.dumps(data, indent=2))
    elif fmt == "csv" and rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def cmd_bounds(args):
    spec = _spec_from(args)
    table = B.load_ramsey_table(args.ramsey_table) if args.ramsey_table else None
    report = B.best_bounds(spec.canonical(), table)
    rows = [("name", "kind", "value")] + [tuple(e) for e in report.entries]
    _emit(args, report.to_dict(), report.to_text(), rows)
    return 0


def _read_coloring(path) -> Coloring:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedCertificateError(f"cannot read {path}: {exc}") from None
    return Coloring.from_json(text)


def cmd_verify(args):
    spec = _spec_from(args)
    coloring = _read_coloring(args.coloring)
    bad = find_mono_solution(coloring, spec)
    data = {"valid": bad is None, "solution": None if bad is None else bad.to_dict()}
    text = "VALID" if bad is None else f"INVALID {bad}"
    _emit(args, data, text)
    return 0 if bad is None else 1


def cmd_encode(args):
    spec = _spec_from(args)
    if args.output == "-":
        write_encoding(spec, args.n, sys.stdout)
    else:
        with open(args.output, "w") as fh:
            write_encoding(spec, args.n, fh)
    return 0


def cmd_solve(args):
    witness_path = None
    if args.cnf:
        cnf = parse_dimacs(Path(args.cnf).read_text())
        if args.solver == "external":
            outcome = external_solve(cnf, args.solver_cmd, args.scratch_dir, args.time_limit)
        else:
            outcome = solve(cnf, args.max_conflicts, args.time_limit)
        data = {"status": outcome.status}
        if outcome.is_sat and args.model:
            data["model"] = [i + 1 if v else -(i + 1) for i, v in enumerate(outcome.model)]
    else:
        if args.n is None:
            raise UsageError("solve needs -n N together with a problem, or --cnf FILE")
        spec = _spec_from(args)
        outcome = _solver_from(args).solve_instance(spec, args.n)
        data = {"status": outcome.status}
        if outcome.is_sat:
            coloring = decode_model(outcome.model, spec, args.n)
            if args.witness_out:
                witness_path = args.witness_out
                Path(witness_path).write_text(coloring.to_json() + "\n")
            data["witness"] = coloring.to_dict()
            data["witness_path"] = witness_path
    text = "SAT" if outcome.is_sat else "UNSAT"
    if witness_path:
        text += f"\nwitness: {witness_path}"
    _emit(args, data, text)
    return 0


def cmd_search(args):
    spec = _spec_from(args)
    store = WitnessStore(args.witness_dir)
    result = search_exact(spec, start=args.start, solver=_solver_from(args),
                          time_budget=args.time_budget, store=store, jobs=args.jobs)
    path = store.save(spec, result.witness)
    data = result.to_dict()
    data["witness_path"] = str(path)
    text = f"S = {result.value}\nwitness: {path}"
    _emit(args, data, text)
    return 0


def cmd_construct(args):
    build = {"case1": case1_coloring, "case2": case2_coloring}[args.case]
    coloring = build(args.u)
    text = coloring.to_json()
    if args.output:
        Path(args.output).write_text(text + "\n")
    print(text)
    return 0


def cmd_check(args):
    spec = _spec_from(args)
    result = check_conjectured_value(spec, args.value, _solver_from(args))
    verdict = "CONFIRMED" if result.confirmed else "REFUTED"
    text = (f"{verdict}: sat at {args.value - 1}: {result.sat_below}, "
            f"unsat at {args.value}: {result.unsat_confirmed}")
    _emit(args, result.to_dict(), text)
    return 0 if result.confirmed else 1


def cmd_table(args):
    rows = reproduce_table(args.name, budget=args.budget, solver=_solver_from(args))
    data = [row.to_dict() for row in rows]
    header = ("ks", "expected", "computed", "status", "source", "note")
    table = [header] + [
        (",".join(map(str, r.spec.ks)), r.expected,
         "" if r.computed is None else r.computed, r.status, r.source, r.note)
        for r in rows
    ]
    widths = [max(len(str(row[i])) for row in table) for i in range(len(header) - 1)]
    text = "\n".join(
        "  ".join(str(v).ljust(w) for v, w in zip(row[:-1], widths)) + "  " + str(row[-1])
        for row in table
    ).rstrip()
    _emit(args, data, text, table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        help="shorthand for --format json")
    common.add_argument("--solver", choices=("embedded", "external"), default="embedded")
    common.add_argument("--solver-cmd", help="external solver command "
                        "(default: $SCHUR_EXT_SOLVER)")
    common.add_argument("--max-conflicts", type=int, default=None)
    common.add_argument("--time-limit", type=float, default=None,
                        help="seconds per solver call")
    common.add_argument("--scratch-dir", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    def spec_args(p, stu=False):
        p.add_argument("spec", nargs="*", type=int, metavar="R K",
                       help="number of colors followed by the equation lengths")
        if stu:
            p.add_argument("--stu", help="three-color shorthand s,t,u")

    parser = argparse.ArgumentParser(prog="schur", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="known bounds for a problem")
    spec_args(p, stu=True)
    p.add_argument("--ramsey-table", help='JSON map like {"3,3,3": 17}')
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="check a coloring certificate")
    p.add_argument("coloring", help="coloring JSON file")
    spec_args(p, stu=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", parents=[common], help="write the DIMACS encoding")
    spec_args(p, stu=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("solve", parents=[common], help="decide one instance")
    spec_args(p, stu=True)
    p.add_argument("-n", type=int)
    p.add_argument("--cnf", help="solve this DIMACS file instead")
    p.add_argument("--model", action="store_true", help="include the model (with --cnf)")
    p.add_argument("--witness-out", help="write the decoded coloring here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("search", parents=[common], help="compute the exact value")
    spec_args(p, stu=True)
    p.add_argument("--start", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--witness-dir", default="witnesses")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", parents=[common], help="test a claimed exact value")
    spec_args(p, stu=True)
    p.add_argument("--value", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common], help="emit a witness coloring")
    p.add_argument("case", choices=("case1", "case2"))
    p.add_argument("--u", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", parents=[common], help="reproduce a table of values")
    p.add_argument("name", choices=("table1", "table2", "table3"))
    p.add_argument("--budget", type=float, default=60.0, help="seconds per row")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"schur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ContractError, MalformedCertificateError, ValueError) as exc:
        print(f"schur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, InconclusiveError) as exc:
        print(f"schur: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SolverProtocolError, SolverNotFoundError) as exc:
        print(f"schur: solver error: {exc}", file=sys.stderr)
        return EXIT_PROTOCOL
    except (EncodingSoundnessError, CertificateError) as exc:
        print(f"schur: soundness failure: {exc}", file=sys.stderr)
        return EXIT_SOUNDNESS
    except OSError as exc:
        print(f"schur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
