import itertools
import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings

from schur.core import Coloring, ProblemSpec

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

TESTS = Path(__file__).parent
GOLDEN = TESTS / "golden"


def naive_mono_solutions(coloring, spec):
    """All monochromatic solutions, by trying every nondecreasing tuple."""
    found = []
    n = coloring.n
    for c in range(1, spec.r + 1):
        k = spec.ks[c - 1]
        members = [x for x in range(1, n + 1) if coloring(x) == c]
        for xs in itertools.combinations_with_replacement(members, k - 1):
            s = sum(xs)
            if s <= n and coloring(s) == c:
                found.append((c, xs + (s,)))
    return sorted(found)


def all_colorings(n, r):
    for colors in itertools.product(range(1, r + 1), repeat=n):
        yield Coloring(n, r, colors)


def pysat_available():
    try:
        import pysat.solvers  # noqa: F401
    except ImportError:
        return False
    return True


def external_command():
    """Solver command for external-bridge tests: $SCHUR_EXT_SOLVER or the pysat runner."""
    cmd = os.environ.get("SCHUR_EXT_SOLVER")
    if cmd:
        return cmd
    if pysat_available():
        return f"{sys.executable} -m schur.sat.pysat_runner"
    return None


def pytest_addoption(parser):
    parser.addoption("--ext-budget", type=float, default=900.0,
                     help="wall-clock seconds for optional external-solver acceptance rows")


@pytest.fixture
def ext_budget(request):
    return request.config.getoption("--ext-budget")


@pytest.fixture
def spec333():
    return ProblemSpec.of(3, 3, 3)


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(label, ok, detail)``; ok=None means skipped."""
    capman = request.config.pluginmanager.getplugin("capturemanager")

    def record(label, ok, detail):
        tag = "SKIP" if ok is None else "PASS" if ok else "FAIL"
        line = f"[{tag}] criterion {label}: {detail}"
        _ACCEPTANCE.append(line)
        with capman.global_and_fixture_disabled():
            print("\n" + line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
