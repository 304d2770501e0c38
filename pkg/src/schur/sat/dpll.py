"""Deterministic DPLL: unit propagation over two watched literals,
chronological backtracking, no clause learning.

Branching always picks the lowest-numbered unassigned variable and tries
``True`` first, so a given formula always yields the same model. The search
state lives in numpy arrays so that the compiled kernel can stop after a
quota of conflicts, hand control back to Python (for wall-clock checks) and
resume exactly where it stopped.
"""

from __future__ import annotations

import time
from array import array

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - pure Python fallback, same semantics
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

from ..errors import SolverUnknownError

UNSAT, SAT, PAUSED = 0, 1, 2

# indices into the scalar state vector
_TRAIL, _QHEAD, _LEVEL, _HINT, _CONFLICTS, _DECISIONS = range(6)


@njit(cache=True, nogil=True)
def _lit_val(vals, lit):
    # 1 true, 0 false, -1 unassigned; literal 2*v is v, 2*v+1 is not v
    v = vals[lit >> 1]
    if v < 0:
        return -1
    return v ^ (lit & 1)


@njit(cache=True, nogil=True)
def _assign(vals, trail, st, lit):
    vals[lit >> 1] = 1 - (lit & 1)
    trail[st[_TRAIL]] = lit
    st[_TRAIL] += 1


@njit(cache=True, nogil=True)
def _propagate(vals, trail, st, lits, cstart, whead, wnext):
    """Returns True on conflict."""
    while st[_QHEAD] < st[_TRAIL]:
        false_lit = trail[st[_QHEAD]] ^ 1
        st[_QHEAD] += 1
        prev = -1
        e = whead[false_lit]
        while e != -1:
            nxt = wnext[e]
            ci = e >> 1
            w = e & 1
            base = cstart[ci]
            end = cstart[ci + 1]
            other = lits[base + 1 - w]
            if _lit_val(vals, other) == 1:
                prev = e
                e = nxt
                continue
            moved = False
            for p in range(base + 2, end):
                cand = lits[p]
                if _lit_val(vals, cand) != 0:
                    lits[p] = lits[base + w]
                    lits[base + w] = cand
                    if prev == -1:
                        whead[false_lit] = nxt
                    else:
                        wnext[prev] = nxt
                    wnext[e] = whead[cand]
                    whead[cand] = e
                    moved = True
                    break
            if moved:
                e = nxt
                continue
            if _lit_val(vals, other) == 0:
                return True
            _assign(vals, trail, st, other)
            prev = e
            e = nxt
    return False


@njit(cache=True, nogil=True)
def _undo_to(vals, trail, st, mark):
    t = st[_TRAIL]
    while t > mark:
        t -= 1
        var = trail[t] >> 1
        vals[var] = -1
        if var < st[_HINT]:
            st[_HINT] = var
    st[_TRAIL] = mark
    st[_QHEAD] = mark


@njit(cache=True, nogil=True)
def _run(vals, trail, st, lits, cstart, whead, wnext, lim, dec_lit, flipped, quota):
    nvars = vals.shape[0]
    stop_at = st[_CONFLICTS] + quota
    while True:
        if _propagate(vals, trail, st, lits, cstart, whead, wnext):
            st[_CONFLICTS] += 1
            level = st[_LEVEL]
            while level > 0 and flipped[level]:
                level -= 1
            if level == 0:
                st[_LEVEL] = 0
                return UNSAT
            _undo_to(vals, trail, st, lim[level])
            st[_LEVEL] = level
            flipped[level] = True
            _assign(vals, trail, st, dec_lit[level] ^ 1)
            if st[_CONFLICTS] >= stop_at:
                return PAUSED
            continue
        var = st[_HINT]
        while var < nvars and vals[var] >= 0:
            var += 1
        st[_HINT] = var
        if var == nvars:
            return SAT
        level = st[_LEVEL] + 1
        st[_LEVEL] = level
        st[_DECISIONS] += 1
        lim[level] = st[_TRAIL]
        dec_lit[level] = 2 * var
        flipped[level] = False
        _assign(vals, trail, st, 2 * var)


def _prepare(num_vars, clauses, clean=False, deadline=None):
    """Flatten clauses into internal literals in compact arrays.

    Tautologies are dropped and repeated literals merged unless ``clean``
    promises there are none. Returns ``None`` when an empty clause makes the
    formula trivially unsat. Large inputs are checked against ``deadline``
    every 2**16 clauses.
    """
    flat, starts, units = array("q"), array("q", [0]), []
    for count, clause in enumerate(clauses):
        if deadline is not None and not count & 0xFFFF and time.monotonic() > deadline:
            raise SolverUnknownError("time limit exhausted while loading clauses")
        if not clean:
            seen = dict.fromkeys(clause)
            if any(-lit in seen for lit in seen):
                continue
            clause = seen
        ilits = [2 * (l - 1) if l > 0 else 2 * (-l - 1) + 1 for l in clause]
        if len(ilits) < 2:
            if not ilits:
                return None
            units.append(ilits[0])
            continue
        flat.extend(ilits)
        starts.append(len(flat))
    lits = np.frombuffer(flat, dtype=np.int64).copy() if flat else np.zeros(0, np.int64)
    cstart = np.frombuffer(starts, dtype=np.int64).copy()
    nclauses = len(cstart) - 1
    whead = np.full(2 * max(num_vars, 1), -1, dtype=np.int64)
    wnext = np.full(2 * max(nclauses, 1), -1, dtype=np.int64)
    _link_watches(lits, cstart, whead, wnext)
    return lits, cstart, whead, wnext, units


@njit(cache=True, nogil=True)
def _link_watches(lits, cstart, whead, wnext):
    for ci in range(cstart.shape[0] - 1):
        for w in range(2):
            lit = lits[cstart[ci] + w]
            e = 2 * ci + w
            wnext[e] = whead[lit]
            whead[lit] = e


def dpll(num_vars, clauses, max_conflicts=None, time_limit=None, quota=20000,
         clean=False):
    """Decide ``clauses``; returns ``(True, model)`` or ``(False, None)``.

    ``clauses`` may be any iterable of literal sequences. ``model`` is a list
    of ``num_vars`` booleans. Raises ``SolverUnknownError``
    when ``max_conflicts`` or ``time_limit`` (seconds) runs out first.
    """
    deadline = None if time_limit is None else time.monotonic() + time_limit
    prepared = _prepare(num_vars, clauses, clean, deadline)
    if prepared is None:
        return False, None
    lits, cstart, whead, wnext, units = prepared
    vals = np.full(num_vars, -1, dtype=np.int8)
    trail = np.zeros(max(num_vars, 1), dtype=np.int64)
    st = np.zeros(6, dtype=np.int64)
    for lit in units:
        v = _lit_val(vals, lit)
        if v == 0:
            return False, None
        if v < 0:
            _assign(vals, trail, st, lit)
    lim = np.zeros(num_vars + 2, dtype=np.int64)
    dec_lit = np.zeros(num_vars + 2, dtype=np.int64)
    flipped = np.zeros(num_vars + 2, dtype=np.bool_)

    while True:
        step = quota
        if max_conflicts is not None:
            step = min(step, max_conflicts - int(st[_CONFLICTS]))
            if step <= 0:
                raise SolverUnknownError(
                    f"conflict budget of {max_conflicts} exhausted",
                    partial={"conflicts": int(st[_CONFLICTS])},
                )
        status = _run(vals, trail, st, lits, cstart, whead, wnext,
                      lim, dec_lit, flipped, step)
        if status == SAT:
            return True, (vals == 1).tolist()
        if status == UNSAT:
            return False, None
        if deadline is not None and time.monotonic() > deadline:
            raise SolverUnknownError(
                f"time limit of {time_limit}s exhausted",
                partial={"conflicts": int(st[_CONFLICTS])},
            )
