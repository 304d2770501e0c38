"""Closed-form and recursive bounds on generalized Schur numbers.

All arithmetic is on Python integers, so nothing wraps and nothing is
rounded. Lists of equation lengths are expected sorted nondecreasing where a
bound's hypothesis asks for it; unsorted input is rejected, not reordered.
"""

from __future__ import annotations

import json
from itertools import combinations, product
from math import factorial, prod
from pathlib import Path
from typing import Mapping, Sequence

from .core import BoundReport, ProblemSpec
from .errors import ContractError

__all__ = [
    "product_lower_bound",
    "step_lower_bound",
    "iterated_lower_bound",
    "robertson_schaal_exact",
    "two_color_corollary_bound",
    "conjecture_values",
    "schur_classic_bounds",
    "znam_diagonal_lb",
    "znam_lower_bound_for_length",
    "ramsey_upper_bound",
    "best_bounds",
    "load_ramsey_table",
    "ramsey_key",
    "ramsey_brute_force",
]


def _require_sorted(ks: Sequence[int]):
    if not ks:
        raise ContractError("need at least one equation length")
    if any(k < 3 for k in ks):
        raise ContractError(f"equation lengths must be >= 3, got {list(ks)}")
    if list(ks) != sorted(ks):
        raise ContractError(f"equation lengths must be sorted nondecreasing, got {list(ks)}")


def _tail_products_sum(ks: Sequence[int], start: int, stop: int) -> int:
    # sum over i in [start, stop) of prod(ks[i + 1:])
    return sum(prod(ks[i + 1:]) for i in range(start, stop))


def product_lower_bound(ks: Sequence[int]) -> int:
    """``prod(ks) - sum_{i>=1} prod(ks[i:]) - 1``; S(r; ks) is at least this."""
    _require_sorted(ks)
    return prod(ks) - sum(prod(ks[i:]) for i in range(1, len(ks))) - 1


def step_lower_bound(prev: int, k: int) -> int:
    """Lower bound ``k * prev - 1`` for one more color with equation length ``k``."""
    if prev < 2 or k < 3:
        raise ContractError(f"need prev >= 2 and k >= 3, got prev={prev}, k={k}")
    return k * prev - 1


def iterated_lower_bound(ks: Sequence[int], m: int, base: int) -> int:
    """Apply the one-color step ``r - m`` times starting from ``base`` = S(m; ks[:m]).

    Closed form: ``prod(ks[m:]) * base - sum_{i=m}^{r-1} prod(ks[i+1:])``.
    """
    _require_sorted(ks)
    r = len(ks)
    if not 2 <= m <= r - 1:
        raise ContractError(f"m must lie in [2, {r - 1}], got {m}")
    return prod(ks[m:]) * base - _tail_products_sum(ks, m, r)


def robertson_schaal_exact(s: int, t: int) -> int:
    """Exact two-color value S(2; s, t) for 3 <= s <= t."""
    if not 3 <= s <= t:
        raise ContractError(f"need 3 <= s <= t, got s={s}, t={t}")
    if s == 3:
        return 3 * t - 4 if t % 2 else 3 * t - 5
    return s * t - t - 1


def two_color_corollary_bound(ks: Sequence[int]) -> int:
    _require_sorted(ks)
    if len(ks) < 3:
        raise ContractError(f"needs at least three colors, got {len(ks)}")
    return iterated_lower_bound(ks, 2, robertson_schaal_exact(ks[0], ks[1]))


def conjecture_values(s: int, t: int, u: int) -> tuple[int, int]:
    """``(stu - tu - u - 1, 2tu - u - 1)``.

    The first is a proven lower bound when s >= 4 and conjectured exact; the
    second is a proven strict lower bound when s = 3.
    """
    if not 3 <= s <= t <= u:
        raise ContractError(f"need 3 <= s <= t <= u, got ({s}, {t}, {u})")
    return s * t * u - t * u - u - 1, 2 * t * u - u - 1


def schur_classic_bounds(r: int) -> tuple[int, int]:
    """``((3^r + 1) / 2, floor(r! e))`` for the classical Schur number S(r; 3, ..., 3).

    For r >= 1, ``floor(r! e) = sum_{i=0}^{r} r!/i!`` because the tail
    ``sum_{i>r} r!/i!`` lies strictly between 0 and 1.
    """
    if r < 1:
        raise ContractError(f"r must be >= 1, got {r}")
    lower = (3**r + 1) // 2
    upper = sum(factorial(r) // factorial(i) for i in range(r + 1))
    return lower, upper


def znam_diagonal_lb(r: int, k: int) -> int:
    """``(k - 1)/k * ((k + 1)^r - 1) + 1`` exactly as printed.

    Here ``k`` counts the summands, i.e. the equation has ``k + 1`` variables;
    reading ``k`` as the equation length overshoots the true value (r=3, k=3
    gives 43 while S(3; 3, 3, 3) = 14). See :func:`znam_lower_bound_for_length`.
    """
    if r < 1 or k < 2:
        raise ContractError(f"need r >= 1 and k >= 2, got r={r}, k={k}")
    return (k - 1) * ((k + 1) ** r - 1) // k + 1


def znam_lower_bound_for_length(r: int, length: int) -> int:
    """Znám's bound for S(r; length, ..., length), i.e. ``length - 1`` summands."""
    if length < 3:
        raise ContractError(f"equation length must be >= 3, got {length}")
    return znam_diagonal_lb(r, length - 1)


def ramsey_upper_bound(ramsey_value: int) -> int:
    """S(r; ks) <= R_r(ks) - 1, via coloring edge {a, b} by the color of b - a."""
    if not isinstance(ramsey_value, int) or ramsey_value < 2:
        raise ContractError(f"Ramsey value must be an integer >= 2, got {ramsey_value!r}")
    return ramsey_value - 1


def ramsey_key(ks: Sequence[int]) -> str:
    return ",".join(map(str, sorted(ks)))


def load_ramsey_table(path) -> dict[str, int]:
    """Read a JSON map ``{"3,3,3": 17, ...}``; keys are normalized to sorted order."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ContractError("Ramsey table must be a JSON object")
    table = {}
    for key, value in data.items():
        try:
            ks = [int(p) for p in key.split(",")]
        except ValueError:
            raise ContractError(f"bad Ramsey table key {key!r}") from None
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ContractError(f"Ramsey value for {key!r} must be a positive integer")
        table[ramsey_key(ks)] = value
    return table


def ramsey_brute_force(ks: Sequence[int], m: int) -> bool:
    """True iff some edge coloring of K_m avoids a k_c-clique in every color c.

    Exhaustive over all colorings, so only usable for tiny cases such as R(3,3).
    """
    vertices = range(m)
    pairs = list(combinations(vertices, 2))
    index = {p: i for i, p in enumerate(pairs)}
    cliques = [
        [[index[e] for e in combinations(q, 2)] for q in combinations(vertices, k)]
        for k in ks
    ]
    for assignment in product(range(len(ks)), repeat=len(pairs)):
        if not any(
            all(assignment[e] == c for e in q)
            for c, qs in enumerate(cliques)
            for q in qs
        ):
            return True
    return False


def best_bounds(spec: ProblemSpec, ramsey_table: Mapping[str, int] | None = None) -> BoundReport:
    if not spec.is_canonical:
        raise ContractError(f"{spec} is not in canonical (sorted) form")
    ks = list(spec.ks)
    r = spec.r
    entries = [("product formula", "lower", product_lower_bound(ks))]
    if r == 1:
        entries.append(("single color", "exact", ks[0] - 1))
    if r == 2:
        entries.append(("two-color exact", "exact", robertson_schaal_exact(*ks)))
    if r >= 3:
        entries.append(("from two-color value", "lower", two_color_corollary_bound(ks)))
        for m in range(3, r):
            entries.append((f"iterated from m={m}", "lower",
                            iterated_lower_bound(ks, m, product_lower_bound(ks[:m]))))
    if r == 3:
        s, t, u = ks
        conj2, conj1 = conjecture_values(s, t, u)
        if s >= 4:
            entries.append(("stu-tu-u-1", "lower", conj2))
        elif t > 3 or u > 3:
            entries.append(("2tu-u-1", "strict-lower", conj1))
    if len(set(ks)) == 1:
        entries.append(("Znam (diagonal)", "lower", znam_lower_bound_for_length(r, ks[0])))
        if ks[0] == 3:
            lo, hi = schur_classic_bounds(r)
            entries.append(("Schur (3^r+1)/2", "lower", lo))
            entries.append(("Schur floor(r! e)", "upper", hi))
    if ramsey_table:
        value = ramsey_table.get(ramsey_key(ks))
        if value is not None:
            entries.append(("Ramsey embedding", "upper", ramsey_upper_bound(value)))
    return BoundReport(spec, tuple(entries))
