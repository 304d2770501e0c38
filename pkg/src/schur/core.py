"""Problem and certificate types, the monochromatic-solution checker, and a
backtracking oracle for tiny instances.

A problem ``S(r; k_1, ..., k_r)`` asks for the least ``N`` such that every
``r``-coloring of ``[1, N]`` has, for some color ``c``, a solution of

    x_1 + x_2 + ... + x_{k_c - 1} = x_{k_c}

with every ``x_i`` colored ``c``. Colors are 1-based everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ContractError, MalformedCertificateError, ResourceError

__all__ = [
    "ProblemSpec",
    "Coloring",
    "SolutionTuple",
    "BoundReport",
    "EXCEEDS_CAP",
    "is_solution",
    "enumerate_tuples",
    "find_mono_solution",
    "verify_valid",
    "brute_force_value",
]

EXCEEDS_CAP = "exceeds cap"


@dataclass(frozen=True)
class ProblemSpec:
    r: int
    ks: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(int(k) for k in self.ks)
        object.__setattr__(self, "ks", ks)
        if self.r < 1:
            raise ContractError(f"need at least one color, got r={self.r}")
        if len(ks) != self.r:
            raise ContractError(f"expected {self.r} equation lengths, got {len(ks)}")
        if any(k < 3 for k in ks):
            raise ContractError(f"equation lengths must be >= 3, got {ks}")

    @classmethod
    def of(cls, *ks: int) -> "ProblemSpec":
        """``ProblemSpec.of(3, 4, 5)`` is S(3; 3, 4, 5)."""
        return cls(len(ks), tuple(ks))

    @property
    def is_canonical(self) -> bool:
        return list(self.ks) == sorted(self.ks)

    def canonical(self) -> "ProblemSpec":
        return ProblemSpec(self.r, tuple(sorted(self.ks)))

    def k(self, color: int) -> int:
        if not 1 <= color <= self.r:
            raise ContractError(f"color {color} outside [1, {self.r}]")
        return self.ks[color - 1]

    @property
    def key(self) -> str:
        return "-".join(map(str, self.ks))

    def __str__(self):
        return f"S({self.r}; {', '.join(map(str, self.ks))})"


@dataclass(frozen=True)
class Coloring:
    """A map ``[1, n] -> [1, r]`` stored as ``colors[i - 1]``."""

    n: int
    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.n:
            raise MalformedCertificateError(
                f"coloring declares n={self.n} but lists {len(colors)} colors"
            )
        if self.r < 1:
            raise MalformedCertificateError(f"invalid color count r={self.r}")
        for i, c in enumerate(colors, start=1):
            if not 1 <= c <= self.r:
                raise MalformedCertificateError(
                    f"integer {i} has color {c}, outside [1, {self.r}]"
                )

    @classmethod
    def from_list(cls, colors: Sequence[int], r: int | None = None) -> "Coloring":
        colors = tuple(colors)
        if r is None:
            r = max(colors, default=1)
        return cls(len(colors), r, colors)

    @classmethod
    def from_classes(cls, classes: Sequence[Iterator[int]], n: int) -> "Coloring":
        """Build from color classes ``classes[c - 1]``; they must partition ``[1, n]``."""
        colors = [0] * n
        for c, members in enumerate(classes, start=1):
            for x in members:
                if not 1 <= x <= n:
                    raise MalformedCertificateError(f"{x} outside [1, {n}]")
                if colors[x - 1]:
                    raise MalformedCertificateError(f"{x} is in two color classes")
                colors[x - 1] = c
        missing = [i + 1 for i, c in enumerate(colors) if not c]
        if missing:
            raise MalformedCertificateError(f"uncolored integers: {missing[:10]}")
        return cls(n, len(classes), tuple(colors))

    def __call__(self, x: int) -> int:
        return self.colors[x - 1]

    def color_class(self, c: int) -> list[int]:
        return [i for i, col in enumerate(self.colors, start=1) if col == c]

    def restrict(self, m: int) -> "Coloring":
        if not 0 <= m <= self.n:
            raise ContractError(f"cannot restrict a coloring of [1,{self.n}] to [1,{m}]")
        return Coloring(m, self.r, self.colors[:m])

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "Coloring":
        if not isinstance(data, dict):
            raise MalformedCertificateError("coloring JSON must be an object")
        try:
            n, r, colors = data["n"], data["r"], data["colors"]
        except KeyError as exc:
            raise MalformedCertificateError(f"coloring JSON lacks key {exc}") from None
        if not (isinstance(n, int) and isinstance(r, int) and isinstance(colors, list)):
            raise MalformedCertificateError("coloring JSON has wrongly typed fields")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in colors):
            raise MalformedCertificateError("colors must be integers")
        return cls(n, r, tuple(colors))

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificateError(f"not valid JSON: {exc}") from None
        return cls.from_dict(data)


@dataclass(frozen=True)
class SolutionTuple:
    """A monochromatic solution ``(color; x_1, ..., x_k)``; ``xs[-1]`` is the sum."""

    color: int
    xs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(int(x) for x in self.xs))

    def to_dict(self) -> dict:
        return {"color": self.color, "xs": list(self.xs)}

    def __str__(self):
        return f"({self.color}; {list(self.xs)})"


@dataclass(frozen=True)
class BoundReport:
    """Named bounds for one problem. ``kind`` is lower, strict-lower, upper or exact."""

    spec: ProblemSpec
    entries: tuple[tuple[str, str, int], ...]

    def values(self, *kinds: str) -> list[int]:
        return [v for _, kind, v in self.entries if kind in kinds]

    @property
    def max_lower(self) -> int:
        """Largest proven ``S >= v``; ``S > v`` entries count as ``v + 1``."""
        cands = self.values("lower", "exact")
        cands += [v + 1 for v in self.values("strict-lower")]
        return max(cands)

    @property
    def min_upper(self) -> int | None:
        cands = self.values("upper", "exact")
        return min(cands) if cands else None

    @property
    def exact(self) -> int | None:
        vals = self.values("exact")
        return vals[0] if vals else None

    def to_dict(self) -> dict:
        return {
            "spec": {"r": self.spec.r, "ks": list(self.spec.ks)},
            "entries": [{"name": n, "kind": k, "value": v} for n, k, v in self.entries],
            "max_lower": self.max_lower,
            "min_upper": self.min_upper,
        }

    def to_text(self) -> str:
        rows = [(name, kind, str(v)) for name, kind, v in self.entries]
        rows.append(("best lower", "lower", str(self.max_lower)))
        if self.min_upper is not None:
            rows.append(("best upper", "upper", str(self.min_upper)))
        w0 = max(len(r[0]) for r in rows)
        w1 = max(len(r[1]) for r in rows)
        lines = [str(self.spec)]
        lines += [f"  {a:<{w0}}  {b:<{w1}}  {c}" for a, b, c in rows]
        return "\n".join(lines)


def is_solution(spec: ProblemSpec, c: int, xs: Sequence[int]) -> bool:
    k = spec.k(c)
    if len(xs) != k:
        raise ContractError(f"color {c} needs {k} values, got {len(xs)}")
    if any(x < 1 for x in xs):
        raise ContractError(f"solution members must be positive: {list(xs)}")
    return sum(xs[:-1]) == xs[-1]


def enumerate_tuples(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing ``(k-1)``-tuples of positive integers with sum <= n, lexicographically."""
    if k < 3:
        raise ContractError(f"equation length must be >= 3, got {k}")
    parts = k - 1
    if parts > n:
        return
    prefix = [0] * parts

    def rec(pos, lo, total):
        left = parts - pos
        # every remaining entry is >= x, so x is capped by the remaining budget
        hi = (n - total) // left
        for x in range(lo, hi + 1):
            prefix[pos] = x
            if left == 1:
                yield tuple(prefix)
            else:
                yield from rec(pos + 1, x, total + x)

    yield from rec(0, 1, 0)


def _check_fits(coloring: Coloring, spec: ProblemSpec):
    if coloring.r > spec.r:
        bad = next((c for c in coloring.colors if c > spec.r), None)
        if bad is not None:
            raise MalformedCertificateError(
                f"coloring uses color {bad} but {spec} has only {spec.r} colors"
            )


def _first_solution_in_class(members: list[int], k: int, n: int) -> tuple[int, ...] | None:
    # reach[j][idx]: bitset of sums of exactly j parts drawn (with repetition)
    # from members[idx:]; the greedy walk below then picks the lexicographically
    # smallest summand sequence that still completes to a member of the class.
    if not members:
        return None
    parts = k - 1
    mask = (1 << (n + 1)) - 1
    target = 0
    for x in members:
        target |= 1 << x
    m = len(members)
    reach = [[1] * (m + 1)]
    for j in range(1, parts + 1):
        row = [0] * (m + 1)
        prev = reach[j - 1]
        for idx in range(m - 1, -1, -1):
            row[idx] = row[idx + 1] | ((prev[idx] << members[idx]) & mask)
        reach.append(row)
    if not reach[parts][0] & target:
        return None
    chosen = []
    total, start = 0, 0
    for left in range(parts, 0, -1):
        for idx in range(start, m):
            x = members[idx]
            if (reach[left - 1][idx] << (total + x)) & target & mask:
                chosen.append(x)
                total += x
                start = idx
                break
        else:  # pragma: no cover - guarded by the reachability test above
            raise AssertionError("inconsistent reachability table")
    return tuple(chosen) + (total,)


def find_mono_solution(coloring: Coloring, spec: ProblemSpec) -> SolutionTuple | None:
    """First monochromatic solution in (color, lexicographic tuple) order, or None."""
    _check_fits(coloring, spec)
    for c in range(1, spec.r + 1):
        xs = _first_solution_in_class(coloring.color_class(c), spec.ks[c - 1], coloring.n)
        if xs is not None:
            return SolutionTuple(c, xs)
    return None


def verify_valid(coloring: Coloring, spec: ProblemSpec) -> bool:
    return find_mono_solution(coloring, spec) is None


def brute_force_value(spec: ProblemSpec, n_cap: int, max_states: int = 10**8):
    """Least N <= n_cap with no valid coloring of [1, N], by plain backtracking.

    Returns ``EXCEEDS_CAP`` when a valid coloring of ``[1, n_cap]`` exists.
    Raises ``ResourceError`` (``partial`` = longest valid prefix found) once more
    than ``max_states`` partial colorings have been visited.

    Each color keeps bitsets of the sums reachable with exactly ``j`` of its
    members; integer ``x`` may take color ``c`` unless ``x`` is already such a
    sum with ``j = k_c - 1``. This shares no code with the SAT route.
    """
    if n_cap < 1:
        raise ContractError("n_cap must be >= 1")
    r, ks = spec.r, spec.ks
    mask = (1 << (n_cap + 1)) - 1
    reach = [[1] + [0] * (k - 1) for k in ks]
    best = 0
    states = 0

    def extend(x):
        nonlocal best, states
        if x > n_cap:
            return True
        for c in range(r):
            rc = reach[c]
            k = ks[c]
            if (rc[k - 1] >> x) & 1:
                continue
            states += 1
            if states > max_states:
                raise ResourceError(
                    f"visited more than {max_states} states for {spec}", partial=best
                )
            saved = rc[:]
            for j in range(1, k):
                rc[j] |= (rc[j - 1] << x) & mask
            best = max(best, x)
            if extend(x + 1):
                return True
            reach[c] = saved
        return False

    if extend(1):
        return EXCEEDS_CAP
    return best + 1
