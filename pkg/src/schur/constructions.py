"""Explicit witness colorings and the difference embedding into edge colorings.

Coloring edge ``{a, b}`` of ``K_{N+1}`` by the color of ``b - a`` turns every
monochromatic clique ``a_0 < ... < a_{k-1}`` into the monochromatic solution

    (a_1 - a_0) + ... + (a_{k-1} - a_{k-2}) = a_{k-1} - a_0,

which is why Ramsey numbers bound Schur numbers from above.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .core import Coloring, ProblemSpec, SolutionTuple, is_solution
from .errors import CertificateError, ContractError, MalformedCertificateError, ResourceError

__all__ = [
    "EdgeColoring",
    "case1_coloring",
    "case2_coloring",
    "difference_edge_coloring",
    "clique_to_solution",
    "find_mono_clique",
]

DEFAULT_CLIQUE_CAP = 64


def case1_coloring(u: int) -> Coloring:
    """Valid coloring of ``[1, 5u - 1]`` for S(3; 3, 3, u), u >= 5."""
    if u < 5:
        raise ContractError(f"the (3, 3, u) construction needs u >= 5, got {u}")
    n = 5 * u - 1
    a1 = [1, 4, 6, 9, 5 * u - 5, 5 * u - 2]
    a2 = [2, 3, 7, 8, 5 * u - 4, 5 * u - 3]
    a3 = [5, 5 * u - 1, *range(10, 5 * u - 5)]
    return Coloring.from_classes([a1, a2, a3], n)


def case2_coloring(u: int) -> Coloring:
    """Valid coloring of ``[1, 7u - 1]`` for S(3; 3, 4, u), u >= 4."""
    if u < 4:
        raise ContractError(f"the (3, 4, u) construction needs u >= 4, got {u}")
    n = 7 * u - 1
    a1 = [1, 6, 8, 7 * u - 7, 7 * u - 5]
    a2 = [*range(2, 6), *range(7 * u - 4, 7 * u)]
    a3 = [7, 7 * u - 6, *range(9, 7 * u - 7)]
    return Coloring.from_classes([a1, a2, a3], n)


@dataclass(frozen=True)
class EdgeColoring:
    """Edge coloring of ``K_m`` on vertices ``0..m-1``.

    ``colors`` is row-major over the upper triangle:
    (0,1), (0,2), ..., (0,m-1), (1,2), ...
    """

    m: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.m < 0 or len(self.colors) != self.m * (self.m - 1) // 2:
            raise MalformedCertificateError(
                f"K_{self.m} has {self.m * (self.m - 1) // 2} edges, got {len(self.colors)} colors"
            )
        if any(c < 1 for c in self.colors):
            raise MalformedCertificateError("edge colors are 1-based")

    @property
    def vertex_count(self) -> int:
        return self.m

    def _offset(self, a: int, b: int) -> int:
        # edges (a, a+1..m-1) start after rows 0..a-1
        return a * (2 * self.m - a - 1) // 2 + (b - a - 1)

    def color_of(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        if not 0 <= a < b < self.m:
            raise ContractError(f"({a}, {b}) is not an edge of K_{self.m}")
        return self.colors[self._offset(a, b)]

    def to_dict(self) -> dict:
        return {"m": self.m, "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        data = json.loads(text)
        return cls(data["m"], tuple(data["colors"]))


def difference_edge_coloring(coloring: Coloring) -> EdgeColoring:
    m = coloring.n + 1
    colors = coloring.colors
    return EdgeColoring(m, tuple(colors[b - a - 1] for a in range(m) for b in range(a + 1, m)))


def clique_to_solution(vertices: Sequence[int], coloring: Coloring,
                       spec: ProblemSpec | None = None) -> SolutionTuple:
    """Turn a monochromatic clique of the difference edge coloring into a solution.

    With ``spec`` given, the clique size must match the equation length of its color.
    """
    vs = list(vertices)
    if len(vs) < 3 or any(a >= b for a, b in zip(vs, vs[1:])):
        raise ContractError(f"need at least 3 strictly increasing vertices, got {vs}")
    if vs[0] < 0 or vs[-1] > coloring.n:
        raise ContractError(f"vertices must lie in [0, {coloring.n}]")
    c = coloring(vs[1] - vs[0])
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if coloring(b - a) != c:
                raise CertificateError(
                    f"not monochromatic: pair {{{a},{b}}} has color {coloring(b - a)}, "
                    f"pair {{{vs[0]},{vs[1]}}} has color {c}"
                )
    xs = [b - a for a, b in zip(vs, vs[1:])] + [vs[-1] - vs[0]]
    if spec is not None:
        if spec.k(c) != len(xs):
            raise ContractError(f"clique of size {len(xs)} but color {c} has k={spec.k(c)}")
        assert is_solution(spec, c, xs)
    return SolutionTuple(c, tuple(xs))


def find_mono_clique(ec: EdgeColoring, c: int, k: int, cap: int = DEFAULT_CLIQUE_CAP):
    """Lexicographically first ``k``-clique all of whose edges have color ``c``."""
    if ec.m > cap:
        raise ResourceError(f"K_{ec.m} exceeds the clique-search cap of {cap} vertices")
    m = ec.m
    nbrs = [
        {b for b in range(a + 1, m) if ec.color_of(a, b) == c} for a in range(m)
    ]
    chosen = []

    def extend(cands):
        if len(chosen) == k:
            return True
        for v in sorted(cands):
            if len(chosen) + 1 + sum(1 for w in cands if w > v) < k:
                break
            chosen.append(v)
            if extend(cands & nbrs[v]):
                return True
            chosen.pop()
        return False

    if k <= 0:
        return []
    if extend(set(range(m))):
        return list(chosen)
    return None
