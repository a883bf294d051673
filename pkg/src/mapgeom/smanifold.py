"""Closed triangular maps with vertex valencies 5, 6 and 7.

A valency-5 vertex is elliptic, 6 euclidean and 7 hyperbolic (equilateral
triangles meeting at a point).  The class of a map is fixed by which of
the three valencies occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorial_map import CombinatorialMap, census, faces, vertices
from .errors import NotSManifoldError

VERTEX_LABELS = {5: "elliptic", 6: "euclidean", 7: "hyperbolic"}

_CLASSES = {
    frozenset({5}): ("Δ1", "elliptic"),
    frozenset({6}): ("Δ2", "euclidean"),
    frozenset({7}): ("Δ3", "hyperbolic"),
    frozenset({5, 6}): ("Δ4", "euclid-elliptic"),
    frozenset({5, 7}): ("Δ5", "elliptic-hyperbolic"),
    frozenset({6, 7}): ("Δ6", "euclid-hyperbolic"),
    frozenset({5, 6, 7}): ("Δ7", "mixed"),
}


@dataclass(frozen=True)
class TriangularCheck:
    ok: bool
    reason: str
    corner_count_ok: bool

    def __bool__(self) -> bool:
        return self.ok


def is_closed_triangular(M: CombinatorialMap) -> TriangularCheck:
    fs = faces(M)
    eps = M.base.size
    corner_count_ok = 3 * len(fs) == 2 * eps
    bad = [f for f in fs if f.valency != 3]
    if bad:
        f = min(bad, key=lambda f: (f.valency, f.index))
        return TriangularCheck(False, f"face f{f.index} has face degree {f.valency}", corner_count_ok)
    return TriangularCheck(True, "every face is a triangle", corner_count_ok)


@dataclass(frozen=True)
class SManifoldClass:
    tag: str
    label: str
    valencies: dict

    def as_dict(self) -> dict:
        return {"class": self.tag, "label": self.label, "valencies": {str(k): v for k, v in sorted(self.valencies.items())}}


def classify(M: CombinatorialMap) -> SManifoldClass:
    check = is_closed_triangular(M)
    if not check:
        raise NotSManifoldError(check.reason)
    counts = {}
    for v in vertices(M):
        if v.valency not in VERTEX_LABELS:
            raise NotSManifoldError(f"vertex v{v.index} has valency {v.valency}, not 5, 6 or 7")
        counts[v.valency] = counts.get(v.valency, 0) + 1
    tag, label = _CLASSES[frozenset(counts)]
    return SManifoldClass(tag, label, counts)


@dataclass(frozen=True)
class EulerRelation:
    """``nu = coefficient * chi`` for a q-regular triangular map, or
    ``chi = 0`` when the coefficient is undefined (q = 6)."""

    q: int
    coefficient: Fraction | None

    def holds(self, nu: int, chi: int) -> bool:
        if self.coefficient is None:
            return chi == 0
        return nu == self.coefficient * chi

    def __str__(self) -> str:
        if self.coefficient is None:
            return "chi = 0"
        return f"nu = {self.coefficient}*chi"


def euler_arithmetic(q: int) -> EulerRelation:
    """From ``q nu = 2 eps = 3 phi``: ``chi = nu (6 - q) / 6``."""
    if q not in VERTEX_LABELS:
        raise ValueError(f"valency {q} is not 5, 6 or 7")
    if q == 6:
        return EulerRelation(q, None)
    return EulerRelation(q, Fraction(6, 6 - q))


def check_euler(M: CombinatorialMap) -> bool:
    """Euler relation on a regular triangular map, or the weighted sum
    ``sum (6 - rho) = 6 chi`` in general."""
    c = census(M)
    vals = set(c.vertex_valencies)
    if len(vals) == 1 and vals <= set(VERTEX_LABELS):
        return euler_arithmetic(vals.pop()).holds(c.nu, c.chi)
    return sum(6 - r for r in c.vertex_valencies) == 6 * c.chi
