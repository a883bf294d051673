"""Map geometries: angle factors on the vertices of a map.

Every angle factor is stored as the rational ``q`` with ``mu = q * pi``,
so the comparison of ``rho(u) * mu(u)`` with ``2 pi`` is an exact
comparison of ``rho * q`` with 2.  Angle sums are likewise returned as
rationals in units of pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .combinatorial_map import (
    CombinatorialMap,
    automorphisms,
    face_of,
    faces,
    induced_face_permutation,
    induced_vertex_permutation,
    isomorphisms,
    parse_map_lines,
    vertices,
)
from .embedding import genus_polynomial, map_classes
from .errors import GeometryError, GraphError, ParseError
from .graph import Graph, betti, graph_automorphisms


class PointClass(Enum):
    ELLIPTIC = "elliptic"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"

    def __str__(self) -> str:
        return self.value


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def __str__(self) -> str:
        return self.value


def _compare(a: Fraction, b: Fraction) -> Ordering:
    if a < b:
        return Ordering.LESS
    return Ordering.EQUAL if a == b else Ordering.GREATER


def angle_factor(value) -> Fraction:
    """Coerce to a rational ``q`` with ``0 < q < 1`` (``mu = q pi``)."""
    q = Fraction(value)
    if not 0 < q < 1:
        raise GeometryError(f"angle factor {q} pi is outside (0, pi)")
    return q


def point_class(rho: int, q: Fraction) -> PointClass:
    o = _compare(rho * Fraction(q), Fraction(2))
    return {Ordering.LESS: PointClass.ELLIPTIC, Ordering.EQUAL: PointClass.EUCLIDEAN}.get(o, PointClass.HYPERBOLIC)


def face_adjacency(M: CombinatorialMap) -> list[set[int]]:
    """Faces are adjacent when they share an edge."""
    owner = face_of(M)
    adj = [set() for _ in faces(M)]
    for i in range(M.base.size):
        fs = {owner[4 * i + t] for t in range(4)}
        for f in fs:
            adj[f] |= fs - {f}
    return adj


def _components(adj: Sequence[set[int]], keep: set[int]) -> list[set[int]]:
    comps = []
    seen = set()
    for start in sorted(keep):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if g in keep and g not in comp:
                    comp.add(g)
                    stack.append(g)
        seen |= comp
        comps.append(comp)
    return comps


def _check_boundary(M: CombinatorialMap, boundary: frozenset[int]) -> None:
    if not boundary:
        return
    phi = len(faces(M))
    bad = sorted(f for f in boundary if not 0 <= f < phi)
    if bad:
        raise GeometryError(f"unknown face f{bad[0]}")
    if len(boundary) > phi - 1:
        raise GeometryError(f"cannot remove {len(boundary)} of {phi} faces; at most {phi - 1} may form the boundary")
    adj = face_adjacency(M)
    keep = set(range(phi)) - boundary
    comps = _components(adj, keep)
    if len(comps) > 1:
        separating = next(f for f in sorted(boundary) if sum(1 for c in comps if adj[f] & c) > 1)
        raise GeometryError(f"removing face f{separating} disconnects the remaining faces")


@dataclass(frozen=True)
class MapGeometry:
    map: CombinatorialMap
    mu: tuple[Fraction, ...]
    boundary: frozenset[int] = frozenset()

    def __post_init__(self):
        vs = vertices(self.map)
        mu = tuple(Fraction(x) for x in self.mu)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "boundary", frozenset(self.boundary))
        if len(mu) != len(vs):
            raise GeometryError(f"{len(mu)} angle factors for {len(vs)} vertices")
        for v in vs:
            if v.valency < 3:
                raise GeometryError(f"vertex v{v.index} has valency {v.valency} < 3")
            if not 0 < mu[v.index] < 1:
                raise GeometryError(f"angle factor of v{v.index} is {mu[v.index]} pi, outside (0, pi)")
        _check_boundary(self.map, self.boundary)

    def valency(self, u: int) -> int:
        return vertices(self.map)[self._vertex(u)].valency

    def _vertex(self, u: int) -> int:
        if not 0 <= u < len(self.mu):
            raise GeometryError(f"unknown vertex v{u}")
        return u

    def classes(self) -> list[PointClass]:
        return [classify_vertex(self, u) for u in range(len(self.mu))]


def classify_vertex(g: MapGeometry, u: int) -> PointClass:
    return point_class(g.valency(u), g.mu[u])


def canonical_angle(rho: int, target: PointClass) -> Fraction:
    """``2/rho`` (euclidean), ``1/rho`` (elliptic) or the midpoint of
    ``(2/rho, 1)`` (hyperbolic), all in units of pi."""
    if rho < 3:
        raise GeometryError(f"valency {rho} < 3 admits no angle factor choice")
    flat = Fraction(2, rho)
    if target is PointClass.EUCLIDEAN:
        return flat
    if target is PointClass.ELLIPTIC:
        return flat / 2
    return (flat + 1) / 2


def make_assignment(M: CombinatorialMap, targets) -> MapGeometry:
    vs = vertices(M)
    if isinstance(targets, Mapping):
        targets = [targets[v.index] for v in vs]
    targets = [PointClass(t) for t in targets]
    if len(targets) != len(vs):
        raise GeometryError(f"{len(targets)} targets for {len(vs)} vertices")
    return MapGeometry(M, tuple(canonical_angle(v.valency, t) for v, t in zip(vs, targets)))


def with_boundary(g: MapGeometry, boundary) -> MapGeometry:
    boundary = frozenset(boundary)
    if not boundary:
        raise GeometryError("a boundary needs at least one face")
    return MapGeometry(g.map, g.mu, boundary)


def equivalent(g1: MapGeometry, g2: MapGeometry) -> bool:
    """True when some map isomorphism carries point classes and boundary
    faces of ``g1`` onto those of ``g2``."""
    if len(g1.mu) != len(g2.mu) or len(g1.boundary) != len(g2.boundary):
        return False
    c1, c2 = g1.classes(), g2.classes()
    if sorted(map(str, c1)) != sorted(map(str, c2)):
        return False
    for theta in isomorphisms(g1.map, g2.map):
        vmap = induced_vertex_permutation(g1.map, g2.map, theta.mapping)
        if any(c1[u] is not c2[vmap[u]] for u in range(len(c1))):
            continue
        if g1.boundary:
            fmap = induced_face_permutation(g1.map, g2.map, theta.mapping)
            if {fmap[f] for f in g1.boundary} != g2.boundary:
                continue
        return True
    return False


# ---------------------------------------------------------------------------
# counting


def count_prop45(n: int, m: int, maps: int) -> tuple[int, int]:
    if min(n, m, maps) < 1:
        raise ValueError("n, m and the number of maps must be positive")
    return 3**n * maps, 3**n * m * maps


def _require_simple(G: Graph) -> None:
    if not G.simple:
        raise GraphError("the closed forms are stated for simple graphs")
    if not G.is_connected():
        raise GraphError("graph is disconnected")


def count_prop46(G: Graph) -> tuple[Fraction, Fraction]:
    """Closed forms for geometries without boundary, as exact rationals."""
    _require_simple(G)
    prod = math.prod(math.factorial(d - 1) for d in G.degrees())
    n_o = Fraction(3 ** G.order * prod, 2 * len(graph_automorphisms(G)))
    return n_o, (2 ** betti(G) - 1) * n_o


def count_prop47(G: Graph) -> tuple[Fraction, Fraction]:
    """Closed forms for geometries with one boundary face."""
    _require_simple(G)
    prod = math.prod(math.factorial(d - 1) for d in G.degrees())
    beta = betti(G)
    bracket = (beta + 1) * prod - 2 * genus_polynomial(G).derivative_at_one()
    n_o = Fraction(3 ** G.order, 2 * len(graph_automorphisms(G))) * bracket
    return n_o, (2**beta - 1) * n_o


def _cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if not seen[i]:
            count += 1
            while not seen[i]:
                seen[i] = True
                i = perm[i]
    return count


def _burnside_terms(G: Graph, orientable_only: bool):
    for cls in map_classes(G, orientable_only):
        M = cls.representative
        auts = automorphisms(M)
        fixed = sum(3 ** _cycle_count(induced_vertex_permutation(M, M, t.mapping)) for t in auts)
        yield cls.orientable, Fraction(fixed, len(auts))


def burnside_count(G: Graph, orientable_only: bool = True) -> int:
    """Point-class vectors up to map automorphism, summed over the
    non-isomorphic maps underlying G."""
    total = sum((t for _, t in _burnside_terms(G, orientable_only)), Fraction(0))
    assert total.denominator == 1
    return int(total)


def burnside_split(G: Graph) -> tuple[int, int]:
    """``burnside_count`` over all embeddings, split into orientable and
    non-orientable maps."""
    parts = {True: Fraction(0), False: Fraction(0)}
    for orientable, t in _burnside_terms(G, False):
        parts[orientable] += t
    return int(parts[True]), int(parts[False])


# ---------------------------------------------------------------------------
# polygons


def polygon_angle_sum(k: int, points: Sequence[tuple[int, Fraction]]) -> Fraction:
    """``(k + |H| - 2) - (1/2) sum rho * q`` in units of pi."""
    if k < 3:
        raise GeometryError(f"a polygon needs at least 3 sides, got {k}")
    if len(points) > k:
        raise GeometryError(f"{len(points)} points on {k} sides; at most one per side")
    total = Fraction(k + len(points) - 2)
    for rho, q in points:
        if rho < 3:
            raise GeometryError(f"valency {rho} < 3")
        total -= Fraction(rho) * angle_factor(q) / 2
    return total


def triangle_class_sum(points: Sequence[tuple[int, Fraction]]) -> Ordering:
    """How the angle sum of a triangle through ``points`` compares with pi."""
    return _compare(polygon_angle_sum(3, points), Fraction(1))


# ---------------------------------------------------------------------------
# file format


def _parse_index(token: str, prefix: str, lineno: int, col: int) -> int:
    if not token.startswith(prefix) or not token[len(prefix):].isdigit():
        raise ParseError(f"expected {prefix}<index>, got {token!r}", lineno, col)
    return int(token[len(prefix):])


def parse_geometry(text: str) -> MapGeometry:
    """A map file plus ``mu: v0 2/3`` lines and an optional ``boundary: f0 f1``."""
    M, extra = parse_map_lines(text)
    nu = len(vertices(M))
    mu = {}
    boundary = set()
    seen_boundary = False
    for lineno, raw in extra:
        key, _, rest = raw.split("#", 1)[0].partition(":")
        key = key.strip()
        col = raw.index(":") + 2
        if key == "mu":
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError("expected 'mu: <vertex> <p>/<q>'", lineno, col)
            u = _parse_index(parts[0], "v", lineno, raw.index(parts[0]) + 1)
            if u >= nu:
                raise ParseError(f"unknown vertex v{u}", lineno, raw.index(parts[0]) + 1)
            if u in mu:
                raise ParseError(f"duplicate angle factor for v{u}", lineno, raw.index(parts[0]) + 1)
            try:
                q = Fraction(parts[1])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {parts[1]!r}", lineno, raw.rindex(parts[1]) + 1) from None
            if not 0 < q < 1:
                raise ParseError(f"angle factor of v{u} is {q} pi, outside (0, pi)", lineno, raw.rindex(parts[1]) + 1)
            mu[u] = q
        elif key == "boundary":
            if seen_boundary:
                raise ParseError("duplicate 'boundary:' line", lineno, 1)
            seen_boundary = True
            for tok in rest.split():
                boundary.add(_parse_index(tok, "f", lineno, raw.index(tok) + 1))
        else:
            raise ParseError(f"unexpected key {key!r}", lineno, 1)
    missing = [u for u in range(nu) if u not in mu]
    if missing:
        raise ParseError(f"no angle factor for v{missing[0]}", len(text.splitlines()) or 1, 1)
    return MapGeometry(M, tuple(mu[u] for u in range(nu)), frozenset(boundary))


def format_geometry(g: MapGeometry) -> str:
    lines = [g.map.to_text().rstrip("\n")]
    lines.extend(f"mu: v{u} {q}" for u, q in enumerate(g.mu))
    if g.boundary:
        lines.append("boundary: " + " ".join(f"f{f}" for f in sorted(g.boundary)))
    return "\n".join(lines) + "\n"
