"""Rotation systems, twisted embeddings and genus polynomials.

Edge ``i = (u, v)`` of a graph owns two ends: end ``2i`` at ``u`` and end
``2i + 1`` at ``v``.  A rotation system lists, for each vertex, its ends
in cyclic order.  In the resulting map, base element ``e{i}`` carries the
quadricell ``x`` at end ``2i`` and ``alpha*beta x`` (untwisted) or
``beta x`` (twisted) at end ``2i + 1``; P walks those quadricells in
rotation order and their alpha images backwards.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import _kernels
from .combinatorial_map import CombinatorialMap, automorphism_count, canonical_code, census
from .errors import GraphError, ScaleBoundError
from .graph import Graph, betti, dart_automorphism_count

DEFAULT_SCALE_BOUND = 200_000


def scale_bound() -> int:
    return int(os.environ.get("MAPGEOM_SCALE_BOUND", DEFAULT_SCALE_BOUND))


def _require_connected(G: Graph) -> None:
    if G.size == 0:
        raise GraphError("graph has no edges")
    if not G.is_connected():
        raise GraphError("graph is disconnected")


def incident_ends(G: Graph) -> list[list[int]]:
    ends = [[] for _ in range(G.order)]
    for i, (a, b) in enumerate(G.edges):
        ends[a].append(2 * i)
        ends[b].append(2 * i + 1)
    return ends


def rotation_count(G: Graph) -> int:
    return math.prod(math.factorial(d - 1) for d in G.degrees() if d > 0)


def embedding_count(G: Graph, locally_orientable: bool = False) -> int:
    n = rotation_count(G)
    return n * 2 ** betti(G) if locally_orientable else n


def rotation_systems(G: Graph) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every rotation system, in lexicographic order of the choice vector.

    The first end at each vertex is fixed; the rest are permuted.
    """
    _require_connected(G)
    per_vertex = []
    for ends in incident_ends(G):
        first, rest = ends[0], ends[1:]
        per_vertex.append([(first,) + p for p in itertools.permutations(rest)])
    return itertools.product(*per_vertex)


def spanning_tree(G: Graph) -> frozenset[int]:
    """Edges of the breadth-first spanning tree from vertex 0, taking the
    lowest-indexed edge that reaches each new vertex."""
    adj = [[] for _ in range(G.order)]
    for i, (a, b) in enumerate(G.edges):
        adj[a].append((i, b))
        if a != b:
            adj[b].append((i, a))
    seen = {0}
    tree = set()
    queue = [0]
    for v in queue:
        for i, w in adj[v]:
            if w not in seen:
                seen.add(w)
                tree.add(i)
                queue.append(w)
    return frozenset(tree)


def cotree_edges(G: Graph) -> tuple[int, ...]:
    tree = spanning_tree(G)
    return tuple(i for i in range(G.size) if i not in tree)


def map_from_rotation(G: Graph, rotation: Sequence[Sequence[int]], twisted: Sequence[int] = ()) -> CombinatorialMap:
    """Build the map of a rotation system; edges listed in ``twisted`` carry a twist."""
    tw = set(twisted)
    P = [0] * (4 * G.size)

    def positive(end):
        i = end >> 1
        if end & 1:
            return 4 * i + (2 if i in tw else 3)
        return 4 * i

    for ends in rotation:
        hs = [positive(e) for e in ends]
        k = len(hs)
        for j in range(k):
            a, b = hs[j], hs[(j + 1) % k]
            P[a] = b
            P[b ^ 1] = a ^ 1
    return CombinatorialMap(tuple(f"e{i}" for i in range(G.size)), P)


def enumerate_orientable(G: Graph) -> Iterator[CombinatorialMap]:
    """One map per rotation system; ``prod (deg(v) - 1)!`` maps in total."""
    for rot in rotation_systems(G):
        yield map_from_rotation(G, rot)


def enumerate_locally_orientable(G: Graph) -> Iterator[CombinatorialMap]:
    """Rotation systems combined with a twist bit on every co-tree edge.

    Spanning-tree edges are never twisted.  The all-zero twist comes first
    for each rotation, so that subsequence equals :func:`enumerate_orientable`.
    """
    cotree = cotree_edges(G)
    for rot in rotation_systems(G):
        for bits in itertools.product((0, 1), repeat=len(cotree)):
            yield map_from_rotation(G, rot, [e for e, b in zip(cotree, bits) if b])


@dataclass(frozen=True)
class GenusPolynomial:
    """``coefficients[k]`` counts orientable embeddings of genus ``k``."""

    coefficients: tuple[int, ...]

    @property
    def min_genus(self) -> int:
        return next(k for k, c in enumerate(self.coefficients) if c)

    @property
    def max_genus(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def total(self) -> int:
        return sum(self.coefficients)

    def derivative_at_one(self) -> int:
        return sum(k * c for k, c in enumerate(self.coefficients))

    def __call__(self, x):
        return sum(c * x**k for k, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                terms.append(f"{coef}x" if k == 1 else f"{coef}x^{k}")
        return " + ".join(terms) if terms else "0"


def _check_scale(G: Graph, locally_orientable: bool) -> int:
    n = embedding_count(G, locally_orientable)
    bound = scale_bound()
    if n > bound:
        raise ScaleBoundError(f"{n} embeddings exceed the scale bound of {bound} (MAPGEOM_SCALE_BOUND)")
    return n


def genus_polynomial(G: Graph) -> GenusPolynomial:
    _require_connected(G)
    _check_scale(G, False)
    tally = {}
    eps = G.size
    for rot in rotation_systems(G):
        M = map_from_rotation(G, rot)
        nu = _kernels.cycle_count(M.P) // 2
        phi = _kernels.cycle_count(_kernels.face_permutation(M.P)) // 2
        g = (2 - (nu - eps + phi)) // 2
        tally[g] = tally.get(g, 0) + 1
    return GenusPolynomial(tuple(tally.get(k, 0) for k in range(max(tally) + 1)))


@dataclass(frozen=True)
class MapClass:
    representative: CombinatorialMap
    automorphisms: int
    members: int
    orientable: bool


def map_classes(G: Graph, orientable_only: bool = True) -> list[MapClass]:
    """Isomorphism classes of the enumerated embeddings, in order of first
    appearance."""
    _require_connected(G)
    _check_scale(G, not orientable_only)
    maps = enumerate_orientable(G) if orientable_only else enumerate_locally_orientable(G)
    classes = {}
    for M in maps:
        code = canonical_code(M)
        if code in classes:
            rep, aut, k, ori = classes[code]
            classes[code] = (rep, aut, k + 1, ori)
        else:
            classes[code] = (M, automorphism_count(M), 1, census(M).orientable)
    return [MapClass(*v) for v in classes.values()]


@dataclass(frozen=True)
class ClassCount:
    classes: int
    checksum: Fraction
    raw: int


def count_nonisomorphic_maps(G: Graph, orientable_only: bool = True) -> ClassCount:
    """Number of isomorphism classes, with the orbit-stabilizer checksum
    ``sum 2|Aut G| / |Aut M|`` that should equal the raw embedding count.
    Aut G acts on edge ends, so loops and parallel edges are accounted for."""
    classes = map_classes(G, orientable_only)
    group = 2 * dart_automorphism_count(G)
    checksum = sum((Fraction(group, c.automorphisms) for c in classes), Fraction(0))
    return ClassCount(len(classes), checksum, sum(c.members for c in classes))
