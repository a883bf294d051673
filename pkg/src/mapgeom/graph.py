"""Finite multigraphs, their automorphisms and Betti numbers."""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass, field

from .errors import GraphError, ParseError, ScaleBoundError

DEFAULT_AUTOMORPHISM_BOUND = 10


@dataclass(frozen=True)
class Graph:
    """Vertices are labelled; edges are index pairs and may repeat or be loops."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex label")
        n = len(self.vertices)
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) references an undeclared vertex")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def from_labels(cls, vertices, edges) -> Graph:
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        try:
            return cls(vertices, tuple((index[a], index[b]) for a, b in edges))
        except KeyError as exc:
            raise GraphError(f"edge endpoint {exc.args[0]!r} is not a declared vertex") from None

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            if a == b:
                return False
            key = (min(a, b), max(a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def index(self, label: str) -> int:
        return self._index[label]

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def multiplicities(self) -> Counter:
        return Counter((min(a, b), max(a, b)) for a, b in self.edges)

    def is_connected(self) -> bool:
        if self.order == 0:
            return False
        adj = [[] for _ in range(self.order)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        lines.extend(f"{self.vertices[a]} {self.vertices[b]}" for a, b in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> Graph:
        """Read ``vertices: a b c`` followed by one ``a b`` edge per line."""
        vertices = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            if vertices is None:
                head, sep, rest = line.partition(":")
                if not sep or head.strip() != "vertices":
                    raise ParseError("expected 'vertices:' header", lineno, 1)
                vertices = rest.split()
                if not vertices:
                    raise ParseError("no vertices declared", lineno, len(head) + 2)
                if len(set(vertices)) != len(vertices):
                    raise ParseError("duplicate vertex label", lineno, len(head) + 2)
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("edge line must name exactly two vertices", lineno, 1)
            for tok in parts:
                if tok not in vertices:
                    raise ParseError(f"unknown vertex {tok!r}", lineno, raw.index(tok) + 1)
            edges.append((parts[0], parts[1]))
        if vertices is None:
            raise ParseError("empty graph file", 1, 1)
        return cls.from_labels(vertices, edges)


def automorphism_bound() -> int:
    return int(os.environ.get("MAPGEOM_AUTOMORPHISM_BOUND", DEFAULT_AUTOMORPHISM_BOUND))


def graph_automorphisms(G: Graph, bound: int | None = None) -> list[tuple[int, ...]]:
    """All vertex permutations preserving adjacency with multiplicity.

    Plain backtracking with degree and loop-count pruning; refuses graphs
    with more than ``bound`` vertices.
    """
    if bound is None:
        bound = automorphism_bound()
    n = G.order
    if n > bound:
        raise ScaleBoundError(f"graph has {n} vertices; automorphism search is bounded at {bound}")
    mult = [[0] * n for _ in range(n)]
    for a, b in G.edges:
        mult[a][b] += 1
        if a != b:
            mult[b][a] += 1
    deg = G.degrees()
    image = [-1] * n
    used = [False] * n
    out = []

    def extend(v):
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v] or mult[w][w] != mult[v][v]:
                continue
            if any(mult[v][u] != mult[w][image[u]] for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = -1

    extend(0)
    return out


def dart_automorphism_count(G: Graph, bound: int | None = None) -> int:
    """Order of the automorphism group acting on edge ends.

    Each vertex automorphism lifts in ``prod m!`` ways over parallel
    classes of multiplicity ``m``, and a loop may also swap its two ends.
    For simple graphs this equals ``len(graph_automorphisms(G))``.
    """
    lifts = 1
    for (a, b), m in G.multiplicities().items():
        lifts *= math.factorial(m) * (2**m if a == b else 1)
    return len(graph_automorphisms(G, bound)) * lifts


def betti(G: Graph) -> int:
    """Cycle rank ``edges - vertices + 1`` of a connected graph."""
    if not G.is_connected():
        raise GraphError("betti number requires a connected graph")
    return G.size - G.order + 1


def complete_graph(n: int) -> Graph:
    labels = [str(i + 1) for i in range(n)]
    return Graph(tuple(labels), tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    labels = [str(i + 1) for i in range(n)]
    return Graph(tuple(labels), tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    labels = [str(i + 1) for i in range(n)]
    return Graph(tuple(labels), tuple((i, i + 1) for i in range(n - 1)))


def bouquet(k: int) -> Graph:
    return Graph(("v",), tuple((0, 0) for _ in range(k)))
