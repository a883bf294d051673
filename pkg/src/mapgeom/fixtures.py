"""Small maps and graphs used by the tests, the CLI examples and the
golden files under ``fixtures/``."""

from __future__ import annotations

from typing import Sequence

from .combinatorial_map import CombinatorialMap, parse_map
from .embedding import map_from_rotation
from .errors import StructuralError
from .graph import Graph, bouquet, complete_graph

K4_TORUS_TEXT = """\
base: x y z u v w
P: (x,y,z)(ab.x,u,w)(ab.z,ab.u,v)(ab.y,ab.v,ab.w)(a.x,a.z,a.y)(b.x,a.w,a.u)(b.z,a.v,b.u)(b.y,b.w,b.v)
"""


def k4_torus() -> CombinatorialMap:
    """K4 on the torus with faces of length 4 and 8."""
    return parse_map(K4_TORUS_TEXT)


def map_from_triangles(triangles: Sequence[Sequence[int]]) -> CombinatorialMap:
    """Orientable triangulated surface from consistently oriented triangles.

    Every directed edge must occur once and its reverse once.  The rotation
    at vertex ``a`` follows ``b -> c`` for each triangle ``(a, b, c)``.
    """
    directed = set()
    succ = {}
    for tri in triangles:
        for a, b, c in ((tri[0], tri[1], tri[2]), (tri[1], tri[2], tri[0]), (tri[2], tri[0], tri[1])):
            if (a, b) in directed:
                raise StructuralError(f"directed edge {a}->{b} occurs twice")
            directed.add((a, b))
            succ.setdefault(a, {})[b] = c
    missing = sorted(e for e in directed if (e[1], e[0]) not in directed)
    if missing:
        raise StructuralError(f"edge {missing[0]} lies on only one triangle")
    verts = sorted(succ)
    index = {v: i for i, v in enumerate(verts)}
    edge_ids = {}
    edges = []
    for a, b in sorted(directed):
        if a < b:
            edge_ids[(a, b)] = len(edges)
            edges.append((index[a], index[b]))
    G = Graph(tuple(str(v) for v in verts), tuple(edges))

    def end(a, b):
        i = edge_ids[(min(a, b), max(a, b))]
        return 2 * i if a < b else 2 * i + 1

    rotation = []
    for a in verts:
        nbrs = succ[a]
        start = min(nbrs)
        ring = [start]
        while nbrs[ring[-1]] != start:
            ring.append(nbrs[ring[-1]])
        if len(ring) != len(nbrs):
            raise StructuralError(f"link of vertex {a} is not a single cycle")
        rotation.append(tuple(end(a, b) for b in ring))
    return map_from_rotation(G, rotation)


def tetrahedron_triangles() -> list[tuple[int, int, int]]:
    return [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def octahedron_triangles() -> list[tuple[int, int, int]]:
    ring = [1, 2, 3, 4]
    out = []
    for i in range(4):
        a, b = ring[i], ring[(i + 1) % 4]
        out += [(0, a, b), (5, b, a)]
    return out


def icosahedron_triangles() -> list[tuple[int, int, int]]:
    up = [1 + i for i in range(5)]
    low = [6 + i for i in range(5)]
    out = []
    for i in range(5):
        j = (i + 1) % 5
        out += [
            (0, up[i], up[j]),
            (up[j], up[i], low[i]),
            (up[j], low[i], low[j]),
            (11, low[j], low[i]),
        ]
    return out


def torus_triangles(n: int = 3) -> list[tuple[int, int, int]]:
    """The 6-regular triangulation of the torus on an ``n x n`` grid."""

    def v(i, j):
        return (i % n) * n + (j % n)

    out = []
    for i in range(n):
        for j in range(n):
            out += [(v(i, j), v(i + 1, j), v(i + 1, j + 1)), (v(i, j), v(i + 1, j + 1), v(i, j + 1))]
    return out


def flip_edge(triangles: Sequence[Sequence[int]], a: int, b: int) -> list[tuple[int, ...]]:
    """Replace triangles ``(a, b, c), (b, a, d)`` by ``(c, a, d), (d, b, c)``."""

    def rot(t, first):
        k = list(t).index(first)
        return tuple(t[k:]) + tuple(t[:k])

    tris = [tuple(t) for t in triangles]
    left = next(t for t in tris if a in t and rot(t, a)[1] == b)
    right = next(t for t in tris if b in t and rot(t, b)[1] == a)
    c, d = rot(left, a)[2], rot(right, b)[2]
    if any({c, d} <= set(t) for t in tris):
        raise StructuralError(f"flip would duplicate edge {c}-{d}")
    rest = [t for t in tris if t not in (left, right)]
    return rest + [(c, a, d), (d, b, c)]


def planar_k4() -> CombinatorialMap:
    return map_from_triangles(tetrahedron_triangles())


def octahedron() -> CombinatorialMap:
    return map_from_triangles(octahedron_triangles())


def icosahedron() -> CombinatorialMap:
    return map_from_triangles(icosahedron_triangles())


def torus_6_regular(n: int = 3) -> CombinatorialMap:
    return map_from_triangles(torus_triangles(n))


def mixed_567() -> CombinatorialMap:
    """6-regular torus with one edge flipped: valencies 5, 6 and 7."""
    return map_from_triangles(flip_edge(torus_triangles(4), 0, 4))


def k4_graph() -> Graph:
    return complete_graph(4)


def bouquet_2() -> Graph:
    return bouquet(2)


MAPS = {
    "k4_torus": k4_torus,
    "planar_k4": planar_k4,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "torus_6_regular": torus_6_regular,
    "mixed_567": mixed_567,
}

GRAPHS = {
    "k4": k4_graph,
    "bouquet_2": bouquet_2,
}
