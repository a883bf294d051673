import itertools
import random

import pytest

from mapgeom.combinatorial_map import (
    CombinatorialMap,
    are_isomorphic,
    automorphism_count,
    automorphisms,
    census,
    dual,
    edges,
    faces,
    format_vertex,
    isomorphisms,
    parse_map,
    underlying_graph,
    validate,
    vertices,
)
from mapgeom.embedding import enumerate_locally_orientable, enumerate_orientable, map_from_rotation
from mapgeom.errors import ParseError
from mapgeom.fixtures import k4_torus, map_from_triangles, planar_k4, tetrahedron_triangles
from mapgeom.graph import Graph, bouquet, complete_graph, cycle_graph, graph_automorphisms


def brute_isomorphisms(M1, M2):
    """Every quadricell bijection commuting with alpha, beta and P, found by
    propagating each choice of image for quadricell 0."""
    n = len(M1.P)
    if n != len(M2.P):
        return []
    gens = (lambda P: (lambda q: q ^ 1), lambda P: (lambda q: q ^ 2), lambda P: P.__getitem__)
    out = []
    for r in range(n):
        theta = {0: r}
        stack = [0]
        ok = True
        while stack and ok:
            q = stack.pop()
            for g in gens:
                a, b = g(M1.P)(q), g(M2.P)(theta[q])
                if a in theta:
                    ok = theta[a] == b
                    if not ok:
                        break
                else:
                    theta[a] = b
                    stack.append(a)
        if ok and len(theta) == n and len(set(theta.values())) == n:
            out.append(tuple(theta[q] for q in range(n)))
    return out


def random_maps(count, seed=7):
    rng = random.Random(seed)
    graphs = [complete_graph(4), cycle_graph(3), bouquet(2), Graph.from_labels("ab", [("a", "b")] * 3), complete_graph(5)]
    out = []
    for _ in range(count):
        G = rng.choice(graphs)
        maps = list(itertools.islice(enumerate_locally_orientable(G), 0, 400))
        out.append(rng.choice(maps))
    return out


# -- the worked example ------------------------------------------------------


def test_k4_torus_validates():
    assert validate(k4_torus()).ok


def test_k4_torus_vertices():
    M = k4_torus()
    vs = vertices(M)
    assert len(vs) == 4
    assert all(v.valency == 3 for v in vs)
    assert format_vertex(M, vs[0]) == "{(x, y, z), (a.x, a.z, a.y)}"


def test_k4_torus_edges():
    M = k4_torus()
    es = edges(M)
    assert len(es) == 6
    assert sorted(q for e in es for q in e) == list(range(24))
    assert [M.label(q) for q in es[0]] == ["x", "a.x", "b.x", "ab.x"]


def test_k4_torus_census():
    c = census(k4_torus())
    assert (c.nu, c.eps, c.phi, c.chi) == (4, 6, 2, 0)
    assert c.orientable and c.genus == 1
    assert c.face_degrees == (4, 8)


def test_k4_torus_dual_swaps_counts():
    M = k4_torus()
    D = dual(M)
    assert validate(D).ok
    assert (len(vertices(D)), len(faces(D))) == (2, 4)


def test_k4_torus_underlying_graph_is_k4():
    G = underlying_graph(k4_torus())
    assert G.order == 4 and G.size == 6 and G.simple
    assert sorted(G.degrees()) == [3, 3, 3, 3]


def test_planar_k4_census():
    c = census(planar_k4())
    assert c.chi == 2 and c.genus == 0 and c.face_degrees == (3, 3, 3, 3)


# -- validation failures -----------------------------------------------------


def test_identity_on_two_edges_is_not_transitive():
    report = validate(CombinatorialMap(["x", "y"], range(8)))
    assert not report.ok
    assert [c.name for c in report.failures()] == ["condition_ii"]
    assert report.failures()[0].witness


def test_identity_on_one_edge_is_a_valid_link():
    M = CombinatorialMap(["x"], range(4))
    assert validate(M).ok
    assert census(M).nu == 2


def test_basic_failure_witness():
    # P = (x, a.x)(b.x, ab.x): P x = alpha x
    M = CombinatorialMap(["x"], [1, 0, 3, 2])
    report = validate(M)
    fails = {c.name: c.witness for c in report.failures()}
    assert "basic" in fails
    assert fails["basic"] == "P^1 x = a.x"


def test_condition_i_failure():
    # P = (x, b.x) with alpha x, alpha b.x fixed breaks alpha P = P^-1 alpha
    M = CombinatorialMap(["x"], [2, 1, 0, 3])
    assert "condition_i" in {c.name for c in validate(M).failures()}


def test_all_single_edge_maps():
    valid = [CombinatorialMap(["x"], p) for p in itertools.permutations(range(4))]
    valid = [M for M in valid if validate(M).ok]
    # the link (2 vertices), the untwisted loop and the twisted loop
    assert sorted((census(M).nu, census(M).phi, census(M).orientable) for M in valid) == [
        (1, 1, False),
        (1, 2, True),
        (2, 1, True),
    ]
    assert all(len(vertices(M)) >= 1 for M in valid)


# -- census invariants -------------------------------------------------------


@pytest.mark.parametrize("M", random_maps(50), ids=lambda M: M.cycle_string()[:24])
def test_census_invariants(M):
    assert validate(M).ok
    c = census(M)
    assert c.chi == c.nu - c.eps + c.phi
    assert sum(c.vertex_valencies) == 2 * c.eps == sum(c.face_degrees)
    if c.orientable:
        assert c.chi % 2 == 0 and c.genus == (2 - c.chi) // 2
    else:
        assert c.genus == 2 - c.chi
    D = dual(M)
    d = census(D)
    assert (d.nu, d.eps, d.phi, d.chi, d.orientable) == (c.phi, c.eps, c.nu, c.chi, c.orientable)
    assert dual(D) == M
    assert are_isomorphic(dual(D), M)
    assert sorted(underlying_graph(M).degrees()) == list(c.vertex_valencies)


# -- isomorphism ---------------------------------------------------------------


def test_self_isomorphism_has_identity():
    M = k4_torus()
    assert tuple(range(24)) in [t.mapping for t in isomorphisms(M, M)]


def test_mirror_planar_k4_is_isomorphic():
    M = planar_k4()
    mirror = map_from_triangles([tuple(reversed(t)) for t in tetrahedron_triangles()])
    assert M != mirror
    found = isomorphisms(M, mirror)
    assert sorted(t.mapping for t in found) == sorted(brute_isomorphisms(M, mirror))
    assert {t.orientation for t in found} == {"preserving", "reversing"}
    assert are_isomorphic(M, mirror)


def test_planar_vs_toroidal_k4():
    assert not are_isomorphic(planar_k4(), k4_torus())
    assert isomorphisms(planar_k4(), k4_torus()) == []


def test_size_mismatch_is_not_isomorphic():
    assert not are_isomorphic(planar_k4(), CombinatorialMap(["x"], range(4)))


def test_isomorphisms_match_brute_force():
    maps = list(enumerate_orientable(complete_graph(4)))
    for M1 in maps[:4]:
        for M2 in maps:
            fast = sorted(t.mapping for t in isomorphisms(M1, M2))
            assert fast == sorted(brute_isomorphisms(M1, M2))
            assert bool(fast) == are_isomorphic(M1, M2)


def test_isomorphism_is_equivalence():
    pool = list(enumerate_locally_orientable(cycle_graph(3))) + list(enumerate_orientable(bouquet(2)))
    rel = {(i, j): are_isomorphic(a, b) for i, a in enumerate(pool) for j, b in enumerate(pool)}
    n = len(pool)
    for i in range(n):
        assert rel[i, i]
        for j in range(n):
            assert rel[i, j] == rel[j, i]
            for k in range(n):
                if rel[i, j] and rel[j, k]:
                    assert rel[i, k]


def test_automorphisms_form_a_group():
    M = planar_k4()
    auts = {t.mapping for t in automorphisms(M)}
    assert len(auts) == automorphism_count(M) == 24
    for f in auts:
        for g in auts:
            assert tuple(f[x] for x in g) in auts


def test_automorphism_count_divides_twice_graph_group():
    group = 2 * len(graph_automorphisms(complete_graph(4)))
    assert group == 48
    for M in enumerate_orientable(complete_graph(4)):
        assert group % automorphism_count(M) == 0


# -- parsing -------------------------------------------------------------------


def test_round_trip_text():
    M = k4_torus()
    assert parse_map(M.to_text()) == M


@pytest.mark.parametrize(
    "text",
    [
        "base: x\nP: (x,q.x)\n",
        "base: x\nP: (x,y)\n",
        "base: x\nP: (x,x)\n",
        "base: x\nP: (x,a.x\n",
        "P: (x)\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_map(text)
