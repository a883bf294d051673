"""Acceptance suite: one check per criterion, each printed as PASS/FAIL.

Run under pytest (the summary lines appear at the end of the session) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import math
import random
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import applicable_moves, oracle_chi, oracle_orientable, random_word  # noqa: E402
from mapgeom.combinatorial_map import (  # noqa: E402
    are_isomorphic,
    census,
    dual,
    orientation_orbits,
    validate,
)
from mapgeom.embedding import (  # noqa: E402
    count_nonisomorphic_maps,
    enumerate_locally_orientable,
    enumerate_orientable,
    genus_polynomial,
)
from mapgeom.errors import NotSManifoldError  # noqa: E402
from mapgeom.fixtures import MAPS, icosahedron, k4_torus, mixed_567, octahedron, torus_6_regular  # noqa: E402
from mapgeom.geometry import (  # noqa: E402
    PointClass,
    burnside_count,
    burnside_split,
    classify_vertex,
    count_prop46,
    count_prop47,
    make_assignment,
    point_class,
    polygon_angle_sum,
)
from mapgeom.graph import Graph, bouquet, complete_graph, graph_automorphisms  # noqa: E402
from mapgeom.permutation import cycle_decomposition  # noqa: E402
from mapgeom.smanifold import check_euler, classify, euler_arithmetic, is_closed_triangular  # noqa: E402
from mapgeom.surface_word import StandardSurface, canonical_form, replay  # noqa: E402

K4 = complete_graph(4)
RESULTS: dict[int, tuple[bool, str]] = {}


def _prod_rho(G):
    return math.prod(math.factorial(d - 1) for d in G.degrees())


def criterion_1():
    start = time.perf_counter()
    M = k4_torus()
    c = census(M)
    cycles = cycle_decomposition(M.permutation)
    orbit_count = orientation_orbits(M)[0]
    elapsed = time.perf_counter() - start
    ok = (
        validate(M).ok
        and (c.nu, c.eps, c.phi, c.chi) == (4, 6, 2, 0)
        and c.orientable
        and c.genus == 1
        and sorted(c.face_degrees) == [4, 8]
        and len(cycles) == 8
        and all(len(cyc) == 3 for cyc in cycles)
        and orbit_count == 2
        and elapsed < 1
    )
    return ok, f"nu={c.nu} eps={c.eps} phi={c.phi} chi={c.chi} genus={c.genus} faces={list(c.face_degrees)} orbits={orbit_count} ({elapsed:.3f}s)"


def criterion_2():
    start = time.perf_counter()
    n_o = sum(1 for _ in enumerate_orientable(K4))
    n_l = sum(1 for _ in enumerate_locally_orientable(K4))
    g = genus_polynomial(K4)
    elapsed = time.perf_counter() - start
    ok = n_o == 16 == _prod_rho(K4) and n_l == 128 == 2**3 * 16 and g.coefficients == (2, 14) and g.total() == 16 and elapsed < 10
    return ok, f"orientable={n_o} locally_orientable={n_l} g(x)={g} ({elapsed:.3f}s)"


def criterion_3():
    aut = len(graph_automorphisms(K4))
    p46 = count_prop46(K4)
    p47 = count_prop47(K4)
    burnside_o = burnside_count(K4)
    split = burnside_split(K4)
    ok = aut == 24 and p46 == (27, 189) and p47 == (F(243, 4), F(1701, 4))
    detail = f"|Aut K4|={aut} formula46=({p46[0]}, {p46[1]}) formula47=({p47[0]}, {p47[1]}) burnside(orientable)={burnside_o} burnside(o, n)={split}"
    return ok, detail


def criterion_4(n_words=500):
    start = time.perf_counter()
    rng = random.Random(4)
    moves = kinds = replays = 0
    for _ in range(n_words):
        w = random_word(rng, 20)
        chi, ori = oracle_chi(w), oracle_orientable(w)
        for label, out in applicable_moves(w):
            moves += 1
            if (oracle_chi(out), oracle_orientable(out)) != (chi, ori):
                return False, f"{label} on {w} changed the invariants"
        cf = canonical_form(w)
        if cf.surface != StandardSurface.from_invariants(chi, ori):
            return False, f"{w} classified as {cf.surface}"
        kinds += 1
        if str(replay(w, cf.trace)) != str(cf.surface.word()):
            return False, f"replay of {w} does not reproduce {cf.surface.word()}"
        replays += 1
    elapsed = time.perf_counter() - start
    return elapsed < 30, f"{n_words} words, {moves} moves checked, {kinds} kinds agree, {replays} replays exact ({elapsed:.2f}s)"


def _maps_up_to_four_vertices():
    out = list(enumerate_locally_orientable(K4))
    out.append(k4_torus())
    for G in (
        bouquet(2),
        bouquet(3),
        Graph.from_labels("ab", [("a", "b")] * 3),
        Graph.from_labels("ab", [("a", "b"), ("a", "a"), ("b", "b")]),
        Graph.from_labels("abc", [("a", "b"), ("a", "b"), ("b", "c"), ("b", "c"), ("c", "a"), ("c", "a")]),
    ):
        out.extend(itertools.islice(enumerate_locally_orientable(G), 0, 8))
    return out


def criterion_5():
    classes = (PointClass.ELLIPTIC, PointClass.EUCLIDEAN, PointClass.HYPERBOLIC)
    checked = 0
    maps = _maps_up_to_four_vertices()
    for M in maps:
        nu = census(M).nu
        assert nu <= 4
        for targets in itertools.product(classes, repeat=nu):
            g = make_assignment(M, targets)
            if [classify_vertex(g, u) for u in range(nu)] != list(targets):
                return False, f"round trip failed for {targets}"
            checked += 1
    pinned = point_class(4, F(1, 2)) is PointClass.EUCLIDEAN and 4 * F(1, 2) == 2
    return pinned, f"{len(maps)} maps, {checked} target vectors round-tripped; 4*(1/2)pi = 2pi is euclidean"


def _accumulate(k, points):
    total = F(k - 2)
    for rho, q in points:
        half = rho * q / 2
        if rho * q < 2:
            total += 1 - half
        elif rho * q > 2:
            total -= half - 1
    return total


def criterion_6(n=1000):
    rng = random.Random(6)
    for _ in range(n):
        k = rng.randint(3, 12)
        h = rng.randint(0, k)
        pts = [(rng.randint(3, 10), F(rng.randint(1, 59), 60)) for _ in range(h)]
        got = polygon_angle_sum(k, pts)
        if got != _accumulate(k, pts):
            return False, f"k={k} H={pts}: {got} != {_accumulate(k, pts)}"
    empty = all(polygon_angle_sum(k, []) == k - 2 for k in range(3, 50))
    return empty, f"{n} random instances agree exactly; H empty gives (k-2) pi"


def criterion_7():
    tags = {
        "icosahedron": classify(icosahedron()).tag,
        "torus": classify(torus_6_regular()).tag,
        "mixed": classify(mixed_567()).tag,
    }
    try:
        classify(octahedron())
        rejected = False
    except NotSManifoldError:
        rejected = True
    euler = all(check_euler(make()) for make in MAPS.values() if is_closed_triangular(make()))
    regular = euler_arithmetic(5).holds(12, 2) and euler_arithmetic(6).holds(census(torus_6_regular()).nu, 0)
    ok = tags == {"icosahedron": "Δ1", "torus": "Δ2", "mixed": "Δ7"} and rejected and euler and regular
    return ok, f"{tags}, octahedron rejected={rejected}, euler relations hold={euler and regular}"


def criterion_8():
    orientable = list(enumerate_orientable(K4))
    local = list(enumerate_locally_orientable(K4))
    for M in orientable + local:
        c, D = census(M), dual(M)
        d = census(D)
        if not are_isomorphic(dual(D), M):
            return False, "dual is not an involution"
        if d.chi != c.chi or (d.nu, d.phi) != (c.phi, c.nu):
            return False, "dual census mismatch"
        if sum(c.vertex_valencies) != 2 * c.eps:
            return False, "handshake failed"
    co = count_nonisomorphic_maps(K4, True)
    cl = count_nonisomorphic_maps(K4, False)
    ok = co.checksum == co.raw == 16 and cl.checksum == cl.raw == 128
    return ok, f"{len(orientable)} + {len(local)} maps; checksums {co.checksum}/16 and {cl.checksum}/128"


CRITERIA = {
    1: ("worked example", criterion_1),
    2: ("embedding counts", criterion_2),
    3: ("enumeration formulas vs oracle", criterion_3),
    4: ("surface-word suite", criterion_4),
    5: ("map-geometry classification", criterion_5),
    6: ("polygon angle sums", criterion_6),
    7: ("s-manifold classification", criterion_7),
    8: ("structural properties", criterion_8),
}


def run_criterion(n):
    name, fn = CRITERIA[n]
    try:
        ok, detail = fn()
    except Exception as exc:  # report, do not hide
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"criterion {n} ({name}): {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[n] = (ok, line)
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, line = run_criterion(n)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, line = run_criterion(n)
        print(line)
        failed += not ok
    sys.exit(1 if failed else 0)
