import random

import pytest

from mapgeom.errors import GroundSetMismatch, ParseError
from mapgeom.fixtures import k4_torus
from mapgeom.permutation import (
    GroundSet,
    Permutation,
    compose,
    cycle_decomposition,
    inverse,
    orbit_count,
    orbits,
)

ABCD = GroundSet("abcd")


def perm(text, ground=ABCD):
    return Permutation.parse(text, ground)


def random_perm(rng, ground):
    image = list(range(ground.size))
    rng.shuffle(image)
    return Permutation(ground, image)


def test_compose_identity():
    p = perm("(a,b,c)")
    assert compose(Permutation.identity(ABCD), p) == p


def test_transposition_squared_is_identity():
    s = perm("(a,b)")
    assert compose(s, s).is_identity()


def test_composition_is_right_to_left():
    p, q = perm("(a,b)"), perm("(b,c)")
    # q first sends b to c, then p leaves c alone
    assert compose(p, q)("b") == "c"
    assert compose(q, p)("b") == "a"


def test_k4_torus_P_squared():
    M = k4_torus()
    P = M.permutation
    assert compose(P, P)("x") == "z"


def test_alpha_P_relation_order_witness():
    M = k4_torus()
    P = M.permutation
    ground = P.ground
    alpha = Permutation(ground, [q ^ 1 for q in range(len(ground))])
    assert compose(alpha, P) == compose(inverse(P), alpha)


def test_inverse_of_three_cycle():
    assert inverse(perm("(a,b,c)")) == perm("(a,c,b)")
    assert inverse(Permutation.identity(ABCD)).is_identity()


def test_inverse_properties_random():
    rng = random.Random(1)
    ground = GroundSet(f"e{i}" for i in range(12))
    for _ in range(100):
        p = random_perm(rng, ground)
        assert inverse(inverse(p)) == p
        assert compose(p, inverse(p)).is_identity()
        assert compose(inverse(p), p).is_identity()


def test_ground_mismatch():
    with pytest.raises(GroundSetMismatch):
        compose(perm("(a,b)"), Permutation.identity(GroundSet("xy")))


def test_orbits_examples():
    ground = GroundSet("ab")
    assert orbits([Permutation.identity(ground)], ground) == [["a"], ["b"]]
    assert orbits([perm("(a,b)"), perm("(b,c)")], ABCD) == [["a", "b", "c"], ["d"]]
    assert orbits([], ABCD) == [["a"], ["b"], ["c"], ["d"]]


def test_k4_torus_orientation_orbits():
    M = k4_torus()
    P = M.permutation
    ab = Permutation(P.ground, [q ^ 3 for q in range(len(P.ground))])
    assert orbit_count([ab, P], P.ground) == 2


def test_orbits_partition_and_conjugation_invariance():
    rng = random.Random(2)
    ground = GroundSet(f"e{i}" for i in range(15))
    for _ in range(50):
        gens = [Permutation(ground, _sparse(rng, ground.size)) for _ in range(rng.randint(1, 3))]
        parts = orbits(gens, ground)
        flat = [x for part in parts for x in part]
        assert sorted(flat) == sorted(ground.labels)
        c = random_perm(rng, ground)
        conj = [compose(compose(c, g), inverse(c)) for g in gens]
        assert len(orbits(conj, ground)) == len(parts)


def _sparse(rng, n):
    image = list(range(n))
    i, j = rng.sample(range(n), 2)
    image[i], image[j] = image[j], image[i]
    return image


def test_cycle_decomposition():
    ground = GroundSet("ab")
    assert cycle_decomposition(Permutation.identity(ground)) == [("a",), ("b",)]
    cycles = cycle_decomposition(k4_torus().permutation)
    assert len(cycles) == 8 and all(len(c) == 3 for c in cycles)


def test_cycle_round_trip_random():
    rng = random.Random(3)
    ground = GroundSet(f"e{i}" for i in range(20))
    for _ in range(50):
        p = random_perm(rng, ground)
        cycles = cycle_decomposition(p)
        assert sum(map(len, cycles)) == ground.size
        assert all(c[0] == min(c, key=ground.index) for c in cycles)
        assert Permutation.from_cycles(ground, cycles) == p
        assert Permutation.parse(p.to_string(), ground) == p


def test_large_orbit_sweep_is_iterative():
    ground = GroundSet(str(i) for i in range(100_000))
    shift = Permutation(ground, [(i + 1) % ground.size for i in range(ground.size)])
    assert orbit_count([shift], ground) == 1


@pytest.mark.parametrize("text", ["(a,b", "(a,,b)", "(a,b)(b,c)", "(a,z)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        Permutation.parse(text, ABCD)
