"""Algebraic combinatorial maps on quadricells.

A map over a base set ``X`` acts on ``4 |X|`` quadricells.  The quadricell
``k x`` of base element ``i`` with Klein tag ``k`` in ``{1, alpha, beta,
alpha*beta}`` has index ``4*i + t`` with ``t = 0, 1, 2, 3``, so the Klein
involutions are xor masks and never need to be stored::

    alpha(q) = q ^ 1      beta(q) = q ^ 2      alpha*beta(q) = q ^ 3

Textual quadricell tokens are ``x``, ``a.x``, ``b.x`` and ``ab.x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from . import _kernels
from .errors import ParseError, StructuralError
from .graph import Graph
from .permutation import GroundSet, Permutation, parse_cycles

TAG_PREFIXES = ("", "a.", "b.", "ab.")


def alpha(q: int) -> int:
    return q ^ 1


def beta(q: int) -> int:
    return q ^ 2


def alpha_beta(q: int) -> int:
    return q ^ 3


def _swap_ab(q: int) -> int:
    # exchanges the alpha and beta tags, fixes 1 and alpha*beta
    t = q & 3
    return q ^ 3 if t == 1 or t == 2 else q


def quadricell_labels(base: Sequence[str]) -> list[str]:
    return [prefix + x for x in base for prefix in TAG_PREFIXES]


def parse_quadricell(token: str) -> tuple[int, str]:
    """Split a token into (tag, base label)."""
    for tag in (3, 1, 2):
        prefix = TAG_PREFIXES[tag]
        if token.startswith(prefix) and len(token) > len(prefix):
            return tag, token[len(prefix):]
    return 0, token


class CombinatorialMap:
    """The pair (quadricells over ``base``, P) with P stored as an index tuple.

    Construction only checks that P is a bijection of the right size;
    the map axioms are checked by :func:`validate`.
    """

    __slots__ = ("base", "P", "_cache")

    def __init__(self, base, P: Sequence[int]):
        if not isinstance(base, GroundSet):
            base = GroundSet(base)
        P = tuple(P)
        if base.size == 0:
            raise ValueError("a map needs a nonempty base set")
        if len(P) != 4 * base.size:
            raise ValueError(f"P has {len(P)} entries, expected {4 * base.size}")
        if sorted(P) != list(range(len(P))):
            raise ValueError("P is not a bijection on the quadricells")
        self.base = base
        self.P = P
        self._cache = {}

    @property
    def n_quadricells(self) -> int:
        return len(self.P)

    @property
    def quadricells(self) -> GroundSet:
        if "ground" not in self._cache:
            self._cache["ground"] = GroundSet(quadricell_labels(self.base.labels))
        return self._cache["ground"]

    def label(self, q: int) -> str:
        return TAG_PREFIXES[q & 3] + self.base[q >> 2]

    def index(self, token: str) -> int:
        tag, x = parse_quadricell(token)
        return 4 * self.base.index(x) + tag

    @property
    def permutation(self) -> Permutation:
        return Permutation(self.quadricells, self.P, check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, CombinatorialMap) and self.base == other.base and self.P == other.P

    def __hash__(self) -> int:
        return hash((self.base, self.P))

    def __repr__(self) -> str:
        return f"CombinatorialMap(base={list(self.base.labels)!r}, P={self.cycle_string()!r})"

    def cycle_string(self) -> str:
        return "".join("(" + ",".join(self.label(q) for q in cyc) + ")" for cyc in _kernels.cycles(self.P))

    @classmethod
    def from_cycles(cls, base: Iterable[str], cycles: str) -> CombinatorialMap:
        return parse_map(f"base: {' '.join(base)}\nP: {cycles}\n")

    def to_text(self) -> str:
        return f"base: {' '.join(self.base.labels)}\nP: {self.cycle_string()}\n"


def parse_map(text: str) -> CombinatorialMap:
    """Parse the two-line map format; extra ``key: value`` lines are an error."""
    m, extra = parse_map_lines(text)
    if extra:
        lineno, line = extra[0]
        raise ParseError(f"unexpected line {line.strip()!r}", lineno, 1)
    return m


def parse_map_lines(text: str) -> tuple[CombinatorialMap, list[tuple[int, str]]]:
    """Parse ``base:`` and ``P:`` lines; return the map and the unused lines."""
    base = None
    p_line = None
    extra = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError("expected 'key: value'", lineno, 1)
        if key == "base":
            if base is not None:
                raise ParseError("duplicate 'base:' line", lineno, 1)
            labels = rest.split()
            if not labels:
                raise ParseError("empty base set", lineno, len(line) + 1)
            for lab in labels:
                if lab.startswith(("a.", "b.", "ab.")) or any(c in lab for c in "(),"):
                    raise ParseError(f"invalid base label {lab!r}", lineno, line.index(lab) + 1)
            if len(set(labels)) != len(labels):
                raise ParseError("duplicate base label", lineno, len(key) + 2)
            base = (lineno, GroundSet(labels))
        elif key == "P":
            if p_line is not None:
                raise ParseError("duplicate 'P:' line", lineno, 1)
            p_line = (lineno, rest, raw.index(":") + 1)
        else:
            extra.append((lineno, raw))
    if base is None:
        raise ParseError("missing 'base:' line", 1, 1)
    if p_line is None:
        raise ParseError("missing 'P:' line", base[0] + 1, 1)
    ground = base[1]
    lineno, rest, offset = p_line
    cycles = parse_cycles(rest, lineno, offset)
    n = 4 * ground.size
    image = list(range(n))
    seen = set()
    for cyc in cycles:
        idx = []
        for token, col in cyc:
            tag, x = parse_quadricell(token)
            if x not in ground:
                raise ParseError(f"quadricell {token!r} is outside the declared base", lineno, col)
            q = 4 * ground.index(x) + tag
            if q in seen:
                raise ParseError(f"quadricell {token!r} occurs twice", lineno, col)
            seen.add(q)
            idx.append(q)
        for a, b in zip(idx, idx[1:] + idx[:1]):
            image[a] = b
    return CombinatorialMap(ground, image), extra


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def as_dict(self) -> dict:
        return {c.name: {"ok": c.ok, "witness": c.witness} for c in self.checks}


def validate(M: CombinatorialMap) -> ValidationReport:
    """Check the map axioms; never raises."""
    P = M.P
    n = len(P)
    checks = []

    # alpha, beta, alpha*beta are xor masks: fixed-point-free involutions
    # commuting with each other. Recorded for completeness.
    checks.append(Check("involutions", True))

    inv = [0] * n
    for i, j in enumerate(P):
        inv[j] = i
    witness = None
    for q in range(n):
        if P[q] ^ 1 != inv[q ^ 1]:
            witness = f"alpha P ({M.label(q)}) = {M.label(P[q] ^ 1)} but P^-1 alpha ({M.label(q)}) = {M.label(inv[q ^ 1])}"
            break
    checks.append(Check("condition_i", witness is None, witness))

    count, labels = _kernels.orbit_labels([tuple(q ^ 1 for q in range(n)), tuple(q ^ 2 for q in range(n)), P], n)
    witness = None
    if count != 1:
        stray = labels.index(1)
        witness = f"{count} orbits; {M.label(stray)} is not reachable from {M.label(0)}"
    checks.append(Check("condition_ii", count == 1, witness))

    witness = None
    for cyc in _kernels.cycles(P):
        pos = {q: k for k, q in enumerate(cyc)}
        for k, q in enumerate(cyc):
            j = pos.get(q ^ 1)
            if j is not None:
                steps = (j - k) % len(cyc)
                witness = f"P^{steps} {M.label(q)} = {M.label(q ^ 1)}"
                break
        if witness:
            break
    checks.append(Check("basic", witness is None, witness))
    return ValidationReport(tuple(checks))


# ---------------------------------------------------------------------------
# vertices, edges, faces


class Vertex(NamedTuple):
    index: int
    cycle: tuple[int, ...]
    conjugate: tuple[int, ...]

    @property
    def valency(self) -> int:
        return len(self.cycle)


def _paired_cycles(P: Sequence[int], conj) -> tuple[list[Vertex], list[int]]:
    # pairs each cycle C with conj(C) read backwards
    cycs = _kernels.cycles(P)
    where = {}
    for ci, cyc in enumerate(cycs):
        for q in cyc:
            where[q] = ci
    used = [False] * len(cycs)
    out = []
    owner = [0] * len(P)
    for ci, cyc in enumerate(cycs):
        if used[ci]:
            continue
        cj = where[conj(cyc[0])]
        mate = cycs[cj]
        image = [conj(q) for q in reversed(cyc)]
        if cj == ci or len(mate) != len(cyc) or not _same_cycle(image, mate):
            raise StructuralError(f"P-cycle starting at quadricell {cyc[0]} has no conjugate partner")
        used[ci] = used[cj] = True
        v = Vertex(len(out), tuple(cyc), tuple(mate))
        for q in cyc:
            owner[q] = v.index
        for q in mate:
            owner[q] = v.index
        out.append(v)
    return out, owner


def _same_cycle(a: list[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    try:
        k = a.index(b[0])
    except ValueError:
        return False
    return a[k:] + a[:k] == list(b)


def _vertex_data(M: CombinatorialMap):
    if "vertices" not in M._cache:
        M._cache["vertices"] = _paired_cycles(M.P, alpha)
    return M._cache["vertices"]


def _face_data(M: CombinatorialMap):
    # faces are vertices of the dual: cycles of P*alpha*beta paired under beta
    if "faces" not in M._cache:
        M._cache["faces"] = _paired_cycles(_kernels.face_permutation(M.P), beta)
    return M._cache["faces"]


def vertices(M: CombinatorialMap) -> list[Vertex]:
    """Vertices as conjugate pairs ``{C, alpha C^-1 alpha}`` of P-cycles,
    ordered by least quadricell."""
    return list(_vertex_data(M)[0])


def vertex_of(M: CombinatorialMap) -> list[int]:
    return list(_vertex_data(M)[1])


def faces(M: CombinatorialMap) -> list[Vertex]:
    """Faces as conjugate pairs of cycles of ``P alpha beta``."""
    return list(_face_data(M)[0])


def face_of(M: CombinatorialMap) -> list[int]:
    return list(_face_data(M)[1])


def edges(M: CombinatorialMap) -> list[tuple[int, int, int, int]]:
    return [(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i in range(M.base.size)]


def format_vertex(M: CombinatorialMap, v: Vertex) -> str:
    return "{(" + ", ".join(M.label(q) for q in v.cycle) + "), (" + ", ".join(M.label(q) for q in v.conjugate) + ")}"


def dual(M: CombinatorialMap) -> CombinatorialMap:
    """The dual map ``(X_{beta,alpha}, P alpha beta)``.

    Tags are relabelled so the dual again uses alpha = ``q ^ 1``; with
    that relabelling ``dual(dual(M)) == M`` exactly.
    """
    P = M.P
    return CombinatorialMap(M.base, [_swap_ab(P[_swap_ab(q) ^ 3]) for q in range(len(P))])


def orientation_orbits(M: CombinatorialMap) -> tuple[int, list[int]]:
    n = len(M.P)
    return _kernels.orbit_labels([tuple(q ^ 3 for q in range(n)), M.P], n)


def is_orientable(M: CombinatorialMap) -> bool:
    count, _ = orientation_orbits(M)
    if count == 1:
        return False
    if count == 2:
        return True
    raise StructuralError(f"<alpha beta, P> has {count} orbits; expected 1 or 2")


@dataclass(frozen=True)
class MapCensus:
    nu: int
    eps: int
    phi: int
    chi: int
    orientable: bool
    genus: int
    vertex_valencies: tuple[int, ...]
    face_degrees: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "vertices": self.nu,
            "edges": self.eps,
            "faces": self.phi,
            "euler_characteristic": self.chi,
            "orientable": self.orientable,
            "genus": self.genus,
            "vertex_valencies": list(self.vertex_valencies),
            "face_degrees": list(self.face_degrees),
        }


def census(M: CombinatorialMap) -> MapCensus:
    vs = _vertex_data(M)[0]
    fs = _face_data(M)[0]
    nu, eps, phi = len(vs), M.base.size, len(fs)
    chi = nu - eps + phi
    orientable = is_orientable(M)
    if orientable:
        if chi % 2:
            raise StructuralError(f"orientable map with odd Euler characteristic {chi}")
        genus = (2 - chi) // 2
    else:
        genus = 2 - chi
    return MapCensus(
        nu=nu,
        eps=eps,
        phi=phi,
        chi=chi,
        orientable=orientable,
        genus=genus,
        vertex_valencies=tuple(sorted(v.valency for v in vs)),
        face_degrees=tuple(sorted(f.valency for f in fs)),
    )


def underlying_graph(M: CombinatorialMap) -> Graph:
    """One graph vertex per map vertex; edge ``i`` joins the vertices holding
    quadricells ``x`` and ``beta x`` of base element ``i``."""
    owner = _vertex_data(M)[1]
    nv = len(_vertex_data(M)[0])
    return Graph(tuple(f"v{i}" for i in range(nv)), tuple((owner[4 * i], owner[4 * i + 2]) for i in range(M.base.size)))


# ---------------------------------------------------------------------------
# isomorphism


@dataclass(frozen=True)
class Isomorphism:
    """A quadricell bijection commuting with alpha, beta and P.

    ``orientation`` is ``"preserving"`` or ``"reversing"`` for orientable
    maps (relative to the orientation class of quadricell 0 on each side)
    and ``None`` otherwise.
    """

    mapping: tuple[int, ...]
    orientation: str | None

    def __call__(self, q: int) -> int:
        return self.mapping[q]


def canonical_code(M: CombinatorialMap) -> tuple[int, ...]:
    if "canon" not in M._cache:
        M._cache["canon"] = _kernels.canonical_code(M.P)
    return M._cache["canon"][0]


def automorphism_count(M: CombinatorialMap) -> int:
    canonical_code(M)
    return M._cache["canon"][1]


def are_isomorphic(M1: CombinatorialMap, M2: CombinatorialMap) -> bool:
    if len(M1.P) != len(M2.P):
        return False
    return canonical_code(M1) == canonical_code(M2)


def isomorphisms(M1: CombinatorialMap, M2: CombinatorialMap) -> list[Isomorphism]:
    """All isomorphisms ``M1 -> M2``, found by matching the rooted
    breadth-first code of M1 at quadricell 0 against every root of M2."""
    if len(M1.P) != len(M2.P):
        return []
    code1, order1 = _kernels.rooted_code(M1.P, 0)
    n = len(M1.P)
    if len(order1) != n:
        raise StructuralError("isomorphism search needs a transitive map")
    orient1 = _orientation_labels(M1)
    orient2 = _orientation_labels(M2)
    out = []
    for root in _kernels.matching_roots(M2.P, code1):
        _, order2 = _kernels.rooted_code(M2.P, root)
        theta = [0] * n
        for a, b in zip(order1, order2):
            theta[a] = b
        orientation = None
        if orient1 is not None and orient2 is not None:
            orientation = "preserving" if orient2[theta[0]] == orient2[0] else "reversing"
        out.append(Isomorphism(tuple(theta), orientation))
    return out


def _orientation_labels(M: CombinatorialMap):
    count, labels = orientation_orbits(M)
    return labels if count == 2 else None


def automorphisms(M: CombinatorialMap) -> list[Isomorphism]:
    return isomorphisms(M, M)


def compose_mappings(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """``(f o g)(q) = f(g(q))``."""
    return tuple(f[x] for x in g)


def induced_vertex_permutation(M1: CombinatorialMap, M2: CombinatorialMap, theta: Sequence[int]) -> list[int]:
    owner2 = _vertex_data(M2)[1]
    return [owner2[theta[v.cycle[0]]] for v in _vertex_data(M1)[0]]


def induced_face_permutation(M1: CombinatorialMap, M2: CombinatorialMap, theta: Sequence[int]) -> list[int]:
    owner2 = _face_data(M2)[1]
    return [owner2[theta[f.cycle[0]]] for f in _face_data(M1)[0]]
