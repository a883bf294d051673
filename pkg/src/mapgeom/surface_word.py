"""Polygon words for closed surfaces and their elementary rewrites.

A word is a cyclic sequence of letters ``(symbol, exponent)`` in which
every symbol occurs exactly twice.  Text form: whitespace-separated
tokens with a trailing apostrophe for inverses, e.g. ``a b a' b'``.

Moves (positions index the word as currently written):

* ``O1`` forward at ``p`` deletes the cancelling pair at ``p, p+1``;
  backward at ``p`` inserts ``s s'`` before index ``p``.
* ``O2`` forward at ``p`` merges the letters at ``p, p+1`` into one
  symbol; ``variant="i"`` needs their partners to read ``y' x'``,
  ``variant="ii"`` needs ``x y``.  Backward at ``p`` splits a letter.
* ``O3`` at ``(p, s, q)`` reads the word as ``A w[p] B C w[q] D`` with
  ``B = w[p+1:s]`` and ``C = w[s:q]`` and rewrites it to
  ``B w[p] A D w[q] C`` (variant i, mixed pair) or
  ``B w[p] A C' w[q] D'`` (variant ii, same-sign pair).
* ``rotate`` and ``relabel`` change only the presentation of the cyclic
  word and are used by :func:`canonical_form` to reach the exact
  standard spelling.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .combinatorial_map import CombinatorialMap, census, faces
from .errors import WordError

FRESH_PREFIX = "_"
_INVERSE_SUFFIXES = ("'", "^-1", "\u207b\u00b9")


class Letter(NamedTuple):
    symbol: str
    exp: int

    def inverse(self) -> Letter:
        return Letter(self.symbol, -self.exp)

    def __str__(self) -> str:
        return self.symbol if self.exp > 0 else self.symbol + "'"


class SurfaceWord:
    __slots__ = ("letters",)

    def __init__(self, letters: Iterable):
        letters = tuple(Letter(s, e) for s, e in letters)
        if len(letters) < 2:
            raise WordError("a surface word needs at least two letters")
        for s, e in letters:
            if e not in (1, -1):
                raise WordError(f"exponent of {s!r} must be +1 or -1")
        counts = Counter(s for s, _ in letters)
        bad = sorted(s for s, c in counts.items() if c != 2)
        if bad:
            raise WordError(f"symbol {bad[0]!r} occurs {counts[bad[0]]} times; every symbol must occur exactly twice")
        self.letters = letters

    @classmethod
    def parse(cls, text: str) -> SurfaceWord:
        letters = []
        for tok in text.split():
            exp = 1
            while True:
                for suffix in _INVERSE_SUFFIXES:
                    if tok.endswith(suffix):
                        tok = tok[: -len(suffix)]
                        exp = -exp
                        break
                else:
                    break
            if not tok or any(c in tok for c in "'()^"):
                raise WordError(f"malformed token in {text!r}")
            letters.append((tok, exp))
        return cls(letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"SurfaceWord({str(self)!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, SurfaceWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def symbols(self) -> list[str]:
        return sorted({s for s, _ in self.letters})

    def partner(self, i: int) -> int:
        s = self.letters[i].symbol
        for j, x in enumerate(self.letters):
            if j != i and x.symbol == s:
                return j
        raise AssertionError("unreachable for a valid word")


def _as_word(w) -> SurfaceWord:
    if isinstance(w, SurfaceWord):
        return w
    if isinstance(w, str):
        return SurfaceWord.parse(w)
    return SurfaceWord(w)


def _inv_segment(seg: Sequence[Letter]) -> list[Letter]:
    return [x.inverse() for x in reversed(seg)]


def fresh_symbols(w: SurfaceWord, count: int = 1, avoid: Iterable[str] = ()) -> list[str]:
    taken = {s for s, _ in w.letters} | set(avoid)
    out = []
    k = 1
    while len(out) < count:
        name = f"{FRESH_PREFIX}{k}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        k += 1
    return out


# ---------------------------------------------------------------------------
# invariants


def euler_characteristic(w) -> int:
    """``V - E + 1`` with V the number of polygon-corner classes.

    Corner ``k`` sits before letter ``k``; a letter with exponent +1 runs
    from its left corner to its right corner, -1 the other way.  The two
    occurrences of a symbol identify tails with tails and heads with heads.
    """
    w = _as_word(w)
    n = len(w)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ends = {}
    for k, (s, e) in enumerate(w.letters):
        tail, head = (k, (k + 1) % n) if e > 0 else ((k + 1) % n, k)
        if s in ends:
            t0, h0 = ends[s]
            parent[find(tail)] = find(t0)
            parent[find(head)] = find(h0)
        else:
            ends[s] = (tail, head)
    vertices = len({find(k) for k in range(n)})
    return vertices - n // 2 + 1


def corner_classes(w) -> list[int]:
    """Class id (least corner index in the class) of every corner."""
    w = _as_word(w)
    n = len(w)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ends = {}
    for k, (s, e) in enumerate(w.letters):
        tail, head = (k, (k + 1) % n) if e > 0 else ((k + 1) % n, k)
        if s in ends:
            t0, h0 = ends[s]
            for a, b in ((tail, t0), (head, h0)):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        else:
            ends[s] = (tail, head)
    return [find(k) for k in range(n)]


def is_orientable(w) -> bool:
    w = _as_word(w)
    total = Counter()
    for s, e in w.letters:
        total[s] += e
    return all(v == 0 for v in total.values())


# ---------------------------------------------------------------------------
# standard surfaces


@dataclass(frozen=True)
class StandardSurface:
    kind: str  # "sphere" | "orientable" | "nonorientable"
    n: int = 0

    def __post_init__(self):
        if self.kind == "sphere":
            if self.n != 0:
                raise ValueError("the sphere has n = 0")
        elif self.kind in ("orientable", "nonorientable"):
            if self.n < 1:
                raise ValueError(f"{self.kind} surfaces need n >= 1")
        else:
            raise ValueError(f"unknown surface kind {self.kind!r}")

    @classmethod
    def from_invariants(cls, chi: int, orientable: bool) -> StandardSurface:
        if orientable:
            if chi % 2 or chi > 2:
                raise ValueError(f"no orientable closed surface has chi = {chi}")
            return cls("sphere") if chi == 2 else cls("orientable", (2 - chi) // 2)
        if chi > 1:
            raise ValueError(f"no non-orientable closed surface has chi = {chi}")
        return cls("nonorientable", 2 - chi)

    @property
    def chi(self) -> int:
        if self.kind == "sphere":
            return 2
        return 2 - 2 * self.n if self.kind == "orientable" else 2 - self.n

    @property
    def orientable(self) -> bool:
        return self.kind != "nonorientable"

    def word(self) -> SurfaceWord:
        if self.kind == "sphere":
            return SurfaceWord.parse("a a'")
        if self.kind == "orientable":
            return SurfaceWord.parse(" ".join(f"a{i} b{i} a{i}' b{i}'" for i in range(1, self.n + 1)))
        return SurfaceWord.parse(" ".join(f"a{i} a{i}" for i in range(1, self.n + 1)))

    def __str__(self) -> str:
        if self.kind == "sphere":
            return "Sphere"
        return f"Orientable({self.n})" if self.kind == "orientable" else f"NonOrientable({self.n})"


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class Move:
    move: str
    variant: str | None = None
    positions: tuple = ()
    direction: str = "forward"
    symbols: tuple = ()
    mapping: tuple = field(default=())

    def as_dict(self) -> dict:
        d = {"move": self.move, "variant": self.variant, "positions": list(self.positions)}
        if self.direction != "forward":
            d["direction"] = self.direction
        if self.symbols:
            d["symbols"] = list(self.symbols)
        if self.mapping:
            d["mapping"] = [[old, new, flip] for old, new, flip in self.mapping]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Move:
        return cls(
            move=d["move"],
            variant=d.get("variant"),
            positions=tuple(d.get("positions", ())),
            direction=d.get("direction", "forward"),
            symbols=tuple(d.get("symbols", ())),
            mapping=tuple((old, new, bool(flip)) for old, new, flip in d.get("mapping", ())),
        )


def _check_direction(direction: str) -> None:
    if direction not in ("forward", "backward"):
        raise WordError(f"direction must be 'forward' or 'backward', not {direction!r}")


def apply_O1(w, position: int, direction: str = "forward", symbol: str | None = None) -> SurfaceWord:
    w = _as_word(w)
    _check_direction(direction)
    letters = list(w.letters)
    n = len(letters)
    if direction == "forward":
        if n <= 2:
            raise WordError("the sphere word cannot be reduced further")
        if not 0 <= position < n:
            raise WordError(f"position {position} out of range")
        a, b = letters[position], letters[(position + 1) % n]
        if a.symbol != b.symbol or a.exp != -b.exp:
            raise WordError(f"no cancelling pair at position {position}")
        drop = {position, (position + 1) % n}
        return SurfaceWord(x for k, x in enumerate(letters) if k not in drop)
    if not 0 <= position <= n:
        raise WordError(f"position {position} out of range")
    if symbol is None:
        symbol = fresh_symbols(w)[0]
    elif symbol in w.symbols():
        raise WordError(f"symbol {symbol!r} is already used")
    return SurfaceWord(letters[:position] + [Letter(symbol, 1), Letter(symbol, -1)] + letters[position:])


def apply_O2(w, position: int, variant: str = "i", direction: str = "forward", symbols: Sequence[str] | None = None) -> SurfaceWord:
    w = _as_word(w)
    _check_direction(direction)
    if variant not in ("i", "ii"):
        raise WordError(f"unknown O2 variant {variant!r}")
    letters = list(w.letters)
    n = len(letters)
    if not 0 <= position < n:
        raise WordError(f"position {position} out of range")
    if direction == "forward":
        p1 = (position + 1) % n
        x, y = letters[position], letters[p1]
        if x.symbol == y.symbol:
            raise WordError(f"letters at {position} and {p1} share a symbol")
        jx, jy = w.partner(position), w.partner(p1)
        if variant == "i":
            ok = letters[jx] == x.inverse() and letters[jy] == y.inverse() and jx == (jy + 1) % n
            first_new = jy
        else:
            ok = letters[jx] == x and letters[jy] == y and jy == (jx + 1) % n
            first_new = jx
        if not ok:
            raise WordError(f"O2({variant}) pattern does not match at position {position}")
        if symbols:
            c = symbols[0]
            if c in w.symbols():
                raise WordError(f"symbol {c!r} is already used")
        else:
            c = fresh_symbols(w)[0]
        second_exp = -1 if variant == "i" else 1
        out = []
        for k, z in enumerate(letters):
            if k == position:
                out.append(Letter(c, 1))
            elif k == first_new:
                out.append(Letter(c, second_exp))
            elif k in (p1, jx if variant == "i" else jy):
                continue
            else:
                out.append(z)
        return SurfaceWord(out)
    z = letters[position]
    j = w.partner(position)
    if variant == "i" and letters[j] != z.inverse():
        raise WordError(f"O2(i) backward needs a mixed pair at position {position}")
    if variant == "ii" and letters[j] != z:
        raise WordError(f"O2(ii) backward needs a same-sign pair at position {position}")
    if symbols:
        a, b = symbols
        if a == b or a in w.symbols() or b in w.symbols():
            raise WordError("split symbols must be distinct and unused")
    else:
        a, b = fresh_symbols(w, 2)
    split = [Letter(a, 1), Letter(b, 1)]
    mate = [Letter(b, -1), Letter(a, -1)] if variant == "i" else split
    out = []
    for k, x in enumerate(letters):
        if k == position:
            out.extend(split)
        elif k == j:
            out.extend(mate)
        else:
            out.append(x)
    return SurfaceWord(out)


def apply_O3(w, positions: Sequence[int], variant: str = "i") -> SurfaceWord:
    w = _as_word(w)
    if variant not in ("i", "ii"):
        raise WordError(f"unknown O3 variant {variant!r}")
    try:
        p, s, q = positions
    except (TypeError, ValueError):
        raise WordError("O3 needs three positions (pivot, split, partner)") from None
    letters = list(w.letters)
    n = len(letters)
    if not (0 <= p < s <= q < n):
        raise WordError(f"segment boundaries {tuple(positions)} are inconsistent")
    a, b = letters[p], letters[q]
    if a.symbol != b.symbol:
        raise WordError(f"letters at {p} and {q} are not a pair")
    if variant == "i" and a.exp != -b.exp:
        raise WordError("O3(i) needs a mixed pair")
    if variant == "ii" and a.exp != b.exp:
        raise WordError("O3(ii) needs a same-sign pair")
    A, B, C, D = letters[:p], letters[p + 1:s], letters[s:q], letters[q + 1:]
    if variant == "i":
        return SurfaceWord(B + [a] + A + D + [b] + C)
    return SurfaceWord(B + [a] + A + _inv_segment(C) + [b] + _inv_segment(D))


def rotate(w, r: int) -> SurfaceWord:
    w = _as_word(w)
    r %= len(w)
    return SurfaceWord(w.letters[r:] + w.letters[:r])


def relabel(w, mapping: Iterable[tuple[str, str, bool]]) -> SurfaceWord:
    """Rename symbols simultaneously; ``flip`` also inverts both occurrences."""
    w = _as_word(w)
    table = {old: (new, flip) for old, new, flip in mapping}
    out = []
    for s, e in w.letters:
        new, flip = table.get(s, (s, False))
        out.append(Letter(new, -e if flip else e))
    return SurfaceWord(out)


def apply_move(w, move: Move) -> SurfaceWord:
    if move.move == "O1":
        return apply_O1(w, move.positions[0], move.direction, move.symbols[0] if move.symbols else None)
    if move.move == "O2":
        return apply_O2(w, move.positions[0], move.variant, move.direction, move.symbols or None)
    if move.move == "O3":
        return apply_O3(w, move.positions, move.variant)
    if move.move == "rotate":
        return rotate(w, move.positions[0])
    if move.move == "relabel":
        return relabel(w, move.mapping)
    raise WordError(f"unknown move {move.move!r}")


def replay(w, trace: Iterable[Move]) -> SurfaceWord:
    w = _as_word(w)
    for m in trace:
        w = apply_move(w, m)
    return w


def trace_to_json(trace: Iterable[Move]) -> str:
    return json.dumps([m.as_dict() for m in trace], sort_keys=True)


def trace_from_json(text: str) -> list[Move]:
    return [Move.from_dict(d) for d in json.loads(text)]


# ---------------------------------------------------------------------------
# canonicalization


class CanonicalForm(NamedTuple):
    surface: StandardSurface
    trace: tuple[Move, ...]
    word: SurfaceWord


# x x U a b a' b' V  ->  a' V x x U b b a'  as (rotation, variant, positions)
# over the abstract tokens; U and V are never split
_HANDLE_MACRO = (
    (0, "i", (3, 4, 5)),
    (2, "ii", (0, 4, 7)),
    (1, "ii", (0, 4, 4)),
    (0, "ii", (2, 3, 7)),
)


class _Reducer:
    def __init__(self, w: SurfaceWord):
        self.w = w
        self.trace = []

    def do(self, move: Move) -> None:
        self.w = apply_move(self.w, move)
        self.trace.append(move)

    def rotate_to(self, start: int) -> None:
        start %= len(self.w)
        if start:
            self.do(Move("rotate", None, (start,)))

    def index_of(self, letter: Letter) -> int:
        return self.w.letters.index(letter)

    def cancel(self) -> None:
        while len(self.w) > 2:
            L = self.w.letters
            n = len(L)
            for p in range(n):
                a, b = L[p], L[(p + 1) % n]
                if a.symbol == b.symbol and a.exp == -b.exp:
                    self.do(Move("O1", None, (p,)))
                    break
            else:
                return

    def t2(self, pivot: int, len_b: int, len_d: int) -> None:
        """Cyclic ``x [B C] x' [D A] -> x [A D] x' [C B]`` through one O3(i)."""
        n = len(self.w)
        partner = self.w.partner(pivot)
        m1 = (partner - pivot - 1) % n
        m2 = (pivot - partner - 1) % n
        self.rotate_to(partner + 1 + len_d)
        p = m2 - len_d
        self.do(Move("O3", "i", (p, p + 1 + len_b, p + 1 + m1)))

    # -- one vertex ----------------------------------------------------------

    def _potential(self) -> tuple[int, int]:
        counts = Counter(corner_classes(self.w))
        return len(counts), min(counts.values())

    def _try(self, rotation: int, build) -> bool:
        saved_w, saved_len = self.w, len(self.trace)
        before = self._potential()
        self.rotate_to(rotation)
        self.do(build())
        if self._potential() < before:
            return True
        self.w, self.trace = saved_w, self.trace[:saved_len]
        return False

    def _vertex_step(self) -> None:
        cls = corner_classes(self.w)
        n = len(cls)
        counts = Counter(cls)
        target = min(counts, key=lambda c: (counts[c], c))

        def main():
            # a b Y a^e Z  ->  b a Z a' Y  or  b a Y' a Z'
            q = self.w.partner(0)
            return Move("O3", "ii" if self.w[q] == self.w[0] else "i", (0, 2, q))

        for k in range(n):
            if cls[k] == target and cls[(k + 1) % n] != target:
                if self._try(k - 1, main):
                    return
        raise AssertionError(f"no vertex-reduction step applies to {self.w}")

    def merge(self) -> bool:
        """One O2 merge of two letters that travel together; False if none."""
        L = self.w.letters
        n = len(L)
        for p in range(n):
            for variant in ("ii", "i"):
                try:
                    merged = apply_O2(self.w, p, variant)
                except WordError:
                    continue
                self.w = merged
                self.trace.append(Move("O2", variant, (p,)))
                return True
        return False

    def simplify(self) -> None:
        self.cancel()
        while len(self.w) > 2 and self.merge():
            self.cancel()

    def reduce_vertices(self) -> None:
        while True:
            self.simplify()
            if len(self.w) == 2 or len(set(corner_classes(self.w))) == 1:
                return
            self._vertex_step()

    # -- crosscaps and handles -----------------------------------------------

    def _adjacent(self, sym: str) -> bool:
        L = self.w.letters
        n = len(L)
        i, j = [k for k, x in enumerate(L) if x.symbol == sym]
        return (j - i) % n in (1, n - 1)

    def gather_crosscaps(self) -> None:
        while True:
            L = self.w.letters
            pending = sorted(
                x.symbol for k, x in enumerate(L)
                if k < self.w.partner(k) and L[self.w.partner(k)] == x and not self._adjacent(x.symbol)
            )
            if not pending:
                return
            i = next(k for k, x in enumerate(L) if x.symbol == pending[0])
            j = self.w.partner(i)
            # x P x Q  ->  P x x Q'
            self.rotate_to(i)
            self.do(Move("O3", "ii", (0, j - i, j - i)))

    def extract_handle(self, a_sym: str, b_sym: str) -> None:
        L = self.w.letters
        n = len(L)
        i = next(k for k, x in enumerate(L) if x.symbol == a_sym)
        a = L[i]
        j = self.w.partner(i)
        bs = [k for k, x in enumerate(L) if x.symbol == b_sym]
        ib = next(k for k in bs if 0 < (k - i) % n < (j - i) % n)
        jb = next(k for k in bs if k != ib)
        b = L[ib]
        len_x = (ib - i - 1) % n
        len_y = (j - ib - 1) % n
        len_z = (jb - j - 1) % n
        # a X b Y a' Z b' W  ->  a b' W Z a' b Y X
        self.t2(i, len_x, len_z)
        # -> a b Y X a' W Z b'
        self.t2(self.index_of(a), 1, 1 + len_y + len_x)
        # -> b a b' a' W Z Y X
        self.t2(self.index_of(b), len_y + len_x, 0)

    def extract_handles(self) -> None:
        done = set()
        for _, block in _commutator_blocks(self.w):
            done.update(x.symbol for x in block)
        while True:
            L = self.w.letters
            rest = sorted(
                x.symbol for k, x in enumerate(L)
                if k < self.w.partner(k) and x.symbol not in done and L[self.w.partner(k)] != x
            )
            if not rest:
                return
            a_sym = rest[0]
            b_sym = _linked_with(self.w, a_sym, exclude=done)[0]
            self.extract_handle(a_sym, b_sym)
            done.update((a_sym, b_sym))

    def handle_to_crosscaps(self) -> None:
        """``x x U a b a' b' V`` to three crosscaps, keeping U and V intact."""
        L = self.w.letters
        n = len(L)
        c0 = next(k for k in range(n) if L[k] == L[(k + 1) % n])
        b0 = _commutator_blocks(self.w)[0][0]
        len_u = (b0 - c0 - 2) % n
        # abstract tokens (name, exp, length)
        tokens = [("x", 1, 1), ("x", 1, 1), ("U", 1, len_u), ("a", 1, 1),
                  ("b", 1, 1), ("a", -1, 1), ("b", -1, 1), ("V", 1, n - 6 - len_u)]
        self.rotate_to(c0)
        for r, variant, (p, sp, q) in _HANDLE_MACRO:
            self.rotate_to(sum(t[2] for t in tokens[:r]))
            tokens = tokens[r:] + tokens[:r]
            off = [sum(t[2] for t in tokens[:k]) for k in range(len(tokens) + 1)]
            self.do(Move("O3", variant, (off[p], off[sp], off[q])))
            A, B, C, D = tokens[:p], tokens[p + 1:sp], tokens[sp:q], tokens[q + 1:]
            if variant == "i":
                tokens = B + [tokens[p]] + A + D + [tokens[q]] + C
            else:
                tokens = B + [tokens[p]] + A + _flip(C) + [tokens[q]] + _flip(D)

    def reduce_orientable(self) -> None:
        self.reduce_vertices()
        if len(self.w) > 2:
            self.extract_handles()

    def reduce_nonorientable(self) -> None:
        self.reduce_vertices()
        self.gather_crosscaps()
        self.extract_handles()
        while _commutator_blocks(self.w):
            self.handle_to_crosscaps()

    # -- spelling ------------------------------------------------------------

    def spell(self, surface: StandardSurface) -> None:
        L = self.w.letters
        n = len(L)
        if surface.kind == "sphere":
            mapping = [(L[0].symbol, "a", L[0].exp < 0)]
        elif surface.kind == "nonorientable":
            self.rotate_to(0 if L[0].symbol == L[1].symbol else 1)
            L = self.w.letters
            mapping = [(L[2 * k].symbol, f"a{k + 1}", L[2 * k].exp < 0) for k in range(n // 2)]
        else:
            self.rotate_to(next(r for r in range(4) if _splits_into_blocks(rotate(self.w, r))))
            L = self.w.letters
            mapping = []
            for k in range(n // 4):
                x, y = L[4 * k], L[4 * k + 1]
                mapping.append((x.symbol, f"a{k + 1}", x.exp < 0))
                mapping.append((y.symbol, f"b{k + 1}", y.exp < 0))
        mapping = tuple(m for m in mapping if (m[0], m[2]) != (m[1], False))
        if mapping:
            self.do(Move("relabel", None, (), mapping=mapping))


def _flip(tokens):
    return [(m, -e, k) for m, e, k in reversed(tokens)]


def _is_commutator(block: Sequence[Letter]) -> bool:
    x, y, u, v = block
    return x.symbol != y.symbol and u == x.inverse() and v == y.inverse()


def _splits_into_blocks(w: SurfaceWord) -> bool:
    L = w.letters
    return len(L) % 4 == 0 and all(_is_commutator(L[k:k + 4]) for k in range(0, len(L), 4))


def _commutator_blocks(w: SurfaceWord) -> list[tuple[int, tuple[Letter, ...]]]:
    L = w.letters
    n = len(L)
    if n < 4:
        return []
    used = set()
    out = []
    for k in range(n):
        idx = [(k + t) % n for t in range(4)]
        if used.intersection(idx):
            continue
        block = tuple(L[i] for i in idx)
        if _is_commutator(block):
            used.update(idx)
            out.append((k, block))
    return out


def _linked_with(w: SurfaceWord, sym: str, exclude=()) -> list[str]:
    L = w.letters
    n = len(L)
    i, j = [k for k, x in enumerate(L) if x.symbol == sym]
    inside = {L[k].symbol for k in range(i + 1, j)}
    outside = {L[k % n].symbol for k in range(j + 1, i + n)}
    return sorted((inside & outside) - set(exclude) - {sym})


def canonical_form(w) -> CanonicalForm:
    """Reduce a word to its standard surface with a replayable move trace.

    Cancel ``x x'`` pairs and cut and paste until every corner lies on one
    vertex.  Then gather same-sign pairs into adjacent crosscaps, peel off
    commutator blocks, and, when crosscaps exist, trade each block plus a
    crosscap for three crosscaps.  Ties go to the least symbol.
    """
    w = _as_word(w)
    surface = StandardSurface.from_invariants(euler_characteristic(w), is_orientable(w))
    r = _Reducer(w)
    if surface.orientable:
        r.reduce_orientable()
    else:
        r.reduce_nonorientable()
    r.spell(surface)
    if r.w != surface.word():
        raise AssertionError(f"canonicalization ended at {r.w}, expected {surface.word()}")
    return CanonicalForm(surface, tuple(r.trace), r.w)


# ---------------------------------------------------------------------------
# maps with a single face


def word_of_map(M: CombinatorialMap) -> SurfaceWord:
    """Boundary word of the only face of a one-face map.

    A quadricell at the first end of its edge (tags 1, alpha) reads the
    edge forwards, one at the second end (beta, alpha*beta) backwards.
    """
    fs = faces(M)
    if len(fs) != 1:
        raise WordError(f"word_of_map needs a map with exactly one face, got {len(fs)}")
    return SurfaceWord((M.base[q >> 2], 1 if (q & 3) < 2 else -1) for q in fs[0].cycle)


def surface_of_map(M: CombinatorialMap) -> StandardSurface:
    c = census(M)
    return StandardSurface.from_invariants(c.chi, c.orientable)
