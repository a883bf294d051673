"""Permutations of finite labelled ground sets.

Labels are opaque strings mapped to dense indices when the ground set is
built; all arithmetic happens on the indices.  Composition is
right-to-left: ``compose(p, q)(x) == p(q(x))``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from . import _kernels
from .errors import GroundSetMismatch, ParseError


class GroundSet:
    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str]):
        self._labels = tuple(labels)
        self._index = {}
        for i, label in enumerate(self._labels):
            if label in self._index:
                raise ValueError(f"duplicate label {label!r}")
            self._index[label] = i

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    def index(self, label: str) -> int:
        return self._index[label]

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __getitem__(self, i: int) -> str:
        return self._labels[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self._labels)!r})"


class Permutation:
    """A bijection of a :class:`GroundSet`, stored as an index image tuple."""

    __slots__ = ("ground", "image")

    def __init__(self, ground: GroundSet, image: Sequence[int], check: bool = True):
        image = tuple(image)
        if check:
            if len(image) != ground.size:
                raise ValueError(f"image has {len(image)} entries for a ground set of size {ground.size}")
            if sorted(image) != list(range(ground.size)):
                raise ValueError("image is not a bijection")
        self.ground = ground
        self.image = image

    @classmethod
    def identity(cls, ground: GroundSet) -> Permutation:
        return cls(ground, range(ground.size), check=False)

    @classmethod
    def from_cycles(cls, ground: GroundSet, cycles: Iterable[Sequence[str]]) -> Permutation:
        image = list(range(ground.size))
        seen = set()
        for cyc in cycles:
            idx = [ground.index(label) for label in cyc]
            for i in idx:
                if i in seen:
                    raise ValueError(f"label {ground[i]!r} occurs twice")
                seen.add(i)
            for a, b in zip(idx, idx[1:] + idx[:1]):
                image[a] = b
        return cls(ground, image, check=False)

    @classmethod
    def parse(cls, text: str, ground: GroundSet | None = None) -> Permutation:
        cycles = parse_cycles(text)
        if ground is None:
            order = []
            for cyc in cycles:
                order.extend(label for label, _ in cyc)
            ground = GroundSet(order)
        else:
            for cyc in cycles:
                for label, col in cyc:
                    if label not in ground:
                        raise ParseError(f"unknown label {label!r}", 1, col)
        seen = {}
        for cyc in cycles:
            for label, col in cyc:
                if label in seen:
                    raise ParseError(f"label {label!r} occurs twice", 1, col)
                seen[label] = col
        return cls.from_cycles(ground, [[label for label, _ in cyc] for cyc in cycles])

    def __call__(self, label: str) -> str:
        return self.ground[self.image[self.ground.index(label)]]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.ground == other.ground and self.image == other.image

    def __hash__(self) -> int:
        return hash((self.ground, self.image))

    def __len__(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def inverse(self) -> Permutation:
        return inverse(self)

    def cycles(self) -> list[tuple[str, ...]]:
        return cycle_decomposition(self)

    def to_string(self, include_fixed: bool = False) -> str:
        parts = []
        for cyc in cycle_decomposition(self):
            if len(cyc) == 1 and not include_fixed:
                continue
            parts.append("(" + ",".join(cyc) + ")")
        return "".join(parts) if parts else "()"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Permutation({self.to_string()!r})"


_TOKEN = re.compile(r"\s*([^\s(),]+)\s*")


def parse_cycles(text: str, line: int = 1, col_offset: int = 0) -> list[list[tuple[str, int]]]:
    """Split cycle notation into label lists; each label carries its column."""
    cycles = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        if text[pos] != "(":
            raise ParseError(f"expected '(' but found {text[pos]!r}", line, col_offset + pos + 1)
        pos += 1
        cyc = []
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            if pos < n and text[pos] == ")" and not cyc:
                pos += 1
                break
            m = _TOKEN.match(text, pos)
            if m is None or not m.group(1):
                raise ParseError("expected a label", line, col_offset + pos + 1)
            cyc.append((m.group(1), col_offset + m.start(1) + 1))
            pos = m.end()
            if pos >= n:
                raise ParseError("unterminated cycle", line, col_offset + pos + 1)
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                pos += 1
                break
            raise ParseError(f"unexpected character {text[pos]!r}", line, col_offset + pos + 1)
        if cyc:
            cycles.append(cyc)
    return cycles


def _check_same_ground(*perms: Permutation) -> GroundSet:
    ground = perms[0].ground
    for p in perms[1:]:
        if p.ground != ground:
            raise GroundSetMismatch("permutations act on different ground sets")
    return ground


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``r`` with ``r(x) = p(q(x))``."""
    ground = _check_same_ground(p, q)
    pi = p.image
    return Permutation(ground, [pi[j] for j in q.image], check=False)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p.image)
    for i, j in enumerate(p.image):
        inv[j] = i
    return Permutation(p.ground, inv, check=False)


def orbits(generators: Sequence[Permutation], ground: GroundSet) -> list[list[str]]:
    """Orbits of the group generated by ``generators``.

    Each orbit is in ascending index order and orbits are sorted by their
    least element.  With no generators every point is its own orbit.
    """
    for g in generators:
        if g.ground != ground:
            raise GroundSetMismatch("generator acts on a different ground set")
    count, labels = _kernels.orbit_labels([g.image for g in generators], ground.size)
    out = [[] for _ in range(count)]
    for i, lab in enumerate(labels):
        out[lab].append(ground[i])
    return out


def orbit_count(generators: Sequence[Permutation], ground: GroundSet) -> int:
    return _kernels.orbit_labels([g.image for g in generators], ground.size)[0]


def cycle_decomposition(p: Permutation) -> list[tuple[str, ...]]:
    """Disjoint cycles including fixed points, each starting at its least
    index, sorted by least index."""
    ground = p.ground
    return [tuple(ground[i] for i in cyc) for cyc in _kernels.cycles(p.image)]
