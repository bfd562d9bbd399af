"""The chopped lattice M built from a finite order P.

Each covering pair ``x > y`` of P contributes a six-element block::

            x(y)
           /    \\
         x1      y
          |     /  \\
          |   y1    y2
           \\   |   /
               0

Blocks are glued along shared atoms: ``x1`` is one global element for every
block in which ``x`` appears (as upper or as lower element), while ``y2`` and
``y = y1 v y2`` are shared by the blocks below a common ``y``. Only meets are
defined on M; joins live in the ideal lattice (see :mod:`chopped.vectors`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import NamedTuple

import numpy as np

from .errors import IsolatedElementError, ParseError
from .lattice import FiniteLattice
from .order import CoveringPair, Poset


class Role(IntEnum):
    ZERO = 0
    UPPER = 1  # x1
    LOW1 = 2  # y1
    LOW2 = 3  # y2
    SUM = 4  # y = y1 v y2
    TOP = 5  # x(y)


_BLOCK_COVERS = [(0, 1), (0, 2), (0, 3), (2, 4), (3, 4), (1, 5), (4, 5)]


def _block_lattice() -> FiniteLattice:
    leq = np.eye(6, dtype=bool)
    for lo, hi in _BLOCK_COVERS:
        leq[lo, hi] = True
    for _ in range(3):
        leq = leq | ((leq.astype(int) @ leq.astype(int)) > 0)
    return FiniteLattice(list(Role), leq)


BLOCK = _block_lattice()
BLOCK_LEQ = BLOCK.leq
BLOCK_MEET = BLOCK.meet_table
BLOCK_JOIN = BLOCK.join_table
# lower covers inside the block, used to check "covered by"
BLOCK_COVERED_BY = {Role(j): {Role(i) for i in range(6) if BLOCK.cover_matrix[i, j]} for j in range(6)}


def role_name(role: Role, pair: CoveringPair) -> str:
    x, y = pair
    return {
        Role.ZERO: "0",
        Role.UPPER: f"{x}1",
        Role.LOW1: f"{y}1",
        Role.LOW2: f"{y}2",
        Role.SUM: y,
        Role.TOP: f"{x}({y})",
    }[role]


class GlobalElement(NamedTuple):
    """Identity of an element of M: ``kind`` is ZERO, A1, A2, SUM or TOP."""

    kind: str
    x: str = ""
    y: str = ""

    @property
    def name(self) -> str:
        if self.kind == "ZERO":
            return "0"
        if self.kind == "A1":
            return f"{self.x}1"
        if self.kind == "A2":
            return f"{self.x}2"
        if self.kind == "SUM":
            return self.x
        return f"{self.x}({self.y})"

    def __str__(self) -> str:
        return self.name


ZERO = GlobalElement("ZERO")


def A1(x: str) -> GlobalElement:
    return GlobalElement("A1", x)


def A2(y: str) -> GlobalElement:
    return GlobalElement("A2", y)


def SUM(y: str) -> GlobalElement:
    return GlobalElement("SUM", y)


def TOP(x: str, y: str) -> GlobalElement:
    return GlobalElement("TOP", x, y)


def embed(role: Role, pair: CoveringPair) -> GlobalElement:
    x, y = pair
    return (ZERO, A1(x), A1(y), A2(y), SUM(y), TOP(x, y))[role]


class Suborder(NamedTuple):
    """A cover-preserving three-element suborder.

    V: ``p > r`` and ``q > r``; C: ``p > q > r``; H: ``p > q`` and ``p > r``.
    """

    kind: str
    p: str
    q: str
    r: str

    def __str__(self) -> str:
        if self.kind == "V":
            return f"V({self.p},{self.q};{self.r})"
        if self.kind == "H":
            return f"H({self.p};{self.q},{self.r})"
        return f"C({self.p},{self.q},{self.r})"


def enumerate_suborders(P: Poset, kind: str) -> list[Suborder]:
    out = []
    if kind == "V":
        for r in P.elements:
            ups = sorted(P.upper_covers(r))
            out += [Suborder("V", p, q, r) for i, p in enumerate(ups) for q in ups[i + 1:]]
    elif kind == "C":
        for p, q in P.covers:
            out += [Suborder("C", p, q, r) for r in sorted(P.lower_covers(q))]
    elif kind == "H":
        for p in P.elements:
            lows = sorted(P.lower_covers(p))
            out += [Suborder("H", p, q, r) for i, q in enumerate(lows) for r in lows[i + 1:]]
    else:
        raise ValueError(f"unknown suborder kind {kind!r}")
    return sorted(out)


class Overlap(NamedTuple):
    """Two blocks sharing the principal ideal of one element.

    ``i`` and ``j`` index :attr:`ChoppedLattice.pairs`; ``role_i``/``role_j``
    give the greatest shared element as seen from each block.
    """

    suborder: Suborder
    i: int
    j: int
    role_i: Role
    role_j: Role


@dataclass(frozen=True, eq=False)
class ChoppedLattice:
    poset: Poset
    pairs: tuple[CoveringPair, ...]
    elements: tuple[GlobalElement, ...]
    overlaps: tuple[Overlap, ...]
    pair_index: dict = field(repr=False)
    _index: dict = field(repr=False)
    _meet: np.ndarray = field(repr=False)
    _leq: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def block(self, pair) -> tuple[GlobalElement, ...]:
        pair = CoveringPair(*pair)
        return tuple(embed(role, pair) for role in Role)

    def meet(self, a: GlobalElement, b: GlobalElement) -> GlobalElement:
        return self.elements[self._meet[self._index[a], self._index[b]]]

    def le(self, a: GlobalElement, b: GlobalElement) -> bool:
        return bool(self._leq[self._index[a], self._index[b]])

    def atoms(self) -> frozenset[GlobalElement]:
        return frozenset(e for e in self.elements if e.kind in ("A1", "A2"))

    def maximal_elements(self) -> list[GlobalElement]:
        strict = self._leq & ~np.eye(len(self), dtype=bool)
        return [self.elements[i] for i in np.nonzero(~strict.any(axis=1))[0]]

    def element(self, name: str) -> GlobalElement:
        for e in self.elements:
            if e.name == name:
                return e
        raise KeyError(name)

    def suborders(self, kind: str) -> list[Suborder]:
        return enumerate_suborders(self.poset, kind)


def _overlap(pair_index, s: Suborder) -> Overlap:
    p, q, r = s.p, s.q, s.r
    if s.kind == "V":
        return Overlap(s, pair_index[(p, r)], pair_index[(q, r)], Role.SUM, Role.SUM)
    if s.kind == "C":
        return Overlap(s, pair_index[(p, q)], pair_index[(q, r)], Role.LOW1, Role.UPPER)
    return Overlap(s, pair_index[(p, q)], pair_index[(p, r)], Role.UPPER, Role.UPPER)


def build_chopped(P: Poset) -> ChoppedLattice:
    """Glue one block per covering pair of ``P`` into the chopped lattice M."""
    covered = {y for _, y in P.covers}
    involved = {x for c in P.covers for x in c}
    isolated = sorted(set(P.elements) - involved)
    if isolated:
        raise IsolatedElementError(f"elements in no covering pair: {', '.join(isolated)}")

    pairs = tuple(P.covers)
    pair_index = {pair: i for i, pair in enumerate(pairs)}
    elements = (
        [ZERO]
        + [A1(x) for x in sorted(involved)]
        + [A2(y) for y in sorted(covered)]
        + [SUM(y) for y in sorted(covered)]
        + [TOP(x, y) for x, y in pairs]
    )
    names = [e.name for e in elements]
    if len(set(names)) != len(names):
        dup = sorted({n for n in names if names.count(n) > 1})
        raise ParseError(f"element names collide in M: {', '.join(dup)}")
    index = {e: i for i, e in enumerate(elements)}

    n = len(elements)
    leq = np.eye(n, dtype=bool)
    for pair in pairs:
        for a in Role:
            for b in Role:
                if BLOCK_LEQ[a, b]:
                    leq[index[embed(a, pair)], index[embed(b, pair)]] = True

    below = leq.sum(axis=0)
    meet = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        for b in range(n):
            common = np.nonzero(leq[:, a] & leq[:, b])[0]
            best = common[below[common].argmax()]
            # the shared part of two blocks is always a principal ideal
            assert leq[common, best].all()
            meet[a, b] = best

    overlaps = tuple(
        _overlap(pair_index, s) for kind in "VCH" for s in enumerate_suborders(P, kind)
    )
    return ChoppedLattice(
        poset=P,
        pairs=pairs,
        elements=tuple(elements),
        overlaps=overlaps,
        pair_index=pair_index,
        _index=index,
        _meet=meet,
        _leq=leq,
    )


def global_atoms(M: ChoppedLattice) -> frozenset[GlobalElement]:
    return M.atoms()
