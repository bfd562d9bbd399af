"""Finite posets given by their cover relation, and Birkhoff downset lattices."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import NamedTuple

from .errors import CycleError, ParseError, RedundantCoverError
from .lattice import FiniteLattice

# characters reserved by the vector-literal and element-name grammars
_RESERVED = set(">=,()")


class CoveringPair(NamedTuple):
    upper: str
    lower: str

    def __str__(self) -> str:
        return f"{self.upper}>{self.lower}"


@dataclass(frozen=True)
class Poset:
    """A finite order presented by its (irredundant, acyclic) covers.

    ``covers`` holds ``(upper, lower)`` pairs. Elements and covers are kept in
    lexicographic order, which is the canonical order used everywhere else.
    """

    elements: tuple[str, ...]
    covers: tuple[CoveringPair, ...]

    def __init__(self, elements, covers):
        elements = tuple(sorted(set(elements)))
        covers = tuple(sorted({CoveringPair(*c) for c in covers}))
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "covers", covers)
        self._validate()

    def _validate(self) -> None:
        known = set(self.elements)
        for x in self.elements:
            if not x or any(ch.isspace() for ch in x):
                raise ParseError(f"bad element name {x!r}")
            if _RESERVED & set(x):
                raise ParseError(f"element name {x!r} uses a reserved character")
        for up, low in self.covers:
            if up not in known or low not in known:
                raise ParseError(f"cover {up}>{low} mentions an unknown element")
            if up == low:
                raise CycleError(f"self-cover at {up}")
        # depth-first search for a cycle in the cover graph
        state: dict[str, int] = {}

        def visit(x: str) -> None:
            state[x] = 1
            for y in self.lower_covers(x):
                if state.get(y) == 1:
                    raise CycleError(f"covers contain a cycle through {x} and {y}")
                if y not in state:
                    visit(y)
            state[x] = 2

        for x in self.elements:
            if x not in state:
                visit(x)
        for up, low in self.covers:
            others = [y for y in self.lower_covers(up) if y != low]
            if any(self.le(low, y) for y in others):
                raise RedundantCoverError(f"cover {up}>{low} is implied by transitivity")

    @cached_property
    def _below(self) -> dict[str, frozenset[str]]:
        down: dict[str, frozenset[str]] = {}

        def collect(x: str) -> frozenset[str]:
            if x not in down:
                acc = {x}
                for y in self.lower_covers(x):
                    acc |= collect(y)
                down[x] = frozenset(acc)
            return down[x]

        for x in self.elements:
            collect(x)
        return down

    def lower_covers(self, x: str) -> list[str]:
        return [c.lower for c in self.covers if c.upper == x]

    def upper_covers(self, x: str) -> list[str]:
        return [c.upper for c in self.covers if c.lower == x]

    def le(self, a: str, b: str) -> bool:
        return a in self._below[b]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.le(a, b)

    def downset(self, x: str) -> frozenset[str]:
        return self._below[x]

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}


def poset_from_json(obj) -> Poset:
    if not isinstance(obj, dict) or set(obj) != {"elements", "covers"}:
        raise ParseError('poset must be an object with exactly "elements" and "covers"')
    elements, covers = obj["elements"], obj["covers"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ParseError('"elements" must be an array of strings')
    if len(set(elements)) != len(elements):
        raise ParseError("duplicate element names")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(s, str) for s in c)
        for c in covers
    ):
        raise ParseError('"covers" must be an array of [upper, lower] string pairs')
    if len({tuple(c) for c in covers}) != len(covers):
        raise ParseError("duplicate cover pairs")
    return Poset(elements, covers)


def parse_poset(text: str) -> Poset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return poset_from_json(obj)


def load_poset(path) -> Poset:
    return parse_poset(Path(path).read_text())


def covering_pairs(P: Poset) -> list[CoveringPair]:
    return list(P.covers)


def downset_lattice(P: Poset) -> FiniteLattice:
    """All down-closed subsets of ``P`` ordered by inclusion."""
    downs = {frozenset()}
    frontier = {frozenset()}
    # every downset arises from a smaller one by adding an element whose
    # lower covers are all present
    while frontier:
        fresh = set()
        for d in frontier:
            for x in P.elements:
                if x not in d and all(y in d for y in P.lower_covers(x)):
                    e = d | {x}
                    if e not in downs:
                        fresh.add(e)
        downs |= fresh
        frontier = fresh
    ordered = sorted(downs, key=lambda d: (len(d), sorted(d)))
    return FiniteLattice.from_relation(ordered, frozenset.issubset)


def join_irreducible_order(L: FiniteLattice) -> Poset:
    """The order of join-irreducible elements of ``L``, named by their index."""
    ji = L.join_irreducibles()
    covers = []
    for a in ji:
        for b in ji:
            if a != b and L.leq[a, b]:
                between = any(c not in (a, b) and L.leq[a, c] and L.leq[c, b] for c in ji)
                if not between:
                    covers.append((f"j{b}", f"j{a}"))
    return Poset([f"j{a}" for a in ji], covers)
