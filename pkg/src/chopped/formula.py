"""Closed-form sectional complement: the join of the atoms of ``v`` outside
``u``, minus the atoms of elements that split over ``(u, v)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algorithm import check_pair
from .construction import A1, A2, ChoppedLattice, GlobalElement
from .vectors import Vector, atoms_below, join_atoms


@dataclass(frozen=True)
class SplitWitness:
    element: str
    splits: bool
    upper: Optional[str] = None  # the cover p > q with p1 outside At(u)
    index: Optional[int] = None  # i with q_i in At(v) - At(u), q_{i+1} in At(u)

    def to_json(self) -> dict:
        return {"element": self.element, "splits": self.splits,
                "upper": self.upper, "index": self.index}


@dataclass(frozen=True)
class SplitReport:
    witnesses: tuple[SplitWitness, ...]
    atoms: frozenset[GlobalElement]

    def splitting(self) -> list[str]:
        return [w.element for w in self.witnesses if w.splits]

    def to_json(self) -> dict:
        return {
            "witnesses": [w.to_json() for w in self.witnesses],
            "split_atoms": sorted(a.name for a in self.atoms),
        }


def _q(x: str, i: int) -> GlobalElement:
    # indices are taken mod 2: q_1 = A1(q), q_2 = A2(q), q_3 = q_1
    return A1(x) if i % 2 == 1 else A2(x)


def split_set(M: ChoppedLattice, u: Vector, v: Vector) -> SplitReport:
    at_u = atoms_below(M, u)
    fresh = atoms_below(M, v) - at_u
    P = M.poset
    witnesses, atoms = [], set()
    for q in P.elements:
        uppers = sorted(P.upper_covers(q))
        if not uppers:
            continue
        found = None
        for p in uppers:
            for i in (1, 2):
                if A1(p) in fresh and _q(q, i) in fresh and _q(q, i + 1) in at_u:
                    found = found or (p, i)
                    atoms.add(_q(q, i))
        if found:
            witnesses.append(SplitWitness(q, True, *found))
        else:
            witnesses.append(SplitWitness(q, False))
    return SplitReport(tuple(witnesses), frozenset(atoms))


def s1960(M: ChoppedLattice, u: Vector, v: Vector) -> Vector:
    check_pair(M, u, v)
    fresh = atoms_below(M, v) - atoms_below(M, u)
    return join_atoms(M, fresh - split_set(M, u, v).atoms)
