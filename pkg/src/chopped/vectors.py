"""Vectors over the covering pairs of P, i.e. ideals of the chopped lattice M.

A vector assigns to every covering pair one element of that pair's block. It
is *compatible* when any two overlapping blocks agree on their shared
elements; compatible vectors are exactly the ideals of M, and they form the
lattice Id M.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .construction import (
    BLOCK_JOIN,
    BLOCK_LEQ,
    BLOCK_MEET,
    ChoppedLattice,
    GlobalElement,
    Overlap,
    Role,
    ZERO,
    embed,
    role_name,
)
from .errors import IncompatibleVectorError, KeyMismatchError, NotAnIdealError, ParseError
from .order import CoveringPair


@dataclass(frozen=True)
class Vector:
    """One block element per covering pair, in canonical pair order."""

    pairs: tuple[CoveringPair, ...]
    roles: tuple[Role, ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "Vector":
        items = sorted((CoveringPair(*k), Role(v)) for k, v in mapping.items())
        return cls(tuple(k for k, _ in items), tuple(v for _, v in items))

    def __getitem__(self, pair) -> Role:
        return self.roles[self.pairs.index(CoveringPair(*pair))]

    def entry(self, pair) -> GlobalElement:
        pair = CoveringPair(*pair)
        return embed(self[pair], pair)

    def replace(self, pair, role: Role) -> "Vector":
        k = self.pairs.index(CoveringPair(*pair))
        roles = list(self.roles)
        roles[k] = Role(role)
        return Vector(self.pairs, tuple(roles))

    def items(self):
        return zip(self.pairs, self.roles)

    def __le__(self, other: "Vector") -> bool:
        return vector_leq(self, other)

    def __lt__(self, other: "Vector") -> bool:
        return self != other and vector_leq(self, other)

    def __str__(self) -> str:
        return format_vector(self)

    def __repr__(self) -> str:
        return f"Vector({format_vector(self)!r})"


def format_vector(c: Vector) -> str:
    return ",".join(f"{p}={role_name(r, p)}" for p, r in c.items())


def parse_vector(M: ChoppedLattice, text: str) -> Vector:
    """Parse a literal such as ``"p>q=q2,q>r=0"``; every cover exactly once."""
    mapping: dict[CoveringPair, Role] = {}
    for raw in text.split(","):
        entry = raw.strip()
        if not entry:
            raise ParseError(f"empty entry in vector literal {text!r}")
        try:
            key, value = entry.split("=")
            upper, lower = key.split(">")
        except ValueError:
            raise ParseError(f"malformed vector entry {entry!r}") from None
        pair = CoveringPair(upper.strip(), lower.strip())
        if pair not in M.pair_index:
            raise ParseError(f"{pair} is not a covering pair")
        if pair in mapping:
            raise ParseError(f"{pair} given twice")
        names = {role_name(r, pair): r for r in Role}
        if value.strip() not in names:
            raise ParseError(f"{value.strip()!r} is not an element of block {pair}")
        mapping[pair] = names[value.strip()]
    missing = [str(p) for p in M.pairs if p not in mapping]
    if missing:
        raise ParseError(f"vector literal misses covers: {', '.join(missing)}")
    return Vector.from_mapping(mapping)


def constant_vector(M: ChoppedLattice, role: Role) -> Vector:
    return Vector(M.pairs, (Role(role),) * len(M.pairs))


def zero_vector(M: ChoppedLattice) -> Vector:
    return constant_vector(M, Role.ZERO)


def top_vector(M: ChoppedLattice) -> Vector:
    return constant_vector(M, Role.TOP)


def _check_keys(M: ChoppedLattice, c: Vector) -> None:
    if c.pairs != M.pairs:
        raise KeyMismatchError(
            f"vector indexed by {[str(p) for p in c.pairs]}, expected {[str(p) for p in M.pairs]}"
        )


def _shared(ov: Overlap, role: Role, side: int) -> Role:
    """Meet of ``role`` with the shared part, expressed in the other block."""
    own, other = (ov.role_i, ov.role_j) if side == 0 else (ov.role_j, ov.role_i)
    m = Role(BLOCK_MEET[role, own])
    # the shared part is the principal ideal of ``own``; only its top element
    # can carry a different role in the other block (x1 as LOW1 vs UPPER)
    return other if m == own else m


def overlap_ok(ov: Overlap, roles) -> bool:
    return _shared(ov, roles[ov.i], 0) == BLOCK_MEET[roles[ov.j], ov.role_j]


def incompatibilities(M: ChoppedLattice, c: Vector) -> list[Overlap]:
    _check_keys(M, c)
    return [ov for ov in M.overlaps if not overlap_ok(ov, c.roles)]


def is_compatible(M: ChoppedLattice, c: Vector) -> bool:
    _check_keys(M, c)
    return all(overlap_ok(ov, c.roles) for ov in M.overlaps)


def _require_compatible(M: ChoppedLattice, *vectors: Vector) -> None:
    for c in vectors:
        if not is_compatible(M, c):
            raise IncompatibleVectorError(f"vector {c} is not compatible")


def ideal_from_vector(M: ChoppedLattice, c: Vector) -> frozenset[GlobalElement]:
    _require_compatible(M, c)
    out = set()
    for pair, role in c.items():
        out.update(embed(r, pair) for r in Role if BLOCK_LEQ[r, role])
    return frozenset(out)


def vector_from_ideal(M: ChoppedLattice, ideal: Iterable[GlobalElement]) -> Vector:
    ideal = frozenset(ideal)
    if ZERO not in ideal:
        raise NotAnIdealError("an ideal must contain 0")
    unknown = [str(e) for e in ideal if e not in M._index]
    if unknown:
        raise NotAnIdealError(f"not elements of M: {', '.join(sorted(unknown))}")
    for e in ideal:
        for f in M.elements:
            if M.le(f, e) and f not in ideal:
                raise NotAnIdealError(f"{f} lies below {e} but is missing")
    roles = []
    for pair in M.pairs:
        inside = [r for r in Role if embed(r, pair) in ideal]
        top = Role.ZERO
        for r in inside:
            top = Role(BLOCK_JOIN[top, r])
        if top not in inside:
            raise NotAnIdealError(f"not closed under the join {role_name(top, pair)} in block {pair}")
        roles.append(top)
    c = Vector(M.pairs, tuple(roles))
    if ideal_from_vector(M, c) != ideal:
        raise NotAnIdealError("set is not the union of its block maxima")
    return c


def vector_leq(c: Vector, d: Vector) -> bool:
    if c.pairs != d.pairs:
        raise KeyMismatchError("vectors over different covering pairs")
    return all(BLOCK_LEQ[a, b] for a, b in zip(c.roles, d.roles))


def vector_meet(M: ChoppedLattice, c: Vector, d: Vector) -> Vector:
    _require_compatible(M, c, d)
    return Vector(c.pairs, tuple(Role(BLOCK_MEET[a, b]) for a, b in zip(c.roles, d.roles)))


def close_upward(M: ChoppedLattice, roles: list) -> tuple[Role, ...]:
    """Raise coordinates until every overlap agrees (the generated ideal)."""
    roles = list(roles)
    changed = True
    while changed:
        changed = False
        for ov in M.overlaps:
            for side, (k, src) in enumerate(((ov.j, ov.i), (ov.i, ov.j))):
                need = _shared(ov, roles[src], side)
                joined = BLOCK_JOIN[roles[k], need]
                if joined != roles[k]:
                    roles[k] = Role(joined)
                    changed = True
    return tuple(Role(r) for r in roles)


def vector_join(M: ChoppedLattice, c: Vector, d: Vector) -> Vector:
    _require_compatible(M, c, d)
    roles = [BLOCK_JOIN[a, b] for a, b in zip(c.roles, d.roles)]
    return Vector(c.pairs, close_upward(M, roles))


def atom_vector(M: ChoppedLattice, atom: GlobalElement) -> Vector:
    """The principal ideal of an atom of M, as a vector."""
    if atom not in M.atoms():
        raise ValueError(f"{atom} is not an atom of M")
    roles = []
    for pair in M.pairs:
        hit = [r for r in Role if embed(r, pair) == atom]
        roles.append(hit[0] if hit else Role.ZERO)
    return Vector(M.pairs, tuple(roles))


def join_all(M: ChoppedLattice, vectors: Iterable[Vector]) -> Vector:
    out = zero_vector(M)
    for c in vectors:
        out = vector_join(M, out, c)
    return out


def join_atoms(M: ChoppedLattice, atoms: Iterable[GlobalElement]) -> Vector:
    return join_all(M, (atom_vector(M, a) for a in sorted(atoms)))


def atoms_below(M: ChoppedLattice, c: Vector) -> frozenset[GlobalElement]:
    """At(c): atoms of M lying below some coordinate of ``c``."""
    _check_keys(M, c)
    out = set()
    for pair, role in c.items():
        for r in (Role.UPPER, Role.LOW1, Role.LOW2):
            if BLOCK_LEQ[r, role]:
                out.add(embed(r, pair))
    return frozenset(out)
