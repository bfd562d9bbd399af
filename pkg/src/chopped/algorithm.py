"""The cut algorithm producing a sectional complement of ``u`` in ``v`` in Id M.

Start from the vector ``m`` of blockwise maximal sectional complements, then
repair incompatibilities by lowering single coordinates ("cuts"): first every
V-failure (Step 2), then minimal C-failures (Step 3). The order in which
eligible failures are handled is delegated to a :class:`Strategy`.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .construction import (
    BLOCK_COVERED_BY,
    BLOCK_JOIN,
    BLOCK_LEQ,
    BLOCK_MEET,
    ChoppedLattice,
    Role,
    Suborder,
    role_name,
)
from .errors import (
    DivergenceError,
    IncompatibleVectorError,
    InvariantViolation,
    NoUniqueMaximumError,
    UnorderedPairError,
)
from .order import CoveringPair, Poset
from .vectors import Vector, incompatibilities, is_compatible, overlap_ok, vector_leq

log = logging.getLogger(__name__)

_RI = (Role.LOW1, Role.LOW2)


def block_max_complement(u: Role, v: Role) -> Role:
    """Largest ``s`` in the block with ``s ^ u = 0`` and ``s v u = v``."""
    found = [s for s in Role if BLOCK_MEET[s, u] == Role.ZERO and BLOCK_JOIN[s, u] == v]
    tops = [s for s in found if not any(t != s and BLOCK_LEQ[s, t] for t in found)]
    if len(tops) != 1:
        raise NoUniqueMaximumError(f"complements of {u.name} in {v.name}: {[t.name for t in tops]}")
    return tops[0]


def check_pair(M: ChoppedLattice, u: Vector, v: Vector) -> None:
    for name, c in (("u", u), ("v", v)):
        if not is_compatible(M, c):
            raise IncompatibleVectorError(f"{name} = {c} is not compatible")
    if not vector_leq(u, v):
        raise UnorderedPairError(f"u = {u} is not below v = {v}")


def max_complement_vector(M: ChoppedLattice, u: Vector, v: Vector) -> Vector:
    check_pair(M, u, v)
    return Vector(M.pairs, tuple(block_max_complement(a, b) for a, b in zip(u.roles, v.roles)))


@dataclass(frozen=True)
class Failure:
    """A detected V- or C-failure together with the cut it prescribes."""

    kind: str
    suborder: Suborder
    coordinate: CoveringPair
    old: Role
    target: Role
    case: Optional[str] = None

    @property
    def step(self) -> int:
        return 2 if self.kind == "V" else 3

    @property
    def cut(self) -> tuple[CoveringPair, Role]:
        return self.coordinate, self.target

    def to_record(self) -> dict:
        s = self.suborder
        return {
            "step": self.step,
            "kind": self.kind,
            "suborder": [s.p, s.q, s.r],
            "coordinate": str(self.coordinate),
            "old": role_name(self.old, self.coordinate),
            "new": role_name(self.target, self.coordinate),
            "case": self.case,
        }

    def __str__(self) -> str:
        rec = self.to_record()
        tag = f" case {self.case}" if self.case else ""
        return f"{self.suborder}: cut {rec['coordinate']} {rec['old']} -> {rec['new']}{tag}"


def _overlaps_by_suborder(M: ChoppedLattice):
    return {ov.suborder: ov for ov in M.overlaps}


def find_v_failures(M: ChoppedLattice, c: Vector, m: Vector) -> list[Failure]:
    out = []
    overlaps = _overlaps_by_suborder(M)
    for s in M.suborders("V"):
        pr, qr = CoveringPair(s.p, s.r), CoveringPair(s.q, s.r)
        if c[pr] != m[pr] or c[qr] != m[qr]:
            continue
        if overlap_ok(overlaps[s], c.roles):
            continue
        a, b = c[pr], c[qr]
        if a in _RI and b == Role.UPPER:
            coord = pr
        elif b in _RI and a == Role.UPPER:
            coord = qr
        else:
            raise InvariantViolation(
                f"V-failure at {s} has shape ({role_name(a, pr)}, {role_name(b, qr)}), "
                "expected an r-atom against an upper atom"
            )
        out.append(Failure("V", s, coord, c[coord], Role.ZERO))
    return out


def find_c_failures(M: ChoppedLattice, c: Vector, m: Vector) -> list[Failure]:
    out = []
    overlaps = _overlaps_by_suborder(M)
    for s in M.suborders("C"):
        pq, qr = CoveringPair(s.p, s.q), CoveringPair(s.q, s.r)
        if c[pq] != m[pq] or c[qr] != m[qr]:
            continue
        if overlap_ok(overlaps[s], c.roles):
            continue
        a, b = c[pq], c[qr]
        if a == Role.UPPER and b == Role.UPPER:
            out.append(Failure("C", s, qr, b, Role.ZERO, "A"))
        elif a == Role.UPPER and b == Role.TOP:
            out.append(Failure("C", s, qr, b, Role.SUM, "B"))
        else:
            raise InvariantViolation(
                f"C-failure at {s} has shape ({role_name(a, pq)}, {role_name(b, qr)}), "
                "matching neither case A nor case B"
            )
    return out


def minimal_c_failures(P: Poset, failures: Iterable[Failure]) -> list[Failure]:
    """Keep failures whose middle element has no failing middle strictly below it."""
    failures = list(failures)
    middles = {f.suborder.q for f in failures}
    return [f for f in failures if not any(P.lt(q, f.suborder.q) for q in middles)]


def apply_cut(c: Vector, f: Failure) -> Vector:
    if c[f.coordinate] != f.old:
        raise InvariantViolation(f"cut {f} does not apply: coordinate holds {c[f.coordinate].name}")
    if f.target not in BLOCK_COVERED_BY[f.old]:
        raise InvariantViolation(f"cut {f} does not lower by one cover")
    return c.replace(f.coordinate, f.target)


def apply_v_cut(c: Vector, f: Failure) -> Vector:
    if f.kind != "V":
        raise ValueError("not a V-failure")
    return apply_cut(c, f)


def apply_c_cut(c: Vector, f: Failure) -> Vector:
    if f.kind != "C":
        raise ValueError("not a C-failure")
    return apply_cut(c, f)


def eligible_failures(M: ChoppedLattice, c: Vector, m: Vector, step: int,
                      unrestricted_c: bool = False) -> list[Failure]:
    if step == 2:
        return find_v_failures(M, c, m)
    found = find_c_failures(M, c, m)
    return found if unrestricted_c else minimal_c_failures(M.poset, found)


# -- strategies ---------------------------------------------------------------

class LCG:
    """64-bit linear congruential generator (Numerical Recipes constants)."""

    A = 2862933555777941757
    C = 7046029254386353087
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.A * self.state + self.C) & self.MASK
        return self.state

    def below(self, n: int) -> int:
        """Uniform-ish index in ``range(n)`` from the high 32 bits."""
        return (self.next() >> 32) % n


class Strategy:
    name = "strategy"

    def chooser(self) -> Callable[[list], object]:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.name


class Lexicographic(Strategy):
    name = "lex"

    def chooser(self):
        return lambda options: options[0]


class ReverseLexicographic(Strategy):
    name = "revlex"

    def chooser(self):
        return lambda options: options[-1]


class SeededRandom(Strategy):
    def __init__(self, seed: int):
        if seed < 0 or seed >= 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.seed = seed

    @property
    def name(self) -> str:
        return f"random:{self.seed}"

    def chooser(self):
        rng = LCG(self.seed)
        return lambda options: options[rng.below(len(options))]


def parse_strategy(text: str) -> Strategy:
    if text == "lex":
        return Lexicographic()
    if text == "revlex":
        return ReverseLexicographic()
    if text.startswith("random:"):
        try:
            return SeededRandom(int(text.split(":", 1)[1]))
        except ValueError:
            pass
    raise ValueError(f"unknown strategy {text!r} (use lex, revlex or random:<seed>)")


def standard_strategies(count: int, seed: int = 0) -> list[Strategy]:
    """lex, revlex, then seeded random strategies, ``count`` in total."""
    out: list[Strategy] = [Lexicographic(), ReverseLexicographic()]
    rng = LCG(seed)
    while len(out) < count:
        out.append(SeededRandom(rng.next()))
    return out[:count]


# -- the run ------------------------------------------------------------------

@dataclass(frozen=True)
class AlgorithmRun:
    u: Vector
    v: Vector
    m: Vector
    after_step2: Vector
    s: Vector
    trace: tuple[Failure, ...]
    strategy: str
    unrestricted_c: bool = False
    transient_incompatibilities: tuple[str, ...] = field(default=(), compare=False)

    def replay(self) -> Vector:
        c = self.m
        for f in self.trace:
            c = apply_cut(c, f)
        return c

    def trace_records(self) -> list[dict]:
        return [f.to_record() for f in self.trace]

    def trace_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.trace_records())


def run_algorithm(
    M: ChoppedLattice,
    u: Vector,
    v: Vector,
    strategy: Strategy | None = None,
    *,
    unrestricted_c: bool = False,
    observer: Callable[[Vector, Failure], None] | None = None,
) -> AlgorithmRun:
    """Run Steps 1-3 and return the resulting vector with its cut trace.

    Failures are recomputed after every single cut. ``observer`` is called
    with the new vector and the failure just repaired.
    """
    strategy = strategy or Lexicographic()
    choose = strategy.chooser()
    m = max_complement_vector(M, u, v)
    c = m
    trace: list[Failure] = []
    transient: list[str] = []
    limit = 2 * len(M.pairs)
    after_step2 = m
    for step in (2, 3):
        while True:
            options = eligible_failures(M, c, m, step, unrestricted_c)
            if not options:
                break
            if len(trace) >= limit:
                raise DivergenceError(f"more than {limit} cuts")
            f = choose(options)
            c = apply_cut(c, f)
            trace.append(f)
            bad = [str(ov.suborder) for ov in incompatibilities(M, c) if ov.suborder.kind == "H"]
            if bad:
                transient.append(f"after cut {len(trace)}: {', '.join(bad)}")
                log.debug("transient H-incompatibility after %s: %s", f, bad)
            if observer is not None:
                observer(c, f)
        if step == 2:
            after_step2 = c
    if not is_compatible(M, c):
        bad = ", ".join(str(ov.suborder) for ov in incompatibilities(M, c))
        raise InvariantViolation(f"result {c} is incompatible at {bad}")
    return AlgorithmRun(u, v, m, after_step2, c, tuple(trace), str(strategy),
                        unrestricted_c, tuple(transient))


def m2_closed_form(M: ChoppedLattice, u: Vector, v: Vector) -> Vector:
    """Step-2 result in closed form: zero every coordinate of ``m`` holding an
    r-atom at a V-suborder where ``m`` itself is incompatible."""
    m = max_complement_vector(M, u, v)
    c = m
    overlaps = _overlaps_by_suborder(M)
    for s in M.suborders("V"):
        if overlap_ok(overlaps[s], m.roles):
            continue
        for coord in (CoveringPair(s.p, s.r), CoveringPair(s.q, s.r)):
            if m[coord] in _RI:
                c = c.replace(coord, Role.ZERO)
    return c


@dataclass(frozen=True)
class Exploration:
    """Every terminal vector reachable by some valid cut sequence."""

    results: frozenset
    sequences: int
    longest: int
    states: int


def explore_all_sequences(M: ChoppedLattice, u: Vector, v: Vector,
                          unrestricted_c: bool = False) -> Exploration:
    """Enumerate all valid cut sequences (memoized on intermediate states)."""
    m = max_complement_vector(M, u, v)

    @lru_cache(maxsize=None)
    def visit(step: int, c: Vector) -> tuple[frozenset, int, int]:
        options = eligible_failures(M, c, m, step, unrestricted_c)
        if not options:
            if step == 2:
                return visit(3, c)
            return frozenset([c]), 1, 0
        results, count, depth = set(), 0, 0
        for f in options:
            r, n, d = visit(step, apply_cut(c, f))
            results |= r
            count += n
            depth = max(depth, d + 1)
        return frozenset(results), count, depth

    results, count, depth = visit(2, m)
    states = visit.cache_info().currsize
    return Exploration(results, count, depth, states)


def is_covered_or_equal(s: Role, m: Role) -> bool:
    return s == m or s in BLOCK_COVERED_BY[m]

