"""Brute-force ground truth and theorem sweeps.

Everything here enumerates: all ideals of M, all sectional complements of a
pair, all congruences of Id M, all cut sequences. Joins in Id M are taken
from the enumerated order (least upper bounds), not from the fixpoint join of
:mod:`chopped.vectors`, so the two can be checked against each other.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

import numpy as np

from .algorithm import (
    LCG,
    Strategy,
    apply_cut,
    explore_all_sequences,
    find_c_failures,
    is_covered_or_equal,
    m2_closed_form,
    minimal_c_failures,
    run_algorithm,
    standard_strategies,
)
from .construction import BLOCK_LEQ, ChoppedLattice, Role, build_chopped
from .errors import SizeLimitError
from .formula import s1960, split_set
from .lattice import FiniteLattice, congruence_lattice, lattices_isomorphic
from .order import Poset, downset_lattice
from .vectors import (
    Vector,
    atoms_below,
    overlap_ok,
    vector_join,
    vector_leq,
    vector_meet,
    zero_vector,
)

DEFAULT_CAP = 10**6
PAIR_CAP = 200


def size_cap() -> int:
    return int(os.environ.get("CHOPPED_SIZE_CAP", DEFAULT_CAP))


def enumerate_ideals(M: ChoppedLattice, cap: int | None = None) -> list[Vector]:
    """All compatible vectors, in lexicographic order of their roles."""
    cap = size_cap() if cap is None else cap
    k = len(M.pairs)
    if 6**k > cap:
        raise SizeLimitError(f"{6**k} candidate vectors exceed the cap of {cap}")
    # overlaps are checked as soon as both of their coordinates are placed
    due: dict[int, list] = {i: [] for i in range(k)}
    for ov in M.overlaps:
        due[max(ov.i, ov.j)].append(ov)
    roles = [Role.ZERO] * k
    out: list[Vector] = []

    def extend(i: int) -> None:
        if i == k:
            out.append(Vector(M.pairs, tuple(roles)))
            return
        for r in Role:
            roles[i] = r
            if all(overlap_ok(ov, roles) for ov in due[i]):
                extend(i + 1)
        roles[i] = Role.ZERO

    extend(0)
    return out


def all_vectors(M: ChoppedLattice, cap: int | None = None) -> Iterable[Vector]:
    cap = size_cap() if cap is None else cap
    if 6 ** len(M.pairs) > cap:
        raise SizeLimitError("too many candidate vectors")
    for roles in product(Role, repeat=len(M.pairs)):
        yield Vector(M.pairs, roles)


class IdealLattice:
    """Id M as an explicit :class:`FiniteLattice` over enumerated ideals."""

    def __init__(self, M: ChoppedLattice, cap: int | None = None):
        self.M = M
        self.ideals = enumerate_ideals(M, cap)
        R = np.array([c.roles for c in self.ideals], dtype=np.intp).reshape(len(self.ideals), -1)
        leq = BLOCK_LEQ[R[:, None, :], R[None, :, :]].all(axis=-1)
        self.lattice = FiniteLattice(self.ideals, leq)
        self.index = self.lattice.index
        self.zero = self.index[zero_vector(M)]

    def __len__(self) -> int:
        return len(self.ideals)

    def meet(self, c: Vector, d: Vector) -> Vector:
        return self.lattice.meet(c, d)

    def join(self, c: Vector, d: Vector) -> Vector:
        return self.lattice.join(c, d)

    def complements(self, u: Vector, v: Vector) -> list[Vector]:
        iu, iv = self.index[u], self.index[v]
        L = self.lattice
        hits = np.nonzero((L.meet_table[iu] == self.zero) & (L.join_table[iu] == iv))[0]
        return [self.ideals[i] for i in hits]

    def comparable_pairs(self) -> list[tuple[Vector, Vector]]:
        us, vs = np.nonzero(self.lattice.leq)
        return [(self.ideals[a], self.ideals[b]) for a, b in zip(us, vs)]

    def between(self, low: Vector, high: Vector) -> list[Vector]:
        return [c for c in self.ideals if vector_leq(low, c) and vector_leq(c, high)]


def ideal_lattice(M: ChoppedLattice, cap: int | None = None) -> FiniteLattice:
    return IdealLattice(M, cap).lattice


def sectional_complements_bruteforce(M: ChoppedLattice, u: Vector, v: Vector,
                                     ideals: IdealLattice | None = None) -> set[Vector]:
    ideals = ideals or IdealLattice(M)
    return set(ideals.complements(u, v))


@dataclass
class ComplementationReport:
    size: int
    pairs_checked: int
    failing: list

    @property
    def ok(self) -> bool:
        return not self.failing


def check_sectionally_complemented(obj) -> ComplementationReport:
    """Check every ``u <= v`` has a complement in ``[0, v]``.

    ``obj`` is a :class:`FiniteLattice`, a :class:`ChoppedLattice` (its ideal
    lattice is checked) or an :class:`IdealLattice`.
    """
    if isinstance(obj, ChoppedLattice):
        obj = IdealLattice(obj)
    L = obj.lattice if isinstance(obj, IdealLattice) else obj
    bad = [(L.elements[u], L.elements[v]) for u, v in L.uncomplemented_intervals()]
    return ComplementationReport(len(L), int(L.leq.sum()), bad)


def atom_lemma_applies(M: ChoppedLattice) -> bool:
    """Two maximal elements whose meet is an atom of M."""
    tops = M.maximal_elements()
    return len(tops) == 2 and M.meet(*tops) in M.atoms()


@dataclass
class RepresentationReport:
    poset_size: int
    ideal_lattice_size: int
    congruence_lattice_size: int
    downset_lattice_size: int
    bijection: dict | None
    distributive: bool

    @property
    def ok(self) -> bool:
        return self.bijection is not None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "poset_size": self.poset_size,
            "ideal_lattice_size": self.ideal_lattice_size,
            "congruence_lattice_size": self.congruence_lattice_size,
            "downset_lattice_size": self.downset_lattice_size,
            "congruence_lattice_distributive": self.distributive,
            "bijection": None if self.bijection is None else {
                str(k): sorted(v) for k, v in self.bijection.items()
            },
        }


def verify_representation(P: Poset, cap: int | None = None) -> RepresentationReport:
    """Con(Id M) against the downset lattice of ``P``."""
    M = build_chopped(P)
    IdM = IdealLattice(M, cap)
    con = congruence_lattice(IdM.lattice)
    down = downset_lattice(P)
    return RepresentationReport(
        len(P), len(IdM), len(con), len(down), lattices_isomorphic(con, down), con.is_distributive()
    )


# -- theorem sweep ------------------------------------------------------------

CHECKS = (
    "confluence",
    "exhaustive_confluence",
    "identity_1960",
    "sectional_complement",
    "one_cover_depth",
    "step2_closed_form",
    "c_failure_structure",
    "formula_bounds",
    "sandwich_uniqueness",
)


@dataclass
class CheckTally:
    passed: int = 0
    failed: int = 0
    first_counterexample: dict | None = None

    def record(self, ok: bool, detail) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_counterexample is None:
                self.first_counterexample = detail() if callable(detail) else detail

    @property
    def status(self) -> str:
        if self.failed:
            return "fail"
        return "pass" if self.passed else "not exercised"


@dataclass
class TheoremReport:
    poset: Poset
    strategies: list[str]
    ideals: int
    pairs_total: int
    pairs_checked: int
    sampled: bool
    checks: dict[str, CheckTally] = field(default_factory=lambda: {c: CheckTally() for c in CHECKS})
    stats: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.checks.values())

    def to_json(self) -> dict:
        return {
            "poset": self.poset.to_json(),
            "ok": self.ok,
            "strategies": self.strategies,
            "ideals": self.ideals,
            "pairs_total": self.pairs_total,
            "pairs_checked": self.pairs_checked,
            "sampled": self.sampled,
            "checks": {
                name: {"status": t.status, "pass": t.passed, "fail": t.failed,
                       "first_counterexample": t.first_counterexample}
                for name, t in self.checks.items()
            },
            "stats": dict(sorted(self.stats.items())),
        }


def sample_pairs(pairs: list, cap: int, seed: int) -> tuple[list, bool]:
    if len(pairs) <= cap:
        return pairs, False
    rng = LCG(seed)
    pool = list(range(len(pairs)))
    # partial Fisher-Yates shuffle
    for k in range(cap):
        j = k + rng.below(len(pool) - k)
        pool[k], pool[j] = pool[j], pool[k]
    return [pairs[i] for i in sorted(pool[:cap])], True


def _stem_checks(M: ChoppedLattice, c: Vector, m: Vector) -> list[str]:
    """Same-stem and non-interference properties of C-failures at ``c``."""
    problems = []
    failures = find_c_failures(M, c, m)
    by_stem: dict = {}
    for f in failures:
        by_stem.setdefault((f.suborder.q, f.suborder.r), []).append(f)
    for (q, r), group in by_stem.items():
        failing_tops = {f.suborder.p for f in group}
        for t in M.poset.upper_covers(q):
            if t not in failing_tops:
                problems.append(f"C({t},{q},{r}) shares a failing stem but does not fail")
        if len({f.cut for f in group}) != 1:
            problems.append(f"stem {q}>{r} prescribes different cuts")
    minimal = minimal_c_failures(M.poset, failures)
    for f in minimal:
        after = set(find_c_failures(M, apply_cut(c, f), m))
        for g in minimal:
            if g.coordinate != f.coordinate and g not in after:
                problems.append(f"cutting {f} repaired unrelated {g}")
    return problems


def _step3_states(run) -> list[Vector]:
    """Every vector at which Step 3 looked for failures."""
    c = run.after_step2
    states = [c]
    for f in run.trace:
        if f.step == 3:
            c = apply_cut(c, f)
            states.append(c)
    return states


def verify_theorems(
    P: Poset,
    strategy_count: int = 8,
    seed: int = 0,
    *,
    pair_cap: int = PAIR_CAP,
    exhaustive_max_cuts: int = 4,
    cap: int | None = None,
    strategies: list[Strategy] | None = None,
    explore_unrestricted: bool = False,
) -> TheoremReport:
    """Sweep compatible pairs ``u <= v`` and check every stated property."""
    M = build_chopped(P)
    IdM = IdealLattice(M, cap)
    strategies = strategies or standard_strategies(strategy_count, seed)
    all_pairs = IdM.comparable_pairs()
    pairs, sampled = sample_pairs(all_pairs, pair_cap, seed)
    report = TheoremReport(P, [str(s) for s in strategies], len(IdM), len(all_pairs),
                           len(pairs), sampled)
    checks, stats = report.checks, report.stats
    zero = zero_vector(M)
    v_overlaps = [ov for ov in M.overlaps if ov.suborder.kind == "V"]

    for u, v in pairs:
        def where(**extra):
            return lambda: {"u": str(u), "v": str(v), **{k: str(x) for k, x in extra.items()}}

        formula = s1960(M, u, v)
        bounds_ok = []

        def watch(c, f, formula=formula, bounds_ok=bounds_ok):
            bounds_ok.append(vector_leq(formula, c))

        runs = [run_algorithm(M, u, v, st, observer=watch) for st in strategies]
        base = runs[0]
        m, s = base.m, base.s
        stats["cuts"] += len(base.trace)
        stats["v_cuts"] += sum(f.kind == "V" for f in base.trace)
        stats["c_cuts_case_A"] += sum(f.case == "A" for f in base.trace)
        stats["c_cuts_case_B"] += sum(f.case == "B" for f in base.trace)
        stats["transient_h_incompatibilities"] += sum(bool(r.transient_incompatibilities) for r in runs)

        if len(strategies) > 1:
            results = {r.s for r in runs}
            checks["confluence"].record(
                len(results) == 1,
                where(results={r.strategy: str(r.s) for r in runs}))
        if len(base.trace) <= exhaustive_max_cuts:
            ex = explore_all_sequences(M, u, v)
            stats["exhaustive_sequences"] += ex.sequences
            checks["exhaustive_confluence"].record(
                ex.results == {s}, where(results=sorted(map(str, ex.results))))

        checks["identity_1960"].record(
            all(r.s == formula for r in runs), where(s=s, s1960=formula))

        brute = IdM.complements(u, v)
        checks["sectional_complement"].record(
            vector_meet(M, s, u) == zero and vector_join(M, s, u) == v and s in brute
            and IdM.join(s, u) == v and IdM.meet(s, u) == zero,
            where(s=s, complements=sorted(map(str, brute))))

        checks["one_cover_depth"].record(
            all(is_covered_or_equal(a, b) for a, b in zip(s.roles, m.roles))
            and all(len(r.trace) <= len(M.pairs) for r in runs),
            where(s=s, m=m))

        m2 = m2_closed_form(M, u, v)
        checks["step2_closed_form"].record(
            all(r.after_step2 == m2 for r in runs)
            and all(overlap_ok(ov, m2.roles) for ov in v_overlaps),
            where(m2=m2, after_step2=sorted({str(r.after_step2) for r in runs})))

        problems = [p for r in runs for st in _step3_states(r) for p in _stem_checks(M, st, m)]
        checks["c_failure_structure"].record(not problems, where(problems=problems[:3]))

        at_u, at_v = atoms_below(M, u), atoms_below(M, v)
        checks["formula_bounds"].record(
            atoms_below(M, m) <= at_v - at_u and vector_leq(formula, m) and all(bounds_ok),
            where(m=m, s1960=formula))

        sandwich = IdM.between(formula, m)
        checks["sandwich_uniqueness"].record(sandwich == [formula], where(between=sorted(map(str, sandwich))))

        # complements in Id M need not be blockwise complements, so some of
        # them escape m; counted for the record, not a theorem
        stats["complements_not_below_m"] += sum(not vector_leq(x, m) for x in brute)
        if explore_unrestricted:
            free = explore_all_sequences(M, u, v, unrestricted_c=True)
            stats["unrestricted_c_runs"] += 1
            stats["unrestricted_c_nonconfluent"] += len(free.results) > 1
            stats["unrestricted_c_differs"] += free.results != {s}

        if split_set(M, u, v).atoms:
            stats["pairs_with_splits"] += 1
    return report
