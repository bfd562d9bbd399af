"""Generic finite lattices: meet/join tables, congruences and isomorphism.

Elements are arbitrary hashable labels; internally everything is indexed by
position and the order is held in a boolean numpy matrix with
``leq[i, j] == True`` iff ``elements[i] <= elements[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


class FiniteLattice:
    """A finite lattice given by its elements and order matrix.

    The meet and join tables are derived from ``leq`` at construction time; a
    ``ValueError`` is raised if ``leq`` is not a partial order or some pair
    lacks a meet or a join.
    """

    def __init__(self, elements: Sequence[Hashable], leq):
        self.elements = tuple(elements)
        n = len(self.elements)
        if n == 0:
            raise ValueError("a lattice needs at least one element")
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != n:
            raise ValueError("duplicate lattice elements")
        leq = np.array(leq, dtype=bool)
        if leq.shape != (n, n):
            raise ValueError(f"leq must be {n}x{n}, got {leq.shape}")
        if not leq.diagonal().all():
            raise ValueError("leq is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("leq is not antisymmetric")
        lf = leq.astype(np.float32)
        if ((lf @ lf > 0) & ~leq).any():
            raise ValueError("leq is not transitive")
        leq.setflags(write=False)
        self.leq = leq
        self.meet_table = self._bound_table(leq)
        self.join_table = self._bound_table(leq.T)

    @staticmethod
    def _bound_table(leq: np.ndarray) -> np.ndarray:
        # greatest common lower bound: the common lower bound with the most
        # elements below it, which must then dominate all the others
        n = leq.shape[0]
        below = leq.sum(axis=0)
        table = np.empty((n, n), dtype=np.intp)
        for a in range(n):
            common = leq[:, a][:, None] & leq  # common[x, b]: x <= a and x <= b
            score = np.where(common, below[:, None], -1)
            best = score.argmax(axis=0)
            if not common[best, np.arange(n)].all():
                raise ValueError("some pair has no common bound")
            if not (leq[:, best] | ~common).all():
                raise ValueError("some pair has no greatest common bound")
            table[a] = best
        table.setflags(write=False)
        return table

    @classmethod
    def from_relation(cls, elements: Iterable[Hashable],
                      le: Callable[[Hashable, Hashable], bool]) -> "FiniteLattice":
        elements = list(elements)
        leq = [[le(a, b) for b in elements] for a in elements]
        return cls(elements, leq)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteLattice(size={len(self)})"

    def le(self, a, b) -> bool:
        return bool(self.leq[self.index[a], self.index[b]])

    def meet(self, a, b):
        return self.elements[self.meet_table[self.index[a], self.index[b]]]

    def join(self, a, b):
        return self.elements[self.join_table[self.index[a], self.index[b]]]

    @cached_property
    def bottom(self) -> int:
        return int(self.leq.all(axis=1).argmax())

    @cached_property
    def top(self) -> int:
        return int(self.leq.all(axis=0).argmax())

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """``cover[i, j]`` iff element ``i`` is covered by element ``j``."""
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        sf = strict.astype(np.float32)
        return strict & ~((sf @ sf) > 0)

    def covers(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.cover_matrix))]

    @cached_property
    def height(self) -> np.ndarray:
        """Length of the longest chain from the bottom to each element."""
        order = np.argsort(self.leq.sum(axis=0), kind="stable")
        h = np.zeros(len(self), dtype=np.intp)
        cover = self.cover_matrix
        for j in order:
            lower = np.nonzero(cover[:, j])[0]
            if lower.size:
                h[j] = h[lower].max() + 1
        return h

    def join_irreducibles(self) -> list[int]:
        """Indices of elements with exactly one lower cover."""
        return [int(j) for j in np.nonzero(self.cover_matrix.sum(axis=0) == 1)[0]]

    def is_distributive(self) -> bool:
        m, j = self.meet_table, self.join_table
        n = len(self)
        for a in range(n):
            # a ^ (b v c) == (a ^ b) v (a ^ c) for all b, c at once
            lhs = m[a][j]
            rhs = j[m[a][:, None], m[a][None, :]]
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def is_sectionally_complemented(self) -> bool:
        return not self.uncomplemented_intervals()

    def uncomplemented_intervals(self) -> list[tuple[int, int]]:
        """Pairs ``u <= v`` for which ``u`` has no complement in ``[bottom, v]``."""
        m, j = self.meet_table, self.join_table
        bad = []
        for v in range(len(self)):
            for u in np.nonzero(self.leq[:, v])[0]:
                ok = (m[u] == self.bottom) & (j[u] == v)
                if not ok.any():
                    bad.append((int(u), v))
        return bad


@dataclass(frozen=True)
class Congruence:
    """A partition of a lattice's element indices, as canonical block labels.

    ``labels[i]`` is the block number of element ``i``; blocks are numbered in
    order of first occurrence so equal partitions compare equal.
    """

    labels: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels) -> "Congruence":
        seen: dict[int, int] = {}
        return cls(tuple(seen.setdefault(int(x), len(seen)) for x in labels))

    @property
    def n_blocks(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.n_blocks)]
        for i, b in enumerate(self.labels):
            out[b].append(i)
        return [tuple(b) for b in out]

    def refines(self, other: "Congruence") -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        return len(set(zip(self.labels, other.labels))) == self.n_blocks

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks())


def _components(n: int, rows, cols) -> np.ndarray:
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    return connected_components(graph, directed=False)[1]


def _representatives(labels: np.ndarray) -> np.ndarray:
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    return first[inverse]


def congruence_closure(L: FiniteLattice, labels) -> Congruence:
    """Smallest congruence of ``L`` containing the equivalence ``labels``."""
    n = len(L)
    labels = np.asarray(labels)
    count = len(np.unique(labels))
    idx = np.arange(n)
    while True:
        rep = _representatives(labels)
        rows = [idx, L.meet_table.ravel(), L.join_table.ravel()]
        cols = [rep, L.meet_table[rep].ravel(), L.join_table[rep].ravel()]
        labels = _components(n, np.concatenate(rows), np.concatenate(cols))
        new_count = labels.max() + 1
        if new_count == count:
            return Congruence.from_labels(labels)
        count = new_count


def principal_congruence(L: FiniteLattice, a: int, b: int) -> Congruence:
    """con(a, b): the smallest congruence collapsing indices ``a`` and ``b``."""
    labels = np.arange(len(L))
    labels[b] = labels[a]
    return congruence_closure(L, labels)


def join_congruences(L: FiniteLattice, x: Congruence, y: Congruence) -> Congruence:
    n = len(L)
    idx = np.arange(n)
    rows = np.concatenate([idx, idx])
    cols = np.concatenate([_representatives(np.array(x.labels)),
                           _representatives(np.array(y.labels))])
    # the transitive closure of two congruences is again a congruence
    return Congruence.from_labels(_components(n, rows, cols))


def congruence_lattice(L: FiniteLattice) -> FiniteLattice:
    """Con L, ordered by refinement.

    Every congruence is a join of principal congruences con(a, b) with
    ``a`` covered by ``b``; those are generated first and then closed under
    joins.
    """
    n = len(L)
    identity = Congruence(tuple(range(n)))
    generators = {principal_congruence(L, a, b) for a, b in L.covers()}
    found = {identity} | generators
    frontier = set(generators)
    while frontier:
        fresh = set()
        for x in frontier:
            for g in generators:
                z = join_congruences(L, x, g)
                if z not in found:
                    fresh.add(z)
        found |= fresh
        frontier = fresh
    elements = sorted(found, key=lambda c: (-c.n_blocks, c.labels))
    return FiniteLattice.from_relation(elements, Congruence.refines)


def _invariants(L: FiniteLattice) -> list[tuple[int, int, int, int]]:
    cover = L.cover_matrix
    return [
        (int(L.height[i]), int(cover[:, i].sum()), int(cover[i].sum()), int(L.leq[:, i].sum()))
        for i in range(len(L))
    ]


def lattices_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> dict | None:
    """Return an order isomorphism ``L1 -> L2`` as a label dict, or ``None``.

    Backtracking over elements of ``L1`` in order of height, trying only
    targets with equal (height, lower-cover count, upper-cover count, downset
    size) and checking the order against every element already placed.
    """
    n = len(L1)
    if n != len(L2):
        return None
    inv1, inv2 = _invariants(L1), _invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return None
    order = sorted(range(n), key=lambda i: inv1[i])
    candidates = {i: [j for j in range(n) if inv2[j] == inv1[i]] for i in order}
    image = [-1] * n
    used = [False] * n
    leq1, leq2 = L1.leq, L2.leq

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            placed = order[:k]
            if all(leq1[i, p] == leq2[j, image[p]] and leq1[p, i] == leq2[image[p], j]
                   for p in placed):
                image[i], used[j] = j, True
                if extend(k + 1):
                    return True
                image[i], used[j] = -1, False
        return False

    if not extend(0):
        return None
    return {L1.elements[i]: L2.elements[image[i]] for i in range(n)}
