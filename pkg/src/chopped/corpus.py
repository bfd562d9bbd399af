"""Small named posets plus seeded random ones, used by sweeps and tests."""

from __future__ import annotations

import random
from itertools import combinations

from .order import Poset


def chain(n: int) -> Poset:
    names = "pqrstuvw"[:n]
    return Poset(names, list(zip(names, names[1:])))


NAMED = {
    "2-chain": chain(2),
    "3-chain": chain(3),
    "4-chain": chain(4),
    "V": Poset("pqr", [("p", "r"), ("q", "r")]),
    "hat": Poset("pqr", [("p", "q"), ("p", "r")]),
    "fence": Poset("abcd", [("a", "b"), ("c", "b"), ("c", "d")]),
    "diamond": Poset("tlrb", [("t", "l"), ("t", "r"), ("l", "b"), ("r", "b")]),
}


def random_poset(seed: int, max_size: int = 5) -> Poset:
    """A random order on 2..max_size elements with no isolated elements.

    Draws a random DAG on ``a, b, c, ...`` (edges only from later to earlier
    letters), takes its transitive reduction, and retries until every element
    lies in some cover.
    """
    rng = random.Random(seed)
    while True:
        n = rng.randint(2, max_size)
        names = "abcdefgh"[:n]
        edges = {(j, i) for i, j in combinations(range(n), 2) if rng.random() < 0.45}
        # transitive closure, then keep only edges with nothing in between
        reach = {x: {y for (a, y) in edges if a == x} for x in range(n)}
        for _ in range(n):
            for x in range(n):
                for y in list(reach[x]):
                    reach[x] |= reach[y]
        covers = [(x, y) for x in range(n) for y in reach[x]
                  if not any(y in reach[z] for z in reach[x])]
        used = {x for c in covers for x in c}
        if len(used) == n:
            return Poset(names, [(names[x], names[y]) for x, y in covers])


def random_corpus(count: int = 20, max_size: int = 5, seed: int = 1960) -> dict[str, Poset]:
    """``count`` distinct random posets, keyed ``random-<k>``."""
    out: dict[str, Poset] = {}
    seen: set[Poset] = set()
    k = 0
    while len(out) < count:
        P = random_poset(seed * 1000 + k, max_size)
        k += 1
        if P not in seen:
            seen.add(P)
            out[f"random-{len(out)}"] = P
    return out


def corpus(random_count: int = 20) -> dict[str, Poset]:
    return {**NAMED, **random_corpus(random_count)}
