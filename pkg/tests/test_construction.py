from itertools import product

import pytest

from chopped.construction import (
    A1,
    A2,
    BLOCK_MEET,
    SUM,
    TOP,
    ZERO,
    Role,
    Suborder,
    build_chopped,
    embed,
    enumerate_suborders,
    global_atoms,
)
from chopped.errors import IsolatedElementError
from chopped.order import Poset


def names(elements):
    return sorted(e.name for e in elements)


def expected_size(P):
    involved = {x for c in P.covers for x in c}
    covered = {y for _, y in P.covers}
    return 1 + len(involved) + 2 * len(covered) + len(P.covers)


def test_two_chain_is_one_block(named):
    M = build_chopped(named["2-chain"])
    assert names(M.elements) == sorted(["0", "p1", "q1", "q2", "q", "p(q)"])


@pytest.mark.parametrize("name, size", [("2-chain", 6), ("V", 8), ("3-chain", 10)])
def test_element_counts(named, name, size):
    M = build_chopped(named[name])
    assert len(M) == size
    # enumerate the union of blocks directly
    union = {embed(r, pair) for pair in M.pairs for r in Role}
    assert len(union) == size


def test_size_formula(full_corpus):
    for P in full_corpus.values():
        assert len(build_chopped(P)) == expected_size(P)


def test_isolated_element_rejected():
    with pytest.raises(IsolatedElementError):
        build_chopped(Poset("pqx", [("p", "q")]))


def test_meet_examples(named):
    M = build_chopped(named["V"])
    assert M.meet(A1("p"), TOP("p", "r")) == A1("p")
    assert M.meet(TOP("p", "r"), TOP("q", "r")) == SUM("r")
    M = build_chopped(named["3-chain"])
    assert M.meet(TOP("p", "q"), TOP("q", "r")) == A1("q")
    assert M.meet(A2("q"), A1("r")) == ZERO


def test_atoms(named):
    assert names(global_atoms(build_chopped(named["2-chain"]))) == ["p1", "q1", "q2"]
    assert names(global_atoms(build_chopped(named["3-chain"]))) == ["p1", "q1", "q2", "r1", "r2"]
    assert names(global_atoms(build_chopped(named["V"]))) == ["p1", "q1", "r1", "r2"]


def test_atoms_are_exactly_the_minimal_nonzero(full_corpus):
    for P in full_corpus.values():
        M = build_chopped(P)
        for e in M.elements:
            if e == ZERO:
                continue
            below = [a for a in M.elements if a != e and M.le(a, e) and a != ZERO]
            assert (e in M.atoms()) == (not below)


def test_suborders(named):
    assert enumerate_suborders(named["V"], "V") == [Suborder("V", "p", "q", "r")]
    assert enumerate_suborders(named["3-chain"], "C") == [Suborder("C", "p", "q", "r")]
    assert enumerate_suborders(named["3-chain"], "V") == []
    assert enumerate_suborders(named["hat"], "H") == [Suborder("H", "p", "q", "r")]
    assert len(enumerate_suborders(named["diamond"], "C")) == 2
    with pytest.raises(ValueError):
        enumerate_suborders(named["V"], "X")


def test_meet_is_a_semilattice(full_corpus):
    for P in list(full_corpus.values())[:12]:
        M = build_chopped(P)
        E = M.elements
        for a, b in product(E, E):
            assert M.meet(a, b) == M.meet(b, a)
            assert M.meet(a, a) == a
            assert M.le(M.meet(a, b), a) and M.le(M.meet(a, b), b)
        for a, b, c in product(E, E, E):
            assert M.meet(M.meet(a, b), c) == M.meet(a, M.meet(b, c))


def test_blocks_are_meet_embedded(full_corpus):
    for P in full_corpus.values():
        M = build_chopped(P)
        for pair in M.pairs:
            for a, b in product(Role, Role):
                assert M.meet(embed(a, pair), embed(b, pair)) == embed(BLOCK_MEET[a, b], pair)


def test_maximal_elements_are_tops(full_corpus):
    for P in full_corpus.values():
        M = build_chopped(P)
        assert set(M.maximal_elements()) == {TOP(x, y) for x, y in P.covers}


def test_block_intersections(full_corpus):
    for P in full_corpus.values():
        M = build_chopped(P)
        for s in enumerate_suborders(P, "V"):
            shared = set(M.block((s.p, s.r))) & set(M.block((s.q, s.r)))
            assert shared == {ZERO, A1(s.r), A2(s.r), SUM(s.r)}
        for s in enumerate_suborders(P, "C"):
            assert set(M.block((s.p, s.q))) & set(M.block((s.q, s.r))) == {ZERO, A1(s.q)}
        for s in enumerate_suborders(P, "H"):
            assert set(M.block((s.p, s.q))) & set(M.block((s.p, s.r))) == {ZERO, A1(s.p)}
        # blocks related by no suborder share only 0
        related = {frozenset((ov.i, ov.j)) for ov in M.overlaps}
        for i, a in enumerate(M.pairs):
            for j, b in enumerate(M.pairs[i + 1:], i + 1):
                if frozenset((i, j)) not in related:
                    assert set(M.block(a)) & set(M.block(b)) == {ZERO}


def test_element_names_parse_back(full_corpus):
    for P in full_corpus.values():
        M = build_chopped(P)
        for e in M.elements:
            assert M.element(e.name) == e
