import json

import pytest

from chopped.algorithm import run_algorithm
from chopped.construction import A1, build_chopped
from chopped.errors import UnorderedPairError
from chopped.formula import s1960, split_set
from chopped.oracle import IdealLattice
from chopped.vectors import atoms_below, format_vector, parse_vector, zero_vector


def test_split_v_example(V):
    u = parse_vector(V, "p>r=r2,q>r=r2")
    v = parse_vector(V, "p>r=r,q>r=q(r)")
    report = split_set(V, u, v)
    assert report.atoms == {A1("r")}
    (w,) = report.witnesses
    assert (w.element, w.splits, w.upper, w.index) == ("r", True, "q", 1)
    assert format_vector(s1960(V, u, v)) == "p>r=0,q>r=q1"


def test_split_chain_example(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    v = parse_vector(chain3, "p>q=p(q),q>r=q1")
    report = split_set(chain3, u, v)
    assert report.splitting() == ["q"] and report.atoms == {A1("q")}
    w = report.witnesses[0]
    assert (w.upper, w.index) == ("p", 1)


def test_s1960_chain_example(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    v = parse_vector(chain3, "p>q=p(q),q>r=q(r)")
    assert format_vector(s1960(chain3, u, v)) == "p>q=p1,q>r=r"


def test_split_report_json(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    v = parse_vector(chain3, "p>q=p(q),q>r=q1")
    doc = json.loads(json.dumps(split_set(chain3, u, v).to_json()))
    assert doc["split_atoms"] == ["q1"]
    assert doc["witnesses"][0] == {"element": "q", "splits": True, "upper": "p", "index": 1}


def test_zero_u(full_corpus):
    for P in list(full_corpus.values())[:10]:
        M = build_chopped(P)
        zero = zero_vector(M)
        for v in IdealLattice(M).ideals:
            assert split_set(M, zero, v).atoms == set()
            assert s1960(M, zero, v) == v


def test_witnesses_satisfy_definition(full_corpus):
    for P in list(full_corpus.values())[:10]:
        M = build_chopped(P)
        IdM = IdealLattice(M)
        for u, v in IdM.comparable_pairs()[::7]:
            at_u = atoms_below(M, u)
            fresh = atoms_below(M, v) - at_u
            for w in split_set(M, u, v).witnesses:
                if w.splits:
                    assert A1(w.upper) in fresh
                    mine = M.element(f"{w.element}{w.index}")
                    other = M.element(f"{w.element}{3 - w.index}")
                    assert mine in fresh and other in at_u


def test_s1960_matches_algorithm_on_examples(V):
    for u, v in IdealLattice(V).comparable_pairs():
        assert s1960(V, u, v) == run_algorithm(V, u, v).s


def test_s1960_rejects_unordered(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    with pytest.raises(UnorderedPairError):
        s1960(chain3, u, zero_vector(chain3))
