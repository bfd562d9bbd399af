import json

import pytest

from chopped import algorithm
from chopped.algorithm import (
    LCG,
    Failure,
    Lexicographic,
    ReverseLexicographic,
    SeededRandom,
    apply_c_cut,
    apply_v_cut,
    block_max_complement,
    explore_all_sequences,
    find_c_failures,
    find_v_failures,
    m2_closed_form,
    max_complement_vector,
    minimal_c_failures,
    parse_strategy,
    run_algorithm,
    standard_strategies,
)
from chopped.construction import BLOCK, Role, Suborder, build_chopped
from chopped.errors import DivergenceError, IncompatibleVectorError, UnorderedPairError
from chopped.order import CoveringPair
from chopped.vectors import format_vector, parse_vector, top_vector, zero_vector

R = Role


def brute_complements(u, v):
    return [s for s in Role if BLOCK.meet(s, u) == R.ZERO and BLOCK.join(s, u) == v]


@pytest.mark.parametrize("u, v, expected", [
    (R.LOW1, R.TOP, R.UPPER),
    (R.UPPER, R.TOP, R.SUM),
    (R.ZERO, R.SUM, R.SUM),
    (R.LOW2, R.SUM, R.LOW1),
    (R.TOP, R.TOP, R.ZERO),
])
def test_block_max_complement(u, v, expected):
    found = brute_complements(u, v)
    assert expected in found and all(BLOCK.le(s, expected) for s in found)
    assert block_max_complement(u, v) == expected


def test_complement_of_p1_has_three_candidates():
    assert set(brute_complements(R.UPPER, R.TOP)) == {R.LOW1, R.LOW2, R.SUM}


def test_every_block_interval_has_unique_max_complement():
    for v in Role:
        for u in Role:
            if BLOCK.le(u, v):
                assert block_max_complement(u, v) in brute_complements(u, v)


def test_max_complement_vector_zero_u(full_corpus):
    for P in list(full_corpus.values())[:5]:
        M = build_chopped(P)
        assert max_complement_vector(M, zero_vector(M), top_vector(M)) == top_vector(M)


def test_max_complement_requires_ordered_compatible(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    with pytest.raises(UnorderedPairError):
        max_complement_vector(chain3, top_vector(chain3), u)
    with pytest.raises(IncompatibleVectorError):
        max_complement_vector(chain3, u, parse_vector(chain3, "p>q=p(q),q>r=0"))


def test_v_failure_example(V):
    u = parse_vector(V, "p>r=r2,q>r=r2")
    v = parse_vector(V, "p>r=r,q>r=q(r)")
    m = max_complement_vector(V, u, v)
    assert format_vector(m) == "p>r=r1,q>r=q1"
    (f,) = find_v_failures(V, m, m)
    assert f.coordinate == ("p", "r") and f.old == R.LOW1 and f.target == R.ZERO
    assert format_vector(apply_v_cut(m, f)) == "p>r=0,q>r=q1"


def test_symmetric_v_failure(V):
    # r1 and r2 swapped: the failing coordinate holds r2
    u = parse_vector(V, "p>r=r1,q>r=r1")
    v = parse_vector(V, "p>r=r,q>r=q(r)")
    m = max_complement_vector(V, u, v)
    (f,) = find_v_failures(V, m, m)
    assert f.old == R.LOW2
    assert apply_v_cut(m, f)[("p", "r")] == R.ZERO


def test_no_v_failures(named, V):
    M = build_chopped(named["4-chain"])
    assert find_v_failures(M, top_vector(M), top_vector(M)) == []
    m = max_complement_vector(V, zero_vector(V), top_vector(V))
    assert m == top_vector(V) and find_v_failures(V, m, m) == []


def test_c_failure_case_a(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    v = parse_vector(chain3, "p>q=p(q),q>r=q1")
    m = max_complement_vector(chain3, u, v)
    assert format_vector(m) == "p>q=p1,q>r=q1"
    (f,) = find_c_failures(chain3, m, m)
    assert f.case == "A" and f.coordinate == ("q", "r")
    assert format_vector(apply_c_cut(m, f)) == "p>q=p1,q>r=0"


def test_c_failure_case_b(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    v = parse_vector(chain3, "p>q=p(q),q>r=q(r)")
    m = max_complement_vector(chain3, u, v)
    assert format_vector(m) == "p>q=p1,q>r=q(r)"
    (f,) = find_c_failures(chain3, m, m)
    assert f.case == "B"
    assert format_vector(apply_c_cut(m, f)) == "p>q=p1,q>r=r"


def test_failures_need_c_equal_m(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    v = parse_vector(chain3, "p>q=p(q),q>r=q(r)")
    m = max_complement_vector(chain3, u, v)
    c = m.replace(("p", "q"), R.ZERO)
    assert find_c_failures(chain3, c, m) == []


def test_minimal_filter(named):
    P = named["4-chain"]  # p > q > r > s
    upper = Failure("C", Suborder("C", "p", "q", "r"), CoveringPair("q", "r"), R.UPPER, R.ZERO, "A")
    lower = Failure("C", Suborder("C", "q", "r", "s"), CoveringPair("r", "s"), R.UPPER, R.ZERO, "A")
    assert minimal_c_failures(P, [upper, lower]) == [lower]
    assert minimal_c_failures(P, [upper]) == [upper]


def test_cut_kinds_checked(V):
    f = Failure("V", Suborder("V", "p", "q", "r"), CoveringPair("p", "r"), R.LOW1, R.ZERO)
    with pytest.raises(ValueError):
        apply_c_cut(zero_vector(V), f)


def test_run_v_example(V):
    u = parse_vector(V, "p>r=r2,q>r=r2")
    v = parse_vector(V, "p>r=r,q>r=q(r)")
    run = run_algorithm(V, u, v)
    assert format_vector(run.s) == "p>r=0,q>r=q1"
    assert [f.kind for f in run.trace] == ["V"]
    assert run.replay() == run.s


def test_run_c_example(chain3):
    u = parse_vector(chain3, "p>q=q2,q>r=0")
    v = parse_vector(chain3, "p>q=p(q),q>r=q(r)")
    run = run_algorithm(chain3, u, v)
    assert format_vector(run.s) == "p>q=p1,q>r=r"
    assert [(f.kind, f.case) for f in run.trace] == [("C", "B")]


def test_run_u_equals_v(chain3):
    u = parse_vector(chain3, "p>q=p(q),q>r=q1")
    run = run_algorithm(chain3, u, u)
    assert run.m == zero_vector(chain3) and run.s == zero_vector(chain3) and run.trace == ()


def test_trace_records(V):
    run = run_algorithm(V, parse_vector(V, "p>r=r2,q>r=r2"), parse_vector(V, "p>r=r,q>r=q(r)"))
    (line,) = run.trace_jsonl().splitlines()
    assert json.loads(line) == {"step": 2, "kind": "V", "suborder": ["p", "q", "r"],
                                "coordinate": "p>r", "old": "r1", "new": "0", "case": None}


def test_m2_closed_form(V, named):
    u = parse_vector(V, "p>r=r2,q>r=r2")
    v = parse_vector(V, "p>r=r,q>r=q(r)")
    assert format_vector(m2_closed_form(V, u, v)) == "p>r=0,q>r=q1"
    M = build_chopped(named["3-chain"])
    u = parse_vector(M, "p>q=q2,q>r=0")
    v = parse_vector(M, "p>q=p(q),q>r=q(r)")
    assert m2_closed_form(M, u, v) == max_complement_vector(M, u, v)


def test_lcg_sequence():
    # x -> a*x + c mod 2**64 with the Numerical Recipes 64-bit constants
    a, c, x = 2862933555777941757, 7046029254386353087, 42
    expected = []
    for _ in range(3):
        x = (a * x + c) % 2**64
        expected.append(x)
    rng = LCG(42)
    assert [rng.next() for _ in range(3)] == expected
    assert expected[0] == 2862933555777941757 * 42 + 7046029254386353087 - 2**64 * 6


def test_strategies():
    assert isinstance(parse_strategy("lex"), Lexicographic)
    assert isinstance(parse_strategy("revlex"), ReverseLexicographic)
    assert parse_strategy("random:7").seed == 7
    for bad in ["random:", "random:-1", "shuffle"]:
        with pytest.raises(ValueError):
            parse_strategy(bad)
    names = [str(s) for s in standard_strategies(8, seed=3)]
    assert names[:2] == ["lex", "revlex"] and len(set(names)) == 8
    assert names == [str(s) for s in standard_strategies(8, seed=3)]
    pick = SeededRandom(5).chooser()
    again = SeededRandom(5).chooser()
    assert [pick(list(range(7))) for _ in range(10)] == [again(list(range(7))) for _ in range(10)]


def test_divergence_guard(monkeypatch, V):
    f = Failure("V", Suborder("V", "p", "q", "r"), CoveringPair("p", "r"), R.LOW1, R.ZERO)
    monkeypatch.setattr(algorithm, "eligible_failures", lambda *a, **k: [f])
    monkeypatch.setattr(algorithm, "apply_cut", lambda c, f: c)
    with pytest.raises(DivergenceError):
        run_algorithm(V, zero_vector(V), top_vector(V))


def test_exploration_counts_sequences(named):
    # fence a > b < c > d: one V-failure at (a, c; b), nothing else
    M = build_chopped(named["fence"])
    u = parse_vector(M, "a>b=b2,c>b=b2,c>d=0")
    v = parse_vector(M, "a>b=b,c>b=c(b),c>d=c1")
    ex = explore_all_sequences(M, u, v)
    run = run_algorithm(M, u, v)
    assert format_vector(run.s) == "a>b=0,c>b=c1,c>d=c1"
    assert ex.results == {run.s}
    assert (ex.sequences, ex.longest) == (1, 1)
