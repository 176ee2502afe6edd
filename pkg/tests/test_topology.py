import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from egyptian.engine import BudgetExceeded, Problem, Representation, check_representation, value_of
from egyptian.topology import (
    GapCertificate,
    find_avoiding_subinterval,
    gap_below,
    predecessor,
    signed_probe,
    simplest_between,
)
from generators import random_problem, random_target, unit_problem

F = Fraction
UNIT1, UNIT2 = Problem.unit(1), Problem.unit(2)


def test_predecessor_examples():
    value, rep = predecessor(UNIT2, F(1, 2))
    assert value == F(10, 21) and rep.entries == ((1, 3), (1, 7))
    assert predecessor(UNIT1, 1) == (F(1, 2), Representation(((1, 2),)))
    assert predecessor(UNIT1, F(1, 2))[0] == F(1, 3)
    with pytest.raises(ValueError):
        predecessor(UNIT2, 0)


def test_gap_examples():
    cert = gap_below(UNIT2, F(1, 2))
    assert cert.predecessor == F(10, 21) and cert.delta == F(1, 42) and cert.c_in_set
    assert oracles.unit2_values_in(F(10, 21), F(1, 2)) == []
    assert gap_below(UNIT1, 1).delta == F(1, 2)
    cert = gap_below(UNIT2, 3)
    assert cert.predecessor == 2 and cert.delta == 1 and cert.c_in_set is False
    assert cert.predecessor_witness.entries == ((1, 1), (1, 1))
    small = gap_below(UNIT2, F(1, 100))
    assert 0 < small.delta <= F(1, 100)
    assert oracles.unit2_values_in(small.predecessor, F(1, 100)) == []


def test_gap_without_predecessor():
    # every element of E is at least 1/2 here
    p = Problem.from_json(
        {"version": 1, "n": 1, "numerators": [["1"]], "denominators": [{"kind": "with-prefix", "prefix": ["1/2"], "tail": {"kind": "arithmetic", "first": "1", "step": "1"}}]}
    )
    cert = gap_below(p, F(1, 1000))
    assert cert.predecessor is not None  # 1/b for large b is always available
    assert gap_below(UNIT1, F(1, 1000)).predecessor == F(1, 1001)


def test_certificate_validation():
    with pytest.raises(ValueError):
        GapCertificate(F(1), None, None, F(1, 2), 0, ())
    with pytest.raises(ValueError):
        GapCertificate(F(1), F(1, 2), None, F(1, 2), 0, ())
    with pytest.raises(ValueError):
        GapCertificate(F(1), F(1), Representation(((1, 1),)), F(0), 0, ())


def test_bound_trace_is_serialized():
    cert = gap_below(UNIT2, F(1, 2))
    obj = cert.to_json()
    assert obj["delta"] == "1/42" and obj["predecessor"] == "10/21"
    assert obj["bound_trace"] and all(len(pair) == 2 for pair in obj["bound_trace"])


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        gap_below(UNIT2, F(1, 10**6), budget=5)


@settings(max_examples=40)
@given(st.integers(1, 40), st.integers(1, 40))
def test_unit_pair_gaps_against_oracle(p, q):
    c = F(p, q)
    cert = gap_below(UNIT2, c)
    assert cert.predecessor < c
    assert value_of(cert.predecessor_witness) == cert.predecessor
    assert check_representation(UNIT2, cert.predecessor_witness)
    assert oracles.unit2_values_in(cert.predecessor, c) == []


@pytest.mark.parametrize("seed", range(20))
def test_general_gaps_against_oracle(seed):
    rng = random.Random(seed)
    pj = random_problem(rng, n=rng.randint(1, 2))
    p = Problem.from_json(pj)
    c = random_target(rng, 12)
    cert = gap_below(p, c)
    lo = F(0) if cert.predecessor is None else cert.predecessor
    if cert.predecessor is not None:
        assert check_representation(p, cert.predecessor_witness)
        assert value_of(cert.predecessor_witness) == cert.predecessor
    assert lo > 0  # every problem has elements arbitrarily close to 0
    assert oracles.value_in(pj, lo, c) is None
    assert cert.c_in_set == bool(oracles.unsigned_reps(pj, c))


def test_predecessors_are_monotone():
    cs = sorted({F(p, q) for p in range(1, 9) for q in range(1, 9)})
    preds = [predecessor(UNIT2, c)[0] for c in cs]
    assert preds == sorted(preds)


def test_simplest_between():
    assert simplest_between(F(2, 5), F(3, 5)) == F(1, 2)
    assert simplest_between(F(0), F(1, 10)) == F(1, 11)
    assert simplest_between(F(1), F(3)) == 2
    assert simplest_between(F(3, 10), F(1, 3)) == F(4, 13)


def test_avoid_examples():
    assert find_avoiding_subinterval(UNIT2, F(2, 5), F(3, 5)) == (F(10, 21), F(1, 2))
    assert find_avoiding_subinterval(UNIT1, 2, 3) == (2, 3)
    assert find_avoiding_subinterval(UNIT2, 0, F(1, 10**9), budget=10) is None
    # near 0 the certificate costs about 1/v leaf nodes
    lo, hi = find_avoiding_subinterval(UNIT2, 0, F(1, 10**4), budget=20_000)
    assert 0 < lo < hi <= F(1, 10**4)
    assert oracles.unit2_values_in(lo, hi) == []
    with pytest.raises(ValueError):
        find_avoiding_subinterval(UNIT2, 1, 1)


@settings(max_examples=40)
@given(st.fractions(0, 3), st.fractions(F(1, 1000), 1))
def test_avoided_intervals_are_empty(u, width):
    v = u + width
    lo, hi = find_avoiding_subinterval(UNIT2, u, v)
    assert u <= lo < hi <= v
    assert oracles.value_in(unit_problem(2), lo, hi) is None


def test_signed_probe_examples():
    hits = signed_probe(UNIT2, F(-1, 100), F(1, 100), 10)
    values = {v for v, _ in hits}
    # 1/9 - 1/10 = 1/90 exceeds 1/100, so only the zero sums fall in the window
    assert values == {0}
    assert len(hits) == 20
    assert {v for v, _ in signed_probe(UNIT1, 0, 1, 4)} == {F(1, 2), F(1, 3), F(1, 4)}
    assert signed_probe(UNIT2, 2, 3, 10) == []
    assert F(1, 90) in {v for v, _ in signed_probe(UNIT2, F(-1, 50), F(1, 50), 10)}


@settings(max_examples=25)
@given(st.fractions(-2, 2), st.fractions(F(1, 100), 2), st.integers(1, 12))
def test_signed_probe_properties(u, width, cap):
    v = u + width
    for value, rep in signed_probe(UNIT2, u, v, cap):
        assert u < value < v and value_of(rep) == value
        assert check_representation(UNIT2, rep)
        assert all(b <= cap for _, b, _ in rep.entries)
