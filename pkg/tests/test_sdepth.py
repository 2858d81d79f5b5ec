import math
import random

import pytest
from hypothesis import assume, given, settings

from stanleydepth.checks import FuzzConfig, random_factor
from stanleydepth.depth import ResourceCap
from stanleydepth.monomials import parse_factor
from stanleydepth.sdepth import (
    HVZPoset,
    IntervalPartition,
    SearchBudgetExceeded,
    build_poset,
    partition_violation,
    sdepth,
    sdepth_bruteforce,
    sdepth_decision,
    validate_partition,
)
from stanleydepth.transforms import canonical_form, compute_invariants, polarize

from conftest import factors


def maximal_ideal(n):
    return parse_factor(", ".join(f"x{i}" for i in range(1, n + 1)))


def test_build_poset(example_2_5, example_2_6):
    P = build_poset(example_2_5)
    assert P.g == (1, 2) and set(P.points) == {(1, 0), (1, 1)}
    P = build_poset(example_2_6)
    assert P.g == (2, 2) and set(P.points) == {(0, 1), (1, 1), (0, 2)}
    assert build_poset(parse_factor("x1")).points == ((1,),)


def test_build_poset_cap():
    with pytest.raises(ResourceCap):
        build_poset(parse_factor("x1^9*x2^9*x3^9"), max_points=50)


def test_decision_examples(example_2_5, example_2_6):
    P = build_poset(example_2_5)
    D = sdepth_decision(P, 1)
    # both points already sit at rho = 1, so singletons are a valid answer
    assert D is not None and validate_partition(P, D) and D.rho_min == 1
    assert sdepth_decision(P, 2) is None
    assert sdepth_decision(build_poset(example_2_6), 1) is None
    D = sdepth_decision(build_poset(example_2_6), 0)
    assert validate_partition(build_poset(example_2_6), D)


def test_bruteforce_examples(example_2_5, example_2_6):
    assert sdepth_bruteforce(build_poset(example_2_5)) == 1
    assert sdepth_bruteforce(build_poset(example_2_6)) == 0
    assert sdepth_bruteforce(HVZPoset((1, 1, 1), ((1, 1, 1),))) == 3
    with pytest.raises(ResourceCap):
        sdepth_bruteforce(build_poset(maximal_ideal(4)))


def test_validate_partition(example_2_5):
    P = build_poset(example_2_5)
    assert validate_partition(P, IntervalPartition((((1, 0), (1, 1)),), P.g))
    assert not validate_partition(P, IntervalPartition((((1, 0), (1, 0)),), P.g))
    overlap = IntervalPartition((((1, 0), (1, 1)), ((1, 1), (1, 1))), P.g)
    assert "(1, 1)" in partition_violation(P, overlap)
    outside = IntervalPartition((((1, 0), (1, 2)),), P.g)
    assert not validate_partition(P, outside)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_maximal_ideal(n):
    assert sdepth(maximal_ideal(n)).value == math.ceil(n / 2)


def test_maximal_ideal_bruteforce_n3():
    assert sdepth_bruteforce(build_poset(maximal_ideal(3))) == 2


def test_example_3_3(example_3_3):
    res = sdepth(example_3_3)
    assert res.value == 1
    assert validate_partition(res.poset, res.witness) and res.witness.rho_min == 1


def test_budget_is_unknown_not_false():
    P = build_poset(maximal_ideal(6))
    with pytest.raises(SearchBudgetExceeded):
        sdepth_decision(P, 4, node_budget=3)
    assert issubclass(SearchBudgetExceeded, ResourceCap)


def test_witness_serialization(example_2_5):
    res = sdepth(example_2_5)
    assert res.witness.to_text() == [["x1", "x1"], ["x1*x2", "x1*x2"]]


@settings(max_examples=200, deadline=None)
@given(factors())
def test_search_matches_bruteforce(F):
    P = build_poset(F)
    assume(len(P) <= 12)
    res = sdepth(F)
    assert res.value == sdepth_bruteforce(P)
    assert validate_partition(P, res.witness)
    assert res.witness.rho_min == res.value


def test_search_matches_bruteforce_medium():
    rng = random.Random(11)
    config = FuzzConfig(n_max=4, exponent_max=2, gen_count_max=3)
    seen = 0
    while seen < 40:
        F = random_factor(rng, config)
        P = build_poset(F)
        if 12 < len(P) <= 16:
            seen += 1
            assert sdepth(F).value == sdepth_bruteforce(P, max_points=16), str(F)


@settings(max_examples=80, deadline=None)
@given(factors())
def test_decision_monotone(F):
    P = build_poset(F)
    found = [sdepth_decision(P, k) is not None for k in range(P.n + 1)]
    assert found == sorted(found, reverse=True)
    for k, ok in enumerate(found):
        if ok:
            assert sdepth_decision(P, k).rho_min >= k


@settings(max_examples=60, deadline=None)
@given(factors())
def test_g_stability(F):
    value = sdepth(F).value
    for j in range(F.n):
        g = list(F.lcm_exponents)
        g[j] += 1
        assert sdepth(F, g=g).value == value


@settings(max_examples=80, deadline=None)
@given(factors())
def test_invariance_and_lower_bound(F):
    value = sdepth(F).value
    assert sdepth(canonical_form(F)).value == value
    assert value >= compute_invariants(F).index_t


@settings(max_examples=60, deadline=None)
@given(factors(n_max=4, squarefree=True))
def test_squarefree_lower_bound(F):
    assert sdepth(F).value >= compute_invariants(F).d_min
    P, _ = polarize(F)
    assert P == F
