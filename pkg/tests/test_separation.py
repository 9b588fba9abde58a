from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptealg.separation import (
    collision_groups,
    collision_record,
    find_collisions,
    functionals,
    t0,
    tensor_decompose,
    totally_subordinate,
)
from ptealg.weights import FundWeight, IndexSet, rho, weight_to_pattern, weyl_dim

weights_case = st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(1, n // 2),
        st.tuples(*[st.integers(1, 2)] * (n - 1)),
    )
)


def test_decompose_rho_sl4():
    got = [(str(c.I), str(c.pattern), c.dim) for c in tensor_decompose(4, 2, rho(4))]
    assert got == [
        ("{1,2}", "f=[4,3,1,0]", 175),
        ("{1,3}", "f=[4,2,2,0]", 84),
        ("{1,4}", "f=[4,2,1,1]", 45),
        ("{2,3}", "f=[3,3,2,0]", 45),
        ("{2,4}", "f=[3,3,1,1]", 20),
        ("{3,4}", "f=[3,2,2,1]", 15),
    ]


def test_totally_subordinate():
    assert totally_subordinate(4, 2, (1, 1, 1))
    assert not totally_subordinate(4, 2, (1, 0, 1))


def test_functionals_and_collision():
    assert functionals(4, 2, rho(4), IndexSet(4, (1, 4)), 3).values == (16, 96)
    assert collision_groups(4, 2, rho(4), 2) == {(16,): [IndexSet(4, (1, 4)), IndexSet(4, (2, 3))]}
    [(I, J, vec)] = find_collisions(4, 2, rho(4), 2)
    rec = collision_record(4, 2, rho(4), 2, I, J, vec)
    assert rec["I"] == [1, 4] and rec["J"] == [2, 3] and list(rec["shared_vector"]) == [16]


def test_t0_examples():
    assert t0(4, 2, rho(4)) == 3
    assert t0(2, 1, (1,)) == 2
    # a collision at depth 2 needs a1 = a3, so this weight separates early
    assert t0(4, 2, (1, 1, 2)) == 2


def test_t0_rho_sl6_is_three():
    # constituents of rho in sl_6 already separate at S_2, S_3
    assert t0(6, 3, rho(6)) == 3


def test_bad_inputs():
    with pytest.raises(ValueError):
        find_collisions(4, 2, rho(4), 1)
    with pytest.raises(ValueError):
        find_collisions(4, 2, (1, 0, 1), 2)


@given(weights_case)
def test_decomposition_dimension(case):
    n, k, a = case
    parts = tensor_decompose(n, k, a)
    nu_dim = weyl_dim(weight_to_pattern(FundWeight(a)))
    assert sum(c.dim for c in parts) == comb(n, k) * nu_dim
    assert len(parts) == comb(n, k)


@given(weights_case)
def test_no_collisions_past_k_plus_one(case):
    n, k, a = case
    assert find_collisions(n, k, a, k + 1) == []
    assert t0(n, k, a) <= k + 1
