from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptealg.weights import (
    FundWeight,
    IndexSet,
    YoungPattern,
    add_lambda_I,
    centered_m,
    char_equal,
    fundamental,
    k_subsets,
    lists_to_pattern,
    parse_pattern,
    parse_weight,
    rho,
    s_functional,
    shifted_coordinates,
    weight_to_pattern,
    weyl_dim,
)

patterns = st.lists(st.integers(-4, 6), min_size=2, max_size=5).map(
    lambda xs: YoungPattern(tuple(sorted(xs, reverse=True)))
)


def test_rho_pattern_and_centering():
    p = weight_to_pattern(rho(4))
    assert p == YoungPattern((3, 2, 1, 0))
    assert centered_m(p) == tuple(Fraction(x, 2) for x in (3, 1, -1, -3))


def test_sfunctional_example():
    p = YoungPattern((4, 2, 1, 1))
    assert [s_functional(p, k) for k in (1, 2, 3)] == [0, 16, 96]


def test_char_equal_translation():
    assert char_equal(YoungPattern((1, 0)), YoungPattern((0, -1)))
    assert not char_equal(YoungPattern((2, 0)), YoungPattern((1, 0)))
    with pytest.raises(ValueError):
        char_equal(YoungPattern((1, 0)), YoungPattern((1, 0, 0)))


def test_add_lambda_I():
    p, dom = add_lambda_I(YoungPattern((3, 2, 1, 0)), IndexSet(4, (1, 4)))
    assert p == YoungPattern((4, 2, 1, 1)) and dom
    _, dom = add_lambda_I(YoungPattern((1, 1)), IndexSet(2, (2,)))
    assert not dom


def test_weyl_dimensions():
    assert weyl_dim(weight_to_pattern(fundamental(4, 2))) == 6
    assert weyl_dim(weight_to_pattern(rho(3))) == 8
    with pytest.raises(ValueError):
        weyl_dim(YoungPattern((0, 1)))


def test_parsing_and_printing():
    assert parse_weight("a=[1,2]") == FundWeight((1, 2))
    assert str(parse_pattern("f=[2,1,0]")) == "f=[2,1,0]"
    assert str(IndexSet(4, (1, 4))) == "{1,4}"
    assert str(lists_to_pattern([3, 1, 0])) == "f=[1,0,0]"
    with pytest.raises(ValueError):
        lists_to_pattern([0, 1])


def test_k_subsets_count():
    assert len(k_subsets(5, 2)) == 10


@given(patterns, st.integers(-3, 3))
def test_invariants_are_translation_invariant(p, c):
    q = p.shifted(c)
    assert char_equal(p, q)
    assert [s_functional(p, k) for k in range(1, 4)] == [s_functional(q, k) for k in range(1, 4)]


@given(patterns)
def test_first_functional_vanishes(p):
    assert s_functional(p, 1) == 0


@given(patterns)
def test_shifted_coordinates_strictly_decrease(p):
    xs = shifted_coordinates(p)
    assert all(a > b for a, b in zip(xs, xs[1:]))


@given(patterns)
def test_pattern_weight_roundtrip(p):
    assert weight_to_pattern(p.to_weight()) == p.normalized()
