import json
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptealg.pte import (
    TRIVIAL,
    BudgetExceeded,
    PteInstance,
    brute_search,
    canonical,
    extract_from_collision,
    ideal_from_weight,
    ideal_search,
    is_trivial,
    theorem29_validate,
    verify,
)
from ptealg.weights import rho


def naive_search(size, degree, bound):
    """All-pairs comparison of multisets: slow but independent of the hash join."""
    sets = list(combinations_with_replacement(range(-bound, bound + 1), size))
    sig = {s: tuple(sum(x**j for x in s) for j in range(1, degree + 1)) for s in sets}
    found = set()
    for a, b in combinations(sets, 2):
        if sig[a] == sig[b]:
            found.add(canonical(a, b))
    return sorted(found, reverse=True)


def test_verify_examples():
    assert verify((1, 2, 6), (0, 4, 5), 2) == (True, 2)
    assert verify((0, 3), (1, 2), 2) == (False, 1)
    assert verify((1, 2), (2, 1), 3) == (True, TRIVIAL)
    with pytest.raises(ValueError):
        verify((1,), (1, 2), 1)


def test_canonical_form():
    assert canonical((-1, 2), (0, 1)) == ((3, 0), (2, 1))
    assert canonical((0, 1), (-1, 2)) == ((3, 0), (2, 1))


def test_brute_small_frozen():
    got = [(s.X, s.Y) for s in brute_search(3, 2, 3)]
    assert got == [((6, 2, 1), (5, 4, 0)), ((4, 1, 1), (3, 3, 0))]


@pytest.mark.parametrize("size,degree,bound", [(2, 1, 3), (3, 2, 3), (3, 1, 2), (4, 3, 3)])
def test_brute_matches_naive(size, degree, bound):
    got = [(s.X, s.Y) for s in brute_search(size, degree, bound)]
    assert got == naive_search(size, degree, bound)


def test_budget():
    with pytest.raises(BudgetExceeded):
        brute_search(4, 3, 50, budget=1000)


def test_no_degree_equal_size():
    assert theorem29_validate(2, 6)
    assert theorem29_validate(3, 4)


def test_extraction_rho_sl4():
    assert extract_from_collision(4, 2, rho(4), (1, 4), (2, 3)) == ((2, -4), (0, -2), 0, 1)
    with pytest.raises(ValueError):
        extract_from_collision(4, 2, rho(4), (1, 4), (1, 4))


def test_ideal_from_weight():
    [inst] = ideal_from_weight(2, (1, 1, 1))
    assert (inst.X, inst.Y) == ((6, 0), (4, 2))
    assert inst.provenance == {"nu": (1, 1, 1), "I": (1, 4), "J": (2, 3)}
    with pytest.raises(ValueError):
        ideal_from_weight(2, (1, 0, 1))


def test_ideal_search_k2():
    sols = ideal_search(2, 2)
    assert [(s.X, s.Y) for s in sols] == [((6, 0), (4, 2)), ((7, 0), (5, 2)), ((8, 0), (5, 3)), ((9, 0), (6, 3))]
    assert all(s.ideal for s in sols)


def test_ideal_search_checkpoint_resume(tmp_path):
    ck = tmp_path / "ck.json"
    first = ideal_search(2, 2, checkpoint=str(ck))
    state = json.loads(ck.read_text())
    assert state["done"] == [1, 2]
    # resuming from a finished checkpoint does no work and returns the same answer
    assert ideal_search(2, 2, checkpoint=str(ck), map_fn=lambda f, xs: iter(())) == first


def test_ideal_search_partial_checkpoint(tmp_path):
    ck = tmp_path / "ck.json"
    full = ideal_search(2, 2)
    calls = []

    def one_then_stop(f, xs):
        for x in xs:
            calls.append(x)
            yield f(x)
            raise KeyboardInterrupt

    with pytest.raises(KeyboardInterrupt):
        ideal_search(2, 2, checkpoint=str(ck), map_fn=one_then_stop)
    assert json.loads(ck.read_text())["done"] == [1]
    assert ideal_search(2, 2, checkpoint=str(ck)) == full


def test_ideal_search_validation():
    with pytest.raises(ValueError):
        ideal_search(1, 2)
    with pytest.raises(ValueError):
        ideal_search(2, 0)
    with pytest.raises(BudgetExceeded):
        ideal_search(3, 9, budget=100)


def test_record_roundtrip():
    inst = ideal_from_weight(2, (1, 1, 1))[0]
    rec = json.loads(json.dumps(inst.to_record()))
    assert PteInstance.from_record(rec) == inst
    assert PteInstance.from_record(rec).provenance == inst.provenance


lists = st.lists(st.integers(-20, 20), min_size=1, max_size=5)


@given(lists, st.integers(-10, 10), st.randoms())
def test_verify_invariant_under_translation_and_order(xs, shift, rnd):
    ys = [x * 2 - 1 for x in xs]
    a = verify(xs, ys, 1)
    shuffled = list(xs)
    rnd.shuffle(shuffled)
    b = verify([x + shift for x in shuffled], [y + shift for y in ys], 1)
    assert a == b


@given(lists)
def test_permutation_is_trivial(xs):
    assert is_trivial(xs, list(reversed(xs)))
    assert verify(xs, list(reversed(xs)), 7) == (True, TRIVIAL)


@given(st.integers(2, 4), st.integers(1, 3))
def test_brute_solutions_verify(size, degree):
    for s in brute_search(size, degree, 3):
        ok, top = verify(s.X, s.Y, degree)
        assert ok and top >= degree and top < size
        assert min(s.X + s.Y) == 0 and s.X > s.Y
