from math import comb

import pytest

from ptealg.cartan import (
    DiagPolyMatrix,
    _in_symmetric_span,
    diag_schur_matrix,
    ideal_membership,
    restricted_mtype,
    schur_in_first_k,
    verify_free_basis,
)
from ptealg.poly import SparsePoly
from ptealg.symfunc import box_partitions, power_sum
from ptealg.weights import IndexSet


def test_ideal_membership_basics():
    assert ideal_membership(power_sum(2, 3), 3)
    assert not ideal_membership(schur_in_first_k((1,), 1, 3), 3)
    assert ideal_membership(SparsePoly.zero(3), 3)
    with pytest.raises(ValueError):
        ideal_membership(SparsePoly.var(3, 0) + SparsePoly.one(3), 3)


def test_restricted_mtype_sl2():
    m = restricted_mtype(1, 2, 2)
    x1 = SparsePoly.var(1, 0)
    assert m[IndexSet(2, (1,))] == x1
    assert m[IndexSet(2, (2,))] == -x1


def test_diag_schur_trace():
    d = diag_schur_matrix(1, 3, (0,))
    assert d.trace() == SparsePoly.constant(2, 3)
    assert len(d.subsets()) == comb(3, 1)


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 4)])
@pytest.mark.parametrize("zero_slot", [True, False])
def test_free_basis_both_charts(k, n, zero_slot):
    assert verify_free_basis(k, n, 4, zero_slot=zero_slot).passed


def test_symmetric_span_check_can_fail():
    # a non-symmetric diagonal matrix is not in the span, so the check is not vacuous
    x1 = SparsePoly.var(2, 0)
    target = DiagPolyMatrix(1, 3, {IndexSet(3, (1,)): x1, IndexSet(3, (2,)): x1 * 0, IndexSet(3, (3,)): x1 * 0})
    assert not _in_symmetric_span(target, 1, 3, box_partitions(1, 2), 1, True)
