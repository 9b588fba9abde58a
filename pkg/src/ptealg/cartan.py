"""Cartan-restricted picture of the invariant ring for ``Lambda^k``.

Diagonal matrices indexed by k-subsets ``S`` of ``{1..n}``, with entries in
``Q[x_1..x_{n-1}]`` where the last Cartan coordinate is set to zero
(``zero_slot=True``); with ``zero_slot=False`` the variable ``x_n`` is kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb

from .linalg import RowSpace
from .poly import SparsePoly, monomials_of_degree
from .report import Report
from .symfunc import Partition, box_partitions, in_box, partitions_of, power_sum, schur
from .weights import k_subsets


@dataclass(frozen=True)
class DiagPolyMatrix:
    k: int
    n: int
    entries: dict  # IndexSet -> SparsePoly

    @property
    def nvars(self):
        return next(iter(self.entries.values())).nvars

    def subsets(self):
        return sorted(self.entries)

    def __getitem__(self, S):
        return self.entries[S]

    def trace(self):
        total = SparsePoly.zero(self.nvars)
        for p in self.entries.values():
            total = total + p
        return total

    def vector(self):
        """Flatten to ``{(subset elems, exponent): coefficient}``."""
        out = {}
        for S, p in self.entries.items():
            for e, c in p.terms.items():
                out[(S.elems, e)] = c
        return out

    def scaled_by(self, poly):
        return DiagPolyMatrix(self.k, self.n, {S: p * poly for S, p in self.entries.items()})


def _slot_targets(S, n, zero_slot):
    return [None if (zero_slot and s == n) else s - 1 for s in S.elems]


def _ring_size(n, zero_slot):
    return n - 1 if zero_slot else n


def _embed(poly_in_k, S, n, zero_slot):
    return poly_in_k.substitute(_slot_targets(S, n, zero_slot), _ring_size(n, zero_slot))


def diag_schur_matrix(k, n, lam, zero_slot=True):
    lam = Partition(lam)
    if len(lam) > k:
        raise ValueError(f"partition {lam} has more than {k} parts")
    base = schur(lam, k)
    return DiagPolyMatrix(k, n, {S: _embed(base, S, n, zero_slot) for S in k_subsets(n, k)})


def full_power_sum(t, n, zero_slot=True):
    """``p_t(x_1, ..., x_n)`` in the chosen chart."""
    p = power_sum(t, n)
    if not zero_slot:
        return p
    return p.substitute(list(range(n - 1)) + [None], n - 1)


def restricted_mtype(k, n, s, zero_slot=True):
    """``s diag(p_{s-1}(x_S)) - s (k/n) p_{s-1}(x_1..x_n) I``."""
    if s < 2:
        raise ValueError("s must be at least 2")
    base = power_sum(s - 1, k)
    correction = full_power_sum(s - 1, n, zero_slot) * Fraction(s * k, n)
    entries = {}
    for S in k_subsets(n, k):
        entries[S] = _embed(base, S, n, zero_slot) * s - correction
    return DiagPolyMatrix(k, n, entries)


@lru_cache(maxsize=None)
def _ideal_piece(n, d):
    """Reduced basis of the degree-``d`` part of ``(p_1, ..., p_n)``."""
    space = RowSpace()
    for i in range(1, min(n, d) + 1):
        gen = power_sum(i, n)
        for e in monomials_of_degree(n, d - i):
            space.add((gen * SparsePoly(n, {e: 1})).terms)
    return space


def ideal_membership(g, n):
    """Whether a homogeneous ``g`` lies in the ideal generated by ``p_1..p_n``."""
    if g.nvars != n:
        raise ValueError(f"polynomial has {g.nvars} variables, expected {n}")
    if g.is_zero():
        return True
    if not g.is_homogeneous():
        raise ValueError("ideal membership needs a homogeneous polynomial")
    d = g.degree()
    if d == 0:
        return False
    return _ideal_piece(n, d).contains(g.terms)


def schur_in_first_k(lam, k, n):
    """``s_lam(x_1..x_k)`` as a polynomial in ``n`` variables (zero if too long)."""
    lam = Partition(lam)
    if len(lam) > k:
        return SparsePoly.zero(n)
    return schur(lam, k).substitute(list(range(k)), n)


def _monomial_symmetric(mu, n, zero_slot):
    """Monomial symmetric polynomial ``m_mu`` in ``n`` variables, in the chart."""
    p = SparsePoly(n, {perm: 1 for perm in set(permutations(mu.padded(n)))})
    if zero_slot:
        p = p.substitute(list(range(n - 1)) + [None], n - 1)
    return p


def verify_free_basis(k, n, degree_bound, zero_slot=True):
    if not 1 <= k <= n - k:
        raise ValueError(f"need 1 <= k <= n-k, got k={k}, n={n}")
    report = Report(f"free basis k={k} n={n} bound={degree_bound}")
    box = box_partitions(k, n - k)

    space = RowSpace()
    for lam in box:
        space.add(diag_schur_matrix(k, n, lam, zero_slot).vector())
    report.add(
        "box Schur matrices independent",
        {"k": k, "n": n},
        len(space) == comb(n, k) == len(box),
        {"rank": len(space), "expected": comb(n, k)},
    )

    bad = []
    for t in range(degree_bound + 1):
        for lam in partitions_of(t):
            member = ideal_membership(schur_in_first_k(lam, k, n), n)
            if member == in_box(lam, k, n - k):
                bad.append(list(lam))
    report.add("ideal membership criterion", {"bound": degree_bound}, not bad, bad or None)

    for s in range(2, k + 2):
        target = restricted_mtype(k, n, s, zero_slot)
        ok = _in_symmetric_span(target, k, n, box, s - 1, zero_slot)
        report.add(f"restricted M-matrix s={s} in Schur span", {"s": s}, ok)
    return report


def _in_symmetric_span(target, k, n, box, degree, zero_slot):
    """Is ``target`` a combination of ``c_lam * D_lam`` with symmetric ``c_lam``?"""
    space = RowSpace()
    for lam in box:
        e = degree - sum(lam)
        if e < 0:
            continue
        D = diag_schur_matrix(k, n, lam, zero_slot)
        for mu in partitions_of(e, max_parts=n):
            space.add(D.scaled_by(_monomial_symmetric(mu, n, zero_slot)).vector())
    return space.contains(target.vector())
