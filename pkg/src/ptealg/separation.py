"""Constituents of ``V(omega_k) (x) V(nu)`` and their separation by Casimirs.

The eigenvalue of ``M(c_p)`` on the constituent ``nu + lambda_I`` is tracked
through the power-sum functionals ``(S_2, ..., S_p)`` of its pattern. These
are triangularly related to the Casimir characters, so two constituents share
the eigenvalues of ``c_2..c_p`` exactly when their S-vectors agree.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .weights import (
    FundWeight,
    IndexSet,
    YoungPattern,
    add_lambda_I,
    k_subsets,
    s_functional,
    weight_to_pattern,
    weyl_dim,
)


@dataclass(frozen=True)
class Constituent:
    I: IndexSet
    pattern: YoungPattern
    dim: int


@dataclass(frozen=True)
class FunctionalVector:
    I: IndexSet
    values: tuple


def _check_range(n, k):
    if not 1 <= k <= n - k:
        raise ValueError(f"need 1 <= k <= n-k, got n={n}, k={k}")


def _as_weight(n, nu):
    if not isinstance(nu, FundWeight):
        nu = FundWeight(tuple(nu))
    if nu.n != n:
        raise ValueError(f"weight {nu} does not belong to sl_{n}")
    if not nu.is_dominant():
        raise ValueError(f"weight {nu} is not dominant")
    return nu


def tensor_decompose(n, k, nu):
    _check_range(n, k)
    nu = _as_weight(n, nu)
    base = weight_to_pattern(nu)
    out = []
    for I in k_subsets(n, k):
        g, dom = add_lambda_I(base, I)
        if dom:
            out.append(Constituent(I, g, weyl_dim(g)))
    return out


def totally_subordinate(n, k, nu):
    return len(tensor_decompose(n, k, nu)) == comb(n, k)


def functionals(n, k, nu, I, p):
    if p < 2:
        raise ValueError("p must be at least 2")
    nu = _as_weight(n, nu)
    if not isinstance(I, IndexSet):
        I = IndexSet(n, tuple(I))
    g, dom = add_lambda_I(weight_to_pattern(nu), I)
    if not dom:
        raise ValueError(f"constituent {g} for I={I} is not dominant")
    return FunctionalVector(I, tuple(s_functional(g, q) for q in range(2, p + 1)))


def _vectors(n, k, nu, depth):
    return {
        c.I: tuple(s_functional(c.pattern, q) for q in range(2, depth + 1))
        for c in tensor_decompose(n, k, nu)
    }


def collision_groups(n, k, nu, depth):
    """Constituents bucketed by their ``(S_2..S_depth)`` vector."""
    buckets = defaultdict(list)
    for I, vec in _vectors(n, k, nu, depth).items():
        buckets[vec].append(I)
    return {vec: sorted(Is) for vec, Is in buckets.items() if len(Is) > 1}


def find_collisions(n, k, nu, depth):
    """Unordered pairs of constituents whose S-vectors agree through ``S_depth``.

    Returns ``[(I, J, shared_vector)]`` with ``I < J``, ordered
    lexicographically.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    if not totally_subordinate(n, k, nu):
        raise ValueError(f"omega_{k} is not totally subordinate to {nu}")
    out = []
    for vec, Is in collision_groups(n, k, nu, depth).items():
        for I, J in combinations(Is, 2):
            out.append((I, J, vec))
    out.sort(key=lambda t: (t[0].elems, t[1].elems))
    return out


def t0(n, k, nu, max_t=None):
    """Smallest ``t`` such that ``S_2..S_t`` separate every pair of constituents."""
    if not totally_subordinate(n, k, nu):
        raise ValueError(f"omega_{k} is not totally subordinate to {nu}")
    cons = tensor_decompose(n, k, nu)
    max_t = n + 1 if max_t is None else max_t
    vecs = {c.I: () for c in cons}
    for t in range(2, max_t + 1):
        vecs = {c.I: vecs[c.I] + (s_functional(c.pattern, t),) for c in cons}
        if len(set(vecs.values())) == len(cons):
            return t
    raise ArithmeticError(f"constituents not separated by S_2..S_{max_t}")


def collision_record(n, k, nu, depth, I, J, vec):
    return {
        "n": n,
        "k": k,
        "nu": list(_as_weight(n, nu).a),
        "depth": depth,
        "I": list(I.elems),
        "J": list(J.elems),
        "shared_vector": list(vec),
    }
