"""Prouhet-Tarry-Escott solutions: verification, brute force, and extraction
from coinciding Casimir eigenvalues.
"""

from __future__ import annotations

import json
import os
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import comb

from .kernels import equal_power_sum_classes
from .separation import find_collisions, functionals, totally_subordinate
from .weights import FundWeight, IndexSet, add_lambda_I, weight_to_pattern

TRIVIAL = "trivial"
DEFAULT_BUDGET = 20_000_000


class BudgetExceeded(RuntimeError):
    pass


class DisjointnessViolation(AssertionError):
    """A depth-k collision with overlapping index sets was found."""


@dataclass(frozen=True)
class PteInstance:
    X: tuple
    Y: tuple
    degree: int
    provenance: object = field(default="brute", compare=False)

    @property
    def size(self):
        return len(self.X)

    @property
    def ideal(self):
        return self.degree == self.size - 1 and not is_trivial(self.X, self.Y)

    def to_record(self):
        prov = self.provenance
        if isinstance(prov, dict):
            prov = {k: list(v) if isinstance(v, tuple) else v for k, v in prov.items()}
        return {
            "X": list(self.X),
            "Y": list(self.Y),
            "size": self.size,
            "degree": self.degree,
            "ideal": self.ideal,
            "provenance": prov,
        }

    @classmethod
    def from_record(cls, rec):
        prov = rec.get("provenance", "brute")
        if isinstance(prov, dict):
            prov = {k: tuple(v) if isinstance(v, list) else v for k, v in prov.items()}
        return cls(tuple(rec["X"]), tuple(rec["Y"]), rec["degree"], prov)


def is_trivial(X, Y):
    return Counter(X) == Counter(Y)


def power_sums_agree(X, Y, j):
    return sum(x**j for x in X) == sum(y**j for y in Y)


def verify(X, Y, m):
    """``(holds at degree m, max_degree)``; max_degree is ``TRIVIAL`` for permutations."""
    X, Y = tuple(X), tuple(Y)
    if len(X) != len(Y):
        raise ValueError(f"size mismatch: {len(X)} vs {len(Y)}")
    if is_trivial(X, Y):
        return True, TRIVIAL
    top = 0
    # equal power sums through degree len(X) force a permutation
    while top <= len(X) and power_sums_agree(X, Y, top + 1):
        top += 1
    return m <= top, top


def canonical(X, Y):
    """Sort descending, translate so the joint minimum is 0, larger list first."""
    lo = min(min(X), min(Y))
    X = tuple(sorted((x - lo for x in X), reverse=True))
    Y = tuple(sorted((y - lo for y in Y), reverse=True))
    return (X, Y) if X >= Y else (Y, X)


def brute_search(size, degree, bound, budget=DEFAULT_BUDGET, backend=None):
    """All non-trivial solutions with entries in ``[-bound, bound]``, canonicalized.

    Multisets are bucketed by their power-sum signature (a hash join), so
    only ``C(2*bound + size, size)`` candidates are touched instead of the
    ``(2*bound + 1)^(2*size)`` pairs.
    """
    candidates = comb(2 * bound + size, size)
    if candidates > budget:
        raise BudgetExceeded(f"{candidates} candidate multisets exceed budget {budget}")
    found = set()
    for group in equal_power_sum_classes(size, degree, -bound, bound, backend=backend):
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                found.add(canonical(group[a], group[b]))
    out = []
    for X, Y in sorted(found, reverse=True):
        _, top = verify(X, Y, degree)
        out.append(PteInstance(X, Y, top, "brute"))
    return out


def theorem29_validate(size, bound, budget=DEFAULT_BUDGET, backend=None):
    """True iff no non-trivial pair agrees through degree ``size`` in the range."""
    return not brute_search(size, size, bound, budget=budget, backend=backend)


def _as_index(n, I):
    return I if isinstance(I, IndexSet) else IndexSet(n, tuple(I))


def extract_from_collision(n, k, nu, I, J):
    """Build the PTE pair hidden in two constituents with coinciding eigenvalues.

    Returns ``(X, Y, r, guaranteed_degree)``. The degree is recomputed from
    the S-functionals: it is the largest ``s`` with ``S_2..S_{s+1}`` equal.
    """
    if not isinstance(nu, FundWeight):
        nu = FundWeight(tuple(nu))
    I, J = _as_index(n, I), _as_index(n, J)
    if I == J:
        raise ValueError("index sets must differ")
    f = weight_to_pattern(nu)
    for S in (I, J):
        if not add_lambda_I(f, S)[1]:
            raise ValueError(f"nu + lambda_{S} is not dominant")
    if I.elems[0] > J.elems[0]:
        I, J = J, I
    r = len(set(I) & set(J))
    only_i = sorted(set(I) - set(J))
    only_j = sorted(set(J) - set(I))
    X = tuple(f.f[t - 1] - t for t in only_i)
    Y = tuple(f.f[t - 1] - t for t in only_j)
    s = 0
    while s + 2 <= n + 1:
        p = s + 2
        if functionals(n, k, nu, I, p).values[-1] != functionals(n, k, nu, J, p).values[-1]:
            break
        s += 1
    ok, _ = verify(X, Y, s)
    if not ok or is_trivial(X, Y):
        raise ArithmeticError(f"extraction for I={I}, J={J} is not a degree-{s} solution")
    return X, Y, r, s


def _ideal_for_weight(args):
    k, a = args
    n = 2 * k
    nu = FundWeight(a)
    found = []
    for I, J, _vec in find_collisions(n, k, nu, k):
        X, Y, r, s = extract_from_collision(n, k, nu, I, J)
        if r != 0:
            raise DisjointnessViolation(f"depth-{k} collision with r={r}: nu={a}, I={I}, J={J}")
        ok, top = verify(X, Y, k - 1)
        if not ok or top != k - 1 or s != k - 1:
            raise ArithmeticError(f"non-ideal extraction at nu={a}, I={I}, J={J}")
        cX, cY = canonical(X, Y)
        found.append(PteInstance(cX, cY, top, {"nu": a, "I": I.elems, "J": J.elems}))
    return found


def _weights_for_prefix(k, bound, first):
    n = 2 * k
    return [(first,) + rest for rest in product(range(1, bound + 1), repeat=n - 2)]


def _ideal_for_prefix(args):
    k, bound, first = args
    out = []
    for a in _weights_for_prefix(k, bound, first):
        out.extend(_ideal_for_weight((k, a)))
    return out


def ideal_search(
    k, nu_coeff_bound, budget=DEFAULT_BUDGET, map_fn=map, checkpoint=None, time_budget=None
):
    """Ideal solutions of size ``k`` from depth-``k`` collisions in ``sl_{2k}``.

    Strictly dominant weights with coefficients in ``[1, nu_coeff_bound]``
    are scanned, grouped by their first coefficient. ``map_fn`` may be a
    parallel map; ``checkpoint`` names a JSON file that records finished
    prefixes so an interrupted run resumes where it stopped. Solutions are
    deduplicated under translation and swap; the first provenance is kept.
    ``time_budget`` (whole seconds) aborts with :class:`BudgetExceeded` after
    the prefix in flight; the checkpoint keeps the finished work.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if nu_coeff_bound < 1:
        raise ValueError("empty weight range: nu_coeff_bound must be at least 1")
    n = 2 * k
    if nu_coeff_bound ** (n - 1) > budget:
        raise BudgetExceeded(f"{nu_coeff_bound ** (n - 1)} weights exceed budget {budget}")
    state = {"k": k, "bound": nu_coeff_bound, "done": [], "solutions": []}
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            saved = json.load(fh)
        if saved.get("k") == k and saved.get("bound") == nu_coeff_bound:
            state = saved
    todo = [c for c in range(1, nu_coeff_bound + 1) if c not in state["done"]]
    deadline = None if time_budget is None else time.monotonic_ns() + time_budget * 10**9
    solutions = {}
    for rec in state["solutions"]:
        inst = PteInstance.from_record(rec)
        solutions.setdefault((inst.X, inst.Y), inst)
    for first, found in zip(todo, map_fn(_ideal_for_prefix, [(k, nu_coeff_bound, c) for c in todo])):
        for inst in found:
            solutions.setdefault((inst.X, inst.Y), inst)
        state["done"].append(first)
        if checkpoint:
            state["solutions"] = [s.to_record() for s in _ordered(solutions)]
            _atomic_write(checkpoint, state)
        if deadline is not None and time.monotonic_ns() > deadline and len(state["done"]) < nu_coeff_bound:
            raise BudgetExceeded(f"time budget of {time_budget}s exhausted after prefixes {state['done']}")
    return _ordered(solutions)


def _ordered(solutions):
    return [solutions[key] for key in sorted(solutions)]


def _atomic_write(path, obj):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(obj, fh, sort_keys=True)
    os.replace(tmp, path)


def ideal_from_weight(k, nu):
    """Ideal solutions extracted from a single weight of ``sl_{2k}``."""
    nu = tuple(nu.a) if isinstance(nu, FundWeight) else tuple(nu)
    if not totally_subordinate(2 * k, k, nu):
        raise ValueError(f"omega_{k} is not totally subordinate to {nu}")
    return _ideal_for_weight((k, nu))
