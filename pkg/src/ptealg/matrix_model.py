"""Exterior-power representations of sl_n and Casimir / Kostant matrices.

Everything is exact: generators are ``Fraction`` matrices, spectra are
certified by annihilating polynomials and exact ranks rather than by any
eigensolver.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linalg import ExactMatrix, RowSpace
from .report import Report
from .weights import (
    add_lambda_I,
    fundamental,
    k_subsets,
    s_functional,
    weight_to_pattern,
    weyl_dim,
)

DEFAULT_P_BOUND = 4


@dataclass(frozen=True)
class Rep:
    """Matrices ``pi(X_ij)`` for all ``1 <= i, j <= n`` on a labelled basis."""

    n: int
    basis: tuple
    gens: dict

    @property
    def dim(self):
        return len(self.basis)

    def X(self, i, j):
        return self.gens[(i, j)]

    def commutator_defect(self, pairs=None):
        """First ``(i, j, k, m)`` violating the sl_n bracket relations, or None."""
        n = self.n
        idx = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        if pairs is None:
            pairs = [(a, b) for a in idx for b in idx]
        for (i, j), (k, m) in pairs:
            A, B = self.X(i, j), self.X(k, m)
            lhs = A @ B - B @ A
            rhs = ExactMatrix.zeros(self.dim)
            if j == k:
                rhs = rhs + self.X(i, m)
            if i == m:
                rhs = rhs - self.X(k, j)
            if lhs != rhs:
                return (i, j, k, m)
        return None

    def trace_sum_is_zero(self):
        total = ExactMatrix.zeros(self.dim)
        for i in range(1, self.n + 1):
            total = total + self.X(i, i)
        return total.is_zero()


def fundamental_rep(n, k):
    """``Lambda^k`` of the natural module, basis ``e_S`` for k-subsets ``S``."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    basis = tuple(combinations(range(1, n + 1), k))
    pos = {S: a for a, S in enumerate(basis)}
    d = len(basis)
    shift = Fraction(k, n)
    gens = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = ExactMatrix.zeros(d)
            if i == j:
                for S, a in pos.items():
                    m.rows[a][a] = (1 if i in S else 0) - shift
            else:
                for S, a in pos.items():
                    if j not in S or i in S:
                        continue
                    T = tuple(sorted((set(S) - {j}) | {i}))
                    lo, hi = min(i, j), max(i, j)
                    between = sum(1 for s in S if lo < s < hi)
                    m.rows[pos[T]][a] = Fraction(-1 if between % 2 else 1)
            gens[(i, j)] = m
    return Rep(n, basis, gens)


def tensor_delta(a, b):
    """Coproduct action ``X -> X (x) 1 + 1 (x) X`` on ``a (x) b``."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    Ia, Ib = ExactMatrix.identity(a.dim), ExactMatrix.identity(b.dim)
    gens = {key: a.gens[key].kron(Ib) + Ia.kron(b.gens[key]) for key in a.gens}
    basis = tuple((u, v) for u in a.basis for v in b.basis)
    return Rep(a.n, basis, gens)


def casimir(r, p, bound=DEFAULT_P_BOUND):
    """``sum X_{i1 i2} X_{i2 i3} ... X_{ip i1}`` over all index tuples.

    Partial products over the inner indices are accumulated, so the sum over
    ``n^p`` tuples costs ``O(p n^3)`` matrix products.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if p > bound:
        raise ValueError(f"p={p} exceeds the configured bound {bound}")
    n = r.n
    idx = range(1, n + 1)
    # chain[(i, j)] = sum over paths i -> ... -> j of length q
    chain = {(i, j): r.X(i, j) for i in idx for j in idx}
    for _ in range(p - 1):
        nxt = {}
        for i in idx:
            for j in idx:
                acc = ExactMatrix.zeros(r.dim)
                for m in idx:
                    acc = acc + chain[(i, m)] @ r.X(m, j)
                nxt[(i, j)] = acc
        chain = nxt
    total = ExactMatrix.zeros(r.dim)
    for i in idx:
        total = total + chain[(i, i)]
    return total


def scalar_of(m):
    c = m.scalar_value()
    if c is None:
        raise ValueError("matrix is not scalar")
    return c


def kostant_matrix(a, b, p, bound=DEFAULT_P_BOUND):
    """``Delta(c_p) - pi_a(c_p) (x) 1 - 1 (x) pi_b(c_p)`` on ``a (x) b``."""
    t = tensor_delta(a, b)
    Ia, Ib = ExactMatrix.identity(a.dim), ExactMatrix.identity(b.dim)
    return (
        casimir(t, p, bound)
        - casimir(a, p, bound).kron(Ib)
        - Ia.kron(casimir(b, p, bound))
    )


def predicted_spectrum(n, k, j, p=2):
    """Eigenvalues on ``Lambda^k (x) Lambda^j`` predicted from S-functionals.

    Returns ``{value: (multiplicity, [constituent patterns])}``.
    """
    nu = weight_to_pattern(fundamental(n, j))
    wk = weight_to_pattern(fundamental(n, k))
    base = s_functional(wk, p) + s_functional(nu, p)
    out = defaultdict(lambda: [0, []])
    for I in k_subsets(n, k):
        g, dom = add_lambda_I(nu, I)
        if not dom:
            continue
        c = s_functional(g, p) - base
        out[c][0] += weyl_dim(g)
        out[c][1].append(g)
    return {c: (mult, pats) for c, (mult, pats) in out.items()}


def spectrum_verify(n, k, j, p=2, max_dim=400):
    """Certify the spectrum of the Kostant matrix on ``Lambda^k (x) Lambda^j``."""
    report = Report(f"spectrum n={n} k={k} j={j} p={p}")
    if p >= 3:
        report.notes.append(
            "predicted values use S_p in place of chi(c_p) (assumption-based for p >= 3)"
        )
    a, b = fundamental_rep(n, k), fundamental_rep(n, j)
    if a.dim * b.dim > max_dim:
        raise ValueError(f"tensor dimension {a.dim * b.dim} exceeds {max_dim}")
    M = kostant_matrix(a, b, p)
    pred = predicted_spectrum(n, k, j, p)
    dim = a.dim * b.dim
    total_mult = sum(m for m, _ in pred.values())
    report.add("multiplicities sum to dimension", {"dim": dim}, total_mult == dim, total_mult)
    I = ExactMatrix.identity(dim)
    prod = ExactMatrix.identity(dim)
    for c in sorted(pred):
        prod = prod @ (M - I.scale(c))
    report.add(
        "annihilating polynomial",
        {"values": sorted(pred)},
        prod.is_zero(),
        None if prod.is_zero() else "product of (M - c I) is nonzero",
    )
    for c in sorted(pred):
        mult, pats = pred[c]
        got = (M - I.scale(c)).nullity()
        report.add(
            f"eigenvalue {c}",
            {"patterns": [str(g) for g in pats]},
            got == mult,
            {"eigenvalue": c, "predicted multiplicity": mult, "verified multiplicity": got},
        )
    return report


def commutant_generated_dim(mats, dim):
    """Dimension of the unital algebra generated by ``mats`` (exact span)."""
    space = RowSpace()

    def key(m):
        return {(i, j): x for i, r in enumerate(m.rows) for j, x in enumerate(r) if x}

    frontier = [ExactMatrix.identity(dim)]
    space.add(key(frontier[0]))
    while frontier:
        nxt = []
        for x in frontier:
            for g in mats:
                y = x @ g
                if space.add(key(y)):
                    nxt.append(y)
        frontier = nxt
    return len(space)



def _highest_weight_vector(t, pattern):
    """Highest weight vector of weight ``pattern`` in a tensor of exterior powers."""
    n = t.n
    target = tuple(pattern.f)
    cols = [
        a
        for a, (S, T) in enumerate(t.basis)
        if tuple((i in S) + (i in T) for i in range(1, n + 1)) == target
    ]
    if not cols:
        return None
    # kernel of all raising operators restricted to the weight space
    rows = []
    for i in range(1, n):
        E = t.X(i, i + 1)
        for r in range(t.dim):
            row = [E.rows[r][c] for c in cols]
            if any(row):
                rows.append(row)
    kernel = _kernel(rows, len(cols))
    if len(kernel) != 1:
        return None
    v = [Fraction(0)] * t.dim
    for c, x in zip(cols, kernel[0]):
        v[c] = x
    return v


def _kernel(rows, ncols):
    rref = []
    pivots = []
    for row in rows:
        row = list(row)
        for pr, pc in zip(rref, pivots):
            if row[pc]:
                f = row[pc]
                row = [x - f * y for x, y in zip(row, pr)]
        lead = next((c for c in range(ncols) if row[c]), None)
        if lead is None:
            continue
        p = row[lead]
        row = [x / p for x in row]
        for idx, pr in enumerate(rref):
            if pr[lead]:
                f = pr[lead]
                rref[idx] = [x - f * y for x, y in zip(pr, row)]
        rref.append(row)
        pivots.append(lead)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pr, pc in zip(rref, pivots):
            v[pc] = -pr[fc]
        basis.append(v)
    return basis


def measured_eigenvalues(n, k, j, p):
    """Eigenvalue of the Kostant matrix on each constituent of ``Lambda^k (x) Lambda^j``.

    Read off by applying the matrix to the constituent's highest weight
    vector, independently of any closed-form character formula. Returns a
    list of ``(pattern, eigenvalue)``.
    """
    a, b = fundamental_rep(n, k), fundamental_rep(n, j)
    t = tensor_delta(a, b)
    M = kostant_matrix(a, b, p)
    nu = weight_to_pattern(fundamental(n, j))
    out = []
    for I in k_subsets(n, k):
        g, dom = add_lambda_I(nu, I)
        if not dom:
            continue
        v = _highest_weight_vector(t, g)
        if v is None:
            raise ArithmeticError(f"no unique highest weight vector for {g}")
        Mv = [sum((x * y for x, y in zip(r, v) if x and y), Fraction(0)) for r in M.rows]
        lead = next(i for i, x in enumerate(v) if x)
        c = Mv[lead] / v[lead]
        if any(Mv[i] != c * v[i] for i in range(len(v))):
            raise ArithmeticError(f"highest weight vector of {g} is not an eigenvector")
        out.append((g, c))
    return out


def separation_consistency(n, k, j, p):
    """Compare S-vector separation with measured eigenvalue separation.

    For every pair of constituents, equality of ``(S_2..S_p)`` must coincide
    with equality of the measured eigenvalues for ``c_2..c_p``.
    """
    report = Report(f"separation consistency n={n} k={k} j={j} p<={p}")
    measured = {q: measured_eigenvalues(n, k, j, q) for q in range(2, p + 1)}
    pats = [g for g, _ in measured[2]]
    svec = {g: tuple(s_functional(g, q) for q in range(2, p + 1)) for g in pats}
    evec = {g: tuple(dict(measured[q])[g] for q in range(2, p + 1)) for g in pats}
    bad = []
    for x, y in combinations(pats, 2):
        if (svec[x] == svec[y]) != (evec[x] == evec[y]):
            bad.append((str(x), str(y)))
    report.add("S-vectors and eigenvalues separate the same pairs", {"p": p}, not bad, bad or None)
    return report
