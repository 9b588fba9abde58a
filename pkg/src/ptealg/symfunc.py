"""Partitions, symmetric polynomials and Littlewood-Richardson products.

Schur polynomials are available through two independent routes, the
Jacobi-Trudi determinant and the bialternant quotient, so that each can
serve as an oracle for the other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .poly import SparsePoly, monomials_of_degree


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def length(self):
        return len(self)

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """0-based part with implicit trailing zeros."""
        return self[i] if i < len(self) else 0

    def conjugate(self):
        return conjugate(self)

    def padded(self, n):
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self):
        return "Partition(" + format_partition(self) + ")"


def format_partition(lam):
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text):
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    if not text.strip():
        return Partition(())
    return Partition(int(t) for t in text.split(","))


def conjugate(lam):
    lam = Partition(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p >= i + 1) for i in range(lam[0]))


def in_box(lam, k, m):
    """True iff ``lam`` fits in a box of ``k`` rows and ``m`` columns."""
    lam = Partition(lam)
    return len(lam) <= k and (not lam or lam[0] <= m)


def partitions_of(t, max_parts=None, max_part=None):
    """Partitions of ``t``, in reverse lexicographic order."""
    max_parts = t if max_parts is None else max_parts
    max_part = t if max_part is None else max_part

    def rec(left, cap, slots):
        if left == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(left, cap), 0, -1):
            for rest in rec(left - p, p, slots - 1):
                yield (p,) + rest

    return [Partition(p) for p in rec(t, max_part, max_parts)]


def box_partitions(k, m):
    """All partitions in the ``k x m`` box, ordered by size then reverse lex."""
    out = []
    for t in range(k * m + 1):
        out.extend(partitions_of(t, k, m))
    return out


def power_sum(t, nvars):
    if t == 0:
        return SparsePoly.constant(nvars, nvars)
    terms = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = t
        terms[tuple(e)] = 1
    return SparsePoly(nvars, terms)


def power_sum_product(lam, nvars):
    """Product of power sums over the parts of ``lam``."""
    out = SparsePoly.one(nvars)
    for p in lam:
        out = out * power_sum(p, nvars)
    return out


@lru_cache(maxsize=None)
def complete_h(r, nvars):
    if r < 0:
        return SparsePoly.zero(nvars)
    return SparsePoly(nvars, {e: 1 for e in monomials_of_degree(nvars, r)})


def elementary_e(r, nvars):
    if r < 0 or r > nvars:
        return SparsePoly.zero(nvars)
    terms = {}
    for e in monomials_of_degree(nvars, r):
        if max(e, default=0) <= 1:
            terms[e] = 1
    return SparsePoly(nvars, terms)


def _poly_det(mat, nvars):
    # Laplace expansion along the first row; sizes here are tiny
    n = len(mat)
    if n == 0:
        return SparsePoly.one(nvars)
    if n == 1:
        return mat[0][0]
    total = SparsePoly.zero(nvars)
    for j in range(n):
        if mat[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _poly_det(minor, nvars)
        total = total + term if j % 2 == 0 else total - term
    return total


def schur_jacobi_trudi(lam, nvars):
    """Schur polynomial as ``det(h_{lam_i - i + j})``."""
    return _schur_jt(Partition(lam), nvars)


@lru_cache(maxsize=None)
def _schur_jt(lam, nvars):
    if len(lam) > nvars:
        raise ValueError(
            f"partition {format_partition(lam)} has more parts than {nvars} variables"
        )
    ell = len(lam)
    mat = [[complete_h(lam[i] - i + j, nvars) for j in range(ell)] for i in range(ell)]
    return _poly_det(mat, nvars)


def _alternant(alpha):
    n = len(alpha)
    terms = {}
    for perm in permutations(range(n)):
        e = tuple(alpha[perm[i]] for i in range(n))
        # sign of the permutation via inversion count
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        terms[e] = terms.get(e, 0) + (-1 if inv % 2 else 1)
    return SparsePoly(n, terms)


def schur_alternant(lam, nvars):
    """Schur polynomial as the quotient ``A_{lam+delta} / A_delta``."""
    return _schur_alt(Partition(lam), nvars)


@lru_cache(maxsize=None)
def _schur_alt(lam, nvars):
    if len(lam) > nvars:
        raise ValueError(
            f"partition {format_partition(lam)} has more parts than {nvars} variables"
        )
    delta = tuple(range(nvars - 1, -1, -1))
    num = _alternant(tuple(a + d for a, d in zip(lam.padded(nvars), delta)))
    den = _alternant(delta)
    return num.divmod_exact(den)


def schur(lam, nvars):
    """Schur polynomial; zero when ``lam`` has more parts than variables."""
    lam = Partition(lam)
    if len(lam) > nvars:
        return SparsePoly.zero(nvars)
    return schur_jacobi_trudi(lam, nvars)


def pieri_h(mu, r):
    """Partitions obtained from ``mu`` by adding a horizontal strip of ``r`` boxes."""
    mu = Partition(mu)
    out = []
    n = len(mu) + 1
    parts = list(mu) + [0]

    def rec(i, left, cur):
        if i == n:
            if left == 0:
                out.append(Partition(cur))
            return
        cap = left if i == 0 else min(left, parts[i - 1] - parts[i])
        for a in range(cap, -1, -1):
            rec(i + 1, left - a, cur + [parts[i] + a])

    rec(0, r, [])
    return out


def pieri_e(mu, r):
    """Partitions obtained from ``mu`` by adding a vertical strip of ``r`` boxes."""
    return [conjugate(x) for x in pieri_h(conjugate(mu), r)]


def _add_to(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _jacobi_trudi_terms(nu):
    # det(h_{nu_i - i + j}) expanded over permutations: (sign, row lengths)
    ell = len(nu)
    out = []
    for perm in permutations(range(ell)):
        rows = tuple(nu[i] - i + perm[i] for i in range(ell))
        if any(r < 0 for r in rows):
            continue
        inv = sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
        out.append((-1 if inv % 2 else 1, rows))
    return out


@lru_cache(maxsize=None)
def _lr_cached(mu, nu):
    acc = {}
    for sign, rows in _jacobi_trudi_terms(nu):
        # s_mu * h_{rows}: Pieri row by row starting at mu
        cur = {mu: 1}
        for a in rows:
            nxt = {}
            for lam, c in cur.items():
                for kappa in pieri_h(lam, a):
                    _add_to(nxt, kappa, c)
            cur = nxt
        for lam, c in cur.items():
            _add_to(acc, lam, sign * c)
    return acc


def lr_expand(mu, nu):
    """Coefficients ``c^lam_{mu nu}`` of ``s_mu * s_nu``.

    ``s_nu`` is written through Jacobi-Trudi as a signed sum of products of
    complete functions, and each product acts on ``s_mu`` by iterated Pieri.
    Cancellation leaves the nonnegative LR coefficients.
    """
    mu, nu = Partition(mu), Partition(nu)
    if len(mu) < len(nu):
        mu, nu = nu, mu
    out = dict(_lr_cached(mu, nu))
    for c in out.values():
        if c < 0:
            raise ArithmeticError("negative Littlewood-Richardson coefficient")
    return out


def symmetric_span_rank(polys):
    """Rank of a list of polynomials over the monomial basis."""
    from .linalg import RowSpace

    space = RowSpace()
    for p in polys:
        space.add(dict(p.terms))
    return len(space)
