"""The cohomology ring of the Grassmannian of k-planes in C^n.

Elements are combinations of Schubert classes ``s_lam`` for partitions in
the ``k x (n-k)`` box; products are Littlewood-Richardson expansions with
everything outside the box discarded. The presentation by generators
``w_1..w_k`` and the relations ``f_{s,n-k}`` is checked against it.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .linalg import RowSpace
from .report import Report
from .symfunc import Partition, box_partitions, format_partition, in_box, lr_expand


class GrassElement:
    __slots__ = ("k", "n", "coeffs")

    def __init__(self, k, n, coeffs=None):
        self.k, self.n = k, n
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if not in_box(lam, k, n - k):
                raise ValueError(f"{format_partition(lam)} is outside the {k}x{n - k} box")
            if c:
                clean[lam] = Fraction(c)
        self.coeffs = clean

    @classmethod
    def schubert(cls, k, n, lam):
        return cls(k, n, {Partition(lam): 1})

    @classmethod
    def one(cls, k, n):
        return cls.schubert(k, n, ())

    def _same(self, other):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError(
                f"box mismatch: ({self.k},{self.n}) vs ({other.k},{other.n})"
            )

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return GrassElement(self.k, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GrassElement(self.k, self.n, {lam: v * c for lam, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, GrassElement):
            return self.scale(other)
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, GrassElement):
            return NotImplemented
        return (self.k, self.n, self.coeffs) == (other.k, other.n, other.coeffs)

    def __hash__(self):
        return hash((self.k, self.n, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def items(self):
        """``(partition, coefficient)`` pairs in graded-lex partition order."""
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))

    def to_record(self):
        return [[list(lam), str(c)] for lam, c in self.items()]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*s{format_partition(lam)}" for lam, c in self.items())


def mul(a, b):
    a._same(b)
    k, n = a.k, a.n
    out = {}
    for mu, c1 in a.coeffs.items():
        for nu, c2 in b.coeffs.items():
            for lam, c in lr_expand(mu, nu).items():
                if in_box(lam, k, n - k):
                    out[lam] = out.get(lam, 0) + c1 * c2 * c
    return GrassElement(k, n, out)


class WPoly:
    """Polynomial in ``w_1..w_k`` where ``w_i`` has degree ``i``."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        self.terms = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if c}
        for e in self.terms:
            if len(e) != k:
                raise ValueError(f"exponent {e} does not match k={k}")

    @staticmethod
    def weighted_degree(e):
        return sum((i + 1) * t for i, t in enumerate(e))

    def degrees(self):
        return {self.weighted_degree(e) for e in self.terms}

    def __eq__(self, other):
        return isinstance(other, WPoly) and (self.k, self.terms) == (other.k, other.terms)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return WPoly(self.k, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"w{i + 1}" + (f"^{t}" if t > 1 else "") for i, t in enumerate(e) if t
            ) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def weighted_compositions(k, d):
    """Exponent vectors ``(t_1..t_k)`` with ``t_1 + 2 t_2 + ... + k t_k = d``."""
    out = []

    def rec(i, left, cur):
        if i == 0:
            if left == 0:
                out.append(tuple(cur))
            return
        for t in range(left // i, -1, -1):
            rec(i - 1, left - i * t, [t] + cur)

    rec(k, d, [])
    return sorted(out, reverse=True)


def _multinomial(ts):
    out = factorial(sum(ts))
    for t in ts:
        out //= factorial(t)
    return out


def relation_f(s, k, n, signed=False):
    """The relation ``f_{s,n-k}``; ``signed`` multiplies each term by ``(-1)^(t_1+...+t_k)``."""
    if not (1 <= k <= n - k and 1 <= s <= k):
        raise ValueError(f"need 1 <= s <= k <= n-k, got s={s}, k={k}, n={n}")
    terms = {}
    for t in weighted_compositions(k, n - k + s):
        total = sum(t)
        c = Fraction(sum(t[s - 1:]), total) * _multinomial(t)
        if signed and total % 2:
            c = -c
        if c:
            terms[t] = c
    return WPoly(k, terms)


def column_class(k, n, i):
    """Image of ``w_i``: the Schubert class of a single column of height ``i``."""
    lam = Partition((1,) * i)
    if not in_box(lam, k, n - k):
        return GrassElement(k, n)
    return GrassElement.schubert(k, n, lam)


def reduce_w_poly(p, k, n):
    """Image of ``p`` in the Schubert ring under ``w_i -> s_(1^i)``."""
    gens = [column_class(k, n, i) for i in range(1, p.k + 1)]
    powers = {}

    def power(i, t):
        key = (i, t)
        if key not in powers:
            powers[key] = GrassElement.one(k, n) if t == 0 else mul(power(i, t - 1), gens[i])
        return powers[key]

    total = GrassElement(k, n)
    for e, c in p.terms.items():
        term = GrassElement.one(k, n)
        for i, t in enumerate(e):
            if t:
                term = mul(term, power(i, t))
        total = total + term.scale(c)
    return total


def box_counts(k, n):
    """Number of box partitions of each size (graded dimension oracle)."""
    counts = [0] * (k * (n - k) + 1)
    for lam in box_partitions(k, n - k):
        counts[sum(lam)] += 1
    return counts


def gaussian_binomial(n, k):
    """Coefficients of ``[n choose k]_q`` via the q-Pascal recurrence."""
    if k < 0 or k > n:
        return [0]
    if k == 0 or k == n:
        return [1]
    a = gaussian_binomial(n - 1, k - 1)
    b = gaussian_binomial(n - 1, k)
    size = max(len(a), len(b) + k)
    out = [0] * size
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i + k] += x
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def quotient_graded_dims(k, n, signed=True, max_degree=None):
    """Graded dimensions of ``Q[w_1..w_k] / (f_{1,n-k}, ..., f_{k,n-k})``.

    Computed degree by degree: monomials of weighted degree ``d`` minus the
    rank of the ideal's degree-``d`` piece.
    """
    top = k * (n - k) + k if max_degree is None else max_degree
    rels = [relation_f(s, k, n, signed) for s in range(1, k + 1)]
    dims = []
    for d in range(top + 1):
        monos = weighted_compositions(k, d)
        space = RowSpace()
        for s, f in enumerate(rels, start=1):
            rd = n - k + s
            if rd > d:
                continue
            for m in weighted_compositions(k, d - rd):
                prod = WPoly(k, {m: 1}) * f
                space.add(prod.terms)
        dims.append(len(monos) - len(space))
    return dims


def verify_presentation(k, n):
    if not 1 <= k <= n - k:
        raise ValueError(f"need 1 <= k <= n-k, got k={k}, n={n}")
    report = Report(f"presentation of L({k},{n - k})")
    params = {"k": k, "n": n}
    annihilates = {}
    for signed in (True, False):
        zero = []
        for s in range(1, k + 1):
            img = reduce_w_poly(relation_f(s, k, n, signed), k, n)
            zero.append(img.is_zero())
            if signed:
                report.add(
                    f"signed relation f_{s} vanishes",
                    params,
                    img.is_zero(),
                    None if img.is_zero() else img.to_record(),
                )
        annihilates["signed" if signed else "unsigned"] = all(zero)
    report.notes.append(
        "sign convention: relations reduce to zero for "
        + ", ".join(name for name, ok in annihilates.items() if ok)
        + "; printed (unsigned) form "
        + ("also vanishes" if annihilates["unsigned"] else "does not vanish")
    )

    dims = quotient_graded_dims(k, n, signed=True)
    total = sum(dims)
    report.add("total dimension is C(n,k)", params, total == comb(n, k), {"dim": total})
    counts = box_counts(k, n)
    padded = counts + [0] * (len(dims) - len(counts))
    report.add("graded dims match box partitions", params, dims == padded, {"dims": dims})
    report.add(
        "box partition counts match Gaussian binomial",
        params,
        counts == gaussian_binomial(n, k),
        {"counts": counts},
    )

    space = RowSpace()
    independent = True
    for d in range(n - k + 1):
        for e in weighted_compositions(k, d):
            img = reduce_w_poly(WPoly(k, {e: 1}), k, n)
            if not space.add({tuple(lam): c for lam, c in img.coeffs.items()}):
                independent = False
                report.add("low-degree monomials independent", params, False, list(e))
    if independent:
        report.add("low-degree monomials independent", params, True)

    span = RowSpace()
    for d in range(k * (n - k) + 1):
        for e in weighted_compositions(k, d):
            img = reduce_w_poly(WPoly(k, {e: 1}), k, n)
            span.add({tuple(lam): c for lam, c in img.coeffs.items()})
    report.add("generator images span the ring", params, len(span) == comb(n, k), len(span))
    return report


def complement(lam, k, n):
    lam = Partition(lam)
    m = n - k
    return Partition(m - lam.part(k - 1 - i) for i in range(k))
