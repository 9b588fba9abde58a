"""Type-A weight arithmetic: Young patterns and power-sum central functionals.

A Young pattern ``f = (f_1, ..., f_n)`` stands for an ``sl_n`` weight up to
adding a constant vector; every invariant computed here is translation
invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


@dataclass(frozen=True)
class YoungPattern:
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        if not self.f:
            raise ValueError("empty pattern")

    @property
    def n(self):
        return len(self.f)

    def is_dominant(self):
        return all(self.f[i] >= self.f[i + 1] for i in range(self.n - 1))

    def shifted(self, c):
        return YoungPattern(tuple(x + c for x in self.f))

    def normalized(self):
        """Translate so the last entry is zero."""
        return self.shifted(-self.f[-1])

    @property
    def a0(self):
        """Mean entry."""
        return Fraction(sum(self.f), self.n)

    def c(self, t):
        return self.a0 - self.n + t

    def to_weight(self):
        if not self.is_dominant():
            raise ValueError(f"{self} is not dominant")
        return FundWeight(tuple(self.f[i] - self.f[i + 1] for i in range(self.n - 1)))

    def __str__(self):
        return "f=[" + ",".join(str(x) for x in self.f) + "]"


@dataclass(frozen=True)
class FundWeight:
    """Coefficients on the fundamental weights ``omega_1..omega_{n-1}``."""

    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def n(self):
        return len(self.a) + 1

    def is_dominant(self):
        return all(x >= 0 for x in self.a)

    def is_strictly_dominant(self):
        return all(x >= 1 for x in self.a)

    def __str__(self):
        return "a=[" + ",".join(str(x) for x in self.a) + "]"


def rho(n):
    return FundWeight((1,) * (n - 1))


def fundamental(n, k):
    """``omega_k`` of ``sl_n`` (``k = 0`` or ``n`` gives the zero weight)."""
    a = [0] * (n - 1)
    if 1 <= k <= n - 1:
        a[k - 1] = 1
    return FundWeight(tuple(a))


@dataclass(frozen=True, order=True)
class IndexSet:
    """Strictly increasing subset of ``{1..n}``."""

    n: int
    elems: tuple

    def __post_init__(self):
        elems = tuple(int(x) for x in self.elems)
        object.__setattr__(self, "elems", elems)
        if any(elems[i] >= elems[i + 1] for i in range(len(elems) - 1)):
            raise ValueError(f"index set {elems} is not strictly increasing")
        if elems and (elems[0] < 1 or elems[-1] > self.n):
            raise ValueError(f"index set {elems} not inside 1..{self.n}")

    @property
    def k(self):
        return len(self.elems)

    def __contains__(self, i):
        return i in self.elems

    def __iter__(self):
        return iter(self.elems)

    def __str__(self):
        return "{" + ",".join(str(i) for i in self.elems) + "}"


def k_subsets(n, k):
    """All k-subsets of ``1..n`` in lexicographic order."""
    return [IndexSet(n, c) for c in combinations(range(1, n + 1), k)]


def parse_weight(text):
    text = text.strip()
    if text.startswith("a="):
        text = text[2:]
    text = text.strip("[]")
    return FundWeight(tuple(int(t) for t in text.split(",")) if text else ())


def parse_pattern(text):
    text = text.strip()
    if text.startswith("f="):
        text = text[2:]
    text = text.strip("[]")
    return YoungPattern(tuple(int(t) for t in text.split(",")))


def weight_to_pattern(w):
    """``f_i = a_i + ... + a_{n-1}``, ``f_n = 0``."""
    a = w.a
    f = [0] * w.n
    for i in range(w.n - 2, -1, -1):
        f[i] = f[i + 1] + a[i]
    return YoungPattern(tuple(f))


def centered_m(p):
    mean = Fraction(sum(p.f), p.n)
    return tuple(x - mean for x in p.f)


def shifted_coordinates(p):
    """``m_i + n - i`` for ``i = 1..n``."""
    n = p.n
    return tuple(m + (n - i) for i, m in enumerate(centered_m(p), start=1))


def s_functional(p, k):
    """``S_k = sum_i [(m_i + n - i)^k - (n - i)^k]`` with centered ``m``."""
    n = p.n
    total = Fraction(0)
    for i, m in enumerate(centered_m(p), start=1):
        total += (m + n - i) ** k - (n - i) ** k
    return total


def char_equal(p, q):
    """Whether two weights share an infinitesimal central character.

    The Weyl group of ``sl_n`` permutes shifted coordinates, so equality of
    characters is equality of the shifted multisets.
    """
    if p.n != q.n:
        raise ValueError(f"rank mismatch: {p.n} vs {q.n}")
    return sorted(shifted_coordinates(p)) == sorted(shifted_coordinates(q))


def add_lambda_I(p, I):
    """Add the weight of ``e_{i1} ^ ... ^ e_{ik}``.

    The indicator of ``I`` is added without renormalizing the last entry.
    Returns ``(pattern, is_dominant)``.
    """
    if I.n != p.n:
        raise ValueError("index set and pattern disagree on n")
    g = YoungPattern(tuple(x + (1 if t in I else 0) for t, x in enumerate(p.f, start=1)))
    return g, g.is_dominant()


def lists_to_pattern(xs):
    """Subtract the staircase ``(n-1, ..., 1, 0)`` from a sorted integer list."""
    xs = tuple(int(x) for x in xs)
    if any(xs[i] < xs[i + 1] for i in range(len(xs) - 1)):
        raise ValueError("list must be sorted in weakly decreasing order")
    n = len(xs)
    return YoungPattern(tuple(x - (n - 1 - i) for i, x in enumerate(xs)))


def weyl_dim(p):
    if not p.is_dominant():
        raise ValueError(f"{p} is not dominant")
    f, n = p.f, p.n
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= f[i] - f[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q
