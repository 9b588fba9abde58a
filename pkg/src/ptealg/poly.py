"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def _exp_key(e):
    # graded lexicographic, highest first
    return (-sum(e), tuple(-x for x in e))


class SparsePoly:
    """Polynomial in ``nvars`` variables ``x1..xn``.

    Terms are stored as ``{exponent tuple: Fraction}``; zero coefficients
    are never stored. Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not match nvars={nvars}")
                if c:
                    clean[tuple(e)] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def var(cls, nvars, i):
        """The variable ``x_{i+1}`` (0-based index ``i``)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return SparsePoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c = Fraction(other)
            if not c:
                return SparsePoly.zero(self.nvars)
            return SparsePoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        other = self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return SparsePoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d):
        return SparsePoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def monomials(self):
        return sorted(self.terms, key=_exp_key)

    def coeff(self, e):
        return self.terms.get(tuple(e), Fraction(0))

    def permute(self, perm):
        """Rename variables: ``x_i`` becomes ``x_{perm[i]}``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, a in enumerate(e):
                ne[perm[i]] = a
            out[tuple(ne)] = c
        return SparsePoly._raw(self.nvars, out)

    def substitute(self, targets, nvars):
        """Send ``x_i`` to ``x_{targets[i]}`` in a ring of ``nvars`` variables.

        ``targets[i] is None`` substitutes zero for ``x_i``.
        """
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            dead = False
            for i, a in enumerate(e):
                if not a:
                    continue
                t = targets[i]
                if t is None:
                    dead = True
                    break
                ne[t] += a
            if dead:
                continue
            ne = tuple(ne)
            v = out.get(ne, 0) + c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return SparsePoly._raw(nvars, out)

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, a in zip(point, e):
                if a:
                    t *= Fraction(x) ** a
            total += t
        return total

    def is_symmetric(self):
        n = self.nvars
        for i in range(n - 1):
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def divmod_exact(self, divisor):
        """Exact quotient ``self / divisor``; raises ArithmeticError otherwise.

        Multivariate division using graded-lex leading terms; the remainder
        must vanish.
        """
        divisor = self._check(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("division by zero polynomial")
        lead = min(divisor.terms, key=_exp_key)
        lc = divisor.terms[lead]
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = min(rem, key=_exp_key)
            if any(a < b for a, b in zip(e, lead)):
                raise ArithmeticError("polynomial division is not exact")
            qe = tuple(a - b for a, b in zip(e, lead))
            qc = rem[e] / lc
            quot[qe] = qc
            for de, dc in divisor.terms.items():
                te = tuple(a + b for a, b in zip(qe, de))
                v = rem.get(te, 0) - qc * dc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return SparsePoly._raw(self.nvars, quot)

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in self.monomials():
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree ``d``, graded-lex descending."""
    if d < 0:
        return []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for a in range(left, -1, -1):
            rec(prefix + [a], left - a, slots - 1)

    if nvars == 0:
        return [()] if d == 0 else []
    rec([], d, nvars)
    return out


def all_exponents(nvars, maxdeg):
    return [e for e in product(range(maxdeg + 1), repeat=nvars) if sum(e) <= maxdeg]
