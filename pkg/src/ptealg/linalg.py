"""Exact rational matrices and elimination.

Dense matrices go through fraction-free (Bareiss) elimination after clearing
row denominators; sparse row spaces use an incremental reduced basis.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class ExactMatrix:
    """Dense matrix of ``Fraction`` entries. Treated as immutable."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def _wrap(cls, rows):
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else 0
        return m

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls._wrap([[Fraction(0)] * m for _ in range(n)])

    @classmethod
    def identity(cls, n):
        z = cls.zeros(n)
        for i in range(n):
            z.rows[i][i] = Fraction(1)
        return z

    @classmethod
    def diagonal(cls, values):
        z = cls.zeros(len(values))
        for i, v in enumerate(values):
            z.rows[i][i] = Fraction(v)
        return z

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __add__(self, other):
        return ExactMatrix._wrap(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return ExactMatrix._wrap(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return ExactMatrix._wrap([[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = Fraction(c)
        return ExactMatrix._wrap([[a * c for a in r] for r in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.ncols
        out = []
        orows = other.rows
        for r in self.rows:
            acc = [Fraction(0)] * cols
            for k, a in enumerate(r):
                if not a:
                    continue
                ok = orows[k]
                for j in range(cols):
                    b = ok[j]
                    if b:
                        acc[j] += a * b
            out.append(acc)
        return ExactMatrix._wrap(out)

    def kron(self, other):
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append([a * b for a in r for b in s])
        return ExactMatrix._wrap(out)

    def transpose(self):
        return ExactMatrix._wrap([list(c) for c in zip(*self.rows)])

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def commutes_with(self, other):
        return self @ other == other @ self

    def scalar_value(self):
        """The scalar ``c`` if the matrix equals ``c * I``, else ``None``."""
        if self.nrows != self.ncols or self.nrows == 0:
            return None
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a != (c if i == j else 0):
                    return None
        return c

    def flatten(self):
        return [a for r in self.rows for a in r]

    def rank(self):
        return rank(self.rows)

    def nullity(self):
        return self.ncols - self.rank()

    def __str__(self):
        cells = [[str(a) for a in r] for r in self.rows]
        if not cells:
            return "[]"
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def _integer_rows(rows):
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        d = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * d) for x in fr])
    return out


def rank(rows):
    """Rank of a rational matrix via Bareiss fraction-free elimination."""
    a = _integer_rows(rows)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            ar = a[r]
            for j in range(c + 1, n):
                ai[j] = (p * ai[j] - f * ar[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def determinant(rows):
    """Exact determinant (Bareiss)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    den = 1
    for r in rows:
        den *= lcm(*(Fraction(x).denominator for x in r))
    a = _integer_rows(rows)
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (p * a[i][j] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = p
    return Fraction(sign * a[n - 1][n - 1], den)


class RowSpace:
    """Incrementally maintained reduced basis of sparse rational row vectors.

    Vectors are dicts ``{column key: value}``. Each basis vector has a pivot
    key with coefficient 1 that no other basis vector touches.
    """

    def __init__(self):
        self._basis = {}  # pivot key -> row dict

    def __len__(self):
        return len(self._basis)

    @property
    def pivots(self):
        return set(self._basis)

    def reduce(self, vec):
        """Return ``vec`` reduced against the basis (a new dict)."""
        v = {k: Fraction(x) for k, x in vec.items() if x}
        for key in [k for k in v if k in self._basis]:
            c = v.get(key)
            if not c:
                continue
            for k2, b in self._basis[key].items():
                x = v.get(k2, 0) - c * b
                if x:
                    v[k2] = x
                else:
                    v.pop(k2, None)
        return v

    def add(self, vec):
        """Insert ``vec``; returns True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        key = min(v)
        c = v[key]
        v = {k: x / c for k, x in v.items()}
        for row in self._basis.values():
            f = row.get(key)
            if f:
                for k2, b in v.items():
                    x = row.get(k2, 0) - f * b
                    if x:
                        row[k2] = x
                    else:
                        row.pop(k2, None)
        self._basis[key] = v
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def coordinates(self, vec):
        """Coefficients on pivot rows if ``vec`` is in the span, else ``None``."""
        v = {k: Fraction(x) for k, x in vec.items() if x}
        coords = {k: v[k] for k in v if k in self._basis}
        if not self.reduce(v):
            return coords
        return None


def solve(rows, rhs):
    """One solution ``x`` of ``A x = b`` over the rationals, or ``None``.

    Gauss-Jordan on the augmented matrix; free variables are set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivcols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivcols.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivcols):
        x[c] = aug[i][n]
    return x
