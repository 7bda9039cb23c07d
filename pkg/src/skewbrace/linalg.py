"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`. Matrices are dense and immutable;
subspaces are stored by their reduced row-echelon basis so that equal
subspaces compare (and hash) equal.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Rational = Fraction


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    return Fraction(x)


def fstr(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(to_rational(x) for x in row) for row in entries)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        for r in data:
            if len(r) != cols:
                raise DimensionMismatch(f"ragged matrix: row of length {len(r)}, expected {cols}")
        self.entries = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix) and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(fstr(x) for x in r) for r in self.entries)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"

    def tolist(self):
        return [list(r) for r in self.entries]

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix(zip(*self.entries), self.rows) if self.rows else RationalMatrix.zeros(self.cols, 0)

    def __add__(self, other):
        return RationalMatrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other):
        return RationalMatrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def __neg__(self):
        return RationalMatrix([[-x for x in r] for r in self.entries], self.cols)

    def scale(self, c) -> RationalMatrix:
        c = to_rational(c)
        return RationalMatrix([[c * x for x in r] for r in self.entries], self.cols)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            return RationalMatrix(
                [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.entries],
                other.cols)
        vec = tuple(other)
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.entries)

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def rank(self) -> int:
        return rref(self).rows

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                if f:
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return d

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right kernel, one vector per free column."""
        r = rref(self)
        pivots = [next(j for j, x in enumerate(row) if x != 0) for row in r.entries]
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for row, p in zip(r.entries, pivots):
                v[p] = -row[f]
            basis.append(tuple(v))
        return basis

    def charpoly(self) -> list[Fraction]:
        """Coefficients of det(xI - A), lowest degree first (monic)."""
        n = self.rows
        if n != self.cols:
            raise DimensionMismatch("characteristic polynomial of a non-square matrix")
        # Faddeev-LeVerrier; exact in characteristic 0
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        eye = RationalMatrix.identity(n)
        m = RationalMatrix.zeros(n, n)
        for k in range(1, n + 1):
            m = self @ m + eye.scale(coeffs[n - k + 1])
            coeffs[n - k] = -(self @ m).trace() / k
        return coeffs


def rref(m: RationalMatrix) -> RationalMatrix:
    """Reduced row-echelon form with zero rows dropped."""
    rows = [list(r) for r in m.entries]
    out = []
    lead = 0
    for c in range(m.cols):
        p = next((i for i in range(lead, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[lead], rows[p] = rows[p], rows[lead]
        piv = rows[lead][c]
        rows[lead] = [x / piv for x in rows[lead]]
        for i in range(len(rows)):
            if i != lead and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[lead])]
        lead += 1
        if lead == len(rows):
            break
    out = [r for r in rows[:lead]]
    return RationalMatrix(out, m.cols)


class RationalSubspace:
    """Subspace of Q^n held as an RREF basis (rows)."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vecs = [tuple(to_rational(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        self.ambient_dim = ambient_dim
        self.basis = rref(RationalMatrix(vecs, ambient_dim)) if vecs else RationalMatrix([], ambient_dim)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def full(cls, n):
        return cls(n, RationalMatrix.identity(n).entries)

    @classmethod
    def span_of_basis(cls, n, indices):
        """Span of standard basis vectors e_i for the given 0-based indices."""
        return cls(n, [[int(j == i) for j in range(n)] for i in indices])

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.basis.entries

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def __eq__(self, other):
        return (isinstance(other, RationalSubspace) and self.ambient_dim == other.ambient_dim
                and self.basis.entries == other.basis.entries)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis.entries))

    def __repr__(self):
        vs = ", ".join("(" + " ".join(fstr(x) for x in v) + ")" for v in self.vectors)
        return f"RationalSubspace(dim {self.dim} in Q^{self.ambient_dim}: {vs})"

    def __add__(self, other) -> RationalSubspace:
        self._check(other)
        return RationalSubspace(self.ambient_dim, self.vectors + other.vectors)

    def __and__(self, other) -> RationalSubspace:
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return RationalSubspace(self.ambient_dim)
        a, b = self.vectors, other.vectors
        # columns a_i and -b_j; a kernel vector (alpha, beta) gives sum alpha_i a_i in both
        cols = list(a) + [tuple(-x for x in v) for v in b]
        m = RationalMatrix(zip(*cols), len(cols))
        out = []
        for k in m.nullspace():
            out.append(tuple(sum((k[i] * a[i][c] for i in range(len(a))), Fraction(0))
                             for c in range(self.ambient_dim)))
        return RationalSubspace(self.ambient_dim, out)

    def __le__(self, other) -> bool:
        self._check(other)
        return (self + other) == other

    def __ge__(self, other) -> bool:
        return other <= self

    def contains_vector(self, v) -> bool:
        v = tuple(to_rational(x) for x in v)
        if all(x == 0 for x in v):
            return True
        return (self + RationalSubspace(self.ambient_dim, [v])).dim == self.dim

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient_dim

    def complement_functionals(self) -> list[tuple[Fraction, ...]]:
        """Basis of the annihilator (functionals vanishing on the subspace)."""
        if self.dim == 0:
            return list(RationalMatrix.identity(self.ambient_dim).entries)
        return self.basis.nullspace()

    def sort_key(self):
        return (self.dim, tuple(tuple((x.numerator, x.denominator) for x in v) for v in self.vectors))


def subspace_ops(a: RationalSubspace, b: RationalSubspace) -> dict:
    a._check(b)
    return {
        "sum": a + b,
        "intersection": a & b,
        "containment": a <= b,
        "equality": a == b,
    }


def kernel_subspace(functionals: Sequence[Sequence], n: int) -> RationalSubspace:
    """Common kernel of a list of functionals on Q^n."""
    if not functionals:
        return RationalSubspace.full(n)
    return RationalSubspace(n, RationalMatrix(functionals, n).nullspace())


# --- tensors -----------------------------------------------------------------

def zero_tensor(n):
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


def tensor_shape_ok(t, n) -> bool:
    return len(t) == n and all(len(r) == n and all(len(c) == n for c in r) for r in t)


def apply_bilinear(t, x, y) -> tuple[Fraction, ...]:
    """B(x, y)_k = sum_ij x_i y_j t[i][j][k]."""
    n = len(t)
    out = [Fraction(0)] * n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        ti = t[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            c = xi * yj
            for k, v in enumerate(ti[j]):
                if v:
                    out[k] += c * v
    return tuple(out)


def left_operator(t, i) -> RationalMatrix:
    """Matrix of v -> B(e_i, v); column j holds B(e_i, e_j)."""
    n = len(t)
    return RationalMatrix([[t[i][j][k] for j in range(n)] for k in range(n)], n)


def right_operator(t, i) -> RationalMatrix:
    """Matrix of v -> B(v, e_i)."""
    n = len(t)
    return RationalMatrix([[t[j][i][k] for j in range(n)] for k in range(n)], n)


def bilinear_closure(seed: RationalSubspace, maps, ambient: int | None = None) -> RationalSubspace:
    """Smallest subspace containing ``seed`` closed under B(x, s), B(s, x) for every map B."""
    n = seed.ambient_dim if ambient is None else ambient
    if seed.ambient_dim != n:
        raise DimensionMismatch("seed does not live in the ambient space")
    for t in maps:
        if not tensor_shape_ok(t, n):
            raise DimensionMismatch(f"bilinear map tensor is not {n}x{n}x{n}")
    ops = []
    for t in maps:
        for i in range(n):
            ops.append(left_operator(t, i))
            ops.append(right_operator(t, i))
    ops = [op for op in ops if not op.is_zero()]
    current = seed
    while True:
        images = [op @ v for op, v in product(ops, current.vectors)]
        nxt = current + RationalSubspace(n, images) if images else current
        if nxt.dim == current.dim:
            return current
        current = nxt


# --- polynomials ----------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_divide_root(coeffs, r):
    """Synthetic division by (x - r); coefficients lowest degree first."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    acc = Fraction(0)
    for k in range(n, 0, -1):
        acc = acc * r + coeffs[k]
        out[k - 1] = acc
    return out


def rational_roots(coeffs) -> tuple[list[Fraction], list[Fraction]]:
    """Split a polynomial into rational roots (with multiplicity) and a leftover factor.

    Coefficients are lowest degree first. Returns ``(roots, leftover)``
    where leftover has no rational roots.
    """
    poly = [to_rational(c) for c in coeffs]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    roots = []
    while len(poly) > 1 and poly[0] == 0:
        roots.append(Fraction(0))
        poly = poly[1:]
    found = True
    while found and len(poly) > 1:
        found = False
        den = 1
        for c in poly:
            den = den * c.denominator // _gcd(den, c.denominator)
        ints = [int(c * den) for c in poly]
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if poly_eval(poly, cand) == 0:
                        roots.append(cand)
                        poly = poly_divide_root(poly, cand)
                        found = True
                        break
                if found:
                    break
            if found:
                break
    return sorted(roots), poly


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def has_real_root(coeffs) -> bool:
    """Whether a rational polynomial of degree <= 3 has a real root."""
    poly = [to_rational(c) for c in coeffs]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg % 2 == 1:
        return True
    if deg == 2:
        c, b, a = poly
        return b * b - 4 * a * c >= 0
    # quartic and above are never produced here (dimension <= 3)
    raise ValueError("real-root test only implemented for degree <= 3")
