"""Lie algebras by rational structure constants, and low-dimensional ideal search."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import (AntisymmetryViolation, DimTooLarge, DimensionMismatch,
                     IncompleteOverRationals, JacobiViolation, NotSemisimple)
from .linalg import (RationalMatrix, RationalSubspace, apply_bilinear, bilinear_closure,
                     has_real_root, left_operator, rational_roots, tensor_shape_ok, to_rational,
                     zero_tensor)


def _freeze(t):
    return tuple(tuple(tuple(to_rational(x) for x in c) for c in r) for r in t)


class LieAlgebraSC:
    """[e_i, e_j] = sum_k c[i][j][k] e_k, with 0-based indices internally."""

    __slots__ = ("dim", "c", "_ad")

    def __init__(self, c, validate: bool = True):
        n = len(c)
        if not tensor_shape_ok(c, n):
            raise DimensionMismatch(f"structure constants are not {n}x{n}x{n}")
        self.dim = n
        self.c = _freeze(c)
        self._ad = None
        if validate:
            check_antisymmetry(self)
            check_jacobi(self)

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, validate: bool = True) -> LieAlgebraSC:
        """``brackets[(i, j)] = vector`` for i < j (0-based); the rest follows by antisymmetry."""
        t = zero_tensor(dim)
        for (i, j), v in brackets.items():
            for k, x in enumerate(v):
                x = to_rational(x)
                t[i][j][k] = x
                t[j][i][k] = -x
        return cls(t, validate)

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebraSC:
        return cls(zero_tensor(dim))

    def __eq__(self, other):
        return isinstance(other, LieAlgebraSC) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"<LieAlgebraSC dim {self.dim}: {format_brackets(self.c)}>"

    def bracket(self, x, y) -> tuple[Fraction, ...]:
        return apply_bilinear(self.c, x, y)

    def ad(self, i: int) -> RationalMatrix:
        if self._ad is None:
            self._ad = [left_operator(self.c, k) for k in range(self.dim)]
        return self._ad[i]

    def ad_vector(self, x) -> RationalMatrix:
        m = RationalMatrix.zeros(self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi:
                m = m + self.ad(i).scale(xi)
        return m

    def negated(self) -> LieAlgebraSC:
        return LieAlgebraSC([[[-x for x in c] for c in r] for r in self.c], validate=False)

    def is_abelian(self) -> bool:
        return all(x == 0 for r in self.c for c in r for x in c)

    def basis(self):
        return RationalMatrix.identity(self.dim).entries


def format_brackets(c, symbol="") -> str:
    from .linalg import fstr
    n = len(c)
    parts = []
    for i in range(n):
        for j in range(i + 1, n):
            terms = []
            for k in range(n):
                x = c[i][j][k]
                if x:
                    coef = "" if x == 1 else "-" if x == -1 else fstr(x) + "*"
                    terms.append(f"{coef}e{k + 1}")
            if terms:
                parts.append(f"[e{i + 1},e{j + 1}]{symbol}=" + "+".join(terms).replace("+-", "-"))
    return ", ".join(parts) if parts else "abelian"


def check_antisymmetry(L: LieAlgebraSC) -> None:
    n = L.dim
    for i, j, k in product(range(n), repeat=3):
        if L.c[i][j][k] != -L.c[j][i][k]:
            raise AntisymmetryViolation(i, j, k)


def jacobi_violations(L: LieAlgebraSC) -> list[tuple[int, int, int]]:
    n = L.dim
    e = L.basis()
    out = []
    for i, j, k in product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        a = L.bracket(x, L.bracket(y, z))
        b = L.bracket(y, L.bracket(z, x))
        c = L.bracket(z, L.bracket(x, y))
        if any(p + q + r != 0 for p, q, r in zip(a, b, c)):
            out.append((i, j, k))
    return out


def check_jacobi(L: LieAlgebraSC) -> None:
    bad = jacobi_violations(L)
    if bad:
        raise JacobiViolation(*bad[0])


# --- standard invariants ------------------------------------------------------------

def bracket_span(L: LieAlgebraSC, a: RationalSubspace, b: RationalSubspace) -> RationalSubspace:
    return RationalSubspace(L.dim, [L.bracket(x, y) for x in a.vectors for y in b.vectors])


def ideal_generated(L: LieAlgebraSC, seed: RationalSubspace) -> RationalSubspace:
    if seed.ambient_dim != L.dim:
        raise DimensionMismatch(f"seed lives in dimension {seed.ambient_dim}, algebra has {L.dim}")
    return bilinear_closure(seed, [L.c])


def derived_series(L: LieAlgebraSC) -> list[RationalSubspace]:
    series = [RationalSubspace.full(L.dim)]
    while True:
        nxt = ideal_generated(L, bracket_span(L, series[-1], series[-1]))
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(L: LieAlgebraSC) -> list[RationalSubspace]:
    full = RationalSubspace.full(L.dim)
    series = [full]
    while True:
        nxt = bracket_span(L, full, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(L: LieAlgebraSC) -> bool:
    return derived_series(L)[-1].is_zero()


def center(L: LieAlgebraSC) -> RationalSubspace:
    n = L.dim
    # z with [e_i, z] = 0 for every i: stack the ad matrices
    rows = [r for i in range(n) for r in L.ad(i).entries]
    return RationalSubspace(n, RationalMatrix(rows, n).nullspace()) if rows else RationalSubspace.full(n)


def killing_form(L: LieAlgebraSC) -> RationalMatrix:
    n = L.dim
    return RationalMatrix([[(L.ad(i) @ L.ad(j)).trace() for j in range(n)] for i in range(n)], n)


def is_semisimple(L: LieAlgebraSC) -> bool:
    return L.dim > 0 and killing_form(L).det() != 0


def algebra_tools(L: LieAlgebraSC) -> dict:
    return {
        "derived_series": derived_series(L),
        "lower_central_series": lower_central_series(L),
        "center": center(L),
        "is_solvable": is_solvable(L),
        "killing_form": killing_form(L),
        "is_semisimple": is_semisimple(L),
    }


# --- invariant subspaces in dimension <= 3 ----------------------------------------------

@dataclass
class InvariantSubspaces:
    """Finite part plus continuous families.

    ``line_families``: subspaces W (dim >= 2) all of whose lines qualify.
    ``hyperplane_families``: subspaces F of functionals (dim >= 2) whose every
    kernel qualifies.
    """
    ambient_dim: int
    subspaces: list = field(default_factory=list)
    line_families: list = field(default_factory=list)
    hyperplane_families: list = field(default_factory=list)

    @property
    def continuous(self) -> bool:
        return bool(self.line_families or self.hyperplane_families)

    def proper_nonzero(self) -> list:
        return [s for s in self.subspaces if 0 < s.dim < self.ambient_dim]

    def only_trivial(self) -> bool:
        return not self.continuous and not self.proper_nonzero()


def _poly_at(coeffs, op: RationalMatrix, n: int) -> RationalMatrix:
    """coeffs (lowest degree first) evaluated at op, by Horner."""
    out = RationalMatrix.zeros(n, n)
    eye = RationalMatrix.identity(n)
    for c in reversed(coeffs):
        out = out @ op + eye.scale(c)
    return out


def _irrational_lines_invariant(op, rest, ops, n) -> bool:
    """Whether the real eigenlines of op for roots of ``rest`` are invariant under every operator.

    Those lines are Galois conjugates spanning K = ker rest(op), so one is invariant
    under all rational operators exactly when each preserves K and commutes with op there.
    """
    basis = _poly_at(rest, op, n).nullspace()
    k = RationalSubspace(n, basis)
    for b in ops:
        for v in basis:
            if not k.contains_vector(b @ v):
                return False
            if tuple(b @ (op @ v)) != tuple(op @ (b @ v)):
                return False
    return True


def _common_eigenspaces(ops: Sequence[RationalMatrix], n: int) -> list[RationalSubspace]:
    """Maximal rational subspaces on which every operator acts as a rational scalar.

    A rational eigenvector has a rational eigenvalue, so splitting by rational roots is
    complete over Q. Real lines not defined over Q are reported when they are invariant.
    """
    ops = [op for op in ops if not op.is_zero()]
    eye = RationalMatrix.identity(n)
    spaces = [RationalSubspace.full(n)]
    for op in ops:
        roots, rest = rational_roots(op.charpoly())
        if len(rest) > 1 and has_real_root(rest) and _irrational_lines_invariant(op, rest, ops, n):
            raise IncompleteOverRationals(
                "common invariant lines exist over the reals for irrational eigenvalues; "
                "they are not defined over the rationals")
        nxt = []
        for w in spaces:
            for mu in sorted(set(roots)):
                e = w & RationalSubspace(n, (op - eye.scale(mu)).nullspace())
                if e.dim:
                    nxt.append(e)
        spaces = nxt
    return spaces


def invariant_subspaces(ops: Sequence[RationalMatrix], n: int) -> InvariantSubspaces:
    """All subspaces of Q^n (n <= 3) mapped into themselves by every operator."""
    if n > 3:
        raise DimTooLarge(f"complete invariant-subspace search needs dimension <= 3, got {n}")
    res = InvariantSubspaces(n)
    found = {RationalSubspace.zero(n), RationalSubspace.full(n)}
    for w in _common_eigenspaces(ops, n):
        if w.dim == 1:
            found.add(w)
        else:
            res.line_families.append(w)
    if n == 3:
        for f in _common_eigenspaces([op.T for op in ops], n):
            if f.dim == 1:
                found.add(RationalSubspace(n, RationalMatrix([f.vectors[0]], n).nullspace()))
            else:
                res.hyperplane_families.append(f)
    res.subspaces = sorted(found, key=lambda s: s.sort_key())
    return res


def all_ideals_lowdim(L: LieAlgebraSC) -> InvariantSubspaces:
    if L.dim > 3:
        raise DimTooLarge(f"complete ideal enumeration needs dimension <= 3, got {L.dim}")
    return invariant_subspaces([L.ad(i) for i in range(L.dim)], L.dim)


# --- simple summands ------------------------------------------------------------

@dataclass(frozen=True)
class SummandCount:
    count: int
    non_split: bool = False  # count is then only a lower bound


def centroid_basis(L: LieAlgebraSC) -> list[RationalMatrix]:
    """Linear maps T with T ad_x = ad_x T for every basis x."""
    n = L.dim
    rows = []
    for i in range(n):
        a = L.ad(i).entries
        # unknown T[p][q] at position p*n + q
        for r, s in product(range(n), repeat=2):
            row = [Fraction(0)] * (n * n)
            for q in range(n):
                row[r * n + q] += a[q][s]      # (T A)[r][s]
                row[q * n + s] -= a[r][q]      # (A T)[r][s]
            rows.append(row)
    sols = RationalMatrix(rows, n * n).nullspace()
    return [RationalMatrix([v[p * n:(p + 1) * n] for p in range(n)], n) for v in sols]


def simple_summand_count(L: LieAlgebraSC) -> SummandCount:
    """Number of simple ideals of a semisimple algebra, read off its centroid.

    A generic centroid element is a different scalar on each simple summand,
    so its distinct rational eigenvalues count the summands; an irreducible
    non-linear factor in its characteristic polynomial marks non-split summands.
    """
    if not is_semisimple(L):
        raise NotSemisimple("Killing form is degenerate")
    basis = centroid_basis(L)
    best = SummandCount(0, True)
    for weights in ([k + 1 for k in range(len(basis))], [3 ** k for k in range(len(basis))],
                    [(-2) ** k + 7 * k for k in range(len(basis))]):
        t = RationalMatrix.zeros(L.dim, L.dim)
        for w, b in zip(weights, basis):
            t = t + b.scale(w)
        roots, rest = rational_roots(t.charpoly())
        distinct = len(set(roots))
        non_split = len(rest) > 1
        cand = SummandCount(distinct + (1 if non_split else 0), non_split)
        if (cand.count, not cand.non_split) > (best.count, not best.non_split):
            best = cand
    return best


def is_simple(L: LieAlgebraSC) -> bool:
    if not is_semisimple(L):
        return False
    if L.dim <= 3:
        return all_ideals_lowdim(L).only_trivial()
    s = simple_summand_count(L)
    return s.count == 1 and not s.non_split


def direct_sum(a: LieAlgebraSC, b: LieAlgebraSC) -> LieAlgebraSC:
    n, m = a.dim, b.dim
    t = zero_tensor(n + m)
    for i, j, k in product(range(n), repeat=3):
        t[i][j][k] = a.c[i][j][k]
    for i, j, k in product(range(m), repeat=3):
        t[n + i][n + j][n + k] = b.c[i][j][k]
    return LieAlgebraSC(t)


def sl2() -> LieAlgebraSC:
    """Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return LieAlgebraSC.from_brackets(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)})


def so3() -> LieAlgebraSC:
    return LieAlgebraSC.from_brackets(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, -1, 0)})


def a1_1_circ() -> LieAlgebraSC:
    """[e1,e2] = e2, [e1,e3] = -e3, [e2,e3] = 0."""
    return LieAlgebraSC.from_brackets(3, {(0, 1): (0, 1, 0), (0, 2): (0, 0, -1)})


def affine_line() -> LieAlgebraSC:
    """[e2,e1] = e1: the Lie algebra of x -> e^s x + b in (x, s) coordinates."""
    return LieAlgebraSC.from_brackets(2, {(0, 1): (-1, 0)})
