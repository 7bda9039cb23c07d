"""Post-Lie algebras: axioms, brace ideals, derived series and the rigidity classifier."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import AxiomViolation, CircNotSimple, DimensionMismatch, DimTooLarge
from .lie import (LieAlgebraSC, _freeze, all_ideals_lowdim, check_jacobi, invariant_subspaces,
                  is_semisimple, simple_summand_count)
from .linalg import (RationalSubspace, apply_bilinear, bilinear_closure, left_operator,
                     tensor_shape_ok, zero_tensor)


def sub_adjacent(dot: LieAlgebraSC, triangle) -> LieAlgebraSC:
    """[x,y]_circ = [x,y]_dot + x|>y - y|>x. Not Jacobi-checked here."""
    n = dot.dim
    if not tensor_shape_ok(triangle, n):
        raise DimensionMismatch(f"triangle tensor is not {n}x{n}x{n}")
    c = [[[dot.c[i][j][k] + triangle[i][j][k] - triangle[j][i][k] for k in range(n)]
          for j in range(n)] for i in range(n)]
    return LieAlgebraSC(c, validate=False)


class PostLieAlgebra:
    """Base bracket plus the |> tensor: e_i |> e_j = sum_k t[i][j][k] e_k."""

    __slots__ = ("dot", "triangle", "circ")

    def __init__(self, dot: LieAlgebraSC, triangle):
        self.dot = dot
        self.triangle = _freeze(triangle)
        self.circ = sub_adjacent(dot, self.triangle)

    @property
    def dim(self):
        return self.dot.dim

    def __repr__(self):
        return f"<PostLieAlgebra dim {self.dim}>"

    def act(self, x, y):
        return apply_bilinear(self.triangle, x, y)

    def triangle_operator(self, i):
        """Matrix of v -> e_i |> v."""
        return left_operator(self.triangle, i)


def trivial_postlie(dot: LieAlgebraSC) -> PostLieAlgebra:
    return PostLieAlgebra(dot, zero_tensor(dot.dim))


def opposite_postlie(dot: LieAlgebraSC) -> PostLieAlgebra:
    """x |> y = -[x, y]_dot."""
    return PostLieAlgebra(dot, [[[-x for x in c] for c in r] for r in dot.c])


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def postlie_violations(P: PostLieAlgebra, first_only: bool = False) -> list[tuple[str, int, int, int]]:
    """Failing (axiom, i, j, k) entries, axioms in order (i), (ii), (iii), triples lexicographic."""
    n = P.dim
    e = P.dot.basis()
    dot, circ, act = P.dot.bracket, P.circ.bracket, P.act
    out = []
    for i, j in product(range(n), repeat=2):
        x, y = e[i], e[j]
        if _vsub(circ(x, y), dot(x, y)) != _vsub(act(x, y), act(y, x)):
            out.append(("i", i, j, 0))
            if first_only:
                return out
    for i, j, k in product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        lhs = act(x, dot(y, z))
        rhs = _vadd(dot(act(x, y), z), dot(y, act(x, z)))
        if lhs != rhs:
            out.append(("ii", i, j, k))
            if first_only:
                return out
    for i, j, k in product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        lhs = act(circ(x, y), z)
        rhs = _vsub(act(x, act(y, z)), act(y, act(x, z)))
        if lhs != rhs:
            out.append(("iii", i, j, k))
            if first_only:
                return out
    return out


def check_postlie(P: PostLieAlgebra) -> None:
    """Raise ``AxiomViolation`` on the first failing axiom/triple; checks the sub-adjacent Jacobi too."""
    check_jacobi(P.dot)
    bad = postlie_violations(P, first_only=True)
    if bad:
        raise AxiomViolation(*bad[0])
    # a consequence of the axioms; failure here means an engine bug
    check_jacobi(P.circ)


def is_postlie(P: PostLieAlgebra) -> bool:
    return not postlie_violations(P, first_only=True)


# --- brace ideals -------------------------------------------------------------------

@dataclass(frozen=True)
class IdealReport:
    subspace: RationalSubspace
    dot_ideal: bool
    circ_ideal: bool
    triangle_stable: bool

    @property
    def is_brace_ideal(self):
        return self.dot_ideal and self.circ_ideal and self.triangle_stable


def _closed(s: RationalSubspace, f) -> bool:
    n = s.ambient_dim
    e = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return all(s.contains_vector(f(x, v)) for x in e for v in s.vectors)


def brace_ideal_test(P: PostLieAlgebra, s: RationalSubspace) -> IdealReport:
    if s.ambient_dim != P.dim:
        raise DimensionMismatch(f"subspace of dimension {s.ambient_dim} in a {P.dim}-dimensional algebra")
    return IdealReport(s, _closed(s, P.dot.bracket), _closed(s, P.circ.bracket), _closed(s, P.act))


def brace_operators(P: PostLieAlgebra):
    """ad_dot(e_i), ad_circ(e_i), e_i |> . : brace ideals are their common invariant subspaces."""
    n = P.dim
    return ([P.dot.ad(i) for i in range(n)] + [P.circ.ad(i) for i in range(n)]
            + [P.triangle_operator(i) for i in range(n)])


def brace_ideals_infinitesimal(P: PostLieAlgebra):
    if P.dim > 3:
        raise DimTooLarge(f"complete ideal search needs dimension <= 3, got {P.dim}")
    return invariant_subspaces(brace_operators(P), P.dim)


def is_simple_brace_infinitesimal(P: PostLieAlgebra) -> bool:
    return brace_ideals_infinitesimal(P).only_trivial()


def brace_derived_series_infinitesimal(P: PostLieAlgebra) -> tuple[list[RationalSubspace], bool]:
    """I_{n+1} = smallest brace ideal containing [I,I]_dot, [I,I]_circ and I |> I."""
    if P.dim > 3:
        raise DimTooLarge(f"infinitesimal derived series is pinned for dimension <= 3, got {P.dim}")
    n = P.dim
    maps = [P.dot.c, P.circ.c, P.triangle]
    series = [RationalSubspace.full(n)]
    while True:
        cur = series[-1]
        gens = []
        for u, v in product(cur.vectors, repeat=2):
            gens += [P.dot.bracket(u, v), P.circ.bracket(u, v), P.act(u, v)]
        nxt = bilinear_closure(RationalSubspace(n, gens), maps)
        if nxt == cur:
            break
        series.append(nxt)
    return series, series[-1].is_zero()


# --- rigidity -------------------------------------------------------------------------

@dataclass(frozen=True)
class RigidityResult:
    case: str          # "i", "ii" or "violation"
    detail: str

    def __str__(self):
        return self.detail


def circ_is_simple(P: PostLieAlgebra) -> bool:
    circ = P.circ
    if not is_semisimple(circ):
        return False
    if circ.dim <= 3:
        return all_ideals_lowdim(circ).only_trivial()
    s = simple_summand_count(circ)
    return s.count == 1 and not s.non_split


def rigidity_classify(P: PostLieAlgebra) -> RigidityResult:
    """Compare |> entrywise with 0 and with -[ , ]_dot for a post-Lie algebra with simple circ."""
    check_postlie(P)
    if not circ_is_simple(P):
        raise CircNotSimple("the sub-adjacent Lie algebra is not simple")
    t, c = P.triangle, P.dot.c
    n = P.dim
    idx = list(product(range(n), repeat=3))
    if all(t[i][j][k] == 0 for i, j, k in idx):
        return RigidityResult("i", "case (i): ▷ = 0, circ = dot")
    if all(t[i][j][k] == -c[i][j][k] for i, j, k in idx):
        return RigidityResult("ii", "case (ii): ▷ = −[·,·], circ = −dot")
    bad = next((i, j, k) for i, j, k in idx if t[i][j][k] != 0)
    return RigidityResult("violation",
                          f"violation: ▷ is neither 0 nor −[·,·] (first nonzero entry {bad})")


def a1_1_postlie() -> PostLieAlgebra:
    """Abelian dot with e1|>e2 = e2, e1|>e3 = -e3, e2|>e3 = e3|>e2 = e1."""
    t = zero_tensor(3)
    t[0][1][1] = Fraction(1)
    t[0][2][2] = Fraction(-1)
    t[1][2][0] = Fraction(1)
    t[2][1][0] = Fraction(1)
    return PostLieAlgebra(LieAlgebraSC.abelian(3), t)
