"""Shared test utilities."""
from fractions import Fraction

from skewbrace.lie import LieAlgebraSC
from skewbrace.linalg import RationalMatrix, rref
from skewbrace.postlie import PostLieAlgebra


def inverse(p: RationalMatrix) -> RationalMatrix:
    n = p.rows
    aug = RationalMatrix([list(p.entries[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)])
    r = rref(aug)
    if r.rows < n or any(r.entries[i][i] != 1 for i in range(n)):
        raise ValueError("singular")
    return RationalMatrix([row[n:] for row in r.entries])


def transport(t, p: RationalMatrix):
    """Structure tensor of the same bilinear map in the basis f_i = sum_a p[a][i] e_a."""
    n = p.rows
    q = inverse(p)
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = [Fraction(0)] * n
            for a in range(n):
                for b in range(n):
                    w = p.entries[a][i] * p.entries[b][j]
                    if w:
                        for m in range(n):
                            v[m] += w * t[a][b][m]
            out[i][j] = list(q @ tuple(v))
    return out


def transport_lie(L: LieAlgebraSC, p) -> LieAlgebraSC:
    return LieAlgebraSC(transport(L.c, p))


def transport_postlie(P: PostLieAlgebra, p) -> PostLieAlgebra:
    return PostLieAlgebra(transport_lie(P.dot, p), transport(P.triangle, p))
