"""Numeric checks and tensor extraction for group laws on R^n.

Derivatives use central differences at steps 1e-2, 5e-3, 2.5e-3 with two
levels of Richardson extrapolation; inverses come from Newton's method
started at the origin.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import DimensionMismatch, NewtonDivergence, NoRationalWithinBound
from .parser import GroupLaw

STEPS = (1e-2, 5e-3, 2.5e-3)
NEWTON_MAX_STEPS = 50
NEWTON_TOL = 1e-12
JACOBIAN_STEP = 1e-6


def sample_box(rng: np.random.Generator, dim: int, count: int) -> np.ndarray:
    """Uniform points in [-1, 1]^dim, shape (dim, count)."""
    return rng.uniform(-1.0, 1.0, size=(count, dim)).T.copy()


def _jacobian_right(law: GroupLaw, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """d/dy law(x, y), shape (count, n, n)."""
    n = law.dim
    cols = []
    for j in range(n):
        e = np.zeros((n, 1))
        e[j] = JACOBIAN_STEP
        cols.append((law(x, y + e) - law(x, y - e)) / (2 * JACOBIAN_STEP))
    return np.stack(cols, axis=1).transpose(2, 0, 1)


def newton_inverse(law: GroupLaw, x) -> np.ndarray:
    """Solve law(x, y) = 0 for y at every column of x."""
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    if single:
        x = x[:, None]
    y = np.zeros_like(x)
    for _ in range(NEWTON_MAX_STEPS):
        f = law(x, y)
        if np.all(np.abs(f) < NEWTON_TOL):
            # one polishing step; quadratic convergence brings it to rounding level
            y = y - np.linalg.solve(_jacobian_right(law, x, y), f.T[..., None])[..., 0].T
            break
        step = np.linalg.solve(_jacobian_right(law, x, y), f.T[..., None])[..., 0].T
        y = y - step
        if not np.all(np.isfinite(y)):
            break
    f = law(x, y)
    bad = ~np.all(np.abs(f) < NEWTON_TOL, axis=0)
    if np.any(bad):
        raise NewtonDivergence(x[:, int(np.argmax(bad))])
    return y[:, 0] if single else y


# --- sampled identity checks ------------------------------------------------------------

@dataclass(frozen=True)
class GroupCheckReport:
    identity: float
    associativity: float
    inverse: float
    tol: float
    samples: int
    seed: int

    @property
    def passed(self) -> bool:
        return max(self.identity, self.associativity, self.inverse) < self.tol


def _maxabs(x) -> float:
    return float(np.max(np.abs(x))) if np.size(x) else 0.0


def check_group_numeric(law: GroupLaw, samples: int = 1000, tol: float = 1e-8, seed: int = 42) -> GroupCheckReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    rng = np.random.default_rng(seed)
    n = law.dim
    x, y, z = (sample_box(rng, n, samples) for _ in range(3))
    zero = np.zeros_like(x)
    ident = max(_maxabs(law(zero, x) - x), _maxabs(law(x, zero) - x))
    assoc = _maxabs(law(law(x, y), z) - law(x, law(y, z)))
    xinv = newton_inverse(law, x)
    inv = max(_maxabs(law(x, xinv)), _maxabs(law(xinv, x)))
    return GroupCheckReport(ident, assoc, inv, tol, samples, seed)


@dataclass(frozen=True)
class BraceCheckReport:
    residual: float
    tol: float
    samples: int
    seed: int

    @property
    def passed(self) -> bool:
        return self.residual < self.tol


def check_brace_numeric(dot: GroupLaw, circ: GroupLaw, samples: int = 1000, tol: float = 1e-8,
                        seed: int = 42) -> BraceCheckReport:
    """max |a o (b c) - (a o b) a^-1 (a o c)| over seeded triples."""
    if dot.dim != circ.dim:
        raise DimensionMismatch(f"dot has dimension {dot.dim}, circ has {circ.dim}")
    rng = np.random.default_rng(seed)
    a, b, c = (sample_box(rng, dot.dim, samples) for _ in range(3))
    ainv = newton_inverse(dot, a)
    lhs = circ(a, dot(b, c))
    rhs = dot(dot(circ(a, b), ainv), circ(a, c))
    return BraceCheckReport(_maxabs(lhs - rhs), tol, samples, seed)


# --- differentiation ------------------------------------------------------------------

def richardson(estimate) -> tuple[np.ndarray, float]:
    """Extrapolate an even-in-h difference quotient; returns (value, error estimate)."""
    d0, d1, d2 = (estimate(h) for h in STEPS)
    r1a = (4 * d1 - d0) / 3
    r1b = (4 * d2 - d1) / 3
    r2 = (16 * r1b - r1a) / 15
    return r2, _maxabs(r2 - r1b)


@dataclass(frozen=True)
class NumericTensor:
    values: np.ndarray   # values[i, j, k]
    error: float

    @property
    def dim(self):
        return self.values.shape[0]


def lambda_numeric(dot: GroupLaw, circ: GroupLaw, a) -> tuple[np.ndarray, float]:
    """Jacobian at b = 0 of b -> a^-1 (a o b); returns (matrix, error estimate)."""
    a = np.asarray(a, dtype=float)
    n = dot.dim
    ainv = newton_inverse(dot, a)[:, None]
    acol = a[:, None]

    def estimate(h):
        plus = np.eye(n) * h
        fp = dot(ainv, circ(acol, plus))
        fm = dot(ainv, circ(acol, -plus))
        return (fp - fm) / (2 * h)      # column j = derivative along e_j

    return richardson(estimate)


def _mixed(f, n, pairs):
    """d^2/ds dt f(s e_i, t e_j) at 0 for (i, j) in pairs; f maps (n, m) x (n, m) -> (n, m)."""
    pairs = list(pairs)
    m = len(pairs)

    def estimate(h):
        total = np.zeros((n, m))
        for ss, st, sign in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)):
            u = np.zeros((n, m))
            v = np.zeros((n, m))
            for col, (i, j) in enumerate(pairs):
                u[i, col] = ss * h
                v[j, col] = st * h
            total += sign * f(u, v)
        return total / (4 * h * h)

    return richardson(estimate)


def extract_bracket(law: GroupLaw) -> NumericTensor:
    """[e_i, e_j] = d^2/ds dt (m(s e_i, t e_j) - m(t e_j, s e_i)) at 0."""
    n = law.dim
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    values = np.zeros((n, n, n))
    err = 0.0
    if pairs:
        vals, err = _mixed(lambda u, v: law(u, v) - law(v, u), n, pairs)
        for col, (i, j) in enumerate(pairs):
            values[i, j] = vals[:, col]
            values[j, i] = -vals[:, col]
    return NumericTensor(values, err)


def extract_triangle(dot: GroupLaw, circ: GroupLaw) -> NumericTensor:
    """e_i |> e_j = d^2/ds dt [ (s e_i)^-1 ((s e_i) o (t e_j)) ] at 0."""
    if dot.dim != circ.dim:
        raise DimensionMismatch(f"dot has dimension {dot.dim}, circ has {circ.dim}")
    n = dot.dim
    pairs = [(i, j) for i in range(n) for j in range(n)]

    def f(u, v):
        return dot(newton_inverse(dot, u), circ(u, v))

    vals, err = _mixed(f, n, pairs)
    values = np.zeros((n, n, n))
    for col, (i, j) in enumerate(pairs):
        values[i, j] = vals[:, col]
    return NumericTensor(values, err)


# --- rationalisation ------------------------------------------------------------------

def rationalize_value(x: float, max_den: int = 64, tol: float = 1e-6, entry=None) -> Fraction:
    """The unique rational with denominator <= max_den within tol of x."""
    x = float(x)
    best = Fraction(x).limit_denominator(max_den)
    if abs(x - best) > tol:
        raise NoRationalWithinBound(entry, x)
    for q in range(1, max_den + 1):
        p = round(x * q)
        r = Fraction(p, q)
        if r != best and abs(x - r) <= tol:
            raise NoRationalWithinBound(entry, x, f"ambiguous between {best} and {r}")
    return best


def rationalize(t: NumericTensor, max_den: int = 64, tol: float = 1e-6):
    """Exact nested-list tensor; refuses when the error estimate or any entry misses ``tol``."""
    if t.error > tol:
        raise NoRationalWithinBound(None, t.error, f"error estimate {t.error:.3e} exceeds tolerance {tol:g}")
    n = t.dim
    return [[[rationalize_value(t.values[i, j, k], max_den, tol, (i, j, k)) for k in range(n)]
             for j in range(n)] for i in range(n)]
