"""Finite skew braces: two group laws on one index set sharing the identity 0."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (BraceIdentityViolation, IdentityMismatch, InputError, NoIdentity,
                     NotAnIdeal, NotCharacteristic, OrderBoundExceeded)
from .groups import FiniteGroup, Holomorph, automorphisms, check_group, is_stable, subset_key

DEFAULT_ORDER_BOUND = 60


class FiniteSkewBrace:
    __slots__ = ("order", "dot", "circ", "lam", "_cache")

    def __init__(self, dot: FiniteGroup, circ: FiniteGroup, _verified: bool = False):
        if not _verified:
            raise TypeError("use verify_brace() to construct a FiniteSkewBrace")
        self.dot, self.circ = dot, circ
        self.order = dot.order
        d, c, inv = dot.rows, circ.rows, dot.inverse
        # lambda_a(x) = a^-1 . (a o x)
        self.lam = [tuple(d[inv[a]][c[a][x]] for x in range(self.order)) for a in range(self.order)]
        self._cache = {}

    def __repr__(self):
        return f"<FiniteSkewBrace of order {self.order}>"

    def __eq__(self, other):
        return isinstance(other, FiniteSkewBrace) and self.dot == other.dot and self.circ == other.circ

    def __hash__(self):
        return hash((self.dot, self.circ))

    def key(self):
        return (self.dot.table.tobytes(), self.circ.table.tobytes())

    def circ_inverse(self, a):
        return self.circ.inverse[a]

    def lambda_map(self, a: int) -> tuple[int, ...]:
        return self.lam[a]

    def star(self, x: int, y: int) -> int:
        """x * y = lambda_x(y) . y^-1"""
        return self.dot.rows[self.lam[x][y]][self.dot.inverse[y]]


def _as_group(t, role):
    if isinstance(t, FiniteGroup):
        return t
    try:
        return check_group(t)
    except NoIdentity:
        rows = [list(r) for r in t]
        n = len(rows)
        ident = [e for e in range(n) if rows[e] == list(range(n))
                 and all(rows[g][e] == g for g in range(n))]
        if ident:
            raise IdentityMismatch(f"{role} law has identity {ident[0]}, not 0")
        raise


def brace_violations(dot: FiniteGroup, circ: FiniteGroup) -> np.ndarray:
    """All triples (a, b, c) where a o (b c) != (a o b) a^-1 (a o c), lexicographic."""
    d, c = dot.table, circ.table
    n = dot.order
    inv = np.asarray(dot.inverse)
    a = np.arange(n)[:, None, None]
    lhs = c[a, d[None, :, :]]                      # a o (b . c)
    ab = c[:, :, None]                             # a o b
    ac = c[:, None, :]                             # a o c
    rhs = d[d[ab, inv[a]], ac]
    return np.argwhere(lhs != rhs)


def verify_brace(dot, circ) -> FiniteSkewBrace:
    dot = _as_group(dot, "dot")
    circ = _as_group(circ, "circ")
    if dot.order != circ.order:
        raise InputError(f"laws have different orders {dot.order} and {circ.order}")
    bad = brace_violations(dot, circ)
    if len(bad):
        raise BraceIdentityViolation(*(int(x) for x in bad[0]))
    return FiniteSkewBrace(dot, circ, _verified=True)


def is_brace(dot: FiniteGroup, circ: FiniteGroup) -> bool:
    return dot.order == circ.order and not len(brace_violations(dot, circ))


def trivial_brace(g: FiniteGroup) -> FiniteSkewBrace:
    return verify_brace(g, g)


def almost_trivial_brace(g: FiniteGroup) -> FiniteSkewBrace:
    return verify_brace(g, g.opposite())


def lambda_is_homomorphism(b: FiniteSkewBrace) -> bool:
    """lambda_{a o c} = lambda_a lambda_c and each lambda_a is in Aut(dot)."""
    d = b.dot.rows
    n = b.order
    for a in range(n):
        la = b.lam[a]
        if la[0] != 0 or len(set(la)) != n:
            return False
        if any(la[d[x][y]] != d[la[x]][la[y]] for x in range(n) for y in range(n)):
            return False
    c = b.circ.rows
    return all(b.lam[c[a][e]] == tuple(b.lam[a][b.lam[e][x]] for x in range(n))
               for a in range(n) for e in range(n))


# --- ideals ----------------------------------------------------------------------

@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    failed: str | None = None

    def __bool__(self):
        return self.ok


def is_ideal(b: FiniteSkewBrace, s: Iterable[int]) -> IdealCheck:
    s = frozenset(s)
    b.dot._check_elements(s)
    if not b.dot.is_subgroup(s):
        return IdealCheck(False, "not a subgroup of (G, .)")
    if not b.dot.is_normal(s):
        return IdealCheck(False, "not normal in (G, .)")
    if not b.circ.is_normal(s):
        return IdealCheck(False, "not a normal subgroup of (G, o)")
    for a in range(b.order):
        la = b.lam[a]
        for x in s:
            if la[x] not in s:
                return IdealCheck(False, f"not lambda-stable: lambda_{a}({x}) = {la[x]}")
    return IdealCheck(True)


def _bound(b_order, max_order):
    if b_order > max_order:
        raise OrderBoundExceeded(f"order {b_order} exceeds the configured bound {max_order}")


def all_ideals(b: FiniteSkewBrace, max_order: int = DEFAULT_ORDER_BOUND,
               subgroups: Sequence[frozenset] | None = None) -> list[frozenset]:
    """Every ideal, canonically sorted (by size, then elements)."""
    _bound(b.order, max_order)
    subgroups = b.dot.all_subgroups() if subgroups is None else subgroups
    return sorted((h for h in subgroups if is_ideal(b, h)), key=subset_key)


def is_simple(b: FiniteSkewBrace, max_order: int = DEFAULT_ORDER_BOUND,
              subgroups: Sequence[frozenset] | None = None) -> bool:
    return b.order > 1 and len(all_ideals(b, max_order, subgroups)) == 2


def ideal_closure(b: FiniteSkewBrace, gens: Iterable[int]) -> frozenset:
    """Smallest ideal containing ``gens``.

    Fixpoint of: dot-subgroup, dot-normal closure, circ conjugates, lambda images.
    """
    dot, circ = b.dot, b.circ
    cgens = circ.generating_set()
    current = dot.normal_closure(gens)
    while True:
        extra = set()
        for g in cgens:
            lg = b.lam[g]
            for x in current:
                extra.add(circ.conj(g, x))
                extra.add(lg[x])
        extra -= current
        if not extra:
            return current
        current = dot.normal_closure(current | extra)


def brace_commutator(b: FiniteSkewBrace, i: Iterable[int], j: Iterable[int]) -> frozenset:
    """[I, J]_B: smallest ideal containing dot and circ commutators and star values."""
    i, j = sorted(i), sorted(j)
    gens = set()
    for x in i:
        for y in j:
            gens.add(b.dot.commutator(x, y))
            gens.add(b.circ.commutator(x, y))
            gens.add(b.star(x, y))
    return ideal_closure(b, gens)


def derived_series(b: FiniteSkewBrace) -> tuple[list[frozenset], bool]:
    series = [frozenset(range(b.order))]
    while True:
        nxt = brace_commutator(b, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series, len(series[-1]) == 1


def is_solvable(b: FiniteSkewBrace) -> bool:
    return derived_series(b)[1]


def star_set(b: FiniteSkewBrace, a: Iterable[int], c: Iterable[int]) -> frozenset:
    """A * C = subgroup of (G, .) generated by the star values."""
    c = list(c)
    return b.dot.generated_subgroup(b.star(x, y) for x in a for y in c)


# --- quotients -----------------------------------------------------------------

def cosets(g: FiniteGroup, h: frozenset) -> tuple[list[int], list[frozenset]]:
    """Coset label of every element and the cosets, ordered by smallest member."""
    label = [-1] * g.order
    out = []
    for a in range(g.order):
        if label[a] >= 0:
            continue
        cs = frozenset(g.rows[a][x] for x in h)
        for y in cs:
            label[y] = len(out)
        out.append(cs)
    return label, out


def quotient(b: FiniteSkewBrace, ideal: Iterable[int]) -> tuple[FiniteSkewBrace, list[int]]:
    """Brace on cosets of an ideal, with the projection map."""
    ideal = frozenset(ideal)
    check = is_ideal(b, ideal)
    if not check:
        raise NotAnIdeal(f"{sorted(ideal)} is not an ideal: {check.failed}")
    label, cs = cosets(b.dot, ideal)
    reps = [min(c) for c in cs]
    d, c = b.dot.rows, b.circ.rows
    dt = [[label[d[x][y]] for y in reps] for x in reps]
    ct = [[label[c[x][y]] for y in reps] for x in reps]
    return verify_brace(check_group(dt), check_group(ct)), label


def is_brace_morphism(src: FiniteSkewBrace, dst: FiniteSkewBrace, f: Sequence[int]) -> bool:
    n = src.order
    sd, sc, dd, dc = src.dot.rows, src.circ.rows, dst.dot.rows, dst.circ.rows
    return all(f[sd[a][x]] == dd[f[a]][f[x]] and f[sc[a][x]] == dc[f[a]][f[x]]
               for a in range(n) for x in range(n))


# --- classification ---------------------------------------------------------------

def classify_triviality(b: FiniteSkewBrace) -> str:
    if np.array_equal(b.circ.table, b.dot.table):
        return "trivial"
    if np.array_equal(b.circ.table, b.dot.table.T):
        return "almost_trivial"
    return "neither"


@dataclass(frozen=True)
class CriterionReport:
    char_star: bool
    fund_lemma_lhs: bool
    fund_lemma_rhs: bool


def criterion_checks(b: FiniteSkewBrace, h: Iterable[int], auts=None) -> CriterionReport:
    """Star criterion and the kernel criterion for a characteristic subgroup h of (G, .)."""
    h = frozenset(h)
    auts = automorphisms(b.dot) if auts is None else auts
    if not b.dot.is_subgroup(h) or not is_stable(h, auts):
        raise NotCharacteristic(f"{sorted(h)} is not a characteristic subgroup of (G, .)")
    char_star = star_set(b, h, range(b.order)) <= h
    # induced action of lambda_x on the coset group (G, .)/h; lhs: h acts trivially
    label, _ = cosets(b.dot, h)
    lhs = all(label[b.lam[x][g]] == label[g] for x in h for g in range(b.order))
    return CriterionReport(char_star, lhs, bool(is_ideal(b, h)))


# --- holomorph correspondence ---------------------------------------------------

def regular_embedding(b: FiniteSkewBrace, hol: Holomorph | None = None) -> list[tuple[int, int]]:
    """The regular subgroup {(a, lambda_a)} of Hol(G, .), as (translation, aut index) pairs."""
    hol = Holomorph(b.dot) if hol is None else hol
    return [(a, hol.index[b.lam[a]]) for a in range(b.order)]


def brace_from_regular_subgroup(hol: Holomorph, elements: Iterable[tuple[int, int]]) -> FiniteSkewBrace:
    """a o b := r_a(b), where r_a is the unique element sending 0 to a."""
    n = hol.group.order
    by_translation = {}
    for x, f in elements:
        if x in by_translation:
            raise InputError(f"two elements with translation {x}: not regular")
        by_translation[x] = f
    if sorted(by_translation) != list(range(n)):
        raise InputError("subgroup does not act transitively")
    circ = [[hol.act((a, by_translation[a]), x) for x in range(n)] for a in range(n)]
    return verify_brace(hol.group, check_group(circ))


# --- isomorphism ------------------------------------------------------------------

def find_brace_isomorphism(b1: FiniteSkewBrace, b2: FiniteSkewBrace):
    """A bijection that is an isomorphism for both laws at once, or None.

    Backtracks over generator images in (G, .), pruning on circ compatibility
    over the part of the map already built.
    """
    from .groups import _injective_homs
    if b1.order != b2.order or b1.dot.invariants() != b2.dot.invariants() \
            or b1.circ.invariants() != b2.circ.invariants():
        return None
    c1, c2 = b1.circ.rows, b2.circ.rows

    def compatible(m):
        dom = list(m)
        for x in dom:
            mx = m[x]
            for y in dom:
                z = c1[x][y]
                if z in m and m[z] != c2[mx][m[y]]:
                    return False
        return True

    found = _injective_homs(b1.dot, b2.dot, first_only=True, prune=compatible)
    return found[0] if found else None


def brace_isomorphic(b1: FiniteSkewBrace, b2: FiniteSkewBrace) -> bool:
    return find_brace_isomorphism(b1, b2) is not None


def canonical_circ_form(b: FiniteSkewBrace, auts=None) -> bytes:
    """Minimal relabelled circ table over Aut(G, .): equal iff isomorphic (same dot table)."""
    auts = automorphisms(b.dot) if auts is None else auts
    c = b.circ.table
    best = None
    for phi in auts:
        p = np.asarray(phi)
        inv = np.argsort(p)
        t = p[c[inv][:, inv]].tobytes()
        if best is None or t < best:
            best = t
    return best
