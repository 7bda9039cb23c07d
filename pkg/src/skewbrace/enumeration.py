"""Skew braces on a fixed additive group via regular subgroups of its holomorph.

A circ law on (G, .) corresponds to a subgroup R of Hol(G) = G x| Aut(G) of
order |G| acting simply transitively on G by (x, f).g = x f(g). The search
always extends R by the unique element whose translation is the smallest
one not yet covered, so every regular subgroup is reached along exactly one
path and no deduplication is needed.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .braces import (DEFAULT_ORDER_BOUND, FiniteSkewBrace, all_ideals, brace_violations,
                     canonical_circ_form, classify_triviality)
from .errors import BraceIdentityViolation, OrderBoundExceeded
from .groups import FiniteGroup, Holomorph, automorphisms

COMPOSE_TABLE_LIMIT = 1500


def _compose_table(hol: Holomorph):
    m = len(hol.auts)
    if m > COMPOSE_TABLE_LIMIT:
        return None
    auts = np.asarray(hol.auts, dtype=np.int64)
    # (f o g)(x) = f(g(x)); look the result up by its image tuple
    out = []
    for f in range(m):
        composed = auts[f][auts]          # row g: f o g
        out.append([hol.index[tuple(r)] for r in composed.tolist()])
    return out


def regular_subgroups(g: FiniteGroup, hol: Holomorph | None = None) -> list[list[int]]:
    """Every regular subgroup, each given as its lambda table: ``lam[a]`` = aut index of r_a."""
    hol = Holomorph(g) if hol is None else hol
    n = g.order
    rows = g.rows
    auts = hol.auts
    m = len(auts)
    comp = _compose_table(hol)
    compose = (lambda f, h: comp[f][h]) if comp is not None else hol.compose_index
    results = []

    def close(gens):
        # lam[t] = automorphism paired with translation t, or -1
        lam = [-1] * n
        lam[0] = 0
        queue = deque([0])
        size = 1
        while queue:
            x = queue.popleft()
            fx = lam[x]
            ax = auts[fx]
            rx = rows[x]
            for y, fy in gens:
                t = rx[ax[y]]
                f = compose(fx, fy)
                cur = lam[t]
                if cur < 0:
                    lam[t] = f
                    size += 1
                    queue.append(t)
                elif cur != f:
                    return None
        if n % size:
            return None
        return lam, size

    def rec(lam, size, gens):
        if size == n:
            results.append(lam)
            return
        t = lam.index(-1)
        for f in range(m):
            nxt = close(gens + [(t, f)])
            if nxt is not None:
                rec(nxt[0], nxt[1], gens + [(t, f)])

    rec([0] + [-1] * (n - 1), 1, [])
    return results


def enumerate_braces(additive: FiniteGroup, max_order: int = DEFAULT_ORDER_BOUND) -> list[FiniteSkewBrace]:
    """One brace per regular subgroup of Hol(additive), sorted by circ table."""
    if additive.order > max_order:
        raise OrderBoundExceeded(f"order {additive.order} exceeds the configured bound {max_order}")
    hol = Holomorph(additive)
    aut_arr = np.asarray(hol.auts, dtype=np.int64)
    d = additive.table
    out = []
    for lam in regular_subgroups(additive, hol):
        # a o b = a . f_a(b)
        circ_t = d[np.arange(additive.order)[:, None], aut_arr[lam]]
        circ = FiniteGroup(circ_t, trusted=True)
        bad = brace_violations(additive, circ)
        if len(bad):  # engine bug: a regular subgroup always yields a brace
            raise BraceIdentityViolation(*(int(x) for x in bad[0]))
        out.append(FiniteSkewBrace(additive, circ, _verified=True))
    out.sort(key=lambda b: b.circ.table.tobytes())
    return out


@dataclass
class EnumerationReport:
    additive: str
    order: int
    automorphisms: int
    braces: int
    classes: int
    triviality: dict = field(default_factory=dict)
    simple: list = field(default_factory=list)  # (representative, class size) pairs


def enumeration_report(additive: FiniteGroup, max_order: int = DEFAULT_ORDER_BOUND,
                       report_simple: bool = False) -> tuple[EnumerationReport, list[FiniteSkewBrace]]:
    """Counts, isomorphism classes and (optionally) the simple braces found."""
    braces = enumerate_braces(additive, max_order)
    auts = automorphisms(additive)
    classes: dict[bytes, list[FiniteSkewBrace]] = {}
    for b in braces:
        classes.setdefault(canonical_circ_form(b, auts), []).append(b)
    tri = {"trivial": 0, "almost_trivial": 0, "neither": 0}
    for members in classes.values():
        tri[classify_triviality(members[0])] += 1
    rep = EnumerationReport(additive.name or "G", additive.order, len(auts), len(braces), len(classes), tri)
    if report_simple:
        subgroups = additive.all_subgroups()
        for key in sorted(classes):
            members = classes[key]
            b = members[0]
            if b.order > 1 and len(all_ideals(b, max_order, subgroups)) == 2:
                rep.simple.append((b, len(members)))
    return rep, braces
