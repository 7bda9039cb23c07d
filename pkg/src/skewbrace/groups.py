"""Finite groups as Cayley tables.

Elements are the indices ``0..n-1`` and element 0 is always the identity.
Subsets and subgroups are passed around as frozensets of indices.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from typing import Iterable, Sequence

import numpy as np

from .errors import NoIdentity, NotAssociative, NotLatin, InputError


class FiniteGroup:
    """A group given by its multiplication table, ``table[g][h] = g*h``.

    Construct through :func:`check_group` unless the table is known to be
    valid (``FiniteGroup(table, trusted=True)``).
    """

    __slots__ = ("order", "table", "rows", "inverse", "name", "_gens", "_cache")

    def __init__(self, table, name: str | None = None, trusted: bool = False):
        if not trusted:
            raise TypeError("use check_group() to build a FiniteGroup from an unchecked table")
        arr = np.asarray(table, dtype=np.int64)
        arr.setflags(write=False)
        self.table = arr
        self.rows = arr.tolist()
        self.order = len(self.rows)
        inv = [0] * self.order
        for g, row in enumerate(self.rows):
            inv[g] = row.index(0)
        self.inverse = inv
        self.name = name
        self._gens = None
        self._cache = {}

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{label} of order {self.order}>"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self.rows[self.rows[g][x]][self.inverse[g]]

    def commutator(self, x: int, y: int) -> int:
        """x^-1 y^-1 x y"""
        r, i = self.rows, self.inverse
        return r[r[r[i[x]][i[y]]][x]][y]

    def power(self, x: int, k: int) -> int:
        acc = 0
        for _ in range(k):
            acc = self.rows[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != 0:
            acc = self.rows[acc][x]
            k += 1
        return k

    def element_orders(self) -> list[int]:
        if "orders" not in self._cache:
            self._cache["orders"] = [self.element_order(x) for x in range(self.order)]
        return self._cache["orders"]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def opposite(self) -> FiniteGroup:
        return FiniteGroup(self.table.T.copy(), name=f"{self.name}^op" if self.name else None, trusted=True)

    def elements(self):
        return range(self.order)

    def _check_elements(self, s):
        for x in s:
            if not 0 <= x < self.order:
                raise InputError(f"element index {x} out of range for order {self.order}")

    # --- subgroup tools -------------------------------------------------------

    def generated_subgroup(self, gens: Iterable[int]) -> frozenset:
        gens = [g for g in set(gens) if g != 0]
        self._check_elements(gens)
        seen = {0}
        queue = deque([0])
        rows = self.rows
        while queue:
            x = queue.popleft()
            rx = rows[x]
            for g in gens:
                y = rx[g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def generating_set(self) -> list[int]:
        """Greedy small generating set: repeatedly add the element enlarging the span most."""
        if self._gens is None:
            gens: list[int] = []
            span = frozenset([0])
            while len(span) < self.order:
                best, best_span = None, span
                for x in range(self.order):
                    if x in span:
                        continue
                    cand = self.generated_subgroup(gens + [x])
                    if len(cand) > len(best_span):
                        best, best_span = x, cand
                        if len(cand) == self.order:
                            break
                gens.append(best)
                span = best_span
            self._gens = gens
        return list(self._gens)

    def is_subgroup(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        self._check_elements(s)
        if 0 not in s:
            return False
        rows = self.rows
        return all(rows[a][b] in s for a in s for b in s)

    def is_normal(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        if not self.is_subgroup(s):
            return False
        return all(self.conj(g, x) in s for g in self.generating_set() for x in s)

    def normal_closure(self, s: Iterable[int]) -> frozenset:
        current = self.generated_subgroup(s)
        gens = self.generating_set()
        while True:
            extra = {self.conj(g, x) for g in gens for x in current} - current
            if not extra:
                return current
            current = self.generated_subgroup(current | extra)

    def commutator_subgroup(self, a: Iterable[int] | None = None, b: Iterable[int] | None = None) -> frozenset:
        a = range(self.order) if a is None else a
        b = range(self.order) if b is None else list(b)
        return self.generated_subgroup(self.commutator(x, y) for x in a for y in b)

    def derived_series(self) -> list[frozenset]:
        series = [frozenset(range(self.order))]
        while True:
            nxt = self.commutator_subgroup(series[-1], series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return len(self.derived_series()[-1]) == 1

    def derived_length(self) -> int | None:
        """Number of steps to reach the trivial group, or None if not solvable."""
        s = self.derived_series()
        return len(s) - 1 if len(s[-1]) == 1 else None

    def is_abstractly_simple(self) -> bool:
        if self.order == 1:
            return False
        return all(len(self.normal_closure([x])) == self.order for x in range(1, self.order))

    def center(self) -> frozenset:
        rows = self.rows
        return frozenset(z for z in range(self.order) if all(rows[z][g] == rows[g][z] for g in range(self.order)))

    def cyclic_subgroups(self) -> list[frozenset]:
        return sorted({self.generated_subgroup([x]) for x in range(self.order)}, key=subset_key)

    def all_subgroups(self) -> list[frozenset]:
        """Every subgroup, by joining found subgroups with cyclic ones until nothing new appears."""
        if "subgroups" in self._cache:
            return self._cache["subgroups"]
        cyclic = self.cyclic_subgroups()
        found = set(cyclic)
        frontier = list(cyclic)
        while frontier:
            nxt = []
            for h in frontier:
                for c in cyclic:
                    if c <= h:
                        continue
                    j = self.generated_subgroup(h | c)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        out = sorted(found, key=subset_key)
        self._cache["subgroups"] = out
        return out

    def normal_subgroups(self) -> list[frozenset]:
        return [h for h in self.all_subgroups() if self.is_normal(h)]

    def characteristic_subgroups(self, auts: Sequence[Sequence[int]] | None = None) -> list[frozenset]:
        auts = automorphisms(self) if auts is None else auts
        return [h for h in self.all_subgroups() if is_stable(h, auts)]

    def subgroup_tools(self) -> dict:
        return {
            "derived_series": self.derived_series(),
            "is_solvable": self.is_solvable(),
            "is_abstractly_simple": self.is_abstractly_simple(),
            "center": self.center(),
        }

    def invariants(self) -> tuple:
        """Isomorphism invariants: order, order profile, center size, derived length."""
        return (self.order, tuple(sorted(Counter(self.element_orders()).items())),
                len(self.center()), self.derived_length(), self.is_abelian())


def subset_key(s):
    return (len(s), tuple(sorted(s)))


def is_stable(s: frozenset, maps: Iterable[Sequence[int]]) -> bool:
    return all(m[x] in s for m in maps for x in s)


def check_group(table, name: str | None = None) -> FiniteGroup:
    """Validate a Cayley table and wrap it.

    Raises ``NoIdentity``, ``NotLatin`` or ``NotAssociative`` naming the first
    violating cell or triple.
    """
    rows = [list(map(int, r)) for r in table]
    n = len(rows)
    if n == 0:
        raise InputError("empty group table")
    for g, r in enumerate(rows):
        if len(r) != n:
            raise InputError(f"row {g} has {len(r)} entries, expected {n}")
        for h, x in enumerate(r):
            if not 0 <= x < n:
                raise InputError(f"entry ({g}, {h}) = {x} is out of range")
    for h in range(n):
        if rows[0][h] != h:
            raise NoIdentity(0, h)
    for g in range(n):
        if rows[g][0] != g:
            raise NoIdentity(g, 0)
    for g in range(n):
        seen = {}
        for h, x in enumerate(rows[g]):
            if x in seen:
                raise NotLatin(g, h, f": value {x} repeats in row {g}")
            seen[x] = h
    for h in range(n):
        seen = {}
        for g in range(n):
            x = rows[g][h]
            if x in seen:
                raise NotLatin(g, h, f": value {x} repeats in column {h}")
            seen[x] = g
    arr = np.asarray(rows, dtype=np.int64)
    # (ab)c vs a(bc) over all triples at once
    left = arr[arr][:, :, :]            # left[a, b, c] = (ab)c
    right = arr[np.arange(n)[:, None, None], arr[None, :, :]]  # right[a, b, c] = a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(x) for x in bad[0])
        raise NotAssociative(a, b, c)
    return FiniteGroup(arr, name=name, trusted=True)


# --- homomorphisms ------------------------------------------------------------

class GroupHom:
    __slots__ = ("source", "target", "map")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, mapping: Sequence[int]):
        self.source, self.target, self.map = source, target, tuple(mapping)

    def __call__(self, x):
        return self.map[x]

    def __repr__(self):
        return f"GroupHom({list(self.map)})"

    def is_homomorphism(self) -> bool:
        s, t, m = self.source.rows, self.target.rows, self.map
        if m[0] != 0:
            return False
        return all(m[s[g][h]] == t[m[g]][m[h]] for g in range(len(s)) for h in range(len(s)))


def _extend_hom(src: FiniteGroup, dst: FiniteGroup, gens, images):
    """Extend generator images to the generated subgroup, or None if inconsistent or non-injective."""
    mapping = {0: 0}
    used = {0}
    queue = deque([0])
    srows, drows = src.rows, dst.rows
    while queue:
        x = queue.popleft()
        mx = mapping[x]
        for g, im in zip(gens, images):
            y = srows[x][g]
            my = drows[mx][im]
            if y in mapping:
                if mapping[y] != my:
                    return None
            else:
                if my in used:
                    return None
                mapping[y] = my
                used.add(my)
                queue.append(y)
    return mapping


def _injective_homs(src: FiniteGroup, dst: FiniteGroup, first_only: bool = False, prune=None):
    """Injective homomorphisms defined on all of ``src`` (bijective when orders agree).

    ``prune(partial_map)`` may reject a partial extension early.
    """
    gens = src.generating_set()
    sorders, dorders = src.element_orders(), dst.element_orders()
    cands = [[y for y in range(dst.order) if dorders[y] == sorders[g]] for g in gens]
    results = []

    def rec(k, images):
        if k == len(gens):
            m = _extend_hom(src, dst, gens, images)
            if m is not None and len(m) == src.order and (prune is None or prune(m)):
                results.append(tuple(m[x] for x in range(src.order)))
                return first_only
            return False
        for y in cands[k]:
            imgs = images + [y]
            m = _extend_hom(src, dst, gens[:k + 1], imgs)
            if m is None or (prune is not None and not prune(m)):
                continue
            if rec(k + 1, imgs):
                return True
        return False

    rec(0, [])
    return results


def automorphisms(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples, sorted lexicographically (identity first)."""
    if "auts" not in g._cache:
        g._cache["auts"] = sorted(_injective_homs(g, g))
    return g._cache["auts"]


def automorphism_homs(g: FiniteGroup) -> list[GroupHom]:
    return [GroupHom(g, g, m) for m in automorphisms(g)]


def find_isomorphism(a: FiniteGroup, b: FiniteGroup):
    if a.invariants() != b.invariants():
        return None
    found = _injective_homs(a, b, first_only=True)
    return found[0] if found else None


def isomorphic(a: FiniteGroup, b: FiniteGroup) -> bool:
    return find_isomorphism(a, b) is not None


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """(f o g)(x) = f(g(x))"""
    return tuple(f[x] for x in g)


def invert_map(f: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(f)
    for x, y in enumerate(f):
        out[y] = x
    return tuple(out)


# --- holomorph ----------------------------------------------------------------

class Holomorph:
    """G x| Aut(G) with (x, f)(y, g) = (x f(y), f o g), kept implicit.

    Elements are pairs ``(translation, aut_index)``; the automorphism list
    is the canonical one from :func:`automorphisms`, so index 0 is the
    identity map.
    """

    def __init__(self, g: FiniteGroup):
        self.group = g
        self.auts = automorphisms(g)
        self.index = {m: i for i, m in enumerate(self.auts)}
        self._comp: dict = {}

    @property
    def order(self):
        return self.group.order * len(self.auts)

    def compose_index(self, i: int, j: int) -> int:
        key = (i, j)
        r = self._comp.get(key)
        if r is None:
            r = self.index[compose(self.auts[i], self.auts[j])]
            self._comp[key] = r
        return r

    def mul(self, p, q):
        x, f = p
        y, g = q
        return (self.group.rows[x][self.auts[f][y]], self.compose_index(f, g))

    def act(self, p, k: int) -> int:
        x, f = p
        return self.group.rows[x][self.auts[f][k]]

    def as_group(self, max_order: int = 5000) -> FiniteGroup:
        n, m = self.group.order, len(self.auts)
        total = n * m
        if total > max_order:
            raise InputError(f"holomorph of order {total} exceeds table bound {max_order}")
        # element index = aut_index * n + translation, so (0, id) is 0
        table = np.empty((total, total), dtype=np.int64)
        rows = self.group.rows
        for f in range(m):
            af = self.auts[f]
            for x in range(n):
                i = f * n + x
                rx = rows[x]
                for g in range(m):
                    fg = self.compose_index(f, g)
                    base = fg * n
                    for y in range(n):
                        table[i, g * n + y] = base + rx[af[y]]
        name = f"Hol({self.group.name})" if self.group.name else None
        return FiniteGroup(table, name=name, trusted=True)


def holomorph(g: FiniteGroup, max_order: int = 5000) -> FiniteGroup:
    return Holomorph(g).as_group(max_order)


# --- constructors ---------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], name=f"C{n}", trusted=True)


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Mixed-radix product; the first factor is the most significant digit."""
    result = groups[0]
    for h in groups[1:]:
        n, m = result.order, h.order
        table = [[result.rows[i // m][j // m] * m + h.rows[i % m][j % m] for j in range(n * m)]
                 for i in range(n * m)]
        name = f"{result.name}x{h.name}" if result.name and h.name else None
        result = FiniteGroup(table, name=name, trusted=True)
    return result


def from_permutations(gens: Sequence[Sequence[int]], name: str | None = None) -> FiniteGroup:
    """Group generated by permutations; elements sorted so the identity is 0.

    Product convention: (p*q)(x) = p(q(x)).
    """
    gens = [tuple(g) for g in gens]
    deg = len(gens[0]) if gens else 1
    ident = tuple(range(deg))
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = compose(p, g)
            if q not in seen:
                seen.add(q)
                queue.append(q)
    elems = sorted(seen)
    idx = {p: i for i, p in enumerate(elems)}
    table = [[idx[compose(p, q)] for q in elems] for p in elems]
    return FiniteGroup(table, name=name, trusted=True)


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([[0]], name="S1", trusted=True)
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return from_permutations(gens, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return FiniteGroup([[0]], name=f"A{n}", trusted=True)
    gens = []
    for k in range(2, n):
        p = list(range(n))
        p[0], p[1], p[k] = 1, k, 0  # 3-cycle (0 1 k)
        gens.append(tuple(p))
    return from_permutations(gens, name=f"A{n}")


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the m-gon, order 2m."""
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return from_permutations([rot, ref], name=f"D{2 * m}")


def quaternion() -> FiniteGroup:
    # left regular representation of Q8 on {1, i, j, k, -1, -i, -j, -k}
    def qmul(a, b):
        # units encoded as (sign, axis) with axis 0..3 for 1, i, j, k
        sa, xa = a
        sb, xb = b
        tbl = {
            (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
            (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
            (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
            (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
        }
        s, x = tbl[(xa, xb)]
        return (sa * sb * s, x)

    units = [(1, 0), (1, 1), (1, 2), (1, 3), (-1, 0), (-1, 1), (-1, 2), (-1, 3)]
    idx = {u: i for i, u in enumerate(units)}
    table = [[idx[qmul(a, b)] for b in units] for a in units]
    return FiniteGroup(table, name="Q8", trusted=True)


def dicyclic(m: int) -> FiniteGroup:
    """Order 4m: a of order 2m, x^2 = a^m, x a x^-1 = a^-1. Element a^k x^e has index e*2m + k."""
    if m < 2:
        raise InputError("dicyclic groups need m >= 2")
    n2 = 2 * m

    def mul(p, q):
        (e, k), (f, l) = divmod(p, n2), divmod(q, n2)
        k2 = (k + (l if e == 0 else -l)) % n2
        if e and f:
            return (k2 + m) % n2
        return (e ^ f) * n2 + k2

    table = [[mul(p, q) for q in range(2 * n2)] for p in range(2 * n2)]
    return FiniteGroup(table, name=f"Dic{4 * m}", trusted=True)


def small_groups(n: int) -> list[FiniteGroup]:
    """One representative per isomorphism class, for orders <= 8 and 12."""
    c = cyclic
    table = {
        1: lambda: [c(1)],
        2: lambda: [c(2)],
        3: lambda: [c(3)],
        4: lambda: [c(4), direct_product(c(2), c(2))],
        5: lambda: [c(5)],
        6: lambda: [c(6), symmetric(3)],
        7: lambda: [c(7)],
        8: lambda: [c(8), direct_product(c(4), c(2)), direct_product(c(2), c(2), c(2)),
                    dihedral(4), quaternion()],
        12: lambda: [c(12), direct_product(c(6), c(2)), alternating(4), dihedral(6), dicyclic(3)],
    }
    if n not in table:
        raise InputError(f"no small-group list for order {n}")
    return table[n]()


def _candidates(n: int):
    if n in (1, 2, 3, 4, 5, 6, 7, 8, 12):
        yield from small_groups(n)
        return
    yield cyclic(n)
    if n % 2 == 0 and n >= 6:
        yield dihedral(n // 2)
    k, f = 1, 1
    while f < n:
        k += 1
        f *= k
    if f == n and k >= 3:
        yield symmetric(k)
    if f == 2 * n and k >= 4:
        yield alternating(k)


def abelian_invariants(g: FiniteGroup) -> list[int]:
    """Invariant factors d_1 >= d_2 >= ... (each divisible by the next) of an abelian group."""
    orders = g.element_orders()
    n, factors = g.order, []
    p = 2
    while n > 1:
        if n % p == 0:
            # exponents of the p-part from |{x : x^(p^k) = 1}| = p^(sum_i min(e_i, k))
            e, logs = 0, [0]
            while n % p == 0:
                n //= p
                e += 1
            k = 0
            while logs[-1] < e:
                k += 1
                count = sum(1 for o in orders if (p ** k) % o == 0)
                logs.append(round(math.log(count, p)))
            parts = [logs[i] - logs[i - 1] for i in range(1, len(logs))]   # number of e_i >= i
            exps = [sum(1 for c in parts if c > j) for j in range(parts[0])]
            factors.append([p ** x for x in exps])
        p += 1
    width = max((len(f) for f in factors), default=0)
    out = []
    for j in range(width):
        d = 1
        for f in factors:
            if j < len(f):
                d *= f[j]
        out.append(d)
    return out


def identify(g: FiniteGroup) -> str | None:
    """Name of a known group isomorphic to ``g`` (small orders, abelian, cyclic, dihedral, S_k, A_k), else None."""
    if g.order == 1:
        return "C1"
    if g.is_abelian() and g.order not in (1, 2, 3, 4, 5, 6, 7, 8, 12):
        return "x".join(f"C{d}" for d in abelian_invariants(g))
    for cand in _candidates(g.order):
        if cand.invariants() == g.invariants() and isomorphic(cand, g):
            return cand.name
    return None
