"""Brute-force reference counts, deliberately sharing no code with the engine.

Group tables on {0..n-1} with identity 0 are exactly the associative reduced
Latin squares, so they are enumerated directly; a circ table is counted when
the brace identity holds on every triple.
"""
from __future__ import annotations


def reduced_latin_squares(n: int):
    """Yield every n x n Latin square whose first row and column are 0..n-1."""
    sq = [[-1] * n for _ in range(n)]
    for i in range(n):
        sq[0][i] = i
        sq[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def rec(k):
        if k == len(cells):
            yield [row[:] for row in sq]
            return
        i, j = cells[k]
        used = set(sq[i][:j]) | {sq[r][j] for r in range(i)}
        for v in range(n):
            if v not in used:
                sq[i][j] = v
                yield from rec(k + 1)
        sq[i][j] = -1

    if n == 1:
        yield [[0]]
        return
    yield from rec(0)


def associative(t) -> bool:
    n = len(t)
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def group_tables(n: int) -> list:
    """All group laws on {0..n-1} with identity 0."""
    return [t for t in reduced_latin_squares(n) if associative(t)]


def satisfies_brace_identity(dot, circ) -> bool:
    n = len(dot)
    inv = [row.index(0) for row in dot]
    for a in range(n):
        ca = circ[a]
        ia = inv[a]
        for b in range(n):
            left = dot[ca[b]][ia]
            for c in range(n):
                if circ[a][dot[b][c]] != dot[left][ca[c]]:
                    return False
    return True


def count_braces(dot, tables=None) -> int:
    """Number of circ laws on the same set making (dot, circ) a skew brace."""
    dot = [list(map(int, r)) for r in dot]
    tables = group_tables(len(dot)) if tables is None else tables
    return sum(1 for t in tables if satisfies_brace_identity(dot, t))
