"""Text formats for groups, braces, Lie and post-Lie algebras, plus a loader
that dispatches on the header line or on the ``presets:`` prefix.

Element indices in group and brace tables are 0-based (0 is the identity).
Basis indices in ``liealg``/``postlie`` files are 1-based, matching e1, e2, ...
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .braces import FiniteSkewBrace, verify_brace
from .errors import InputError
from .groups import FiniteGroup, check_group
from .lie import LieAlgebraSC
from .linalg import fstr, zero_tensor
from .postlie import PostLieAlgebra

PRESET_PREFIX = "presets:"


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _header(lines, expected):
    if not lines or lines[0][1] != expected:
        found = lines[0][1] if lines else "empty input"
        raise InputError(f"expected header {expected!r}, found {found!r}")


def _read_int_field(lines, k, key):
    if k >= len(lines):
        raise InputError(f"missing '{key} N' line")
    lineno, line = lines[k]
    parts = line.split()
    if len(parts) != 2 or parts[0] != key or not parts[1].isdigit():
        raise InputError(f"line {lineno}: expected '{key} N', found {line!r}")
    return int(parts[1])


def _read_table(lines, k, n):
    if k + n > len(lines):
        raise InputError(f"table needs {n} rows, file ends early")
    rows = []
    for lineno, line in lines[k:k + n]:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise InputError(f"line {lineno}: non-integer entry in {line!r}") from None
        if len(row) != n:
            raise InputError(f"line {lineno}: expected {n} entries, found {len(row)}")
        rows.append(row)
    return rows, k + n


def parse_group_text(text: str, name: str | None = None) -> FiniteGroup:
    lines = _lines(text)
    _header(lines, "group")
    n = _read_int_field(lines, 1, "order")
    rows, k = _read_table(lines, 2, n)
    if k != len(lines):
        raise InputError(f"line {lines[k][0]}: unexpected content after the table")
    return check_group(rows, name=name)


def format_table(t) -> str:
    width = len(str(len(t) - 1))
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in t)


def format_group(g: FiniteGroup) -> str:
    return f"group\norder {g.order}\n{format_table(g.rows)}\n"


def parse_brace_text(text: str) -> FiniteSkewBrace:
    lines = _lines(text)
    _header(lines, "brace")
    n = _read_int_field(lines, 1, "order")
    if len(lines) < 3 or lines[2][1] != "dot:":
        raise InputError("expected 'dot:' after the order line")
    dot, k = _read_table(lines, 3, n)
    if k >= len(lines) or lines[k][1] != "circ:":
        raise InputError("expected 'circ:' after the dot table")
    circ, k = _read_table(lines, k + 1, n)
    if k != len(lines):
        raise InputError(f"line {lines[k][0]}: unexpected content after the circ table")
    return verify_brace(dot, circ)


def format_brace(b: FiniteSkewBrace, comments=()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return (f"{head}brace\norder {b.order}\ndot:\n{format_table(b.dot.rows)}\n"
            f"circ:\n{format_table(b.circ.rows)}\n")


def _read_constants(lines, k, n, allowed):
    tensors = {key: zero_tensor(n) for key in allowed}
    seen = {key: set() for key in allowed}
    for lineno, line in lines[k:]:
        parts = line.split()
        if len(parts) != 5 or parts[0] not in allowed:
            raise InputError(f"line {lineno}: expected '<{'|'.join(allowed)}> i j k p/q', found {line!r}")
        try:
            i, j, kk = (int(x) for x in parts[1:4])
            val = Fraction(parts[4])
        except (ValueError, ZeroDivisionError):
            raise InputError(f"line {lineno}: malformed constant line {line!r}") from None
        if not all(1 <= x <= n for x in (i, j, kk)):
            raise InputError(f"line {lineno}: basis index out of range 1..{n}")
        key = parts[0]
        if key == "c" and i >= j:
            raise InputError(f"line {lineno}: bracket constants need i < j")
        if (i, j, kk) in seen[key]:
            raise InputError(f"line {lineno}: duplicate constant {key} {i} {j} {kk}")
        seen[key].add((i, j, kk))
        tensors[key][i - 1][j - 1][kk - 1] = val
        if key == "c":
            tensors[key][j - 1][i - 1][kk - 1] = -val
    return tensors


def parse_liealg_text(text: str) -> LieAlgebraSC:
    lines = _lines(text)
    _header(lines, "liealg")
    n = _read_int_field(lines, 1, "dim")
    return LieAlgebraSC(_read_constants(lines, 2, n, ("c",))["c"])


def parse_postlie_text(text: str) -> PostLieAlgebra:
    lines = _lines(text)
    _header(lines, "postlie")
    n = _read_int_field(lines, 1, "dim")
    t = _read_constants(lines, 2, n, ("c", "t"))
    return PostLieAlgebra(LieAlgebraSC(t["c"]), t["t"])


def _constant_lines(key, t, upper_only):
    n = len(t)
    out = []
    for i in range(n):
        for j in range(n):
            if upper_only and i >= j:
                continue
            for k in range(n):
                if t[i][j][k] != 0:
                    out.append(f"{key} {i + 1} {j + 1} {k + 1} {fstr(t[i][j][k])}")
    return out


def format_liealg(L: LieAlgebraSC, comments=()) -> str:
    head = [f"# {c}" for c in comments]
    return "\n".join(head + ["liealg", f"dim {L.dim}"] + _constant_lines("c", L.c, True)) + "\n"


def format_postlie(P: PostLieAlgebra, comments=()) -> str:
    head = [f"# {c}" for c in comments]
    body = _constant_lines("c", P.dot.c, True) + _constant_lines("t", P.triangle, False)
    return "\n".join(head + ["postlie", f"dim {P.dim}"] + body) + "\n"


def parse_subset(text: str) -> frozenset:
    try:
        return frozenset(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"expected comma-separated element indices, found {text!r}") from None


def load(ref: str):
    """Load a preset (``presets:NAME``) or a file, dispatching on its header line."""
    from . import presets
    from .grouplaw import parse_bracelaw_file, parse_grouplaw_file
    if ref.startswith(PRESET_PREFIX):
        return presets.get(ref[len(PRESET_PREFIX):])
    path = Path(ref)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {ref}: {exc.strerror or exc}") from None
    lines = _lines(text)
    head = lines[0][1].split()[0] if lines else ""
    name = path.stem
    if head == "group":
        return parse_group_text(text, name=name)
    if head == "brace":
        return parse_brace_text(text)
    if head == "liealg":
        return parse_liealg_text(text)
    if head == "postlie":
        return parse_postlie_text(text)
    if head == "grouplaw":
        return parse_grouplaw_file(text, name=name)
    if head == "bracelaw":
        return parse_bracelaw_file(text, name=name)
    raise InputError(f"{ref}: unknown file header {head!r}")
