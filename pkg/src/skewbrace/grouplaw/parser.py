"""Recursive-descent parser for closed-form group laws on R^n.

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := number | ident | "(" expr ")" | "exp" "(" expr ")" | "-" factor
    ident  := ("a" | "b") digits | let-bound name

A law is n component expressions in a1..an (left argument) and b1..bn
(right argument); the identity is the origin.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ..errors import DimensionMismatch, InputError, LawSyntaxError, UnknownVariable

_NORMALIZE = str.maketrans({"·": "*", "−": "-", "⋅": "*", "×": "*"})


class Expr:
    def evaluate(self, a, b):
        raise NotImplementedError


@dataclass(frozen=True)
class Const(Expr):
    value: float
    text: str

    def evaluate(self, a, b):
        return self.value

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class Var(Expr):
    side: str      # "a" or "b"
    index: int     # 1-based

    def evaluate(self, a, b):
        return (a if self.side == "a" else b)[self.index - 1]

    def __str__(self):
        return f"{self.side}{self.index}"


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr

    def evaluate(self, a, b):
        return -self.arg.evaluate(a, b)

    def __str__(self):
        return f"-({self.arg})"


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr

    def evaluate(self, a, b):
        x, y = self.left.evaluate(a, b), self.right.evaluate(a, b)
        if self.op == "+":
            return x + y
        if self.op == "-":
            return x - y
        return x * y

    def __str__(self):
        return f"({self.left} {self.op} {self.right})"


@dataclass(frozen=True)
class Exp(Expr):
    arg: Expr

    def evaluate(self, a, b):
        return np.exp(self.arg.evaluate(a, b))

    def __str__(self):
        return f"exp({self.arg})"


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*(),=])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str, line: int = 1, col0: int = 1) -> list[Token]:
    text = text.translate(_NORMALIZE)
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise LawSyntaxError(line, col0 + pos, "a number, identifier or operator", text[pos])
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), line, col0 + pos))
        pos = m.end()
    out.append(Token("eof", "", line, col0 + len(text)))
    return out


class _Parser:
    def __init__(self, tokens, dim, lets):
        self.toks = tokens
        self.pos = 0
        self.dim = dim
        self.lets = lets

    @property
    def cur(self) -> Token:
        return self.toks[self.pos]

    def expect(self, text, what=None):
        tok = self.cur
        if tok.text != text:
            raise LawSyntaxError(tok.line, tok.col, what or repr(text), tok.text or "end of input")
        self.pos += 1
        return tok

    def expr(self) -> Expr:
        node = self.term()
        while self.cur.text in ("+", "-"):
            op = self.cur.text
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.cur.text == "*":
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        tok = self.cur
        if tok.kind == "num":
            self.pos += 1
            return Const(float(tok.text), tok.text)
        if tok.text == "-":
            self.pos += 1
            return Neg(self.factor())
        if tok.text == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")", "')'")
            return node
        if tok.kind == "ident":
            self.pos += 1
            if tok.text == "exp":
                self.expect("(", "'(' after exp")
                node = self.expr()
                self.expect(")", "')'")
                return Exp(node)
            return self.variable(tok)
        raise LawSyntaxError(tok.line, tok.col, "a number, variable, '(' , 'exp' or '-'",
                             tok.text or "end of input")

    def variable(self, tok: Token) -> Expr:
        if tok.text in self.lets:
            return self.lets[tok.text]
        m = re.fullmatch(r"([ab])(\d+)", tok.text)
        if not m:
            raise UnknownVariable(f"line {tok.line}, col {tok.col}: unknown name {tok.text!r}")
        idx = int(m.group(2))
        if self.dim is not None and not 1 <= idx <= self.dim:
            raise UnknownVariable(f"line {tok.line}, col {tok.col}: {tok.text} exceeds dimension {self.dim}")
        if idx < 1:
            raise UnknownVariable(f"line {tok.line}, col {tok.col}: variables are numbered from 1")
        return Var(m.group(1), idx)

    def at_end(self):
        if self.cur.kind != "eof":
            raise LawSyntaxError(self.cur.line, self.cur.col, "end of expression", self.cur.text)


def parse_expr(text: str, dim: int | None = None, lets: dict | None = None,
               line: int = 1, col: int = 1) -> Expr:
    p = _Parser(tokenize(text, line, col), dim, lets or {})
    node = p.expr()
    p.at_end()
    return node


def _max_index(node: Expr) -> int:
    if isinstance(node, Var):
        return node.index
    if isinstance(node, (Neg, Exp)):
        return _max_index(node.arg)
    if isinstance(node, BinOp):
        return max(_max_index(node.left), _max_index(node.right))
    return 0


class GroupLaw:
    """m(a, b) on R^n; evaluation is vectorised over trailing axes."""

    def __init__(self, dim: int, components, name: str | None = None, source: list[str] | None = None,
                 lets: list[tuple[str, str]] | None = None):
        if len(components) != dim:
            raise DimensionMismatch(f"law declares dimension {dim} but has {len(components)} components")
        self.dim = dim
        self.components = list(components)
        self.name = name
        self.source = source or [str(c) for c in components]
        self.lets = lets or []

    def __repr__(self):
        return f"<GroupLaw {self.name or ''} dim {self.dim}>"

    def __call__(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        shape = np.broadcast_shapes(a.shape, b.shape)
        out = np.empty(shape)
        for k, c in enumerate(self.components):
            out[k] = c.evaluate(a, b)
        return out

    def opposite(self) -> GroupLaw:
        """m_op(a, b) = m(b, a)."""
        swapped = [_swap(c) for c in self.components]
        return GroupLaw(self.dim, swapped, name=f"{self.name}^op" if self.name else None)


def _swap(node: Expr) -> Expr:
    if isinstance(node, Var):
        return Var("b" if node.side == "a" else "a", node.index)
    if isinstance(node, Neg):
        return Neg(_swap(node.arg))
    if isinstance(node, Exp):
        return Exp(_swap(node.arg))
    if isinstance(node, BinOp):
        return BinOp(node.op, _swap(node.left), _swap(node.right))
    return node


def _split_top_level(text: str) -> list[str] | None:
    """Split "(e1, e2, ...)" into components; None when there is no top-level tuple."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        return None
    depth = 0
    parts, start = [], 1
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(s) - 1:
                return None
        elif ch == "," and depth == 1:
            parts.append(s[start:i])
            start = i + 1
    parts.append(s[start:-1])
    return parts if len(parts) > 1 else None


def _parse_let(line: str, lineno: int, dim, lets: dict, let_src: list):
    m = re.fullmatch(r"\s*let\s+([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.*)", line)
    if not m:
        raise LawSyntaxError(lineno, 1, "'let <name> = <expr>'", line.strip())
    name, body = m.group(1), m.group(2)
    if name == "exp" or re.fullmatch(r"[ab]\d+", name):
        raise LawSyntaxError(lineno, line.index(name) + 1, "a name that is not reserved", name)
    lets[name] = parse_expr(body, dim, lets, lineno, m.start(2) + 1)
    let_src.append((name, body.strip()))


def law_from_components(components: list[str], dim: int | None = None, lets: dict | None = None,
                        name: str | None = None, let_src=None, first_line: int = 1) -> GroupLaw:
    lets = dict(lets or {})
    nodes = [parse_expr(c, dim, lets, first_line + k) for k, c in enumerate(components)]
    if dim is None:
        dim = len(nodes)
        used = max((_max_index(n) for n in nodes), default=0)
        if used > dim:
            raise UnknownVariable(f"variable index {used} exceeds dimension {dim}")
    return GroupLaw(dim, nodes, name=name, source=[c.strip() for c in components], lets=let_src)


def parse(text: str, dim: int | None = None, lets: dict | None = None, name: str | None = None) -> GroupLaw:
    """Parse a ``grouplaw`` file, or a bare law: one expression, a tuple ``(e1, ..., en)``,
    or one component per line (optionally preceded by ``let`` lines)."""
    stripped = _strip_comments(text)
    if stripped and stripped[0][1].split()[0] == "grouplaw":
        return parse_grouplaw_file(text, name=name)
    lets = dict(lets or {})
    let_src: list = []
    comps = []
    first = None
    for lineno, line in stripped:
        if line.split()[0] == "let":
            _parse_let(line, lineno, dim, lets, let_src)
        else:
            first = first or lineno
            comps.append(line)
    if not comps:
        raise LawSyntaxError(1, 1, "an expression", "end of input")
    if len(comps) == 1:
        tup = _split_top_level(comps[0])
        if tup is not None:
            comps = tup
    if dim is not None and len(comps) != dim:
        raise DimensionMismatch(f"expected {dim} components, got {len(comps)}")
    return law_from_components(comps, dim, lets, name, let_src, first)


def _strip_comments(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            out.append((i, line))
    return out


def _read_dim(lines, k):
    lineno, line = lines[k]
    parts = line.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise LawSyntaxError(lineno, 1, "'dim N'", line.strip())
    return int(parts[1])


def _read_block(lines, k, dim, lets, let_src, header):
    lineno, line = lines[k]
    if line.strip() != header:
        raise LawSyntaxError(lineno, 1, repr(header), line.strip())
    k += 1
    comps = []
    first = None
    while len(comps) < dim:
        if k >= len(lines):
            raise DimensionMismatch(f"block {header!r} has {len(comps)} components, expected {dim}")
        lineno, line = lines[k]
        if line.split()[0] == "let":
            _parse_let(line, lineno, dim, lets, let_src)
        else:
            first = first or lineno
            comps.append((lineno, line))
        k += 1
    nodes = [parse_expr(c, dim, lets, ln) for ln, c in comps]
    return nodes, [c.strip() for _, c in comps], k


def parse_grouplaw_file(text: str, name: str | None = None) -> GroupLaw:
    lines = _strip_comments(text)
    if not lines or lines[0][1].strip() != "grouplaw":
        raise LawSyntaxError(lines[0][0] if lines else 1, 1, "'grouplaw'", lines[0][1] if lines else "")
    dim = _read_dim(lines, 1)
    lets: dict = {}
    let_src: list = []
    k = 2
    while k < len(lines) and lines[k][1].split()[0] == "let":
        _parse_let(lines[k][1], lines[k][0], dim, lets, let_src)
        k += 1
    if k >= len(lines):
        raise LawSyntaxError(lines[-1][0] + 1, 1, "'law:'", "end of input")
    nodes, src, k = _read_block(lines, k, dim, lets, let_src, "law:")
    if k < len(lines):
        raise LawSyntaxError(lines[k][0], 1, "end of file", lines[k][1].strip())
    return GroupLaw(dim, nodes, name=name, source=src, lets=let_src)


@dataclass
class BraceLaw:
    dim: int
    dot: GroupLaw
    circ: GroupLaw
    name: str | None = None


def parse_bracelaw_file(text: str, name: str | None = None) -> BraceLaw:
    lines = _strip_comments(text)
    if not lines or lines[0][1].strip() != "bracelaw":
        raise LawSyntaxError(lines[0][0] if lines else 1, 1, "'bracelaw'", lines[0][1] if lines else "")
    dim = _read_dim(lines, 1)
    lets: dict = {}
    let_src: list = []
    k = 2
    while k < len(lines) and lines[k][1].split()[0] == "let":
        _parse_let(lines[k][1], lines[k][0], dim, lets, let_src)
        k += 1
    if k >= len(lines):
        raise LawSyntaxError(lines[-1][0] + 1, 1, "'dot:'", "end of input")
    dot_lets = list(let_src)
    dnodes, dsrc, k = _read_block(lines, k, dim, lets, let_src, "dot:")
    if k >= len(lines):
        raise LawSyntaxError(lines[-1][0] + 1, 1, "'circ:'", "end of input")
    cnodes, csrc, k = _read_block(lines, k, dim, lets, let_src, "circ:")
    if k < len(lines):
        raise LawSyntaxError(lines[k][0], 1, "end of file", lines[k][1].strip())
    dot = GroupLaw(dim, dnodes, name=f"{name}.dot" if name else "dot", source=dsrc, lets=dot_lets)
    circ = GroupLaw(dim, cnodes, name=f"{name}.circ" if name else "circ", source=csrc, lets=let_src)
    return BraceLaw(dim, dot, circ, name)


def format_grouplaw(law: GroupLaw) -> str:
    out = ["grouplaw", f"dim {law.dim}"]
    out += [f"let {n} = {b}" for n, b in law.lets]
    out.append("law:")
    out += law.source
    return "\n".join(out) + "\n"


def format_bracelaw(bl: BraceLaw) -> str:
    out = ["bracelaw", f"dim {bl.dim}"]
    out += [f"let {n} = {b}" for n, b in bl.circ.lets]
    out.append("dot:")
    out += bl.dot.source
    out.append("circ:")
    out += bl.circ.source
    return "\n".join(out) + "\n"


def read_law_source(text: str, name=None):
    """Dispatch on the header line: grouplaw or bracelaw."""
    lines = _strip_comments(text)
    head = lines[0][1].strip() if lines else ""
    if head == "grouplaw":
        return parse_grouplaw_file(text, name)
    if head == "bracelaw":
        return parse_bracelaw_file(text, name)
    raise InputError(f"expected a 'grouplaw' or 'bracelaw' header, found {head!r}")
