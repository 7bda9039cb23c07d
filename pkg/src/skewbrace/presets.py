"""Named built-in objects, addressed on the command line as ``presets:NAME``.

Groups follow the pattern ``cN`` and ``cNxcM...`` besides the fixed names below;
``abelian_N`` is the additive law on R^N paired with itself.
"""
from __future__ import annotations

import re

from .braces import almost_trivial_brace, trivial_brace
from .errors import InputError
from .grouplaw.parser import BraceLaw, parse
from .groups import (alternating, cyclic, dicyclic, dihedral, direct_product, quaternion,
                     symmetric)
from .lie import a1_1_circ, affine_line, sl2, so3
from .postlie import a1_1_postlie, opposite_postlie, trivial_postlie


def _addition(dim):
    return [f"a{i} + b{i}" for i in range(1, dim + 1)]


def _bracelaw(name, dim, dot, circ, lets=None):
    head = [f"let {k} = {v}" for k, v in (lets or {}).items()]
    d = parse("\n".join(head + dot), dim=dim, name=f"{name}.dot")
    c = parse("\n".join(head + circ), dim=dim, name=f"{name}.circ")
    return BraceLaw(dim, d, c, name)


def a1_1_model() -> BraceLaw:
    """Additive R^3 with the circle law written in the (X, Y, Z) chart, s = X - Y Z."""
    return _bracelaw("a1_1_model", 3, _addition(3), [
        "a1 + b1 + a3*exp(s)*b2 + a2*exp(-s)*b3",
        "a2 + exp(s)*b2",
        "a3 + exp(-s)*b3",
    ], lets={"s": "a1 - a2*a3"})


def a1_1_semidirect() -> BraceLaw:
    """The same brace after the chart change x = X - Y Z: a Heisenberg-type dot, semidirect circ."""
    return _bracelaw("a1_1_semidirect", 3, [
        "a1 + b1 - a2*b3 - b2*a3",
        "a2 + b2",
        "a3 + b3",
    ], [
        "a1 + b1",
        "a2 + exp(a1)*b2",
        "a3 + exp(-a1)*b3",
    ])


def affine2d() -> BraceLaw:
    """Additive R^2 with (x, s) o (y, t) = (x + e^s y, s + t)."""
    return _bracelaw("affine2d", 2, _addition(2), ["a1 + exp(a2)*b1", "a2 + b2"])


def affine2d_almost_trivial() -> BraceLaw:
    """The affine law paired with its opposite."""
    return _bracelaw("affine2d_almost_trivial", 2, ["a1 + exp(a2)*b1", "a2 + b2"],
                     ["b1 + exp(b2)*a1", "b2 + a2"])


def abelian_law(dim: int) -> BraceLaw:
    return _bracelaw(f"abelian_{dim}", dim, _addition(dim), _addition(dim))


def c3xc2cubed():
    g = direct_product(cyclic(3), cyclic(2), cyclic(2), cyclic(2))
    g.name = "C3xC2xC2xC2"
    return g


_FIXED = {
    # name: (kind, factory, description)
    "s3": ("group", lambda: symmetric(3), "symmetric group S3"),
    "s4": ("group", lambda: symmetric(4), "symmetric group S4"),
    "a4": ("group", lambda: alternating(4), "alternating group A4"),
    "a5": ("group", lambda: alternating(5), "alternating group A5"),
    "d8": ("group", lambda: dihedral(4), "dihedral group of order 8"),
    "d12": ("group", lambda: dihedral(6), "dihedral group of order 12"),
    "q8": ("group", quaternion, "quaternion group"),
    "dic12": ("group", lambda: dicyclic(3), "dicyclic group of order 12"),
    "c3xc2cubed": ("group", c3xc2cubed, "C3 x C2 x C2 x C2, order 24"),
    "s3_trivial": ("brace", lambda: trivial_brace(symmetric(3)), "S3 with circ = dot"),
    "s3_opposite": ("brace", lambda: almost_trivial_brace(symmetric(3)), "S3 with circ = opposite of dot"),
    "a1_1_model": ("bracelaw", a1_1_model, "3D brace, additive dot, circ in the (X,Y,Z) chart"),
    "a1_1_semidirect": ("bracelaw", a1_1_semidirect, "3D brace in the semidirect chart"),
    "affine2d": ("bracelaw", affine2d, "additive R^2 with the affine circle law"),
    "affine2d_almost_trivial": ("bracelaw", affine2d_almost_trivial, "affine law with its opposite"),
    "sl2": ("liealg", sl2, "sl2, basis h, e, f"),
    "so3": ("liealg", so3, "so3, [e1,e2]=e3 cyclically"),
    "a1_1_circ": ("liealg", a1_1_circ, "[e1,e2]=e2, [e1,e3]=-e3"),
    "affine_line": ("liealg", affine_line, "[e2,e1]=e1"),
    "sl2_case1": ("postlie", lambda: trivial_postlie(sl2()), "sl2 with zero triangle"),
    "sl2_case2": ("postlie", lambda: opposite_postlie(sl2()), "sl2 with triangle = -bracket"),
    "so3_case2": ("postlie", lambda: opposite_postlie(so3()), "so3 with triangle = -bracket"),
    "a1_1": ("postlie", a1_1_postlie, "abelian dot on R^3, circ = a1_1_circ"),
}

_PATTERNS = [
    (re.compile(r"c(\d+)((?:xc\d+)*)"), "group", "cyclic group or direct product, e.g. c4, c2xc2xc2"),
    (re.compile(r"abelian_(\d+)"), "bracelaw", "additive law on R^N paired with itself"),
]


def _from_pattern(name):
    m = _PATTERNS[0][0].fullmatch(name)
    if m:
        orders = [int(x) for x in re.findall(r"\d+", name)]
        if any(k < 1 for k in orders):
            raise InputError(f"bad cyclic order in preset {name!r}")
        g = cyclic(orders[0]) if len(orders) == 1 else direct_product(*(cyclic(k) for k in orders))
        return g
    m = _PATTERNS[1][0].fullmatch(name)
    if m and int(m.group(1)) >= 1:
        return abelian_law(int(m.group(1)))
    return None


def get(name: str):
    if name in _FIXED:
        return _FIXED[name][1]()
    obj = _from_pattern(name)
    if obj is None:
        raise InputError(f"unknown preset {name!r}; run 'skewbrace presets' for the list")
    return obj


def catalog() -> list[tuple[str, str, str]]:
    """(name, kind, description) rows, fixed names first then patterns."""
    rows = [(name, kind, desc) for name, (kind, _, desc) in sorted(_FIXED.items())]
    rows += [("cN[xcM...]", "group", _PATTERNS[0][2]), ("abelian_N", "bracelaw", _PATTERNS[1][2])]
    return rows
