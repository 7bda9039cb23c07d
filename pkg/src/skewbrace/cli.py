"""Command-line entry point: ``skewbrace <subcommand> ...``.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage or I/O errors.
Reports are ``key: value`` lines in a fixed order, so repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import braces as fb
from . import lie, postlie, presets
from .config import FINITE, NUMERIC
from .enumeration import enumeration_report
from .errors import AxiomViolation, InputError, SkewBraceError, VerificationError
from .formats import format_brace, format_postlie, load, parse_subset
from .grouplaw import (BraceLaw, GroupLaw, check_brace_numeric, check_group_numeric,
                       extract_bracket, extract_triangle, rationalize)
from .groups import FiniteGroup, automorphisms, identify
from .lie import LieAlgebraSC, format_brackets
from .linalg import RationalSubspace, fstr
from .postlie import PostLieAlgebra

FORMATS = {
    "group": "README 'Group file' (header `group`)",
    "brace": "README 'Brace file' (header `brace`)",
    "liealg": "README 'Lie algebra file' (header `liealg`)",
    "postlie": "README 'Post-Lie file' (header `postlie`)",
    "grouplaw": "README 'Group-law file' (header `grouplaw`)",
    "bracelaw": "README 'Brace-law file' (header `bracelaw`)",
}


class Failure(Exception):
    """A check ran to completion and failed; the report is still written."""


class Report:
    def __init__(self, command, source):
        self.lines = [f"command: {command}", f"input: {source}"]
        self.payload = None  # optional: report lines -> file text embedding them as comments

    def add(self, key, value):
        self.lines.append(f"{key}: {value}")

    def text(self):
        return "\n".join(self.lines) + "\n"


def yesno(flag) -> str:
    return "yes" if flag else "no"


def fmt_set(s) -> str:
    return "{" + ", ".join(str(x) for x in sorted(s)) + "}"


def fmt_vector(v) -> str:
    terms = []
    for k, x in enumerate(v):
        if x:
            coef = "" if x == 1 else "-" if x == -1 else fstr(x) + "*"
            terms.append(f"{coef}e{k + 1}")
    return "+".join(terms).replace("+-", "-") if terms else "0"


def fmt_subspace(s: RationalSubspace) -> str:
    if s.is_zero():
        return "0"
    if s.is_full():
        return "L"
    return "span(" + ", ".join(fmt_vector(v) for v in s.vectors) + ")"


def fmt_float(x: float) -> str:
    return f"{x:.3e}"


def _expect(obj, kinds, ref):
    if not isinstance(obj, kinds):
        names = ", ".join(k.__name__ for k in kinds)
        raise InputError(f"{ref}: expected {names}, got {type(obj).__name__}")
    return obj


def _triviality(b) -> str:
    return fb.classify_triviality(b).replace("_", " ")


# --- subcommands ----------------------------------------------------------------------

def cmd_check_group(args, rep):
    obj = _expect(load(args.input), (FiniteGroup, GroupLaw), args.input)
    if isinstance(obj, GroupLaw):
        r = check_group_numeric(obj, args.samples, args.tol, args.seed)
        rep.add("dim", obj.dim)
        rep.add("samples", r.samples)
        rep.add("seed", r.seed)
        rep.add("tol", f"{r.tol:g}")
        rep.add("max identity residual", fmt_float(r.identity))
        rep.add("max associativity residual", fmt_float(r.associativity))
        rep.add("max inverse residual", fmt_float(r.inverse))
        if not r.passed:
            raise Failure("a residual reaches the tolerance")
        return
    g = obj
    rep.add("order", g.order)
    rep.add("abelian", yesno(g.is_abelian()))
    rep.add("solvable", yesno(g.is_solvable()))
    rep.add("derived series orders", " ".join(str(len(s)) for s in g.derived_series()))
    rep.add("center order", len(g.center()))
    if g.order <= args.max_order:
        rep.add("automorphisms", len(automorphisms(g)))
    rep.add("abstractly simple", yesno(g.is_abstractly_simple()))
    rep.add("identified as", identify(g) or "unidentified")


def cmd_check_brace(args, rep):
    b = _expect(load(args.input), (fb.FiniteSkewBrace,), args.input)
    ideals = fb.all_ideals(b, args.max_order)
    series, solvable = fb.derived_series(b)
    tri = _triviality(b)
    rep.add("order", b.order)
    rep.add("brace identity", "holds")
    rep.add("lambda homomorphism", yesno(fb.lambda_is_homomorphism(b)))
    rep.add("additive", identify(b.dot) or "unidentified")
    rep.add("multiplicative", identify(b.circ) or "unidentified")
    rep.add("triviality", tri)
    rep.add("solvable", yesno(solvable))
    rep.add("derived series orders", " ".join(str(len(s)) for s in series))
    rep.add("ideals", len(ideals))
    rep.add("simple", yesno(len(ideals) == 2))
    rep.add("summary", f"{tri}, {'solvable' if solvable else 'not solvable'}, ideals: {len(ideals)}")


def cmd_ideals(args, rep):
    obj = _expect(load(args.input), (fb.FiniteSkewBrace, LieAlgebraSC, PostLieAlgebra), args.input)
    if isinstance(obj, fb.FiniteSkewBrace):
        ideals = fb.all_ideals(obj, args.max_order)
        rep.add("ideals", len(ideals))
        for k, s in enumerate(ideals, start=1):
            rep.add(f"ideal {k}", f"order {len(s)} {fmt_set(s)}")
        rep.add("simple", yesno(len(ideals) == 2))
        return
    if isinstance(obj, LieAlgebraSC):
        res = lie.all_ideals_lowdim(obj)
        _report_invariant(rep, res, "ideal")
        rep.add("simple", yesno(res.only_trivial() and not obj.is_abelian()))
        return
    res = postlie.brace_ideals_infinitesimal(obj)
    circ_ideals = lie.all_ideals_lowdim(obj.circ)
    rep.add("circ bracket", format_brackets(obj.circ.c))
    rep.add("circ ideals", len(circ_ideals.subspaces))
    for k, s in enumerate(sorted(circ_ideals.subspaces, key=RationalSubspace.sort_key), start=1):
        r = postlie.brace_ideal_test(obj, s)
        rep.add(f"circ ideal {k}", f"{fmt_subspace(s)} dot-ideal {yesno(r.dot_ideal)} "
                f"triangle-stable {yesno(r.triangle_stable)} brace-ideal {yesno(r.is_brace_ideal)}")
    if circ_ideals.continuous:
        rep.add("circ continuous families", "yes")
    _report_invariant(rep, res, "brace ideal")
    rep.add("brace simple", yesno(res.only_trivial()))


def _report_invariant(rep, res, label):
    subs = sorted(res.subspaces, key=RationalSubspace.sort_key)
    rep.add(f"{label}s", len(subs))
    for k, s in enumerate(subs, start=1):
        rep.add(f"{label} {k}", fmt_subspace(s))
    for w in res.line_families:
        rep.add(f"{label} family", f"every line in {fmt_subspace(w)}")
    for f in res.hyperplane_families:
        rep.add(f"{label} family", f"kernel of every functional in {fmt_subspace(f)}")


def cmd_derived(args, rep):
    obj = _expect(load(args.input), (fb.FiniteSkewBrace, FiniteGroup, LieAlgebraSC, PostLieAlgebra),
                  args.input)
    if isinstance(obj, fb.FiniteSkewBrace):
        series, solvable = fb.derived_series(obj)
        for k, s in enumerate(series):
            rep.add(f"term {k}", f"order {len(s)} {fmt_set(s)}")
    elif isinstance(obj, FiniteGroup):
        series = obj.derived_series()
        solvable = obj.is_solvable()
        for k, s in enumerate(series):
            rep.add(f"term {k}", f"order {len(s)} {fmt_set(s)}")
    elif isinstance(obj, LieAlgebraSC):
        series = lie.derived_series(obj)
        solvable = lie.is_solvable(obj)
        for k, s in enumerate(series):
            rep.add(f"term {k}", fmt_subspace(s))
    else:
        postlie.check_postlie(obj)
        series, solvable = postlie.brace_derived_series_infinitesimal(obj)
        for k, s in enumerate(series):
            rep.add(f"term {k}", fmt_subspace(s))
        rep.add("dot solvable", yesno(lie.is_solvable(obj.dot)))
        rep.add("circ solvable", yesno(lie.is_solvable(obj.circ)))
    rep.add("stable term", f"term {len(series) - 1}")
    rep.add("solvable", yesno(solvable))


def cmd_quotient(args, rep):
    b = _expect(load(args.input), (fb.FiniteSkewBrace,), args.input)
    if args.ideal is None:
        raise InputError("quotient needs --ideal, e.g. --ideal 0,1,2")
    ideal = parse_subset(args.ideal)
    q, labels = fb.quotient(b, ideal)
    fb.verify_brace(q.dot, q.circ)
    rep.add("ideal", fmt_set(ideal))
    rep.add("quotient order", q.order)
    rep.add("projection", " ".join(str(x) for x in labels))
    rep.add("triviality", _triviality(q))
    rep.payload = lambda lines: format_brace(q, comments=lines)


def cmd_enumerate(args, rep):
    if args.additive is None:
        raise InputError("enumerate needs --additive FILE")
    g = _expect(load(args.additive), (FiniteGroup,), args.additive)
    report, _ = enumeration_report(g, args.max_order, args.report_simple)
    rep.lines[1] = f"input: {args.additive}"
    rep.add("additive", identify(g) or report.additive)
    rep.add("order", report.order)
    rep.add("automorphisms", report.automorphisms)
    rep.add("braces", report.braces)
    rep.add("isomorphism classes", report.classes)
    for key in ("trivial", "almost_trivial", "neither"):
        rep.add(f"classes {key.replace('_', ' ')}", report.triviality[key])
    if not args.report_simple:
        return
    rep.add("simple classes", len(report.simple))
    for k, (b, size) in enumerate(report.simple, start=1):
        profile = {}
        for o in b.circ.element_orders():
            profile[o] = profile.get(o, 0) + 1
        rep.add(f"simple {k} class size", size)
        rep.add(f"simple {k} multiplicative", identify(b.circ) or "unidentified")
        rep.add(f"simple {k} circ order profile", " ".join(f"{o}:{c}" for o, c in sorted(profile.items())))
        rep.add(f"simple {k} triviality", _triviality(b))
        rep.add(f"simple {k} solvable", yesno(fb.is_solvable(b)))
        rep.add(f"simple {k} circ solvable", yesno(b.circ.is_solvable()))
        rep.add(f"simple {k} circ table", ";".join(" ".join(str(x) for x in row) for row in b.circ.rows))


def cmd_postlie_check(args, rep):
    P = _expect(load(args.input), (PostLieAlgebra,), args.input)
    rep.add("dim", P.dim)
    rep.add("dot bracket", format_brackets(P.dot.c))
    rep.add("triangle", _format_triangle(P.triangle))
    postlie.check_postlie(P)
    rep.add("circ bracket", format_brackets(P.circ.c))
    rep.add("axioms", "hold")


def _format_triangle(t) -> str:
    n = len(t)
    parts = [f"e{i + 1}|>e{j + 1}={fmt_vector(t[i][j])}"
             for i in range(n) for j in range(n) if any(t[i][j])]
    return ", ".join(parts) if parts else "0"


def cmd_rigidity(args, rep):
    P = _expect(load(args.input), (PostLieAlgebra,), args.input)
    res = postlie.rigidity_classify(P)
    rep.add("circ simple", "yes")
    rep.add("case", res.case)
    rep.add("result line", res.detail)
    if res.case == "violation":
        raise Failure(res.detail)


def cmd_lsb_check(args, rep):
    bl = _expect(load(args.input), (BraceLaw,), args.input)
    rep.add("dim", bl.dim)
    rep.add("samples", args.samples)
    rep.add("seed", args.seed)
    rep.add("tol", f"{args.tol:g}")
    failed = []
    for role, law in (("dot", bl.dot), ("circ", bl.circ)):
        g = check_group_numeric(law, args.samples, args.tol, args.seed)
        rep.add(f"{role} group residual", fmt_float(max(g.identity, g.associativity, g.inverse)))
        if not g.passed:
            failed.append(f"{role} is not a group law")
    r = check_brace_numeric(bl.dot, bl.circ, args.samples, args.tol, args.seed)
    rep.add("max brace residual", fmt_float(r.residual))
    if not r.passed:
        failed.append("brace identity residual reaches the tolerance")
    if failed:
        raise Failure("; ".join(failed))


def cmd_extract(args, rep):
    bl = _expect(load(args.input), (BraceLaw,), args.input)
    tb, tc, tt = extract_bracket(bl.dot), extract_bracket(bl.circ), extract_triangle(bl.dot, bl.circ)
    rep.add("dot bracket error", fmt_float(tb.error))
    rep.add("circ bracket error", fmt_float(tc.error))
    rep.add("triangle error", fmt_float(tt.error))
    dot = LieAlgebraSC(rationalize(tb, args.max_den, NUMERIC.rational_tol))
    circ = LieAlgebraSC(rationalize(tc, args.max_den, NUMERIC.rational_tol))
    P = PostLieAlgebra(dot, rationalize(tt, args.max_den, NUMERIC.rational_tol))
    rep.add("dot bracket", format_brackets(dot.c))
    rep.add("circ bracket", format_brackets(circ.c))
    rep.add("triangle", _format_triangle(P.triangle))
    if P.circ != circ:
        raise AxiomViolation("i", 0, 0, 0)
    postlie.check_postlie(P)
    rep.add("axioms", "hold")
    rep.payload = lambda lines: format_postlie(P, comments=lines)


def cmd_presets(args, rep):
    for name, kind, desc in presets.catalog():
        rep.add(name, f"{kind}, {desc}")


COMMANDS = {
    "check-group": (cmd_check_group, "Validate a finite group table or sample a group law.",
                    ("group", "grouplaw")),
    "check-brace": (cmd_check_brace, "Verify a finite skew brace and summarise it.", ("brace",)),
    "ideals": (cmd_ideals, "List the ideals of a brace, Lie algebra or post-Lie algebra (dim <= 3).",
               ("brace", "liealg", "postlie")),
    "derived": (cmd_derived, "Derived series of a brace, group, Lie or post-Lie algebra.",
                ("brace", "group", "liealg", "postlie")),
    "quotient": (cmd_quotient, "Quotient of a brace by an ideal; writes a brace file to --out.", ("brace",)),
    "enumerate": (cmd_enumerate, "Enumerate all skew braces with the given additive group.", ("group",)),
    "postlie-check": (cmd_postlie_check, "Check the post-Lie axioms exactly.", ("postlie",)),
    "rigidity": (cmd_rigidity, "Classify a post-Lie structure whose sub-adjacent algebra is simple.",
                 ("postlie",)),
    "lsb-check": (cmd_lsb_check, "Sample the group and brace identities of a pair of group laws.",
                  ("bracelaw",)),
    "extract": (cmd_extract, "Differentiate a brace law into an exact post-Lie algebra; writes a postlie file.",
                ("bracelaw",)),
    "presets": (cmd_presets, "List the built-in presets.", ()),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=int, default=NUMERIC.samples, help="sampled triples (default %(default)s)")
    common.add_argument("--tol", type=float, default=NUMERIC.tol, help="residual tolerance (default %(default)s)")
    common.add_argument("--seed", type=int, default=NUMERIC.seed, help="PRNG seed (default %(default)s)")
    common.add_argument("--max-den", type=int, default=NUMERIC.max_den,
                        help="largest denominator when rationalising (default %(default)s)")
    common.add_argument("--max-order", type=int, default=FINITE.max_order,
                        help="finite order bound (default %(default)s)")
    common.add_argument("--out", default="-", help="output path, '-' for standard output (default -)")
    p = argparse.ArgumentParser(prog="skewbrace", description="Skew braces and post-Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")
    for name, (_, desc, fmts) in COMMANDS.items():
        epilog = ("Input format: " + "; ".join(FORMATS[f] for f in fmts)
                  + ". Inputs may also be presets:NAME.") if fmts else "Input format: none."
        sp = sub.add_parser(name, parents=[common], help=desc, description=desc, epilog=epilog)
        if name == "enumerate":
            sp.add_argument("--additive", metavar="FILE", help="additive group (file or presets:NAME)")
            sp.add_argument("--report-simple", action="store_true", help="also list the simple braces")
        elif name != "presets":
            sp.add_argument("input", metavar="FILE", help="input file or presets:NAME")
        if name == "quotient":
            sp.add_argument("--ideal", help="comma-separated element indices of the ideal")
    return p


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {path}: {exc.strerror or exc}") from None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.samples < 1 or args.tol <= 0 or args.max_den < 1 or args.max_order < 1:
        parser.error("--samples, --tol, --max-den and --max-order must be positive")
    func = COMMANDS[args.command][0]
    rep = Report(args.command, getattr(args, "input", None) or "-")
    status = 0
    try:
        func(args, rep)
        rep.add("result", "pass")
    except (Failure, VerificationError) as exc:
        rep.add("result", "fail")
        rep.add("reason", str(exc))
        rep.payload = None
        status = 1
    except SkewBraceError as exc:
        print(f"skewbrace {args.command}: error: {exc}", file=sys.stderr)
        return 2
    try:
        _write(args.out, rep.payload(rep.lines) if rep.payload else rep.text())
    except InputError as exc:
        print(f"skewbrace {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
