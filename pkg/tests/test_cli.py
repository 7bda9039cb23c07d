from pathlib import Path

import pytest

from skewbrace import presets
from skewbrace.cli import COMMANDS, main
from skewbrace.errors import InputError
from skewbrace.formats import (format_brace, format_group, format_liealg, format_postlie, load,
                               parse_brace_text, parse_group_text, parse_liealg_text, parse_postlie_text)

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line and not line.startswith("#"))


def test_check_brace_example(capsys):
    code, out, _ = run(capsys, "check-brace", str(DATA / "s3_opposite.brace"))
    assert code == 0
    assert fields(out)["summary"] == "almost trivial, solvable, ideals: 3"


def test_rigidity_example(capsys):
    code, out, _ = run(capsys, "rigidity", str(DATA / "sl2_case2.postlie"))
    assert code == 0
    assert "case (ii): ▷ = −[·,·], circ = −dot" in out
    code, out, _ = run(capsys, "rigidity", str(DATA / "sl2_case1.postlie"))
    assert code == 0 and fields(out)["case"] == "i"


def test_rigidity_rejects_nonsimple_circ(capsys):
    code, out, _ = run(capsys, "rigidity", "presets:a1_1")
    assert code == 1 and fields(out)["result"] == "fail"


def test_lsb_check_example(capsys):
    code, out, _ = run(capsys, "lsb-check", "presets:a1_1_model", "--samples", "1000", "--tol", "1e-8", "--seed", "42")
    assert code == 0
    assert float(fields(out)["max brace residual"]) < 1e-8


def test_verification_failure_exit_1(capsys):
    code, out, _ = run(capsys, "check-group", str(DATA / "loop5.group"))
    assert code == 1 and "associativity" in fields(out)["reason"]
    code, out, _ = run(capsys, "quotient", "presets:s3_opposite", "--ideal", "0,1")
    assert code == 1


def test_usage_errors_exit_2(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["check-brace", "presets:s3_opposite", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    code, _, err = run(capsys, "check-brace", str(tmp_path / "missing.brace"))
    assert code == 2 and "cannot read" in err
    code, _, err = run(capsys, "check-brace", "presets:nosuch")
    assert code == 2
    code, _, err = run(capsys, "check-group", "presets:sl2")
    assert code == 2
    (tmp_path / "bad.group").write_text("group\norder 2\n0 1\n")
    code, _, err = run(capsys, "check-group", str(tmp_path / "bad.group"))
    assert code == 2
    code, _, _ = run(capsys, "enumerate", "--additive", "presets:c7", "--max-order", "6")
    assert code == 2


def test_help_names_input_format(capsys):
    for name, (_, _, fmts) in COMMANDS.items():
        with pytest.raises(SystemExit) as exc:
            main([name, "--help"])
        assert exc.value.code == 0
        out = capsys.readouterr().out
        assert "Input format" in out
        for f in fmts:
            assert f"header `{f}`" in out.replace("\n", " ").replace("  ", " ") or f in out
        for flag in ("--samples", "--tol", "--seed", "--max-den", "--max-order", "--out"):
            assert flag in out


def test_extract_writes_consumable_postlie(capsys, tmp_path):
    target = tmp_path / "a1_1.postlie"
    code, _, _ = run(capsys, "extract", "presets:a1_1_model", "--out", str(target))
    assert code == 0
    P = load(str(target))
    assert P.triangle == presets.get("a1_1").triangle
    code, out, _ = run(capsys, "postlie-check", str(target))
    assert code == 0 and fields(out)["axioms"] == "hold"
    code, out, _ = run(capsys, "ideals", str(target))
    assert fields(out)["brace simple"] == "yes"


def test_quotient_writes_consumable_brace(capsys, tmp_path):
    target = tmp_path / "q.brace"
    code, _, _ = run(capsys, "quotient", "presets:s3_opposite", "--ideal", "0,3,4", "--out", str(target))
    assert code == 0
    code, out, _ = run(capsys, "check-brace", str(target))
    assert code == 0 and fields(out)["order"] == "2" and fields(out)["triviality"] == "trivial"


def test_other_subcommands(capsys):
    code, out, _ = run(capsys, "derived", "presets:a1_1")
    assert code == 0 and fields(out)["term 0"] == "L" and fields(out)["solvable"] == "no"
    code, out, _ = run(capsys, "derived", "presets:a1_1_circ")
    assert fields(out)["term 1"] == "span(e2, e3)" and fields(out)["solvable"] == "yes"
    code, out, _ = run(capsys, "ideals", "presets:a1_1_circ")
    assert fields(out)["ideals"] == "5"
    code, out, _ = run(capsys, "ideals", "presets:s3_opposite")
    assert fields(out)["ideal 2"] == "order 3 {0, 3, 4}"
    code, out, _ = run(capsys, "check-group", "presets:a5")
    assert fields(out)["abstractly simple"] == "yes" and fields(out)["identified as"] == "A5"
    code, out, _ = run(capsys, "check-group", str(DATA / "affine2d_circ.grouplaw"))
    assert code == 0
    code, out, _ = run(capsys, "enumerate", "--additive", str(DATA / "s3.group"))
    assert fields(out)["braces"] == "8" and fields(out)["isomorphism classes"] == "4"
    code, out, _ = run(capsys, "presets")
    assert code == 0 and "a1_1_model: bracelaw" in out


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "check-brace", "presets:s3_opposite", "--out", str(target))
    assert code == 0 and out == ""
    assert "summary: almost trivial, solvable, ideals: 3" in target.read_text()


def test_reports_are_deterministic(capsys):
    for args in (["lsb-check", "presets:affine2d", "--seed", "7"], ["extract", "presets:affine2d"],
                 ["enumerate", "--additive", "presets:q8", "--report-simple"]):
        assert run(capsys, *args) == run(capsys, *args)


# --- file formats -------------------------------------------------------------------

@pytest.mark.parametrize("name, fmt, parse", [
    ("s4", format_group, parse_group_text), ("s3_opposite", format_brace, parse_brace_text),
    ("sl2", format_liealg, parse_liealg_text), ("a1_1", format_postlie, parse_postlie_text),
])
def test_round_trip(name, fmt, parse):
    obj = presets.get(name)
    again = parse(fmt(obj))
    if name == "a1_1":
        assert again.dot == obj.dot and again.triangle == obj.triangle
    elif name == "s4":
        assert again.rows == obj.rows
    else:
        assert again == obj


def test_data_files_load():
    for p in sorted(DATA.iterdir()):
        if p.name == "loop5.group":
            continue
        load(str(p))


@pytest.mark.parametrize("text", [
    "", "group\n", "group\norder 2\n0 1\n", "group\norder 2\n0 1\n1 x\n", "group\norder 2\n0 1\n1 0\n1 0\n",
    "brace\norder 1\n0\ncirc:\n0\n", "liealg\ndim 2\nc 2 1 1 1\n", "liealg\ndim 2\nc 1 2 3 1\n",
    "liealg\ndim 2\nc 1 2 1 1/0\n", "postlie\ndim 2\nt 1 1 1 1\nt 1 1 1 2\n", "postlie\ndim 2\nq 1 1 1 1\n",
])
def test_malformed_inputs(text):
    parsers = {"group": parse_group_text, "brace": parse_brace_text, "liealg": parse_liealg_text,
               "postlie": parse_postlie_text}
    head = text.split("\n", 1)[0] or "group"
    with pytest.raises(InputError):
        parsers[head](text)


def test_comments_and_rationals():
    L = parse_liealg_text("# affine line\nliealg\ndim 2\nc 1 2 1 -1  # [e1,e2] = -e1\n")
    assert L == presets.get("affine_line")
    P = parse_postlie_text("postlie\ndim 1\nt 1 1 1 3/4\n")
    assert P.triangle[0][0][0] == 0.75
