"""Write the example input files in data/ from the built-in presets."""
from pathlib import Path

from skewbrace import presets
from skewbrace.formats import format_brace, format_group, format_liealg, format_postlie
from skewbrace.grouplaw import format_bracelaw, format_grouplaw

DATA = Path(__file__).resolve().parent.parent / "data"

FILES = {
    "s3.group": ("s3", format_group),
    "c3xc2cubed.group": ("c3xc2cubed", format_group),
    "s3_opposite.brace": ("s3_opposite", format_brace),
    "s3_trivial.brace": ("s3_trivial", format_brace),
    "sl2.liealg": ("sl2", format_liealg),
    "a1_1_circ.liealg": ("a1_1_circ", format_liealg),
    "sl2_case1.postlie": ("sl2_case1", format_postlie),
    "sl2_case2.postlie": ("sl2_case2", format_postlie),
    "a1_1.postlie": ("a1_1", format_postlie),
    "a1_1_model.bracelaw": ("a1_1_model", format_bracelaw),
    "affine2d.bracelaw": ("affine2d", format_bracelaw),
}


def main():
    DATA.mkdir(exist_ok=True)
    for fname, (preset, fmt) in FILES.items():
        (DATA / fname).write_text(fmt(presets.get(preset)))
    affine = presets.get("affine2d").circ
    (DATA / "affine2d_circ.grouplaw").write_text(format_grouplaw(affine))
    # a table that is Latin but not associative, for the failure path
    (DATA / "loop5.group").write_text(
        "# Latin square with identity 0 that is not associative\n"
        "group\norder 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n")
    print("\n".join(sorted(p.name for p in DATA.iterdir())))


if __name__ == "__main__":
    main()
