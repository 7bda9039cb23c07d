"""Search the skew braces with additive group C3 x C2^3 for simple ones and describe them."""
import argparse
import time

from skewbrace import braces as fb
from skewbrace.config import FINITE
from skewbrace.enumeration import enumeration_report
from skewbrace.formats import format_brace
from skewbrace.groups import identify
from skewbrace.presets import c3xc2cubed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--write", metavar="FILE", help="write the first simple brace found as a brace file")
    args = ap.parse_args()
    t0 = time.perf_counter()
    rep, _ = enumeration_report(c3xc2cubed(), FINITE.max_order, report_simple=True)
    print(f"additive {rep.additive}, |Aut| = {rep.automorphisms}")
    print(f"labelled braces {rep.braces}, isomorphism classes {rep.classes}, by triviality {rep.triviality}")
    print(f"simple classes {len(rep.simple)}")
    for b, size in rep.simple:
        series, solvable = fb.derived_series(b)
        print(f"  class size {size}: multiplicative {identify(b.circ)}, {fb.classify_triviality(b)}, "
              f"brace solvable {solvable}, circ derived length {b.circ.derived_length()}")
    print(f"elapsed {time.perf_counter() - t0:.1f} s")
    if args.write and rep.simple:
        with open(args.write, "w") as fh:
            fh.write(format_brace(rep.simple[0][0], comments=["simple skew brace of order 24"]))


if __name__ == "__main__":
    main()
