"""Enumerate every skew brace of order 12 and report the simple ones."""
import time

from skewbrace.braces import classify_triviality
from skewbrace.enumeration import enumeration_report
from skewbrace.groups import identify, small_groups


def main():
    for g in small_groups(12):
        t0 = time.perf_counter()
        rep, braces = enumeration_report(g, report_simple=True)
        dt = time.perf_counter() - t0
        print(f"{g.name}: braces {rep.braces}, classes {rep.classes}, simple classes {len(rep.simple)} ({dt:.1f} s)")
        for b, size in rep.simple:
            print(f"  simple: multiplicative {identify(b.circ)}, {classify_triviality(b)}, class size {size}")


if __name__ == "__main__":
    main()
