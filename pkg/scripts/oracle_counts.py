"""Compare holomorph enumeration with the brute-force oracle for every additive group of order <= N."""
import argparse
import time

from skewbrace.enumeration import enumerate_braces
from skewbrace.groups import small_groups
from skewbrace.oracle import count_braces, group_tables


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6, help="largest order (default 6; 7 takes minutes)")
    args = ap.parse_args()
    ok = True
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        tables = group_tables(n)
        for g in small_groups(n):
            a, b = len(enumerate_braces(g)), count_braces(g.rows, tables)
            ok &= a == b
            print(f"{g.name:>6}: enumeration {a:4d}  oracle {b:4d}  {'ok' if a == b else 'MISMATCH'}")
        print(f"order {n}: {len(tables)} group tables, {time.perf_counter() - t0:.2f} s")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
