"""Molien series of H next to the closed form, with optional direct dimensions.

    python scripts/molien_table.py --order 64 --check-degrees 1 8 16
"""

import argparse
import time

from codent import catalog
from codent.closure import close_group
from codent.molien import expand_formula, fixed_space_dim, molien_series, closed_form


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=56)
    ap.add_argument("--check-degrees", type=int, nargs="*", default=[],
                    help="also compute the invariant dimension directly (degree 16 takes minutes)")
    args = ap.parse_args()

    gens = list(catalog.h_generators().values())
    t0 = time.perf_counter()
    group = close_group(gens)
    series = molien_series(group, args.order).as_ints()
    formula = expand_formula(closed_form(), args.order).as_ints()
    print(f"closure + series: {time.perf_counter() - t0:.1f}s")
    print(f"{'degree':>6} {'molien':>8} {'formula':>8}")
    for d in range(0, args.order + 1):
        if series[d] or formula[d]:
            flag = "" if series[d] == formula[d] else "  MISMATCH"
            print(f"{d:>6} {series[d]:>8} {formula[d]:>8}{flag}")
    for d in args.check_degrees:
        t0 = time.perf_counter()
        dim = fixed_space_dim(gens, d)
        ok = "ok" if d < len(series) and dim == series[d] else "DIFFERS"
        print(f"fixed space, degree {d}: {dim} ({ok}, {time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
