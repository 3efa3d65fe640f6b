"""Build the six degree-16 enumerators and report sizes, masses and the
coefficient determinant at the distinguished monomials.

    python scripts/degree16_basis.py --out-dir polys16
"""

import argparse
import json
import time
from pathlib import Path

from codent import catalog
from codent.enumerators import coefficient_matrix, evaluate, is_invariant
from codent.linalg import det


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", help="write each enumerator as JSON here")
    ap.add_argument("--check-invariance", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    polys = catalog.degree16_enumerators()
    print(f"built in {time.perf_counter() - t0:.1f}s")
    gens = list(catalog.h_generators().values())
    for name, f in polys.items():
        line = f"{name:<16} terms={len(f):>4} mass={evaluate(f, [1] * 6)}"
        if args.check_invariance:
            line += f" invariant={is_invariant(f, gens)}"
        print(line)
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{name.replace('^', '_sq').replace('+', '_')}.json").write_text(json.dumps(f.to_json()))
    m = coefficient_matrix(list(polys.values()), catalog.DEGREE16_MONOMIALS)
    print(m.to_text())
    print(f"det = {det(m)}")


if __name__ == "__main__":
    main()
