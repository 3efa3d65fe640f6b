"""Run the full claim pipeline and write a JSON report.

    python scripts/reproduce_all.py --skip-G --report report.json
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict

from codent.verify import VerifyConfig, verify_paper


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-G", action="store_true")
    ap.add_argument("--deep-degree", type=int)
    ap.add_argument("--report", default="report.json")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(message)s")

    cfg = VerifyConfig(skip_G=args.skip_G, deep_degree=args.deep_degree)
    report = verify_paper(cfg)
    print("\n".join(report.lines()))
    with open(args.report, "w") as f:
        json.dump({"config": asdict(cfg), **report.to_json()}, f, indent=1, default=str)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
