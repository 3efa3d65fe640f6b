"""Time the group closure for a grid of thread counts and search orders.

    python scripts/closure_benchmark.py --group H --threads 1 2 4
"""

import argparse
import itertools
import resource
import time
from dataclasses import dataclass

from codent import catalog
from codent.closure import close_group


@dataclass
class BenchConfig:
    group: str = "H"
    threads: tuple = (1, 2)
    strategies: tuple = ("bfs", "dfs")
    chunk: int = 16384


def run(cfg):
    gens = catalog.h_generators() if cfg.group == "H" else catalog.g_generators()
    gens = list(gens.values())
    rows = []
    reference = None
    for workers, strategy in itertools.product(cfg.threads, cfg.strategies):
        t0 = time.perf_counter()
        g = close_group(gens, workers=workers, strategy=strategy, chunk=cfg.chunk)
        dt = time.perf_counter() - t0
        same = reference is None or (g.packed == reference).all()
        reference = g.packed if reference is None else reference
        rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
        rows.append((workers, strategy, g.order, dt, rss, same))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", choices=("G", "H"), default="H")
    ap.add_argument("--threads", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--strategies", nargs="+", default=["bfs", "dfs"])
    ap.add_argument("--chunk", type=int, default=16384)
    a = ap.parse_args()
    cfg = BenchConfig(a.group, tuple(a.threads), tuple(a.strategies), a.chunk)
    print(f"{'threads':>7} {'order':>8} {'seconds':>8} {'maxrss MB':>10}  strategy  identical")
    for workers, strategy, order, dt, rss, same in run(cfg):
        print(f"{workers:>7} {order:>8} {dt:>8.1f} {rss:>10.0f}  {strategy:<8}  {same}")


if __name__ == "__main__":
    main()
