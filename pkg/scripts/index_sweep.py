"""Exhaustive checks of the index formula and of the orientability
conditions against brute force.

    python3 scripts/index_sweep.py                 # default test family
    python3 scripts/index_sweep.py --extended      # slower, larger slices
    python3 scripts/index_sweep.py --n 3 --max-m 6 --pairs all --loops
"""

import argparse
import time

from ghcolor.experiments import ACCEPTANCE_FAMILY, EXTENDED_FAMILY, SweepConfig, run_family


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--n", type=int)
    ap.add_argument("--max-m", type=int, default=7)
    ap.add_argument("--pairs", choices=("all", "constant", "random"), default="all")
    ap.add_argument("--loops", action="store_true")
    ap.add_argument("--per-graph", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if args.n is not None:
        configs = [SweepConfig(f"n={args.n} m<={args.max_m} {args.pairs}", args.n, args.max_m, args.loops,
                               args.pairs, per_graph=args.per_graph, seed=args.seed)]
    else:
        configs = EXTENDED_FAMILY if args.extended else ACCEPTANCE_FAMILY
    bad = 0
    for cfg in configs:
        t = time.time()
        (index, orient), = run_family([cfg]).values()
        bad += len(index.failures) + len(orient.failures)
        print(f"{cfg.name:40s} {index.checked:9d} instances  index failures {len(index.failures)}  "
              f"orientability failures {len(orient.failures)}  {time.time() - t:7.1f}s", flush=True)
        for msg in index.failures + orient.failures:
            print("   ", msg)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
