"""Stress the bipartite colourers and the list version of the oriented
colouring on larger random instances than the test suite uses."""

import argparse
import random
import time

from ghcolor.bipartite import BipartiteMultigraph, galvin_list_color, konig_color, verify_matching_classes
from ghcolor.experiments import check_list_trial, check_round_trip, random_instance
from ghcolor.oracle import random_bipartite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--graphs", type=int, default=200)
    ap.add_argument("--side", type=int, default=20)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    t = time.time()
    for _ in range(args.graphs):
        nx, ny = rng.randint(1, args.side), rng.randint(1, args.side)
        H = BipartiteMultigraph(*random_bipartite(rng, nx, ny, rng.randint(0, 6 * (nx + ny))))
        colors = konig_color(H)
        assert verify_matching_classes(H, colors) and len(set(colors)) == H.max_degree
        d = H.max_degree
        lists = [tuple(rng.sample(range(2 * d + 1), d)) for _ in range(H.m)]
        got = galvin_list_color(H, lists)
        assert verify_matching_classes(H, got) and all(c in L for c, L in zip(got, lists))
    print(f"bipartite: {args.graphs} graphs ok in {time.time() - t:.1f}s")

    t = time.time()
    for _ in range(args.trials):
        G, p = random_instance(rng, n_range=(2, 15), m_range=(1, 40))
        assert check_round_trip(G, p) is None
        assert check_list_trial(rng, G, p) is None
    print(f"oriented colourings: {args.trials} instances ok in {time.time() - t:.1f}s")


if __name__ == "__main__":
    main()
