#!/usr/bin/env python3
"""Timing sweep across graph sizes, one JSON line per configuration.

Usage:
    python3 scripts/bench_scaling.py
    python3 scripts/bench_scaling.py --sizes 1000,10000 --density 5 --k 8
"""

import argparse
import json
import statistics
import time

from respecting_cuts.gamma import (
    GammaTable,
    all_subtree_cut_sizes,
    k_respecting_cut_size,
    pairwise_gamma,
)
from respecting_cuts.generators import (
    gen_connected_graph,
    gen_query_set,
    gen_spanning_tree,
)


def time_once(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def bench(n, density, k, pairs, seed, strategy):
    m = n * density
    graph = gen_connected_graph(n, m, seed)
    tree = None

    def build():
        nonlocal tree
        tree = gen_spanning_tree(graph, 0, seed, strategy)

    build_s = time_once(build)
    delta_s = time_once(lambda: all_subtree_cut_sizes(graph, tree))

    query = sorted(gen_query_set(tree, max(k, 2), seed + 1))
    pair_times = []
    for i in range(pairs):
        x, y = query[i % len(query)], query[(i + 1) % len(query)]
        pair_times.append(time_once(lambda: pairwise_gamma(graph, tree, x, y)))

    table = GammaTable(graph, tree)
    members = gen_query_set(tree, k, seed + 2)
    kwise_s = time_once(
        lambda: k_respecting_cut_size(graph, tree, members, table=table)
    )

    return {
        "n": n,
        "m": m,
        "strategy": strategy,
        "build_tree_s": round(build_s, 4),
        "all_subtree_cut_sizes_s": round(delta_s, 4),
        "pairwise_mean_s": round(statistics.mean(pair_times), 6),
        "pairwise_max_s": round(max(pair_times), 6),
        "k": k,
        "k_respecting_s": round(kwise_s, 4),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes", default="1000,10000,100000", help="comma list of n"
    )
    parser.add_argument("--density", type=int, default=5, help="m = density * n")
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--pairs", type=int, default=16)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--strategy", default="bfs", choices=["bfs", "dfs", "uniform"]
    )
    args = parser.parse_args()

    for token in args.sizes.split(","):
        n = int(token)
        row = bench(n, args.density, args.k, args.pairs, args.seed, args.strategy)
        print(json.dumps(row))


if __name__ == "__main__":
    main()
