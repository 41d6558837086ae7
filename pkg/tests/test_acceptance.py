"""End-to-end acceptance checks.

Each test prints one summary line; run with ``pytest -s`` to see the
lines for passing tests too (pytest still shows them on failure).
"""

import itertools
import time
from functools import reduce

import numpy as np
import pytest

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
from respecting_cuts.graph import cut_edge_set, cut_size_direct
from respecting_cuts.oracle import xor_size_by_inclusion_exclusion
from respecting_cuts.selfcheck import (
    case_soundness_sweep,
    cut_space_identity_sweep,
    exhaustive_cut_sweep,
    random_set_sweep,
    tree_edge_structure_sweep,
)

CASE_TAGS = (
    "CASE1_ALL_INDEPENDENT",
    "CASE2_CHAIN",
    "CASE3_BRANCHING_UNDER_ANCESTOR",
    "CASE4_ELIMINABLE",
)


def verdict(num: int, name: str, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num} {name}: {status} ({detail})")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def medium_corpus():
    start = time.perf_counter()
    report = random_set_sweep(trials=10_000, n_max=200, k_max=8, seed=11)
    return report, time.perf_counter() - start


def test_acceptance_1_exhaustive_small_equivalence():
    start = time.perf_counter()
    report = exhaustive_cut_sweep(
        num_graphs=200, n_lo=3, n_hi=8, m_max=14, seed=11
    )
    elapsed = time.perf_counter() - start
    ok = report.ok and report.graphs == 200 and elapsed < 60.0
    verdict(
        1,
        "exhaustive small-instance equivalence",
        ok,
        f"{report.graphs} graphs, {report.comparisons} vertex sets, "
        f"{report.mismatches} mismatches, {elapsed:.1f}s; "
        f"counterexample={report.counterexample}",
    )


def test_acceptance_2_alternating_sum_vs_direct(medium_corpus):
    report, elapsed = medium_corpus
    attributable = report.counterexample is not None and report.counterexample[
        "kind"
    ].startswith("k_respecting")
    ok = report.graphs == 10_000 and not attributable and report.ok
    ok = ok and elapsed < 120.0
    verdict(
        2,
        "alternating sum equals direct cut size",
        ok,
        f"{report.graphs} instances, {report.mismatches} mismatches, "
        f"{elapsed:.1f}s; counterexample={report.counterexample}",
    )


def test_acceptance_3_gamma_dichotomy(medium_corpus):
    report, _ = medium_corpus
    multi = sum(
        count
        for tag, count in report.case_counts.items()
        if tag not in ("BASE_SINGLE",)
    )
    ok = report.ok and multi > 0
    verdict(
        3,
        "k-wise value is zero or a pairwise value",
        ok,
        f"{multi} query sets of size >= 2, {report.mismatches} violations; "
        f"counterexample={report.counterexample}",
    )


def test_acceptance_4_case_soundness():
    report = case_soundness_sweep(per_case=1000, seed=11)
    counts = {tag: report.case_counts.get(tag, 0) for tag in CASE_TAGS}
    ok = report.ok and all(counts[tag] >= 1000 for tag in CASE_TAGS)
    verdict(
        4,
        "per-case reductions match the reference",
        ok,
        f"hits={counts}, {report.mismatches} violations; "
        f"counterexample={report.counterexample}",
    )


def test_acceptance_5_symmetric_difference_identities():
    identity = cut_space_identity_sweep(trials=500, n_max=12, seed=11)

    # Sizes via inclusion-exclusion against the definitional fold.
    # Exhaustive wherever the tuple space is small enough to enumerate
    # outright, seeded random draws across the rest of the small grid,
    # then randomized trials up to eight sets over universes of 16.
    checked = 0
    bad = 0
    rng = np.random.Generator(np.random.PCG64(5))
    for k in range(1, 5):
        for u in range(1, 11):
            subsets = [
                frozenset(
                    i for i in range(u) if bits >> i & 1
                )
                for bits in range(2**u)
            ]
            if (2**u) ** k <= 2**16:
                tuples = itertools.product(subsets, repeat=k)
            else:
                tuples = (
                    tuple(
                        subsets[int(rng.integers(0, len(subsets)))]
                        for _ in range(k)
                    )
                    for _ in range(2000)
                )
            for sets in tuples:
                got = xor_size_by_inclusion_exclusion(list(sets))
                want = len(reduce(lambda a, b: a ^ b, sets, frozenset()))
                checked += 1
                bad += got != want
    random_checked = 0
    for _ in range(3000):
        u = int(rng.integers(1, 17))
        k = int(rng.integers(1, 9))
        sets = [
            frozenset(
                int(x) for x in rng.choice(u, size=rng.integers(0, u + 1), replace=False)
            )
            for _ in range(k)
        ]
        weight = {i: int(rng.integers(1, 11)) for i in range(u)}
        got = xor_size_by_inclusion_exclusion(sets, weight=weight)
        fold = reduce(lambda a, b: a ^ b, sets, frozenset())
        want = sum(weight[i] for i in fold)
        random_checked += 1
        bad += got != want
    ok = identity.ok and bad == 0
    verdict(
        5,
        "cut of a symmetric difference and its size",
        ok,
        f"{identity.comparisons} cut identities "
        f"({identity.mismatches} bad), {checked} small-grid + "
        f"{random_checked} randomized size checks ({bad} bad)",
    )


def test_acceptance_6_tree_edge_structure():
    report = tree_edge_structure_sweep(num_graphs=60, n_lo=3, n_hi=8, seed=11)
    verdict(
        6,
        "crossing tree edges and round-trip decomposition",
        report.ok,
        f"{report.comparisons} checks, {report.mismatches} mismatches; "
        f"counterexample={report.counterexample}",
    )


def test_acceptance_7_weighted_consistency():
    # On weight-1 graphs the weighted size is the edge count.
    agree = 0
    rng = np.random.Generator(np.random.PCG64(23))
    for trial in range(50):
        n = int(rng.integers(3, 30))
        graph = gen_connected_graph(n, int(rng.integers(n - 1, 2 * n)), seed=trial)
        for _ in range(20):
            bits = int(rng.integers(1, 2**n - 1))
            inside = {v for v in range(n) if bits >> v & 1}
            assert cut_size_direct(graph, inside) == len(
                cut_edge_set(graph, inside)
            )
            agree += 1

    reruns = [
        exhaustive_cut_sweep(
            num_graphs=60, n_lo=3, n_hi=8, m_max=14, seed=29, weighted=True
        ),
        random_set_sweep(trials=2000, n_max=120, k_max=8, seed=29, weighted=True),
    ]
    ok = all(rep.ok for rep in reruns)
    verdict(
        7,
        "weighted runs agree with the unweighted pipeline",
        ok,
        f"{agree} weight-1 agreements, weighted reruns "
        f"{[rep.comparisons for rep in reruns]} comparisons, "
        f"{sum(rep.mismatches for rep in reruns)} mismatches",
    )


def test_acceptance_8_performance_smoke():
    graph = gen_connected_graph(100_000, 500_000, seed=17)
    tree = gen_spanning_tree(graph, 0, seed=17, strategy="bfs")

    start = time.perf_counter()
    sizes = all_subtree_cut_sizes(graph, tree)
    delta_s = time.perf_counter() - start

    members = sorted(gen_query_set(tree, 10, seed=3))
    start = time.perf_counter()
    pairwise_gamma(graph, tree, members[0], members[1])
    pair_s = time.perf_counter() - start

    start = time.perf_counter()
    k_respecting_cut_size(graph, tree, members, table=GammaTable(graph, tree))
    kwise_s = time.perf_counter() - start

    ok = len(sizes) == 99_999 and delta_s < 5.0 and pair_s < 0.1 and kwise_s < 2.0
    verdict(
        8,
        "large instance timing targets",
        ok,
        f"n=100000 m=500000: all subtree sizes {delta_s:.2f}s (<5), "
        f"one pairwise query {pair_s:.4f}s (<0.1), "
        f"k=10 cut size {kwise_s:.2f}s (<2)",
    )
