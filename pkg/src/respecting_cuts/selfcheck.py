"""Randomized and exhaustive verification sweeps.

Every sweep pits the fast query engine against the definition-level
reference computations on seeded corpora and reports counts plus the
first counterexample, serialized fully so a failure can be replayed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .gamma import (
    CaseTag,
    GammaTable,
    classify_gamma_case,
    cut_size_via_tree,
    k_respecting_cut_size,
    k_wise_gamma,
    pairwise_gamma,
)
from .generators import STRATEGIES, gen_connected_graph, gen_query_set, gen_spanning_tree
from .graph import Graph, cut_edge_set, cut_size_direct
from .oracle import check_cut_space_identity, oracle_k_wise_gamma, xor_of_subtrees
from .tree import RootedSpanningTree


@dataclass
class SweepReport:
    """Outcome of one verification sweep."""

    graphs: int = 0
    comparisons: int = 0
    mismatches: int = 0
    case_counts: dict[str, int] = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def _master(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _next_seed(master: np.random.Generator) -> int:
    return int(master.integers(0, 2**63))


def _payload(graph: Graph, tree: RootedSpanningTree, **extra) -> dict:
    """A replayable description of one failing instance."""
    body = {
        "n": graph.n,
        "edges": [[u, v, w] for u, v, w in graph.iter_edges()],
        "root": tree.root,
        "tree_edges": sorted(tree.tree_edge_ids),
    }
    body.update(extra)
    return body


def _reweighted(graph: Graph, master: np.random.Generator, high: int = 10) -> Graph:
    """Same topology with fresh uniform weights in [1, high]."""
    w = master.integers(1, high + 1, size=graph.m)
    return Graph.from_arrays(graph.n, graph.edge_u, graph.edge_v, w)


def exhaustive_cut_sweep(
    num_graphs: int = 200,
    n_lo: int = 3,
    n_hi: int = 8,
    m_max: int = 14,
    seed: int = 0,
    weighted: bool = False,
    strategies: tuple[str, ...] = ("bfs", "uniform"),
) -> SweepReport:
    """Tree-route cut size against the direct cut size for every proper
    nonempty vertex set of every seeded graph."""
    master = _master(seed)
    rep = SweepReport()
    for _ in range(num_graphs):
        n = int(master.integers(n_lo, n_hi + 1))
        m = int(master.integers(n - 1, m_max + 1))
        graph = gen_connected_graph(n, m, _next_seed(master))
        if weighted:
            graph = _reweighted(graph, master)
        rep.graphs += 1
        for strategy in strategies:
            root = int(master.integers(0, n))
            tree = gen_spanning_tree(graph, root, _next_seed(master), strategy)
            table = GammaTable(graph, tree)
            for bits in range(1, (1 << n) - 1):
                members = {v for v in range(n) if bits >> v & 1}
                expected = cut_size_direct(graph, members)
                actual, basis = cut_size_via_tree(
                    graph, tree, members, table=table
                )
                rep.comparisons += 1
                if actual != expected:
                    rep.mismatches += 1
                    rep.counterexample = _payload(
                        graph,
                        tree,
                        vertex_set=sorted(members),
                        basis=sorted(basis),
                        expected=expected,
                        actual=actual,
                        kind="cut_size_via_tree vs cut_size_direct",
                    )
                    return rep
    return rep


def random_set_sweep(
    trials: int = 10_000,
    n_max: int = 200,
    k_max: int = 8,
    seed: int = 0,
    weighted: bool = False,
) -> SweepReport:
    """Random (graph, tree, query set) instances.

    Checks, per instance: the alternating-sum cut size against the direct
    cut size of the materialized subtree symmetric difference, and (for
    sets of two or more) that the k-wise value is zero or equals one of
    the pairwise values over the set.
    """
    master = _master(seed)
    rep = SweepReport()
    for trial in range(trials):
        n = int(master.integers(3, n_max + 1))
        m = int(master.integers(n - 1, 2 * n + 1))
        graph = gen_connected_graph(n, m, _next_seed(master))
        if weighted:
            graph = _reweighted(graph, master)
        root = int(master.integers(0, n))
        strategy = STRATEGIES[trial % len(STRATEGIES)]
        tree = gen_spanning_tree(graph, root, _next_seed(master), strategy)
        k = int(master.integers(1, min(k_max, n - 1) + 1))
        members = gen_query_set(tree, k, _next_seed(master))
        table = GammaTable(graph, tree)
        rep.graphs += 1

        size = k_respecting_cut_size(graph, tree, members, table=table)
        materialized = xor_of_subtrees(tree, members)
        expected = cut_size_direct(graph, materialized)
        rep.comparisons += 1
        if size != expected:
            rep.mismatches += 1
            rep.counterexample = _payload(
                graph,
                tree,
                set=sorted(members),
                expected=expected,
                actual=size,
                kind="k_respecting_cut_size vs direct cut of xor",
            )
            return rep

        tag = classify_gamma_case(tree, members).tag.value
        rep.case_counts[tag] = rep.case_counts.get(tag, 0) + 1

        if k >= 2:
            value = k_wise_gamma(graph, tree, members, table=table)
            rep.comparisons += 1
            if value != 0:
                pair_values = {
                    table.pair(x, y)
                    for x, y in itertools.combinations(sorted(members), 2)
                }
                if value not in pair_values:
                    rep.mismatches += 1
                    rep.counterexample = _payload(
                        graph,
                        tree,
                        set=sorted(members),
                        actual=value,
                        pairwise=sorted(pair_values),
                        kind="k-wise value neither zero nor any pairwise value",
                    )
                    return rep
    return rep


_CASE_TAGS = (
    CaseTag.CASE1_ALL_INDEPENDENT,
    CaseTag.CASE2_CHAIN,
    CaseTag.CASE3_BRANCHING_UNDER_ANCESTOR,
    CaseTag.CASE4_ELIMINABLE,
)


def _case_query_candidates(
    tree: RootedSpanningTree, master: np.random.Generator, k_cap: int = 8
) -> list[set[int]]:
    """Query sets biased toward each classification outcome.

    Random sets, root-path samples (chains), a branching vertex with one
    pick per child subtree, root-child siblings (independent), and a
    parent-child pair plus an outside vertex (eliminable).
    """
    n = tree.graph.n
    root = tree.root
    non_root = [v for v in range(n) if v != root]
    out: list[set[int]] = []
    if len(non_root) < 3:
        return out

    def sample(pool: list[int], k: int) -> set[int]:
        idx = master.choice(len(pool), size=k, replace=False)
        return {pool[int(i)] for i in idx}

    for _ in range(3):
        k = int(master.integers(3, min(k_cap, len(non_root)) + 1))
        out.append(sample(non_root, k))

    deepest = max(non_root, key=lambda v: (tree.depth_of(v), v))
    path = tree.root_path(deepest)[1:]
    if len(path) >= 3:
        k = int(master.integers(3, min(k_cap, len(path)) + 1))
        out.append(sample(path, k))

    root_kids = tree.children[root]
    if len(root_kids) >= 3:
        out.append(sample(root_kids, 3))

    branching = [
        v
        for v in non_root
        if len(tree.children[v]) >= 2
    ]
    if branching:
        v = branching[int(master.integers(0, len(branching)))]
        kids = tree.children[v]
        picks = master.choice(len(kids), size=2, replace=False)
        chosen = {v}
        for i in picks:
            members = sorted(tree.subtree_members(kids[int(i)]))
            chosen.add(members[int(master.integers(0, len(members)))])
        out.append(chosen)

    internal = [v for v in non_root if tree.children[v]]
    if internal:
        v = internal[int(master.integers(0, len(internal)))]
        kids = tree.children[v]
        child = kids[int(master.integers(0, len(kids)))]
        outside = [u for u in non_root if not tree.is_descendant(u, v)]
        if outside:
            u = outside[int(master.integers(0, len(outside)))]
            out.append({v, child, u})
    return out


def case_soundness_sweep(
    per_case: int = 1000,
    seed: int = 0,
    n_lo: int = 6,
    n_hi: int = 36,
    max_graphs: int = 20_000,
) -> SweepReport:
    """Per-case oracle checks until every case has per_case instances.

    Tree shapes are biased (breadth-first trees run shallow, depth-first
    trees run deep, uniform trees sit in between) and query sets are
    drawn both at random and by targeted construction, so all four cases
    appear.  Each classified set is checked against the definition-level
    oracle according to its case.
    """
    master = _master(seed)
    rep = SweepReport()
    counts = {tag.value: 0 for tag in _CASE_TAGS}
    rep.case_counts = counts
    graphs_built = 0
    while (
        any(counts[tag.value] < per_case for tag in _CASE_TAGS)
        and graphs_built < max_graphs
    ):
        n = int(master.integers(n_lo, n_hi + 1))
        m = int(master.integers(n - 1, 2 * n + 1))
        graph = gen_connected_graph(n, m, _next_seed(master))
        strategy = STRATEGIES[graphs_built % len(STRATEGIES)]
        root = int(master.integers(0, n))
        tree = gen_spanning_tree(graph, root, _next_seed(master), strategy)
        graphs_built += 1
        rep.graphs += 1
        for members in _case_query_candidates(tree, master):
            if len(members) < 3:
                continue
            case = classify_gamma_case(tree, members)
            tag = case.tag
            if tag not in _CASE_TAGS or counts[tag.value] >= per_case:
                continue
            value = oracle_k_wise_gamma(graph, tree, members)
            if tag in (
                CaseTag.CASE1_ALL_INDEPENDENT,
                CaseTag.CASE3_BRANCHING_UNDER_ANCESTOR,
            ):
                expected = 0
            elif tag is CaseTag.CASE2_CHAIN:
                assert case.pair is not None
                expected = pairwise_gamma(graph, tree, *case.pair)
            else:
                assert case.eliminated is not None
                expected = oracle_k_wise_gamma(
                    graph, tree, members - {case.eliminated}
                )
            counts[tag.value] += 1
            rep.comparisons += 1
            if value != expected:
                rep.mismatches += 1
                rep.counterexample = _payload(
                    graph,
                    tree,
                    set=sorted(members),
                    case=tag.value,
                    expected=expected,
                    actual=value,
                    kind="per-case oracle check",
                )
                return rep
    return rep


def cut_space_identity_sweep(
    trials: int = 500, n_max: int = 12, seed: int = 0
) -> SweepReport:
    """The cut of a subtree symmetric difference must equal the symmetric
    difference of the subtree cuts, on random instances."""
    master = _master(seed)
    rep = SweepReport()
    for trial in range(trials):
        n = int(master.integers(2, n_max + 1))
        m = int(master.integers(n - 1, 2 * n + 1))
        graph = gen_connected_graph(n, m, _next_seed(master))
        root = int(master.integers(0, n))
        strategy = STRATEGIES[trial % len(STRATEGIES)]
        tree = gen_spanning_tree(graph, root, _next_seed(master), strategy)
        k = int(master.integers(1, n))
        members = gen_query_set(tree, k, _next_seed(master))
        rep.graphs += 1
        rep.comparisons += 1
        if not check_cut_space_identity(graph, tree, members):
            rep.mismatches += 1
            rep.counterexample = _payload(
                graph, tree, set=sorted(members), kind="cut space identity"
            )
            return rep
    return rep


def tree_edge_structure_sweep(
    num_graphs: int = 60,
    n_lo: int = 3,
    n_hi: int = 8,
    m_max: int = 14,
    seed: int = 0,
    random_sets: int = 5,
) -> SweepReport:
    """Structural facts about crossing tree edges, plus decomposition
    round-trips.

    Per graph and tree: the cut of every subtree crosses exactly the
    subtree top's parent edge among tree edges; the cut of a subtree
    symmetric difference crosses exactly the members' parent edges; and
    every proper nonempty vertex set decomposes and rematerializes to
    itself or its complement, exhaustively.
    """
    master = _master(seed)
    rep = SweepReport()
    for gi in range(num_graphs):
        n = int(master.integers(n_lo, n_hi + 1))
        m = int(master.integers(n - 1, m_max + 1))
        graph = gen_connected_graph(n, m, _next_seed(master))
        root = int(master.integers(0, n))
        strategy = STRATEGIES[gi % len(STRATEGIES)]
        tree = gen_spanning_tree(graph, root, _next_seed(master), strategy)
        rep.graphs += 1
        tree_ids = tree.tree_edge_ids
        non_root = [v for v in range(n) if v != root]

        for v in non_root:
            crossing = cut_edge_set(graph, tree.subtree_members(v)) & tree_ids
            rep.comparisons += 1
            if crossing != {tree.parent_edge_of(v)}:
                rep.mismatches += 1
                rep.counterexample = _payload(
                    graph, tree, vertex=v, kind="subtree cut tree edges"
                )
                return rep

        for _ in range(random_sets):
            k = int(master.integers(1, n))
            members = gen_query_set(tree, k, _next_seed(master))
            crossing = (
                cut_edge_set(graph, xor_of_subtrees(tree, members)) & tree_ids
            )
            expected = {tree.parent_edge_of(v) for v in members}
            rep.comparisons += 1
            if crossing != expected:
                rep.mismatches += 1
                rep.counterexample = _payload(
                    graph, tree, set=sorted(members), kind="xor cut tree edges"
                )
                return rep

        everything = set(range(n))
        for bits in range(1, (1 << n) - 1):
            members = {v for v in range(n) if bits >> v & 1}
            basis, complemented = tree.decompose_cut_as_xor_basis(members)
            back = xor_of_subtrees(tree, basis)
            target = everything - members if complemented else members
            rep.comparisons += 1
            if back != target:
                rep.mismatches += 1
                rep.counterexample = _payload(
                    graph,
                    tree,
                    vertex_set=sorted(members),
                    basis=sorted(basis),
                    complemented=complemented,
                    kind="decompose round-trip",
                )
                return rep
    return rep


def run_selfcheck(n_max: int = 8, trials: int = 200, seed: int = 7) -> SweepReport:
    """Combined randomized check behind the command line.

    Per trial: one seeded connected graph, one spanning tree (strategies
    cycled), cut equivalence on every proper nonempty vertex set (all of
    them when the graph is small, a sample otherwise), one engine vs
    oracle comparison on a random query set, the dichotomy check, and
    the cut space identity.
    """
    master = _master(seed)
    rep = SweepReport()
    for trial in range(trials):
        n = int(master.integers(3, max(3, n_max) + 1))
        m = int(master.integers(n - 1, 2 * n + 1))
        graph = gen_connected_graph(n, m, _next_seed(master))
        root = int(master.integers(0, n))
        strategy = STRATEGIES[trial % len(STRATEGIES)]
        tree = gen_spanning_tree(graph, root, _next_seed(master), strategy)
        table = GammaTable(graph, tree)
        rep.graphs += 1

        if n <= 8:
            masks = range(1, (1 << n) - 1)
        else:
            masks = [
                int(master.integers(1, (1 << n) - 1)) for _ in range(48)
            ]
        for bits in masks:
            members = {v for v in range(n) if bits >> v & 1}
            if not 0 < len(members) < n:
                continue
            expected = cut_size_direct(graph, members)
            actual, basis = cut_size_via_tree(graph, tree, members, table=table)
            rep.comparisons += 1
            if actual != expected:
                rep.mismatches += 1
                rep.counterexample = _payload(
                    graph,
                    tree,
                    vertex_set=sorted(members),
                    basis=sorted(basis),
                    expected=expected,
                    actual=actual,
                    kind="cut_size_via_tree vs cut_size_direct",
                )
                return rep

        k = int(master.integers(1, n))
        members = gen_query_set(tree, k, _next_seed(master))
        tag = classify_gamma_case(tree, members).tag.value
        rep.case_counts[tag] = rep.case_counts.get(tag, 0) + 1
        value = k_wise_gamma(graph, tree, members, table=table)
        expected = oracle_k_wise_gamma(graph, tree, members)
        rep.comparisons += 1
        if value != expected:
            rep.mismatches += 1
            rep.counterexample = _payload(
                graph,
                tree,
                set=sorted(members),
                expected=expected,
                actual=value,
                kind="k_wise_gamma vs oracle",
            )
            return rep
        if len(members) >= 2 and value != 0:
            pair_values = {
                table.pair(x, y)
                for x, y in itertools.combinations(sorted(members), 2)
            }
            rep.comparisons += 1
            if value not in pair_values:
                rep.mismatches += 1
                rep.counterexample = _payload(
                    graph,
                    tree,
                    set=sorted(members),
                    actual=value,
                    pairwise=sorted(pair_values),
                    kind="k-wise value neither zero nor any pairwise value",
                )
                return rep
        rep.comparisons += 1
        if not check_cut_space_identity(graph, tree, members):
            rep.mismatches += 1
            rep.counterexample = _payload(
                graph, tree, set=sorted(members), kind="cut space identity"
            )
            return rep
    return rep
