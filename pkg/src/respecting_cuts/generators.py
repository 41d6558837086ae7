"""Seeded random graphs, spanning trees and query sets.

All randomness flows through numpy's PCG64 behind SeedSequence, a named
generator with documented, platform-independent streams.  Distinct
purposes (tree edges, extra edges, walks, query sampling) draw from
split child streams, so outputs are reproducible for a given seed.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .errors import GraphInputError, QueryError
from .graph import Graph
from .tree import RootedSpanningTree, build_rooted_tree

STRATEGIES = ("bfs", "dfs", "uniform")


def _generator(seed_seq: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed_seq))


class _IntDraws:
    """Buffered uniform draws from range(upper); one rng call per block."""

    def __init__(self, rng: np.random.Generator, upper: int, block: int = 8192):
        self._rng = rng
        self._upper = upper
        self._block = block
        self._buf: list[int] = []
        self._pos = 0

    def take(self) -> int:
        if self._pos >= len(self._buf):
            self._buf = self._rng.integers(
                0, self._upper, size=self._block
            ).tolist()
            self._pos = 0
        val = self._buf[self._pos]
        self._pos += 1
        return val


def _wilson_complete(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform random spanning tree of the complete graph on n vertices.

    Loop-erased random walk toward the already-built tree; erasure happens
    implicitly by overwriting the successor pointer on revisits.
    """
    if n <= 1:
        return []
    succ = [0] * n
    in_tree = [False] * n
    in_tree[0] = True
    draws = _IntDraws(rng, n - 1)
    for start in range(1, n):
        u = start
        while not in_tree[u]:
            r = draws.take()
            v = r if r < u else r + 1
            succ[u] = v
            u = v
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = succ[u]
    return [(v, succ[v]) for v in range(1, n)]


def gen_connected_graph(n: int, target_m: int, seed: int) -> Graph:
    """Connected weight-1 multigraph with exactly target_m edges.

    A uniform spanning tree over the complete graph comes first, then
    target_m - (n - 1) uniformly random non-loop edges on top (parallel
    edges allowed).  Tree edges occupy ids 0..n-2 in child order.
    """
    n = int(n)
    target_m = int(target_m)
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    if target_m < n - 1:
        raise ValueError(
            f"target_m={target_m} cannot connect {n} vertices "
            f"(needs at least {n - 1})"
        )
    if n == 1 and target_m > 0:
        raise ValueError("no non-loop edges exist on a single vertex")
    tree_ss, extra_ss = np.random.SeedSequence(seed).spawn(2)
    tree_edges = _wilson_complete(n, _generator(tree_ss))
    us = [a for a, _ in tree_edges]
    vs = [b for _, b in tree_edges]
    extra = target_m - (n - 1)
    if extra:
        rng = _generator(extra_ss)
        eu = rng.integers(0, n, size=extra)
        ev = rng.integers(0, n, size=extra)
        collide = eu == ev
        while collide.any():
            ev[collide] = rng.integers(0, n, size=int(collide.sum()))
            collide = eu == ev
        us.extend(eu.tolist())
        vs.extend(ev.tolist())
    return Graph.from_arrays(n, us, vs, [1] * target_m)


def _check_connected(graph: Graph, root: int) -> None:
    adj = graph.adjacency
    seen = [False] * graph.n
    seen[root] = True
    queue = deque([root])
    count = 1
    while queue:
        v = queue.popleft()
        for w, _eid in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    if count != graph.n:
        missing = seen.index(False)
        raise GraphInputError(
            f"graph is disconnected: vertex {missing} unreachable from {root}"
        )


def _bfs_tree_ids(graph: Graph, root: int) -> set[int]:
    adj = graph.adjacency
    seen = [False] * graph.n
    seen[root] = True
    queue = deque([root])
    ids: set[int] = set()
    while queue:
        v = queue.popleft()
        for w, eid in adj[v]:
            if not seen[w]:
                seen[w] = True
                ids.add(eid)
                queue.append(w)
    return ids


def _dfs_tree_ids(graph: Graph, root: int) -> set[int]:
    adj = graph.adjacency
    seen = [False] * graph.n
    seen[root] = True
    ids: set[int] = set()
    stack: list[tuple[int, int]] = [(root, 0)]
    cursor = [0] * graph.n
    while stack:
        v, _ = stack[-1]
        advanced = False
        while cursor[v] < len(adj[v]):
            w, eid = adj[v][cursor[v]]
            cursor[v] += 1
            if not seen[w]:
                seen[w] = True
                ids.add(eid)
                stack.append((w, 0))
                advanced = True
                break
        if not advanced:
            stack.pop()
    return ids


def _wilson_tree_ids(
    graph: Graph, root: int, rng: np.random.Generator
) -> set[int]:
    """Uniform spanning tree of the graph itself, walking incident edges."""
    adj = graph.adjacency
    n = graph.n
    in_tree = [False] * n
    in_tree[root] = True
    succ_edge = [-1] * n
    succ_vertex = [root] * n
    floats = _IntDraws(rng, 1 << 30)
    scale = float(1 << 30)
    for start in range(n):
        u = start
        while not in_tree[u]:
            inc = adj[u]
            idx = int(len(inc) * (floats.take() / scale))
            w, eid = inc[idx]
            succ_vertex[u] = w
            succ_edge[u] = eid
            u = w
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = succ_vertex[u]
    return {succ_edge[v] for v in range(n) if v != root}


def gen_spanning_tree(
    graph: Graph, root: int, seed: int, strategy: str = "uniform"
) -> RootedSpanningTree:
    """Spanning tree of a connected graph, rooted at root.

    Strategies: "bfs" and "dfs" traverse deterministically with
    neighbors in ascending (vertex, edge id) order and ignore the seed;
    "uniform" runs a loop-erased random walk over the graph's edges,
    uniform over all its spanning trees.
    """
    if strategy not in STRATEGIES:
        raise ValueError(
            f"unknown strategy {strategy!r}, expected one of {STRATEGIES}"
        )
    root = int(root)
    if not 0 <= root < graph.n:
        raise ValueError(f"root {root} out of range for {graph.n} vertices")
    _check_connected(graph, root)
    if strategy == "bfs":
        ids = _bfs_tree_ids(graph, root)
    elif strategy == "dfs":
        ids = _dfs_tree_ids(graph, root)
    else:
        rng = _generator(np.random.SeedSequence(seed))
        ids = _wilson_tree_ids(graph, root, rng)
    return build_rooted_tree(graph, ids, root)


def gen_query_set(tree: RootedSpanningTree, k: int, seed: int) -> set[int]:
    """k distinct non-root vertices, uniform without replacement."""
    k = int(k)
    n = tree.graph.n
    if not 1 <= k <= n - 1:
        raise QueryError(
            f"query size {k} out of range, need 1 <= k <= {n - 1}"
        )
    rng = _generator(np.random.SeedSequence(seed))
    pool = np.array(
        [v for v in range(n) if v != tree.root], dtype=np.int64
    )
    picks = rng.choice(pool, size=k, replace=False)
    return {int(v) for v in picks}
