"""Fast cut-size engine over subtree cuts.

The size of any cut that crosses a rooted spanning tree in exactly k
edges expands, by inclusion-exclusion, into an alternating sum of
intersection sizes of subtree cuts.  Three facts make that sum cheap:

* the intersection size of two subtree cuts falls out of one linear
  pass over the edges, driven by whether the two subtrees nest or are
  disjoint;
* for three or more subtrees, the ancestor structure of the query set
  collapses the intersection either to zero or to a single pairwise
  value (the four-way classification below);
* every subtree cut size itself comes from one bottom-up pass with
  difference counters.

Edge membership tests ride on the tree's discovery intervals and are
vectorized with numpy across the whole edge list.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DEFAULT_MAX_K, KLimitExceeded, QueryError
from .graph import Graph
from .tree import RootedSpanningTree


class CaseTag(enum.Enum):
    """Outcome of classifying a query set by ancestor structure."""

    BASE_SINGLE = "BASE_SINGLE"
    BASE_PAIR = "BASE_PAIR"
    CASE1_ALL_INDEPENDENT = "CASE1_ALL_INDEPENDENT"
    CASE2_CHAIN = "CASE2_CHAIN"
    CASE3_BRANCHING_UNDER_ANCESTOR = "CASE3_BRANCHING_UNDER_ANCESTOR"
    CASE4_ELIMINABLE = "CASE4_ELIMINABLE"


@dataclass(frozen=True)
class GammaCase:
    """Classification of a query set.

    ``pair`` carries the (deepest, shallowest) witness for CASE2_CHAIN;
    ``eliminated`` carries the removable vertex for CASE4_ELIMINABLE.
    """

    tag: CaseTag
    pair: tuple[int, int] | None = None
    eliminated: int | None = None


def _validated_members(
    tree: RootedSpanningTree, members: Iterable[int]
) -> list[int]:
    mlist = [int(v) for v in members]
    mset = set(mlist)
    if len(mset) != len(mlist):
        raise QueryError("duplicate vertices in query set")
    if not mset:
        raise QueryError("query set must be nonempty")
    n = tree.graph.n
    for v in mset:
        if not 0 <= v < n:
            raise QueryError(f"vertex {v} out of range for {n} vertices")
        if v == tree.root:
            raise QueryError(f"root {v} cannot appear in a query set")
    return sorted(mset)


def _classify(tree: RootedSpanningTree, mem: list[int]) -> GammaCase:
    """Classify a validated, sorted, duplicate-free query set."""
    k = len(mem)
    if k == 1:
        return GammaCase(CaseTag.BASE_SINGLE)
    if k == 2:
        return GammaCase(CaseTag.BASE_PAIR)
    desc = tree.is_descendant
    depth = tree._depth
    participants: set[int] = set()
    for i in range(k):
        x = mem[i]
        for j in range(i + 1, k):
            y = mem[j]
            if desc(x, y) or desc(y, x):
                participants.add(x)
                participants.add(y)
    if not participants:
        return GammaCase(CaseTag.CASE1_ALL_INDEPENDENT)
    by_depth = sorted(mem, key=lambda v: (depth[v], v))
    head = by_depth[0]
    if all(desc(y, head) for y in by_depth[1:]):
        # Everything sits under one member.  A chain means strictly
        # increasing depths with each member inside the previous one.
        chain = True
        prev = by_depth[0]
        for y in by_depth[1:]:
            if depth[y] == depth[prev] or not desc(y, prev):
                chain = False
                break
            prev = y
        if chain:
            return GammaCase(
                CaseTag.CASE2_CHAIN, pair=(by_depth[-1], by_depth[0])
            )
        return GammaCase(CaseTag.CASE3_BRANCHING_UNDER_ANCESTOR)
    # No member dominates all others: the shallowest member of any
    # comparable pair can be dropped without changing the intersection.
    a = min(participants, key=lambda v: (depth[v], v))
    return GammaCase(CaseTag.CASE4_ELIMINABLE, eliminated=a)


def classify_gamma_case(
    tree: RootedSpanningTree, members: Iterable[int]
) -> GammaCase:
    """Classify a query set of non-root vertices by ancestor structure.

    Sets of size one and two are the base cases; for size three and up
    the four cases are: all members pairwise independent (value 0), a
    chain under the ancestor order (value = pairwise value of deepest
    and shallowest), branching strictly under a common member (value 0),
    and otherwise an eliminable shallowest member whose removal keeps
    the intersection unchanged.
    """
    return _classify(tree, _validated_members(tree, members))


def _subtree_mask(
    tree: RootedSpanningTree, v: int, tin_e: np.ndarray
) -> np.ndarray:
    """Boolean mask over edge endpoints: endpoint inside subtree of v."""
    return (tin_e >= tree.euler_in[v]) & (tin_e <= tree.euler_out[v])


def _single_value(
    graph: Graph,
    tree: RootedSpanningTree,
    v: int,
    tin_u: np.ndarray,
    tin_v: np.ndarray,
) -> int:
    inside_u = _subtree_mask(tree, v, tin_u)
    inside_v = _subtree_mask(tree, v, tin_v)
    return int(graph.edge_weight[inside_u ^ inside_v].sum())


def _pair_value(
    graph: Graph,
    tree: RootedSpanningTree,
    x: int,
    y: int,
    tin_u: np.ndarray,
    tin_v: np.ndarray,
) -> int:
    """Weight of edges crossing both subtree cuts, in one edge pass.

    Nested subtrees: the edge must leave the inner subtree and end
    outside the outer one.  Disjoint subtrees: the edge must join them.
    """
    if tree.is_descendant(y, x):
        inner, outer = y, x
    elif tree.is_descendant(x, y):
        inner, outer = x, y
    else:
        xu = _subtree_mask(tree, x, tin_u)
        xv = _subtree_mask(tree, x, tin_v)
        yu = _subtree_mask(tree, y, tin_u)
        yv = _subtree_mask(tree, y, tin_v)
        return int(graph.edge_weight[(xu & yv) | (yu & xv)].sum())
    iu = _subtree_mask(tree, inner, tin_u)
    iv = _subtree_mask(tree, inner, tin_v)
    ou = _subtree_mask(tree, outer, tin_u)
    ov = _subtree_mask(tree, outer, tin_v)
    return int(graph.edge_weight[(iu & ~ov) | (iv & ~ou)].sum())


def pairwise_gamma(
    graph: Graph, tree: RootedSpanningTree, x: int, y: int
) -> int:
    """Intersection size of the subtree cuts of two distinct non-root
    vertices, as a weight sum."""
    mem = _validated_members(tree, (x, y))
    if len(mem) != 2:
        raise QueryError("pairwise query needs two distinct vertices")
    tin_u = tree.euler_in[graph.edge_u]
    tin_v = tree.euler_in[graph.edge_v]
    return _pair_value(graph, tree, mem[0], mem[1], tin_u, tin_v)


def _ancestor_table(tree: RootedSpanningTree) -> np.ndarray:
    """Binary-lifting table; row j holds the 2^j-th ancestor (root fixed)."""
    n = tree.graph.n
    levels = max(1, (max(1, n - 1)).bit_length())
    up = np.empty((levels, n), dtype=np.int64)
    base = tree.parent.copy()
    base[tree.root] = tree.root
    up[0] = base
    for j in range(1, levels):
        up[j] = up[j - 1][up[j - 1]]
    return up


def _lca_batch(
    tree: RootedSpanningTree, up: np.ndarray, a: np.ndarray, b: np.ndarray
) -> np.ndarray:
    """Lowest common ancestors for endpoint arrays, fully vectorized."""
    depth = tree.depth
    da = depth[a]
    db = depth[b]
    swap = db > da
    x = np.where(swap, b, a)
    y = np.where(swap, a, b)
    diff = np.abs(da - db)
    for j in range(up.shape[0]):
        take = ((diff >> j) & 1).astype(bool)
        if take.any():
            x = np.where(take, up[j][x], x)
    done = x == y
    for j in range(up.shape[0] - 1, -1, -1):
        ux = up[j][x]
        uy = up[j][y]
        lift = ~done & (ux != uy)
        if lift.any():
            x = np.where(lift, ux, x)
            y = np.where(lift, uy, y)
    return np.where(done, x, up[0][x])


def all_subtree_cut_sizes(
    graph: Graph, tree: RootedSpanningTree
) -> dict[int, int]:
    """Cut size of every subtree, keyed by its non-root top vertex.

    Each edge adds its weight at both endpoints and removes twice its
    weight at their lowest common ancestor; accumulating those counters
    bottom-up leaves, at each vertex v, exactly the weight of edges with
    one endpoint inside the subtree of v.  Tree edges follow the same
    rule (their lowest common ancestor is the parent endpoint), so one
    uniform pass covers the whole edge list.
    """
    n = graph.n
    root = tree.root
    diff = np.zeros(n, dtype=np.int64)
    if graph.m:
        up = _ancestor_table(tree)
        lca = _lca_batch(tree, up, graph.edge_u, graph.edge_v)
        w = graph.edge_weight
        np.add.at(diff, graph.edge_u, w)
        np.add.at(diff, graph.edge_v, w)
        np.subtract.at(diff, lca, 2 * w)
    acc = diff.tolist()
    parent = tree._parent
    for v in reversed(tree._order):
        if v != root:
            acc[parent[v]] += acc[v]
    return {v: acc[v] for v in range(n) if v != root}


class GammaTable:
    """Lazy per-(graph, tree) cache of subtree cut sizes, pairwise
    intersection sizes and resolved k-wise values.

    Pairwise entries are symmetric and filled on demand by one vectorized
    edge pass each; ``precompute_pairs`` fills a block of them up front
    for repeated query workloads.  Keep in mind that all pairs over n
    vertices is quadratic in n.
    """

    def __init__(self, graph: Graph, tree: RootedSpanningTree):
        if tree.graph.n != graph.n or tree.graph.m != graph.m:
            raise ValueError("tree was built for a different graph shape")
        self.graph = graph
        self.tree = tree
        self._singles: dict[int, int] = {}
        self._pairs: dict[tuple[int, int], int] = {}
        self._kwise: dict[tuple[int, ...], int] = {}
        self._tin_u: np.ndarray | None = None
        self._tin_v: np.ndarray | None = None

    def _gathers(self) -> tuple[np.ndarray, np.ndarray]:
        if self._tin_u is None:
            self._tin_u = self.tree.euler_in[self.graph.edge_u]
            self._tin_v = self.tree.euler_in[self.graph.edge_v]
        return self._tin_u, self._tin_v

    def single(self, v: int) -> int:
        """Cut size of the subtree of v."""
        val = self._singles.get(v)
        if val is None:
            (v,) = _validated_members(self.tree, (v,))
            tin_u, tin_v = self._gathers()
            val = _single_value(self.graph, self.tree, v, tin_u, tin_v)
            self._singles[v] = val
        return val

    def pair(self, x: int, y: int) -> int:
        """Intersection size of the subtree cuts of x and y."""
        key = (x, y) if x < y else (y, x)
        val = self._pairs.get(key)
        if val is None:
            mem = _validated_members(self.tree, key)
            if len(mem) != 2:
                raise QueryError("pairwise query needs two distinct vertices")
            tin_u, tin_v = self._gathers()
            val = _pair_value(
                self.graph, self.tree, key[0], key[1], tin_u, tin_v
            )
            self._pairs[key] = val
        return val

    def precompute_pairs(self, vertices: Iterable[int] | None = None) -> None:
        """Fill the pair cache for all pairs over the given vertices
        (default: every non-root vertex)."""
        if vertices is None:
            pool = [v for v in range(self.graph.n) if v != self.tree.root]
        else:
            pool = _validated_members(self.tree, vertices)
        for x, y in itertools.combinations(sorted(pool), 2):
            self.pair(x, y)


def _k_wise_cached(table: GammaTable, key: tuple[int, ...]) -> int:
    hit = table._kwise.get(key)
    if hit is not None:
        return hit
    case = _classify(table.tree, list(key))
    tag = case.tag
    if tag is CaseTag.BASE_SINGLE:
        val = table.single(key[0])
    elif tag is CaseTag.BASE_PAIR:
        val = table.pair(key[0], key[1])
    elif tag is CaseTag.CASE2_CHAIN:
        assert case.pair is not None
        val = table.pair(case.pair[0], case.pair[1])
    elif tag is CaseTag.CASE4_ELIMINABLE:
        val = _k_wise_cached(
            table, tuple(v for v in key if v != case.eliminated)
        )
    else:
        val = 0
    table._kwise[key] = val
    return val


def k_wise_gamma(
    graph: Graph,
    tree: RootedSpanningTree,
    members: Iterable[int],
    table: GammaTable | None = None,
) -> int:
    """Intersection size of the subtree cuts of all members.

    Resolves the classification recursively: base cases read the cached
    single or pairwise value, the chain case collapses to its witness
    pair, the independent and branching cases are zero, and the
    eliminable case drops its witness and recurses.
    """
    mem = _validated_members(tree, members)
    tab = table if table is not None else GammaTable(graph, tree)
    return _k_wise_cached(tab, tuple(mem))


def k_respecting_cut_size(
    graph: Graph,
    tree: RootedSpanningTree,
    members: Iterable[int],
    table: GammaTable | None = None,
    max_k: int | None = None,
) -> int:
    """Size of the unique cut whose crossing tree edges are exactly the
    parent edges of the members.

    Evaluates the alternating sum over all nonempty subsets of the query
    set: level l contributes (-1)^(l-1) * 2^(l-1) times the sum of the
    l-wise intersection values.  Exact integer arithmetic throughout.
    """
    mem = _validated_members(tree, members)
    limit = DEFAULT_MAX_K if max_k is None else int(max_k)
    if len(mem) > limit:
        raise KLimitExceeded(len(mem), limit)
    tab = table if table is not None else GammaTable(graph, tree)
    total = 0
    for level in range(1, len(mem) + 1):
        level_sum = 0
        for combo in itertools.combinations(mem, level):
            level_sum += _k_wise_cached(tab, combo)
        coeff = 1 << (level - 1)
        total += coeff * level_sum if level % 2 else -coeff * level_sum
    assert total >= 0, "alternating sum must land on a cut size"
    return total


def cut_size_via_tree(
    graph: Graph,
    tree: RootedSpanningTree,
    members: Iterable[int],
    table: GammaTable | None = None,
    max_k: int | None = None,
) -> tuple[int, frozenset[int]]:
    """Cut size of a vertex set, computed through the tree decomposition.

    Decomposes the cut into its subtree basis, then evaluates the
    alternating sum.  Returns (size, basis).  Raises KLimitExceeded,
    naming the offending k, when the basis outgrows the limit.
    """
    basis, _complemented = tree.decompose_cut_as_xor_basis(members)
    size = k_respecting_cut_size(
        graph, tree, basis, table=table, max_k=max_k
    )
    return size, frozenset(basis)
