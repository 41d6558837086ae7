"""Definition-level reference computations over the cut set algebra.

Everything here favors the literal definition over speed: sets are
materialized, edges are classified one by one, and no code is shared
with the vectorized query engine.  Tests use these as ground truth.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping

from .errors import DEFAULT_MAX_K, KLimitExceeded, QueryError, UniverseMismatchError
from .graph import Graph, cut_edge_set
from .tree import RootedSpanningTree


def symmetric_difference(sets: Iterable[set], universe: int | None = None) -> set:
    """Elements appearing in an odd number of the given sets.

    All sets must live over one universe; when ``universe`` is given as a
    size, members are checked against range(universe).
    """
    counts: Counter = Counter()
    for s in sets:
        counts.update(s)
    if universe is not None:
        for x in counts:
            if not (isinstance(x, int) and 0 <= x < universe):
                raise UniverseMismatchError(
                    f"element {x!r} outside the declared universe of size {universe}"
                )
    return {x for x, c in counts.items() if c % 2}


def xor_size_by_inclusion_exclusion(
    sets: list[set],
    weight: Mapping | None = None,
    max_k: int | None = None,
) -> int:
    """Weighted size of the symmetric difference, via the alternating sum
    over all nonempty subset intersections.

    Computes sum over nonempty J of (-1)^(|J|-1) * 2^(|J|-1) * |intersection
    of sets[j] for j in J|, where |.| sums ``weight`` (default weight 1).
    Enumerates the 2^k - 1 bitmasks directly, so k is capped.
    """
    k = len(sets)
    if k < 1:
        raise QueryError("need at least one set")
    limit = DEFAULT_MAX_K if max_k is None else int(max_k)
    if k > limit:
        raise KLimitExceeded(k, limit)
    total = 0
    for bits in range(1, 1 << k):
        inter: set | None = None
        for j in range(k):
            if bits >> j & 1:
                inter = set(sets[j]) if inter is None else inter & sets[j]
        assert inter is not None
        size = (
            len(inter) if weight is None else sum(weight[x] for x in inter)
        )
        level = bits.bit_count()
        term = (1 << (level - 1)) * size
        total += term if level % 2 else -term
    return total


def _checked_members(
    tree: RootedSpanningTree, members: Iterable[int], min_size: int
) -> set[int]:
    out = {int(v) for v in members}
    if len(out) < min_size:
        raise QueryError(f"query set needs at least {min_size} vertices")
    for v in out:
        if not 0 <= v < tree.graph.n:
            raise QueryError(
                f"vertex {v} out of range for {tree.graph.n} vertices"
            )
        if v == tree.root:
            raise QueryError(f"root {v} cannot appear in a query set")
    return out


def xor_of_subtrees(tree: RootedSpanningTree, members: Iterable[int]) -> set[int]:
    """Symmetric difference of the subtree vertex sets of the members."""
    mem = _checked_members(tree, members, min_size=0)
    return symmetric_difference([tree.subtree_members(v) for v in mem])


def oracle_k_wise_gamma(
    graph: Graph, tree: RootedSpanningTree, members: Iterable[int]
) -> int:
    """Weight of edges lying in every member's subtree cut.

    Classifies each edge against each materialized subtree set: the edge
    belongs to a subtree's cut exactly when one endpoint is inside and the
    other outside.
    """
    mem = _checked_members(tree, members, min_size=1)
    subs = [tree.subtree_members(v) for v in sorted(mem)]
    total = 0
    for u, v, w in graph.iter_edges():
        if all((u in s) != (v in s) for s in subs):
            total += w
    return total


def check_cut_space_identity(
    graph: Graph, tree: RootedSpanningTree, members: Iterable[int]
) -> bool:
    """Does the cut of the subtree symmetric difference equal the symmetric
    difference of the subtree cuts?

    Both sides are computed set-theoretically from the definitions.
    """
    mem = _checked_members(tree, members, min_size=0)
    lhs = cut_edge_set(graph, xor_of_subtrees(tree, mem))
    rhs = symmetric_difference(
        [cut_edge_set(graph, tree.subtree_members(v)) for v in mem]
    )
    return lhs == rhs
