"""Undirected weighted multigraph plus definition-level cut computations.

The two cut functions here deliberately walk the edge list one edge at a
time.  They are the ground truth the fast query engine is checked against,
so they stay close to the definition of a cut and share nothing with the
vectorized paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EdgeWeightError,
    EndpointRangeError,
    QueryError,
    SelfLoopError,
)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected multigraph with integer edge weights >= 1.

    Edge ids are dense 0-based positions into the endpoint arrays and
    preserve construction order.  Parallel edges are allowed, self-loops
    are not.  Instances never mutate after construction, so concurrent
    readers are safe.
    """

    n: int
    edge_u: np.ndarray
    edge_v: np.ndarray
    edge_weight: np.ndarray

    @classmethod
    def from_arrays(cls, n, edge_u, edge_v, edge_weight) -> "Graph":
        """Validate and adopt endpoint/weight arrays (copies them)."""
        if int(n) < 1:
            raise ValueError("a graph needs at least one vertex")
        n = int(n)
        u = np.array(edge_u, dtype=np.int64).reshape(-1)
        v = np.array(edge_v, dtype=np.int64).reshape(-1)
        w = np.array(edge_weight, dtype=np.int64).reshape(-1)
        if not (u.shape == v.shape == w.shape):
            raise ValueError("endpoint and weight arrays differ in length")
        bad = (u < 0) | (u >= n) | (v < 0) | (v >= n)
        if bad.any():
            i = int(np.argmax(bad))
            raise EndpointRangeError(
                f"edge {i} has endpoint outside [0, {n}): ({int(u[i])}, {int(v[i])})",
                edge_index=i,
            )
        loops = u == v
        if loops.any():
            i = int(np.argmax(loops))
            raise SelfLoopError(
                f"edge {i} is a self-loop at vertex {int(u[i])}", edge_index=i
            )
        light = w < 1
        if light.any():
            i = int(np.argmax(light))
            raise EdgeWeightError(
                f"edge {i} has weight {int(w[i])}, weights must be >= 1",
                edge_index=i,
            )
        u.setflags(write=False)
        v.setflags(write=False)
        w.setflags(write=False)
        return cls(n=n, edge_u=u, edge_v=v, edge_weight=w)

    @property
    def m(self) -> int:
        return int(self.edge_u.shape[0])

    def edge(self, eid: int) -> tuple[int, int, int]:
        """Endpoints and weight of one edge as plain ints."""
        if not 0 <= eid < self.m:
            raise QueryError(f"edge id {eid} out of range for {self.m} edges")
        return (
            int(self.edge_u[eid]),
            int(self.edge_v[eid]),
            int(self.edge_weight[eid]),
        )

    def iter_edges(self) -> Iterator[tuple[int, int, int]]:
        us, vs, ws = self._edge_lists
        return iter(zip(us, vs, ws))

    @cached_property
    def _edge_lists(self) -> tuple[list[int], list[int], list[int]]:
        return (
            self.edge_u.tolist(),
            self.edge_v.tolist(),
            self.edge_weight.tolist(),
        )

    @cached_property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex incidence lists of (neighbor, edge id), sorted."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        us, vs, _ = self._edge_lists
        for eid, (a, b) in enumerate(zip(us, vs)):
            adj[a].append((b, eid))
            adj[b].append((a, eid))
        for lst in adj:
            lst.sort()
        return adj


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph from (u, v) pairs or (u, v, weight) triples.

    Edge ids follow the order of edge_list and omitted weights default
    to one.  Rejects out-of-range endpoints, self-loops and weights
    below one, naming the offending edge index.
    """
    us: list[int] = []
    vs: list[int] = []
    ws: list[int] = []
    for edge in edge_list:
        u, v = edge[0], edge[1]
        us.append(int(u))
        vs.append(int(v))
        ws.append(int(edge[2]) if len(edge) > 2 else 1)
    return Graph.from_arrays(n, us, vs, ws)


def checked_vertex_set(graph: Graph, members: Iterable[int]) -> set[int]:
    """Coerce members to a set of ints inside the graph's vertex range."""
    out = {int(x) for x in members}
    for x in out:
        if not 0 <= x < graph.n:
            raise QueryError(
                f"vertex {x} out of range for {graph.n} vertices"
            )
    return out


def cut_edge_set(graph: Graph, members: Iterable[int]) -> set[int]:
    """Ids of edges with exactly one endpoint inside the vertex set."""
    inside = checked_vertex_set(graph, members)
    us, vs, _ = graph._edge_lists
    return {
        eid
        for eid, (a, b) in enumerate(zip(us, vs))
        if (a in inside) != (b in inside)
    }


def cut_size_direct(graph: Graph, members: Iterable[int]) -> int:
    """Total weight of the cut induced by the vertex set.

    Sums weights over cut_edge_set, edge by edge.
    """
    ws = graph._edge_lists[2]
    return sum(ws[eid] for eid in cut_edge_set(graph, members))
