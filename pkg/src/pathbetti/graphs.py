"""Finite simple graphs over integer vertex labels.

Standard families use vertices 1..n (the star S_n has n+1 vertices with
center 1); induced subgraphs keep their original labels, so a Graph is a
graph on an arbitrary finite label set.  All enumeration orders are fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

_FAMILIES = ("line", "cycle", "star")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: sorted vertex tuple, sorted edge tuple."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _build(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
    vs = tuple(sorted(set(vertices)))
    es = {(min(u, v), max(u, v)) for u, v in edges}
    return Graph(vertices=vs, edges=tuple(sorted(es)))


def standard_graph(kind: str, size_param: int) -> Graph:
    """Named family constructor: line L_n, cycle C_n, or star S_n.

    L_n is the path on vertices 1..n, C_n the cycle on 1..n (n >= 3), and
    S_n the star with center 1 and leaves 2..n+1.
    """
    if kind not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}, expected one of {_FAMILIES}")
    n = size_param
    if kind == "line":
        if n < 1:
            raise ValueError("line needs n >= 1")
        return _build(range(1, n + 1), [(i, i + 1) for i in range(1, n)])
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
        return _build(range(1, n + 1), edges)
    if n < 1:
        raise ValueError("star needs n >= 1")
    return _build(range(1, n + 2), [(1, k) for k in range(2, n + 2)])


def graph_from_edges(n: int, edge_list: Sequence[Sequence[int]]) -> Graph:
    """Graph on vertices 1..n from an explicit edge list.

    Loops and endpoints outside 1..n are rejected with the offending pair
    named.  Duplicate edges and either endpoint order are accepted.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    edges = []
    for pair in edge_list:
        if len(pair) != 2:
            raise ValueError(f"edge {list(pair)!r} is not a pair")
        u, v = pair
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) is not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 1..{n}")
        edges.append((u, v))
    return _build(range(1, n + 1), edges)


def graph_from_json(data: Mapping) -> Graph:
    """Ingest the {"n": int, "edges": [[u,v], ...]} wire format (1-based)."""
    if "n" not in data or "edges" not in data:
        raise ValueError('graph JSON needs keys "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError('"n" must be an integer')
    return graph_from_edges(n, data["edges"])


def induced_subgraph(G: Graph, W: Iterable[int]) -> Graph:
    """Subgraph on the vertex subset W, labels preserved."""
    ws = frozenset(W)
    if not ws <= G.vertex_set:
        raise ValueError(f"subset {sorted(ws)} is not contained in the vertex set")
    return _build(ws, [(u, v) for u, v in G.edges if u in ws and v in ws])


def enumerate_t_paths(G: Graph, t: int) -> list[frozenset[int]]:
    """Distinct vertex supports of simple paths on t vertices, sorted.

    t = 1 gives all singletons and t = 2 the edge set.  A support appears
    once no matter how many paths trace it.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if t == 1:
        return [frozenset({v}) for v in G.vertices]
    adj = G.adjacency()
    supports: set[frozenset[int]] = set()

    def extend(last: int, visited: set[int]) -> None:
        if len(visited) == t:
            supports.add(frozenset(visited))
            return
        for nb in adj[last]:
            if nb not in visited:
                visited.add(nb)
                extend(nb, visited)
                visited.remove(nb)

    for start in G.vertices:
        extend(start, {start})
    return sorted(supports, key=sorted)


def connected_components(G: Graph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest member."""
    adj = G.adjacency()
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for v in G.vertices:
        if v in seen:
            continue
        stack, comp = [v], {v}
        while stack:
            u = stack.pop()
            for nb in adj[u]:
                if nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        seen |= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def has_isolated_vertex(G: Graph) -> bool:
    adj = G.adjacency()
    return any(not nbs for nbs in adj.values())


def line_decomposition(G: Graph) -> Optional[list[int]]:
    """Component orders, largest first, if every component is a path.

    A component on k vertices is a path exactly when it has k-1 edges and
    no vertex of degree above 2.  Returns None as soon as some component
    is not a path; the empty graph decomposes into the empty list.
    """
    adj = G.adjacency()
    orders = []
    for comp in connected_components(G):
        edge_count = sum(1 for u, v in G.edges if u in comp and v in comp)
        if edge_count != len(comp) - 1:
            return None
        if any(len(adj[v]) > 2 for v in comp):
            return None
        orders.append(len(comp))
    return sorted(orders, reverse=True)
