"""Brute-force Betti numbers of S/I for path ideals.

The multigraded number b_{i,m} is the reduced homology dimension of the
strict Taylor subcomplex in degree i-2, computed only on multidegrees in
the lcm lattice (everything else vanishes).  Graded tables sum the
multigraded values over all vertex subsets of a fixed size; the chosen
field characteristic does not change any table in this package's scope,
which the test suite checks rather than assumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .graphs import Graph, induced_subgraph
from .homology import DEFAULT_PRIME, reduced_homology_dims, validate_prime
from .ideals import MonomialIdeal, ideal_lcm, is_lcm_closed, path_ideal, taylor_strict_sub


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of S/I: entries (i, j) -> b, zeros omitted.

    Every table contains the unit entry (0, 0) -> 1 for S itself.
    """

    ambient_n: int
    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, ambient_n: int, data: Mapping[tuple[int, int], int]) -> "BettiTable":
        items = tuple(sorted((ij, b) for ij, b in data.items() if b))
        return cls(ambient_n=ambient_n, entries=items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    @property
    def max_i(self) -> int:
        return max((ij[0] for ij, _ in self.entries), default=0)

    @property
    def max_j(self) -> int:
        return max((ij[1] for ij, _ in self.entries), default=0)

    def restrict_j(self, allowed) -> "BettiTable":
        """Table with only the entries whose total degree satisfies allowed."""
        kept = {ij: b for ij, b in self.entries if ij == (0, 0) or allowed(ij[1])}
        return BettiTable.from_dict(self.ambient_n, kept)


def multigraded_betti(
    I: MonomialIdeal,
    m: Iterable[int],
    p_field: int = DEFAULT_PRIME,
) -> dict[int, int]:
    """Nonzero b_{i,m}(S/I) for i >= 1, as a dict i -> dimension.

    Off the lcm lattice the answer is {} without any homology work; on it
    b_{i,m} is the homology dimension of the strict Taylor subcomplex in
    degree i-2.
    """
    ms = frozenset(m)
    if not is_lcm_closed(I, ms):
        return {}
    profile = reduced_homology_dims(taylor_strict_sub(I, ms), p_field)
    return {p + 2: d for p, d in profile.dims}


def multigraded_record(
    I: MonomialIdeal,
    p_field: int = DEFAULT_PRIME,
) -> dict[tuple[int, frozenset[int]], int]:
    """All nonzero (i, m) -> b_{i,m} over subsets of the lcm support."""
    support = sorted(ideal_lcm(I))
    out: dict[tuple[int, frozenset[int]], int] = {}
    for size in range(len(support) + 1):
        for sub in combinations(support, size):
            w = frozenset(sub)
            for i, b in multigraded_betti(I, w, p_field).items():
                out[(i, w)] = b
    return out


class IsoMemo:
    """Cache of multigraded vectors keyed by the isomorphism class of G_W.

    Cheap invariants (order, size, degree multiset, component orders)
    bucket the candidates; an exact isomorphism check guards every reuse,
    so a hash collision can never corrupt a table.
    """

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[tuple[Graph, dict[int, int]]]] = {}
        self.hits = 0

    @staticmethod
    def _invariant(G: Graph) -> tuple:
        from .graphs import connected_components

        adj = G.adjacency()
        degrees = tuple(sorted(len(adj[v]) for v in G.vertices))
        comps = tuple(sorted(len(c) for c in connected_components(G)))
        return (G.n, len(G.edges), degrees, comps)

    @staticmethod
    def _to_nx(G: Graph):
        import networkx as nx

        H = nx.Graph()
        H.add_nodes_from(G.vertices)
        H.add_edges_from(G.edges)
        return H

    def lookup(self, G: Graph) -> Optional[dict[int, int]]:
        import networkx as nx

        for stored, vec in self._buckets.get(self._invariant(G), []):
            if nx.is_isomorphic(self._to_nx(stored), self._to_nx(G)):
                self.hits += 1
                return dict(vec)
        return None

    def store(self, G: Graph, vec: dict[int, int]) -> None:
        self._buckets.setdefault(self._invariant(G), []).append((G, dict(vec)))


def graded_betti_table(
    G: Graph,
    t: int,
    p_field: int = DEFAULT_PRIME,
    use_memo: bool = False,
) -> BettiTable:
    """Betti table of S/I_t(G) by summing multigraded values over subsets.

    Only subsets of the lcm support can contribute, and within those only
    the lcm-closed ones reach the homology engine.  With use_memo the
    multigraded vector is cached per isomorphism class of the induced
    subgraph, which is sound because the vector depends on nothing else.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    validate_prime(p_field)
    I = path_ideal(G, t)
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    support = sorted(ideal_lcm(I))
    memo = IsoMemo() if use_memo else None
    for size in range(1, len(support) + 1):
        for sub in combinations(support, size):
            w = frozenset(sub)
            if not is_lcm_closed(I, w):
                continue
            if memo is not None:
                gw = induced_subgraph(G, w)
                vec = memo.lookup(gw)
                if vec is None:
                    vec = multigraded_betti(I, w, p_field)
                    memo.store(gw, vec)
            else:
                vec = multigraded_betti(I, w, p_field)
            for i, b in vec.items():
                table[(i, size)] = table.get((i, size), 0) + b
    return BettiTable.from_dict(len(G.vertices), table)


def top_betti_product(vectors: Sequence[Mapping[int, int]]) -> dict[int, int]:
    """Convolution of top-grade Betti vectors (one per component ideal).

    The empty product is the unit {0: 1}; any zero vector annihilates the
    result, matching a component whose top multidegree is not lcm-closed.
    """
    acc: dict[int, int] = {0: 1}
    for vec in vectors:
        nxt: dict[int, int] = {}
        for a, va in acc.items():
            for b, vb in vec.items():
                nxt[a + b] = nxt.get(a + b, 0) + va * vb
        acc = nxt
    return acc
