"""Simplicial complexes represented by their facet antichains.

A complex is stored as the list of its maximal faces (facets) over integer
vertex labels.  Two degenerate complexes are distinct values and both occur
as boundary cases throughout the package:

* the void complex, which has no faces at all (``facets == ()``), and
* the irrelevant complex, whose only face is the empty face
  (``facets == (frozenset(),)``).

Faces are realized as sorted tuples of vertex labels and all enumeration
orders are fixed (lexicographic on sorted vertex lists), so every operation
here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Optional

Face = tuple[int, ...]

DEFAULT_FACE_CAP = 1 << 16


class SizeCapError(Exception):
    """A complex or matrix exceeded the configured resource cap."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable facet-antichain representation of a simplicial complex.

    ``facets`` is canonically ordered (lexicographic on sorted vertex
    tuples) and forms an antichain.  ``universe`` is bookkeeping only: it
    may list labels that appear in no facet (the sliding-window complexes
    use this) and is ignored by equality and hashing.  A vertex of the
    complex is a label that appears in some facet.
    """

    facets: tuple[frozenset[int], ...]
    universe: tuple[int, ...] = field(default=(), compare=False)

    @property
    def is_void(self) -> bool:
        return len(self.facets) == 0

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            out.update(f)
        return frozenset(out)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        inner = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(<{inner}>)"


def _face_key(f: Iterable[int]) -> Face:
    return tuple(sorted(f))


def make_complex(facet_candidates: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from generating faces, keeping only maximal ones.

    The generators need not be an antichain; duplicates and faces contained
    in other generators are absorbed.  An empty iterable yields the void
    complex, while ``[[]]`` (or any family whose largest member is the
    empty set) yields the irrelevant complex.  Labels must be nonnegative
    integers.
    """
    seen: set[frozenset[int]] = set()
    for cand in facet_candidates:
        fs = frozenset(cand)
        for v in fs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex labels must be nonnegative integers, got {v!r}")
        seen.add(fs)
    # absorb non-maximal members, largest first
    maximal: list[frozenset[int]] = []
    for fs in sorted(seen, key=len, reverse=True):
        if not any(fs < kept for kept in maximal):
            maximal.append(fs)
    maximal.sort(key=_face_key)
    facets = tuple(maximal)
    universe = tuple(sorted(set().union(*facets))) if facets else ()
    return SimplicialComplex(facets=facets, universe=universe)


def enumerate_faces(K: SimplicialComplex, p: int, cap: int = DEFAULT_FACE_CAP) -> list[Face]:
    """All faces of K with exactly p+1 vertices, lexicographically sorted.

    ``p == -1`` yields ``[()]`` for every non-void complex; degrees below
    -1 and degrees above the dimension yield an empty list.
    """
    if K.is_void or p < -1:
        return []
    if p == -1:
        return [()]
    out: set[Face] = set()
    for facet in K.facets:
        if len(facet) < p + 1:
            continue
        base = sorted(facet)
        for comb in combinations(base, p + 1):
            out.add(comb)
            if len(out) > cap:
                raise SizeCapError(f"more than {cap} faces of dimension {p}")
    return sorted(out)


def faces_by_dim(K: SimplicialComplex, cap: int = DEFAULT_FACE_CAP) -> dict[int, list[Face]]:
    """Expand all faces of K, grouped by dimension and sorted within each.

    The total face count (including the empty face) is capped; exceeding
    the cap raises SizeCapError before memory is committed.
    """
    if K.is_void:
        return {}
    out: set[Face] = set()
    for facet in K.facets:
        base = sorted(facet)
        for size in range(len(base) + 1):
            for comb in combinations(base, size):
                out.add(comb)
                if len(out) > cap:
                    raise SizeCapError(f"complex exceeds the {cap} face cap")
    grouped: dict[int, list[Face]] = {}
    for face in out:
        grouped.setdefault(len(face) - 1, []).append(face)
    for p in grouped:
        grouped[p].sort()
    return grouped


def is_cone(K: SimplicialComplex) -> Optional[int]:
    """Smallest vertex lying in every facet, or None if there is none.

    The void complex is rejected: it has no facets to share an apex.
    """
    if K.is_void:
        raise ValueError("the void complex has no cone structure")
    common = set(K.facets[0])
    for f in K.facets[1:]:
        common &= f
        if not common:
            break
    return min(common) if common else None


def cone(K: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Insert ``apex`` into every facet.  The apex must be a fresh label."""
    if apex in K.vertices:
        raise ValueError(f"apex {apex} is already a vertex")
    if K.is_void:
        return K
    return make_complex([f | {apex} for f in K.facets])


def union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    return make_complex(list(K1.facets) + list(K2.facets))


def intersection(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    # faces common to both are exactly the faces of pairwise facet meets
    return make_complex([f & g for f in K1.facets for g in K2.facets])


def omega_complex(n: int, t: int) -> SimplicialComplex:
    """Complex on 1..n whose facets omit one window of t consecutive labels.

    Facet i (for i = 1..n-t+1) is {1..n} minus {i, ..., i+t-1}.  For n == t
    this degenerates to the irrelevant complex; for t == 1 it is the
    boundary of the simplex on n vertices.  The universe records 1..n even
    when some labels appear in no facet.
    """
    if t < 1 or n < t:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    full = frozenset(range(1, n + 1))
    windows = [frozenset(range(i, i + t)) for i in range(1, n - t + 2)]
    K = make_complex([full - w for w in windows])
    return replace(K, universe=tuple(range(1, n + 1)))


def boundary_complex(n: int) -> SimplicialComplex:
    """Boundary of the full simplex on 1..n: all faces except the top one."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return make_complex([[]])
    return make_complex(combinations(range(1, n + 1), n - 1))


def facet_vertex_matching(K: SimplicialComplex) -> Optional[list[int]]:
    """Vertices v_1..v_q with v_i outside F_i and inside every other facet.

    Returns the matching in facet order, or None when no matching exists,
    when K has fewer than two facets, or when K is a cone.  The candidate
    sets for distinct facets are pairwise disjoint (membership in one
    forbids membership in the other), so greedy choice of the smallest
    candidate per facet is exhaustive.
    """
    if len(K.facets) < 2 or is_cone(K) is not None:
        return None
    verts = K.vertices
    chosen: list[int] = []
    for i, facet in enumerate(K.facets):
        cands = set(verts) - facet
        for j, other in enumerate(K.facets):
            if j != i:
                cands &= other
            if not cands:
                return None
        chosen.append(min(cands))
    return chosen


def dump_facets(K: SimplicialComplex) -> str:
    """One facet per line, vertices comma-separated; the empty facet as '-'."""
    lines = []
    for f in K.facets:
        lines.append(",".join(map(str, sorted(f))) if f else "-")
    return "\n".join(lines)
