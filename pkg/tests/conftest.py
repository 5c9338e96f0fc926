"""Shared generators for the test suite.

Randomized structures are always driven by an explicit seeded Random so
every run sees the same instances.
"""

from __future__ import annotations

import random

from pathbetti import SimplicialComplex, cone, make_complex


def random_complex(rng: random.Random, max_vertices: int = 8, max_facets: int = 7) -> SimplicialComplex:
    nv = rng.randint(1, max_vertices)
    labels = list(range(1, nv + 1))
    cands = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(0, nv)
        cands.append(rng.sample(labels, size))
    return make_complex(cands)


def random_acyclic(rng: random.Random, max_vertices: int = 6, max_facets: int = 5) -> SimplicialComplex:
    """A cone or a full simplex on a small label set; acyclic either way."""
    if rng.random() < 0.5:
        nv = rng.randint(1, max_vertices)
        return make_complex([rng.sample(range(1, nv + 1), rng.randint(1, nv))])
    base = random_complex(rng, max_vertices=max_vertices, max_facets=max_facets)
    return cone(base, 0)
