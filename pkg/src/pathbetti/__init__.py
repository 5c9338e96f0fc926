"""Betti tables of path ideals of graphs.

Two independent routes to the same numbers: a brute-force oracle (strict
Taylor subcomplex homology over a prime field) and closed formulas for
lines, cycles, and stars.  The CLI front end lives in pathbetti.cli.
"""

from .betti import (
    BettiTable,
    IsoMemo,
    graded_betti_table,
    multigraded_betti,
    multigraded_record,
    top_betti_product,
)
from .complexes import (
    SimplicialComplex,
    SizeCapError,
    boundary_complex,
    cone,
    dump_facets,
    enumerate_faces,
    faces_by_dim,
    facet_vertex_matching,
    intersection,
    is_cone,
    make_complex,
    omega_complex,
    union,
)
from .formulas import (
    FormulaTable,
    UnsupportedFormulaError,
    binomial,
    cycle_graded_formula,
    formula_betti_table,
    line_graded_formula,
    line_multigraded_formula,
    line_top_betti_formula,
    omega_homology_dims_formula,
    star_graded_formula,
)
from .graphs import (
    Graph,
    connected_components,
    enumerate_t_paths,
    graph_from_edges,
    graph_from_json,
    has_isolated_vertex,
    induced_subgraph,
    line_decomposition,
    standard_graph,
)
from .homology import (
    DEFAULT_PRIME,
    HomologyProfile,
    PrimeFieldMatrix,
    boundary_matrix,
    is_prime,
    reduced_euler_characteristic,
    reduced_homology_dims,
    validate_prime,
)
from .ideals import MonomialIdeal, ideal_lcm, is_lcm_closed, path_ideal, taylor_strict_sub

__version__ = "0.1.0"
