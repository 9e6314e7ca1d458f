"""Exact wirelength of ternary n-cube embeddings into cylinders, caterpillars, firecrackers, and banana trees.

Three engines compute every value independently: a closed form, an edge-cut
congestion aggregation, and a shortest-path distance sum.  Exhaustive and
seeded stochastic searches probe the minimality claims instead of assuming
them.
"""

from .embedding import (
    EmbeddingInstance,
    congestion_per_edge,
    cut_congestion,
    lex_embedding,
    route,
    verify_cut_family,
    wirelength_by_cuts,
    wirelength_by_distance,
)
from .errors import (
    BudgetError,
    DomainError,
    GraphConstructionError,
    UnreachableVertexError,
    VerificationError,
)
from .formulas import (
    WirelengthRecord,
    cross_check,
    formula_value,
    records_to_csv,
    wl_banana,
    wl_caterpillar,
    wl_cylinder,
    wl_firecracker,
)
from .graph import (
    CutFamily,
    EdgeCut,
    LabeledGraph,
    bfs_distance,
    build_graph,
    cartesian_product,
    connected_components,
    cut_family_covers,
    distance_matrix,
    export_graph,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)
from .hosts import (
    HOST_KINDS,
    HostSpec,
    build_banana,
    build_caterpillar,
    build_cylinder,
    build_firecracker,
    build_host,
    preorder_labels,
)
from .qcube import (
    IsoProfile,
    QCube,
    TernaryWord,
    brute_force_iso,
    build_qcube,
    digit_complement,
    iso_closed_form,
    iso_profile,
    lex_prefix_induced,
    ternary_decompose,
)
from .search import SearchResult, exhaustive_search, local_search

__version__ = "0.1.0"
