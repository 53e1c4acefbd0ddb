"""sparsity-forge: exact (a, b)-sparsity decisions, count-matroid union
partitions, and forest decompositions of simple graphs."""

from .decompose import (
    Decomposition,
    VerificationReport,
    check_hypergraph_bound,
    decompose_ksw,
    verify_decomposition,
)
from .errors import (
    GraphFormatError,
    MatroidRegimeError,
    NotSparseError,
    PathologicalParametersError,
    SparsityForgeError,
    TheoremViolationError,
    VerificationError,
)
from .graphs import (
    EdgeSet,
    Graph,
    VertexSet,
    circulant,
    complete_graph,
    disjoint_union,
    full_edge_set,
    gen_counterexample_disconnected,
    gen_counterexample_glued_trees,
    gen_counterexample_ring,
    glue,
    parse_edgelist,
    parse_graph6,
    write_edgelist,
    write_graph6,
)
from .matroid import (
    CountMatroidOracle,
    find_tight_components,
    is_independent,
    make_oracle,
    rank,
)
from .oracle import brute_partition_exists, brute_sparse, check_matroid_axioms
from .partition import (
    PartitionResult,
    matroid_union_partition,
    partition_forest_plus,
    partition_sparse,
)
from .rationals import format_rational, parse_rational
from .refine import ForestPartition, brooks_refine, eliminate_triangles, find_bad_sets
from .sparsity import (
    SparsityCertificate,
    SparsityParams,
    f,
    forest_slack,
    is_sparse,
    is_tight,
    m2_of,
    m2_pair,
    m_of,
    max_violation,
    potential,
)

__version__ = "0.1.0"

__all__ = [
    "CountMatroidOracle",
    "Decomposition",
    "EdgeSet",
    "ForestPartition",
    "Graph",
    "GraphFormatError",
    "MatroidRegimeError",
    "NotSparseError",
    "PartitionResult",
    "PathologicalParametersError",
    "SparsityCertificate",
    "SparsityForgeError",
    "SparsityParams",
    "TheoremViolationError",
    "VerificationError",
    "VerificationReport",
    "VertexSet",
    "brooks_refine",
    "brute_partition_exists",
    "brute_sparse",
    "check_hypergraph_bound",
    "check_matroid_axioms",
    "circulant",
    "complete_graph",
    "decompose_ksw",
    "disjoint_union",
    "eliminate_triangles",
    "f",
    "find_bad_sets",
    "find_tight_components",
    "forest_slack",
    "format_rational",
    "full_edge_set",
    "gen_counterexample_disconnected",
    "gen_counterexample_glued_trees",
    "gen_counterexample_ring",
    "glue",
    "is_independent",
    "is_sparse",
    "is_tight",
    "m2_of",
    "m2_pair",
    "m_of",
    "make_oracle",
    "matroid_union_partition",
    "max_violation",
    "parse_edgelist",
    "parse_graph6",
    "parse_rational",
    "partition_forest_plus",
    "partition_sparse",
    "potential",
    "rank",
    "verify_decomposition",
    "write_edgelist",
    "write_graph6",
]
