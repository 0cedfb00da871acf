"""Remoteness of graphs under connectivity and size constraints.

Exact-rational remoteness, the extremal path-complete families, closed-form
upper bounds, and exhaustive / constructive verification of those bounds.
"""

from .bounds import (
    bound_kappa,
    bound_lambda_order,
    bound_lambda_size,
    bound_order,
    bound_size,
    bound_triangle_free,
    epsilon_exact,
)
from .connectivity import edge_connectivity, is_bipartite, is_triangle_free, vertex_connectivity
from .families import (
    bpk,
    enumerate_kappa_pc,
    enumerate_lambda_pc,
    pk_kappa,
    pk_lambda,
)
from .graphcore import (
    Graph,
    decode_graph6,
    encode_graph6,
    from_block_sequence,
    parse_blocks,
    remoteness,
    rho,
    transmission,
    transmissions,
)

__version__ = "0.1.0"

__all__ = [
    "Graph", "bound_kappa", "bound_lambda_order", "bound_lambda_size", "bound_order",
    "bound_size", "bound_triangle_free", "bpk", "decode_graph6", "edge_connectivity",
    "encode_graph6", "enumerate_kappa_pc", "enumerate_lambda_pc", "epsilon_exact",
    "from_block_sequence", "is_bipartite", "is_triangle_free", "parse_blocks", "pk_kappa",
    "pk_lambda", "remoteness", "rho", "transmission", "transmissions", "vertex_connectivity",
]
