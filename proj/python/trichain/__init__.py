"""Triangular chain graphs and bond-incident-degree indices."""

from ._core import (
    Index,
    TrichainError,
    brute_force_extremal,
    build_chain_graph,
    canonicalize,
    catalog_index,
    catalog_names,
    closed_edge_counts,
    closed_form_index,
    closed_vertex_counts,
    compute_lambdas,
    direct_index,
    edge_type_counts,
    enumerate_length_vectors,
    length_vector_from_turns,
    multiplicative_sum_zagreb,
    phi,
    special_chain,
    to_dot,
    turns_from_length_vector,
    validate_length_vector,
    verify_claims,
)

__all__ = [
    "Index",
    "TrichainError",
    "brute_force_extremal",
    "build_chain_graph",
    "canonicalize",
    "catalog_index",
    "catalog_names",
    "closed_edge_counts",
    "closed_form_index",
    "closed_vertex_counts",
    "compute_lambdas",
    "direct_index",
    "edge_type_counts",
    "enumerate_length_vectors",
    "length_vector_from_turns",
    "multiplicative_sum_zagreb",
    "phi",
    "special_chain",
    "to_dot",
    "turns_from_length_vector",
    "validate_length_vector",
    "verify_claims",
]
