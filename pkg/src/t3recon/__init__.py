"""Reconstruction of labeled graphs from their connected triples and k-sets."""

from t3recon.classrecon import (
    RegularPlanarResult,
    reconstruct_cycle,
    reconstruct_multipartite,
    reconstruct_planar5,
    reconstruct_regular_planar,
    reconstruct_srg,
    reconstruct_wheel,
)
from t3recon.errors import (
    BoundExceeded,
    ClassificationError,
    GraphFormatError,
    PromiseViolation,
    ReconError,
    UnsupportedSizeError,
)
from t3recon.graph import LabeledGraph, encode_graph6, parse_edge_list, parse_graph6, vertex_connectivity
from t3recon.ksets import (
    KSetFamily,
    complement_ksets,
    connected_ksets,
    connectivity_from_ksets,
    lift_ksets,
    maximal_glued_sets,
)
from t3recon.neighborhood import classify_neighborhoods, t3_neighborhoods
from t3recon.strong import (
    FAMILIES,
    check_strong_fast,
    check_strong_oracle,
    check_strong_trianglefree,
    enumerate_realizations,
    find_twin_graphs,
    is_edge_necessary,
    match_family,
)

__all__ = [
    "BoundExceeded",
    "ClassificationError",
    "FAMILIES",
    "GraphFormatError",
    "KSetFamily",
    "LabeledGraph",
    "PromiseViolation",
    "ReconError",
    "RegularPlanarResult",
    "UnsupportedSizeError",
    "check_strong_fast",
    "check_strong_oracle",
    "check_strong_trianglefree",
    "classify_neighborhoods",
    "complement_ksets",
    "connected_ksets",
    "connectivity_from_ksets",
    "encode_graph6",
    "enumerate_realizations",
    "find_twin_graphs",
    "is_edge_necessary",
    "lift_ksets",
    "match_family",
    "maximal_glued_sets",
    "parse_edge_list",
    "parse_graph6",
    "reconstruct_cycle",
    "reconstruct_multipartite",
    "reconstruct_planar5",
    "reconstruct_regular_planar",
    "reconstruct_srg",
    "reconstruct_wheel",
    "t3_neighborhoods",
    "vertex_connectivity",
]
