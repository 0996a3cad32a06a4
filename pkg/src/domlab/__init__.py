"""Exact domination toolkit: removal versus subdivision of edges."""

from .domination import (
    DominationCertificate,
    GammaFamily,
    all_gamma_sets,
    domination_number,
    epn,
    gamma,
    is_bondage_edge,
    is_dominating,
    satisfies_teschner,
)
from .edge_classify import (
    EdgeProfile,
    GraphVerdict,
    Relation,
    Verdict,
    classify_graph,
    edge_profile,
    is_strong_edge,
    is_weak_edge,
    sr_tree_bondage_edges,
    sr_tree_check,
)
from .graph import Edge, Graph, corona, join, remove_edge, subdivide_edge

__version__ = "0.1.0"

__all__ = [
    "DominationCertificate",
    "Edge",
    "EdgeProfile",
    "GammaFamily",
    "Graph",
    "GraphVerdict",
    "Relation",
    "Verdict",
    "all_gamma_sets",
    "classify_graph",
    "corona",
    "domination_number",
    "edge_profile",
    "epn",
    "gamma",
    "is_bondage_edge",
    "is_dominating",
    "is_strong_edge",
    "is_weak_edge",
    "join",
    "remove_edge",
    "satisfies_teschner",
    "sr_tree_bondage_edges",
    "sr_tree_check",
    "subdivide_edge",
]
