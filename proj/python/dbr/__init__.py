"""Distance-regular and distance-biregular graph recognition."""

from dbr._core import (
    Error,
    Graph,
    __version__,
    analyze,
    classify,
    diameter,
    enumerate_small_bipartite,
    excess_report,
    generate,
    girth,
    halved_report,
    is_bipartite,
    known_families,
    parse_edge_list,
    spectrum,
    to_edge_list,
)

__all__ = [
    "Error",
    "Graph",
    "__version__",
    "analyze",
    "classify",
    "diameter",
    "enumerate_small_bipartite",
    "excess_report",
    "generate",
    "girth",
    "halved_report",
    "is_bipartite",
    "known_families",
    "parse_edge_list",
    "spectrum",
    "to_edge_list",
]
