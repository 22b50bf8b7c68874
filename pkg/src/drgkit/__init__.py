"""Distance-regular graphs: constructions, max-cut / independence / extendability bounds, exact oracles."""

from .graph import BIPARTITE, Graph
from .params import IntersectionArray, Spectrum, drg_spectrum, intersection_array_of
from .catalog import build, list_catalog

__version__ = "0.1.0"

__all__ = [
    "BIPARTITE",
    "Graph",
    "IntersectionArray",
    "Spectrum",
    "build",
    "drg_spectrum",
    "intersection_array_of",
    "list_catalog",
]
