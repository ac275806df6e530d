"""Edit distance functions of word-representability and comparability,
computed through colored regularity graphs."""

from .crg import Crg, g_value, is_p_core, k_rs, make_crg, path_crg, cycle_crg
from .edf import ed_closed, envelope, max_point
from .graphs import SmallGraph, make_named
from .hom import admissible, exists_hom
from .spectral import path_g, path_weights, transition_point

__version__ = "0.1.0"

__all__ = [
    "Crg", "SmallGraph", "admissible", "cycle_crg", "ed_closed", "envelope", "exists_hom",
    "g_value", "is_p_core", "k_rs", "make_crg", "make_named", "max_point", "path_crg",
    "path_g", "path_weights", "transition_point",
]
