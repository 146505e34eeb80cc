"""Minor models and rich models, their searches, rerooting, and tree-decomposition hitting arguments."""

from .decompositions import Hit, Pack, helly_hit_or_pack, shrink_interfaces, verify_interfaces
from .model import Model, RichModel, SubgraphFamily, validate_model, validate_rich_model
from .rerooting import reroot_fhd_model, reroot_tprime_model
from .search import SearchOutcome, disjoint_members, find_model, find_rich_model, is_subgraph
from .star_layering import Cover, Witness, check_star_cover, star_layering

__all__ = [
    "Cover",
    "Hit",
    "Model",
    "Pack",
    "RichModel",
    "SearchOutcome",
    "SubgraphFamily",
    "Witness",
    "check_star_cover",
    "disjoint_members",
    "find_model",
    "find_rich_model",
    "helly_hit_or_pack",
    "is_subgraph",
    "reroot_fhd_model",
    "reroot_tprime_model",
    "shrink_interfaces",
    "star_layering",
    "validate_model",
    "validate_rich_model",
    "verify_interfaces",
]
