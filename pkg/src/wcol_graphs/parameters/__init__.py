"""Exact recursive parameters (td, td2, rtd2), vertex cover, small exact widths and replayable certificates."""

from .certificate import ParamCertificate, Parameter, WitnessStep, replay_certificate
from .embedding import EmbeddingResult, EmbeddingStatus, rtd2_by_embedding
from .recursive import (
    RootedTwoDepthSolver,
    TreedepthSolver,
    TwoDepthSolver,
    exponent_bracket,
    rooted_twodepth,
    rooted_twodepth_by_separations,
    rtd2_at_most_one,
    rtd2_at_most_two,
    treedepth,
    twodepth,
)
from .vertex_cover import vertex_cover_number
from .widths import treewidth_pathwidth_exact

__all__ = [
    "EmbeddingResult",
    "EmbeddingStatus",
    "ParamCertificate",
    "Parameter",
    "RootedTwoDepthSolver",
    "TreedepthSolver",
    "TwoDepthSolver",
    "WitnessStep",
    "exponent_bracket",
    "replay_certificate",
    "rooted_twodepth",
    "rooted_twodepth_by_separations",
    "rtd2_at_most_one",
    "rtd2_at_most_two",
    "rtd2_by_embedding",
    "treedepth",
    "treewidth_pathwidth_exact",
    "twodepth",
    "vertex_cover_number",
]
