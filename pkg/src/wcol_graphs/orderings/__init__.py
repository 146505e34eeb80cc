"""Weak reachability, wcol evaluation, exact wcol and the constructive ordering schemes."""

from .exact import wcol_exact
from .ordering import Ordering, WcolCertificate
from .reachability import replay_wcol, wcol_of_ordering, wreach_sets
from .schemes import dyadic_path_ordering, elimination_ordering, pathwidth_ordering, prepend_sets

__all__ = [
    "Ordering",
    "WcolCertificate",
    "dyadic_path_ordering",
    "elimination_ordering",
    "pathwidth_ordering",
    "prepend_sets",
    "replay_wcol",
    "wcol_exact",
    "wcol_of_ordering",
    "wreach_sets",
]
