"""Empirical growth of wcol_r in r: sampling an ordering scheme over a range of radii and fitting an exponent.

Two models are fitted by least squares on base-2 logarithms:

```
power:       log wcol_r = α · log r + c
log factor:  log wcol_r - log(1 + log r) = α · log r + c
```

The model with the smaller residual sum decides whether the log factor is flagged.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np
import pandas as pd

from wcol_graphs.constructions.basic import grid_graph, path_graph
from wcol_graphs.errors import BadParams, TooFewPoints
from wcol_graphs.graph.generators import random_spine_tree
from wcol_graphs.graph.graph import Graph, distances_from
from wcol_graphs.graph.structures import PathDecomposition, path_decomposition_of_ordering
from wcol_graphs.orderings.exact import wcol_exact
from wcol_graphs.orderings.reachability import wcol_of_ordering
from wcol_graphs.orderings.schemes import dyadic_path_ordering, elimination_ordering, pathwidth_ordering

logger = logging.getLogger(__name__)

MIN_POINTS = 3


class OrderingScheme(Enum):
    """How the ordering for one radius is obtained."""

    ELIMINATION = "elimination"
    DYADIC = "dyadic"
    PATHWIDTH = "pathwidth"
    EXACT = "exact"

    @classmethod
    def infer_type(cls, value: str | OrderingScheme) -> OrderingScheme:
        if isinstance(value, cls):
            return value
        for scheme in cls:
            if scheme.value == value:
                return scheme
        raise BadParams(f"Unknown ordering scheme {value!r}, choose from {[s.value for s in cls]}")


class GrowthFamily(Enum):
    """Graph families the growth command can sample, each with the scheme that suits it."""

    TREES = "trees"
    PATHS = "paths"
    GRIDS = "grids"

    @classmethod
    def infer_type(cls, value: str | GrowthFamily) -> GrowthFamily:
        if isinstance(value, cls):
            return value
        for family in cls:
            if family.value == value:
                return family
        raise BadParams(f"Unknown growth family {value!r}, choose from {[f.value for f in cls]}")

    @property
    def default_scheme(self) -> OrderingScheme:
        return {
            GrowthFamily.TREES: OrderingScheme.ELIMINATION,
            GrowthFamily.PATHS: OrderingScheme.DYADIC,
            GrowthFamily.GRIDS: OrderingScheme.PATHWIDTH,
        }[self]


@dataclass(frozen=True)
class GrowthSample:
    """wcol_r of one graph under one scheme.

    `exact` is True when the value is what it claims to be: a scheme ordering evaluated in full, or an exhaustive
    search that completed. A budget-exhausted search leaves an upper bound and sets it to False.
    """

    r: int
    value: int
    exact: bool = True


@dataclass
class GrowthFit:
    """Least-squares exponent of wcol_r against r, with and without a log factor divided out."""

    samples: list[GrowthSample]
    exponent: float
    intercept: float
    residual: float
    log_exponent: float
    log_intercept: float
    log_residual: float
    exact_only: bool = True
    dropped: list[GrowthSample] = field(default_factory=list)

    @property
    def log_factor(self) -> bool:
        """Whether dividing out 1 + log r fits strictly better."""
        return self.log_residual < self.residual

    @property
    def alpha(self) -> float:
        """The exponent of the better-fitting model."""
        return self.log_exponent if self.log_factor else self.exponent

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "log_factor": self.log_factor,
            "power": {"exponent": self.exponent, "intercept": self.intercept, "residual": self.residual},
            "log": {"exponent": self.log_exponent, "intercept": self.log_intercept, "residual": self.log_residual},
            "exact_only": self.exact_only,
            "samples": len(self.samples),
            "dropped": len(self.dropped),
        }

    def to_dataframe(self) -> pd.DataFrame:
        """Every sample, fitted or dropped, by radius."""
        rows = sorted(self.samples + self.dropped, key=lambda s: s.r)
        return pd.DataFrame(
            [{"r": s.r, "wcol": s.value, "exact": s.exact} for s in rows], columns=["r", "wcol", "exact"]
        )

    def write_csv(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_dataframe().to_csv(path, index=False)


def _least_squares(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    """Slope, intercept and residual sum of squares of the line through (x, y)."""
    a = np.column_stack([x, np.ones_like(x)])
    params, *_ = np.linalg.lstsq(a, y, rcond=None)
    slope, intercept = float(params[0]), float(params[1])
    errors = y - (slope * x + intercept)
    return slope, intercept, float(np.sum(errors**2))


def fit_samples(samples: Sequence[GrowthSample], exact_only: bool = True) -> GrowthFit:
    """Fit both growth models to the samples.

    Args:
        samples (Sequence[GrowthSample]): Samples with r ≥ 1 and value ≥ 1.
        exact_only (bool): Leave out samples whose value is only an upper bound.

    Returns:
        GrowthFit: The fit over the samples used.

    Raises:
        TooFewPoints: If fewer than three distinct radii remain.
    """
    used = sorted((s for s in samples if s.exact or not exact_only), key=lambda s: s.r)
    dropped = sorted((s for s in samples if not s.exact and exact_only), key=lambda s: s.r)
    if len({s.r for s in used}) < MIN_POINTS:
        raise TooFewPoints(f"a growth fit needs {MIN_POINTS} distinct radii, got {len({s.r for s in used})}")
    if any(s.r < 1 or s.value < 1 for s in used):
        raise BadParams("growth samples need r ≥ 1 and a positive value")
    x = np.log2(np.array([s.r for s in used], dtype=float))
    y = np.log2(np.array([s.value for s in used], dtype=float))
    exponent, intercept, residual = _least_squares(x, y)
    log_exponent, log_intercept, log_residual = _least_squares(x, y - np.log2(1 + x))
    fit = GrowthFit(
        used, exponent, intercept, residual, log_exponent, log_intercept, log_residual, exact_only, dropped
    )
    logger.debug("growth fit over %d samples: alpha %.3f, log factor %s", len(used), fit.alpha, fit.log_factor)
    return fit


def grid_decomposition(rows: int, cols: int) -> PathDecomposition:
    """Column-by-column path decomposition of the rows × cols grid, of width `rows`."""
    sequence = [i * cols + j for j in range(cols) for i in range(rows)]
    return path_decomposition_of_ordering(grid_graph(rows, cols), sequence)


def family_instance(
    family: GrowthFamily | str,
    vertices: int,
    rng: np.random.Generator,
    grid_rows: int = 3,
    spine: int | None = None,
) -> tuple[Graph, PathDecomposition | None]:
    """A graph of the family with about `vertices` vertices, and a path decomposition for the pathwidth scheme.

    Trees are grown on a spine of `spine` vertices (default: half of them), so their depth bounds the radii whose
    growth they can show.
    """
    match GrowthFamily.infer_type(family):
        case GrowthFamily.TREES:
            return random_spine_tree(vertices, min(vertices, spine or max(1, vertices // 2)), rng), None
        case GrowthFamily.PATHS:
            return path_graph(vertices), None
        case GrowthFamily.GRIDS:
            cols = max(1, vertices // grid_rows)
            return grid_graph(grid_rows, cols), grid_decomposition(grid_rows, cols)


def deepest_root(g: Graph) -> int:
    """The smallest vertex farthest from vertex 0; in a tree it ends a longest path."""
    distances = distances_from(g, 0)
    return max(sorted(distances), key=distances.__getitem__)


def growth_sample(
    g: Graph, scheme: OrderingScheme | str, r: int, pd: PathDecomposition | None = None, budget: int | None = None
) -> GrowthSample:
    """wcol_r of g under the ordering the scheme builds for radius r."""
    match OrderingScheme.infer_type(scheme):
        case OrderingScheme.ELIMINATION:
            sigma = elimination_ordering(g, deepest_root(g))
        case OrderingScheme.DYADIC:
            sigma = dyadic_path_ordering(g, r)
        case OrderingScheme.PATHWIDTH:
            if pd is None:
                pd = path_decomposition_of_ordering(g, sorted(g.vertices))
            sigma = pathwidth_ordering(g, pd, r)
        case OrderingScheme.EXACT:
            certificate = wcol_exact(g, r=r, budget=budget)
            return GrowthSample(r, certificate.value, certificate.exact)
    return GrowthSample(r, wcol_of_ordering(g, g.vertices, sigma, r).value)


def growth_fit(
    family: Graph | Callable[[int], Graph],
    r_values: Sequence[int],
    scheme: OrderingScheme | str,
    pd: PathDecomposition | None = None,
    exact_only: bool = True,
    budget: int | None = None,
) -> GrowthFit:
    """Sample wcol_r for every r in `r_values` and fit the growth exponent.

    Args:
        family (Graph | Callable[[int], Graph]): One graph for all radii, or a function building the graph for r.
        r_values (Sequence[int]): The radii, at least three distinct ones.
        scheme (OrderingScheme | str): elimination, dyadic, pathwidth or exact.
        pd (PathDecomposition | None): Path decomposition for the pathwidth scheme when `family` is one graph.
        exact_only (bool): Fit only samples whose value is not a mere upper bound.
        budget (int | None): Node budget of the exact scheme.

    Returns:
        GrowthFit: The fit, with the samples it left out kept as `dropped`.

    Raises:
        TooFewPoints: If fewer than three distinct radii are usable.
    """
    if len(set(r_values)) < MIN_POINTS:
        raise TooFewPoints(f"a growth fit needs {MIN_POINTS} distinct radii, got {len(set(r_values))}")
    samples = []
    for r in r_values:
        g = family if isinstance(family, Graph) else family(r)
        samples.append(growth_sample(g, scheme, r, pd if isinstance(family, Graph) else None, budget))
    return fit_samples(samples, exact_only)
