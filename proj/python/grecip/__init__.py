"""Golomb ruler counting, the Golomb arrangement and mixed-graph reciprocity."""

from ._core import (
    DEFAULT_NODE_BUDGET,
    BudgetExceeded,
    Error,
    MixedGraph,
    Quasipolynomial,
    constrained_orientations,
    count_golomb_rulers,
    enumerate_golomb_rulers,
    golomb_hyperplanes,
    golomb_quasipolynomial,
    iop_vertices,
    is_golomb,
    multiplicity,
    optimal_length,
    period_bound,
    reciprocity_check_golomb,
)

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "BudgetExceeded",
    "Error",
    "MixedGraph",
    "Quasipolynomial",
    "constrained_orientations",
    "count_golomb_rulers",
    "enumerate_golomb_rulers",
    "golomb_hyperplanes",
    "golomb_quasipolynomial",
    "iop_vertices",
    "is_golomb",
    "multiplicity",
    "optimal_length",
    "period_bound",
    "reciprocity_check_golomb",
]
