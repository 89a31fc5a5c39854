"""Temporal network analysis with temporal quantities."""

from ._tqnet import (
    DEFAULT_SEED,
    FOREVER,
    ConsistencyError,
    Network,
    ParseError,
    co_occurrence,
    standardize,
    tq_prod,
    tq_sum,
    tq_total,
)

__all__ = [
    "DEFAULT_SEED",
    "FOREVER",
    "ConsistencyError",
    "Network",
    "ParseError",
    "co_occurrence",
    "standardize",
    "tq_prod",
    "tq_sum",
    "tq_total",
]
