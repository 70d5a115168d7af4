"""Exact generating functions for labeled graphs counted by order, additive
statistics and weighted number of connected components."""

from .enumeration import (bicolored_counts, bipartite_component_table, build_aux,
                          components_from_connected, connected_bipartite_series,
                          connected_from_all, count_via_partitions, enumerate_weighted,
                          remove_components)
from .errors import (ConstantTermError, GraphCountError, IncompatibleSeriesError,
                     InconsistentTableError, OracleCapError, SeriesKindError)
from .series import (Monomial, Series, WeightVector, add, apply_tau, coefficient,
                     exp_series, log_series, monomial, mul, specialize)
from .tables import ConnectedCountTable, CountTable

__all__ = [
    "bicolored_counts", "bipartite_component_table", "build_aux",
    "components_from_connected", "connected_bipartite_series", "connected_from_all",
    "count_via_partitions", "enumerate_weighted", "remove_components",
    "ConstantTermError", "GraphCountError", "IncompatibleSeriesError",
    "InconsistentTableError", "OracleCapError", "SeriesKindError",
    "Monomial", "Series", "WeightVector", "add", "apply_tau", "coefficient",
    "exp_series", "log_series", "monomial", "mul", "specialize",
    "ConnectedCountTable", "CountTable",
]
