"""Spanning-tree counts and structural statistics of the iterated graphs M(t)."""

from ._core import (
    DegenerateInputError,
    Error,
    InconsistencyError,
    MGraph,
    ResourceLimitError,
    analyze,
    build,
    count_separating_2forests,
    count_trees,
    count_trees_mod,
    entropy,
    entropy_table,
    g_value,
    q_closed_form,
    q_recurrence,
    s_recurrence,
    s_recurrence_mod,
    s_theorem1,
    verify,
)

__all__ = [
    "DegenerateInputError",
    "Error",
    "InconsistencyError",
    "MGraph",
    "ResourceLimitError",
    "analyze",
    "build",
    "count_separating_2forests",
    "count_trees",
    "count_trees_mod",
    "entropy",
    "entropy_table",
    "g_value",
    "q_closed_form",
    "q_recurrence",
    "s_recurrence",
    "s_recurrence_mod",
    "s_theorem1",
    "verify",
]
