"""Exact dominating / restrained-dominating coalition numbers for small graphs."""

from ._core import (
    CoalitionCertificate,
    Graph,
    Justification,
    Kind,
    Partition,
    SearchStats,
    SolveResult,
    SolverConfig,
    Violation,
    all_qualifying_sets,
    cn_cycle_upper,
    coalition_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    domination_number,
    export_dot,
    find_partition_of_size,
    free_trees,
    is_coalition,
    is_dominating,
    is_restrained_dominating,
    max_coalition_number,
    naive_max_oracle,
    path_graph,
    rc_cycle_expected,
    rc_path_expected,
    restrained_domination_number,
    star_graph,
    verify_partition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
