"""Enumeration of minimal Steiner trees, forests and related subgraphs with bounded delay."""
from .directed_steiner import enum_minimal_directed_steiner_trees, iter_minimal_directed_steiner_trees
from .enumtree import MODES, EnumStats, TreeStats
from .errors import GraphError, InfeasibleError, IntegrityError, OracleCapError, SteinerEnumError
from .graph import Graph, bridges, components, contract, lca_index, spanning_tree_containing
from .induced_clawfree import (
    enum_minimal_induced_steiner,
    is_claw_free,
    iter_minimal_induced_steiner,
    reduce_to_induced,
)
from .instance import Instance, parse_instance
from .output_queue import OutputQueue, QueueStats
from .path_enum import Path, enum_set_paths, enum_st_paths, iter_set_paths, iter_st_paths
from .steiner_forest import enum_minimal_steiner_forests, iter_minimal_steiner_forests
from .steiner_tree import enum_minimal_steiner_trees, iter_minimal_steiner_trees
from .terminal_steiner import enum_minimal_terminal_steiner_trees, iter_minimal_terminal_steiner_trees

__version__ = "0.1.0"

__all__ = [
    "MODES",
    "EnumStats",
    "Graph",
    "GraphError",
    "InfeasibleError",
    "Instance",
    "IntegrityError",
    "OracleCapError",
    "OutputQueue",
    "Path",
    "QueueStats",
    "SteinerEnumError",
    "TreeStats",
    "bridges",
    "components",
    "contract",
    "enum_minimal_directed_steiner_trees",
    "enum_minimal_induced_steiner",
    "enum_minimal_steiner_forests",
    "enum_minimal_steiner_trees",
    "enum_minimal_terminal_steiner_trees",
    "enum_set_paths",
    "enum_st_paths",
    "is_claw_free",
    "iter_minimal_directed_steiner_trees",
    "iter_minimal_induced_steiner",
    "iter_minimal_steiner_forests",
    "iter_minimal_steiner_trees",
    "iter_minimal_terminal_steiner_trees",
    "iter_set_paths",
    "iter_st_paths",
    "lca_index",
    "parse_instance",
    "reduce_to_induced",
    "spanning_tree_containing",
]
