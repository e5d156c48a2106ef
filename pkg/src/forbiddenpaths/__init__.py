"""Shortest walks in a weighted digraph that avoid forbidden paths.

The forbidden paths are only known through an oracle that, given a walk,
either confirms it or reports a forbidden path it contains.
"""

from .automaton import PatternAutomaton
from .graph import Graph, GraphError, from_edges
from .oracle import ExceptionStore, ForbiddenPath, Hit, scan_occurrences
from .reference import avoiding_distances, build_automaton, shortest_avoiding
from .router import (
    Occurrence,
    RouteOutcome,
    RouteTable,
    Router,
    RoutingError,
    SptState,
    initial_tree,
    locate_exception,
    modify_graph,
    rebuild_tree,
    route_all,
    route_single,
    route_weak,
)
from .textio import ParseError, format_exceptions, format_graph, parse_exceptions, parse_graph

__all__ = [
    "ExceptionStore",
    "ForbiddenPath",
    "Graph",
    "GraphError",
    "Hit",
    "Occurrence",
    "ParseError",
    "PatternAutomaton",
    "RouteOutcome",
    "RouteTable",
    "Router",
    "RoutingError",
    "SptState",
    "avoiding_distances",
    "build_automaton",
    "format_exceptions",
    "format_graph",
    "from_edges",
    "initial_tree",
    "locate_exception",
    "modify_graph",
    "parse_exceptions",
    "parse_graph",
    "rebuild_tree",
    "route_all",
    "route_single",
    "route_weak",
    "scan_occurrences",
    "shortest_avoiding",
]
