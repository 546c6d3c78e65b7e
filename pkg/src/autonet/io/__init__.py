"""Network documents, rule expressions, Graphviz export and the command line."""

from .dot import to_dot, transition_graph_dot
from .formats import FormatError, NetworkDocument, dump_arrangement, dumps, load, loads, parse_document, save
from .rules import RuleSyntaxError, evaluate, network_from_rules, parse_rule

__all__ = [
    "FormatError",
    "NetworkDocument",
    "RuleSyntaxError",
    "dump_arrangement",
    "dumps",
    "evaluate",
    "load",
    "loads",
    "network_from_rules",
    "parse_document",
    "parse_rule",
    "save",
    "to_dot",
    "transition_graph_dot",
]
