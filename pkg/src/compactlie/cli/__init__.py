"""Command-line interface: grammar, query dispatch and output rendering."""

from .grammar import GroupSpec, canonical_name, parse_angles, parse_group, parse_tensor_expression, parse_weight
from .main import COMMANDS, Query, build_query, main, run_query

__all__ = [
    "COMMANDS",
    "GroupSpec",
    "Query",
    "build_query",
    "canonical_name",
    "main",
    "parse_angles",
    "parse_group",
    "parse_tensor_expression",
    "parse_weight",
    "run_query",
]
