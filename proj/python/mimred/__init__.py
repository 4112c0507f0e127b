"""Python bindings for the mimred reduction toolkit."""

from ._mimred import (
    BudgetExceeded,
    Constants,
    Error,
    Graph,
    HInstance,
    NaeFormula,
    ParseError,
    PartitionedGraph,
    ValidationError,
    WeightedGraph,
    brute_force_nae,
    build_H,
    check_balancing_order,
    cut_value,
    decode_assignment,
    eval_nae,
    exact_width,
    parse_nae_dimacs,
    parse_profile,
    path_mapping_value,
    run_cli,
    solve_balancing_order,
    validate_constants,
    witness_order,
)

__all__ = [
    "BudgetExceeded",
    "Constants",
    "Error",
    "Graph",
    "HInstance",
    "NaeFormula",
    "ParseError",
    "PartitionedGraph",
    "ValidationError",
    "WeightedGraph",
    "brute_force_nae",
    "build_H",
    "check_balancing_order",
    "cut_value",
    "decode_assignment",
    "eval_nae",
    "exact_width",
    "parse_nae_dimacs",
    "parse_profile",
    "path_mapping_value",
    "run_cli",
    "solve_balancing_order",
    "validate_constants",
    "witness_order",
]
