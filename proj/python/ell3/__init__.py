"""Exact unit-distance geometry and two-coloring checks."""

from ._core import (
    Error,
    ParseError,
    SeedConflict,
    TooLarge,
    brute_force,
    bundled_names,
    check_all_cases,
    check_case,
    classify,
    constraints,
    dataset,
    parse_dimacs,
    render_svg,
    solve,
    sqdist,
    to_dimacs,
    verify_grid,
)

__all__ = [
    "Error",
    "ParseError",
    "SeedConflict",
    "TooLarge",
    "brute_force",
    "bundled_names",
    "check_all_cases",
    "check_case",
    "classify",
    "constraints",
    "dataset",
    "parse_dimacs",
    "render_svg",
    "solve",
    "sqdist",
    "to_dimacs",
    "verify_grid",
]
