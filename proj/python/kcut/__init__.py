"""Deterministic exact minimum k-cut.

Vertex ids are 1-based everywhere, as in DIMACS files and the CLI's JSON.
"""

from ._kcut import (
    CapabilityError,
    Graph,
    InvariantViolation,
    KcutError,
    ParseError,
    PreconditionError,
    brute_min_kcut,
    generate,
    ideal_loads,
    islands,
    kernel,
    load_dimacs,
    load_dimacs_file,
    min_kcut,
    normal_form,
    partition_value,
    psp,
    verify,
)

__all__ = [
    "CapabilityError",
    "Graph",
    "InvariantViolation",
    "KcutError",
    "ParseError",
    "PreconditionError",
    "brute_min_kcut",
    "generate",
    "ideal_loads",
    "islands",
    "kernel",
    "load_dimacs",
    "load_dimacs_file",
    "min_kcut",
    "normal_form",
    "partition_value",
    "psp",
    "verify",
]
