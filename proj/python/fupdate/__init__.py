"""Linear encoders for the function update problem (C++ core)."""

from ._core import (
    BudgetExceeded,
    FupdateError,
    ParseError,
    Problem,
    bounds,
    construct,
    covering_radius,
    decode,
    fic_export,
    interference,
    is_valid_encoder,
    kq,
    optimal_codelength,
    run_cli,
    simulate,
)

__all__ = [
    "BudgetExceeded",
    "FupdateError",
    "ParseError",
    "Problem",
    "bounds",
    "construct",
    "covering_radius",
    "decode",
    "fic_export",
    "interference",
    "is_valid_encoder",
    "kq",
    "optimal_codelength",
    "run_cli",
    "simulate",
]
