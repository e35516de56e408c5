"""Exact extension-theorem toolkit for surface singularities."""

from ._logext import (  # noqa: F401
    DualGraph,
    LogextError,
    NotLcError,
    abs_det,
    analyze_json,
    blowup,
    classify,
    discrepancies,
    extension_verdict,
    find_tame_order,
    is_negative_definite,
    kollar_params,
    verify_e8,
    verify_veronese,
)

__all__ = [
    "DualGraph",
    "LogextError",
    "NotLcError",
    "abs_det",
    "analyze_json",
    "blowup",
    "classify",
    "discrepancies",
    "extension_verdict",
    "find_tame_order",
    "is_negative_definite",
    "kollar_params",
    "verify_e8",
    "verify_veronese",
]
