"""Decoding of measured bitstrings into MWIS answers."""

from rydwire.postprocess.pipeline import (
    BitstringSamples,
    SuccessReport,
    filter_blockade,
    greedy_vertex_addition,
    solution_strings,
    success_probability,
)
from rydwire.postprocess.cmap import estimate_c_with_errors

__all__ = [
    "BitstringSamples",
    "SuccessReport",
    "solution_strings",
    "filter_blockade",
    "greedy_vertex_addition",
    "success_probability",
    "estimate_c_with_errors",
]
