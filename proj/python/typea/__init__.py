"""Counting and enumerating special unipotent representations of type-A real groups."""

from ._typea import (
    TypeAError,
    cell,
    character_table,
    character_value,
    coh,
    count,
    count_result,
    enumerate_parameters,
    hook_dimension,
    lr_coefficient,
    set_cache_dir,
    transpose,
    verify,
    verify_counting_equality,
)

__all__ = [
    "TypeAError",
    "cell",
    "character_table",
    "character_value",
    "coh",
    "count",
    "count_result",
    "enumerate_parameters",
    "hook_dimension",
    "lr_coefficient",
    "set_cache_dir",
    "transpose",
    "verify",
    "verify_counting_equality",
]
