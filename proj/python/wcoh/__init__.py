"""Integral weight cohomology with compact support from SNC compactification data."""

from ._wcoh import (
    InvalidInput,
    ParseError,
    builder_json,
    canonical_form,
    check,
    contractibility,
    example_names,
    reduced_cohomology,
    run_cli,
    smith_normal_form,
    validate,
    weight_table,
)

__all__ = [
    "InvalidInput",
    "ParseError",
    "builder_json",
    "canonical_form",
    "check",
    "contractibility",
    "example_names",
    "reduced_cohomology",
    "run_cli",
    "smith_normal_form",
    "validate",
    "weight_table",
]
