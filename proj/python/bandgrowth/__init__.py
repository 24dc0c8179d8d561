"""Exact growth functions of finitely generated algebras, a calculus for
banded infinite matrices over them, and the embedding verifiers built on
both. The heavy lifting lives in the C++ extension module."""

from ._core import (  # noqa: F401
    Algebra,
    Banded,
    BasisIndexError,
    ConfigError,
    Element,
    FieldMismatchError,
    GrowthTable,
    PreconditionError,
    Scenario,
    ValidationError,
    assoc_growth,
    asym_leq,
    brute_force_span,
    build_generators,
    cli,
    lie_growth,
    matrix_commutator_comparison,
    phi,
    pipeline_growth,
    truncation_oracle,
    verify_commutator_image,
    verify_growth_bound,
    verify_inclusion,
    verify_phi,
)

__all__ = [
    "Algebra",
    "Banded",
    "BasisIndexError",
    "ConfigError",
    "Element",
    "FieldMismatchError",
    "GrowthTable",
    "PreconditionError",
    "Scenario",
    "ValidationError",
    "assoc_growth",
    "asym_leq",
    "brute_force_span",
    "build_generators",
    "cli",
    "lie_growth",
    "matrix_commutator_comparison",
    "phi",
    "pipeline_growth",
    "truncation_oracle",
    "verify_commutator_image",
    "verify_growth_bound",
    "verify_inclusion",
    "verify_phi",
]
