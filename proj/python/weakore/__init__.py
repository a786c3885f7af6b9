"""Weak Hopf algebras given by structure constants and their Ore extensions."""

from ._core import (
    AlgebraError,
    Report,
    ScalarError,
    Spec,
    Verdict,
    check,
    coderivation_dimension,
    examples,
    matrix_grouplike_counts,
    necessary,
    ore_build,
    panov,
)

__all__ = [
    "AlgebraError",
    "Report",
    "ScalarError",
    "Spec",
    "Verdict",
    "check",
    "coderivation_dimension",
    "examples",
    "matrix_grouplike_counts",
    "necessary",
    "ore_build",
    "panov",
]
