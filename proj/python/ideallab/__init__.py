"""Complexity laboratory for regular right, left and two-sided ideals."""

from ideallab._core import (
    Dfa,
    apply_dialect,
    atom_count,
    atom_dfa,
    boolean,
    check_ideal,
    complexity,
    concat,
    concat_redirect,
    enumerate_atoms,
    equivalent,
    expected_value,
    isomorphic,
    minimize,
    quotient_complexities,
    reverse,
    sort_alphabet,
    star,
    syntactic_semigroup_size,
    verify_report,
    witness,
)

__all__ = [
    "Dfa",
    "apply_dialect",
    "atom_count",
    "atom_dfa",
    "boolean",
    "check_ideal",
    "complexity",
    "concat",
    "concat_redirect",
    "enumerate_atoms",
    "equivalent",
    "expected_value",
    "isomorphic",
    "minimize",
    "quotient_complexities",
    "reverse",
    "sort_alphabet",
    "star",
    "syntactic_semigroup_size",
    "verify_report",
    "witness",
]
