"""Workbench for finite noncanonical hypercomplex number systems.

The pipeline: a convolution algebra over the signed integers is folded by
the reflection n <-> -n onto the half-line, whose product rule
delta_n delta_m = 1/2(delta_{n+m} + delta_{|n-m|}) is then collapsed modulo
M into an M-dimensional system with exact dyadic structure constants.
Checkers, quotients to divisor dimension, brute-force isomorphism search,
and deterministic table serialization sit on top.
"""

from .infinite_algebra import (
    GammaElement,
    ZElement,
    fold,
    gamma_convolve,
    gamma_delta,
    symmetrize,
    z_convolve,
    z_delta,
    z_involute,
)
from .finite_systems import (
    ConditionReport,
    ConditionWitness,
    FiniteHNS,
    LawReport,
    LawWitness,
    build_quotient_system,
    check_algebra_laws,
    check_structure_conditions,
    involution_index,
    is_canonical,
    multiply_basis,
    project_element,
    project_index,
)
from .hnum_arithmetic import (
    HypercomplexNumber,
    hnum_add,
    hnum_multiply,
    left_regular_matrix,
)
from .refactorization import (
    BasisPartition,
    CongruenceCheck,
    CongruenceError,
    CongruenceWitness,
    divisor_partition,
    find_self_inverse_elements,
    quotient_system,
    verify_congruence,
)
from .isomorphism import (
    CapacityError,
    automorphism_group,
    find_permutation_isomorphism,
    relabel_system,
)
from .cli_export import (
    TableDocument,
    TableParseError,
    parse,
    parse_csv,
    parse_json,
    parse_markdown,
    serialize,
)

__all__ = [
    "BasisPartition",
    "CapacityError",
    "ConditionReport",
    "ConditionWitness",
    "CongruenceCheck",
    "CongruenceError",
    "CongruenceWitness",
    "FiniteHNS",
    "GammaElement",
    "HypercomplexNumber",
    "LawReport",
    "LawWitness",
    "TableDocument",
    "TableParseError",
    "ZElement",
    "automorphism_group",
    "build_quotient_system",
    "check_algebra_laws",
    "check_structure_conditions",
    "divisor_partition",
    "find_permutation_isomorphism",
    "find_self_inverse_elements",
    "fold",
    "gamma_convolve",
    "gamma_delta",
    "hnum_add",
    "hnum_multiply",
    "involution_index",
    "is_canonical",
    "left_regular_matrix",
    "multiply_basis",
    "parse",
    "parse_csv",
    "parse_json",
    "parse_markdown",
    "project_element",
    "project_index",
    "quotient_system",
    "relabel_system",
    "serialize",
    "symmetrize",
    "verify_congruence",
    "z_convolve",
    "z_delta",
    "z_involute",
]

__version__ = "0.1.0"
