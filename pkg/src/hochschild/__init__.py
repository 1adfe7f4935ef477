"""Exact Hochschild cohomology of finite-dimensional associative algebras."""
from .scalar import Scalar, parse_scalar, format_scalar
from .linalg import Matrix, Subspace, rref, rank, nullspace_basis, column_space_basis, extend_to_complement
from .algebra import (
    Algebra,
    multiply,
    check_associativity,
    descending_series,
    chi_invariant,
    is_nilpotent,
    is_commutative,
    center,
    change_basis,
)
from .cohomology import (
    Cochain,
    CohomologyResult,
    flat_index,
    apply_cochain,
    delta_matrix,
    cocycle_space,
    coboundary_space,
    cohomology,
    derivations_by_leibniz,
    inner_derivations_by_ad,
    is_derivation,
    ad,
)
from .catalog import list_entries, instantiate, expected_results

__version__ = "0.1.0"

__all__ = [
    "Scalar",
    "parse_scalar",
    "format_scalar",
    "Matrix",
    "Subspace",
    "rref",
    "rank",
    "nullspace_basis",
    "column_space_basis",
    "extend_to_complement",
    "Algebra",
    "multiply",
    "check_associativity",
    "descending_series",
    "chi_invariant",
    "is_nilpotent",
    "is_commutative",
    "center",
    "change_basis",
    "Cochain",
    "CohomologyResult",
    "flat_index",
    "apply_cochain",
    "delta_matrix",
    "cocycle_space",
    "coboundary_space",
    "cohomology",
    "derivations_by_leibniz",
    "inner_derivations_by_ad",
    "is_derivation",
    "ad",
    "list_entries",
    "instantiate",
    "expected_results",
]
