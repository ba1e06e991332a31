"""Vectors, matrices and codes over finite fields."""

from .codes import (
    LinearCode,
    PairCode,
    WeightDistribution,
    dual_euclidean,
    dual_hermitian,
    dual_symplectic,
    expand_to_paircode,
    extend_scalars,
    hermitian_product,
    is_mds,
    krawtchouk,
    macwilliams_transform,
    puncture_classical,
    shorten_classical,
    subfield_subcode,
    symplectic_gram,
    symplectic_product,
    weight_distribution_exhaustive,
)
from .enumeration import DEFAULT_BUDGET, BudgetExceeded, CodeEnumerator
from .linalg import in_row_space, kernel, rank, row_basis, rref

__all__ = [
    "BudgetExceeded",
    "CodeEnumerator",
    "DEFAULT_BUDGET",
    "LinearCode",
    "PairCode",
    "WeightDistribution",
    "dual_euclidean",
    "dual_hermitian",
    "dual_symplectic",
    "expand_to_paircode",
    "extend_scalars",
    "hermitian_product",
    "in_row_space",
    "is_mds",
    "kernel",
    "krawtchouk",
    "macwilliams_transform",
    "puncture_classical",
    "rank",
    "row_basis",
    "rref",
    "shorten_classical",
    "subfield_subcode",
    "symplectic_gram",
    "symplectic_product",
    "weight_distribution_exhaustive",
]
