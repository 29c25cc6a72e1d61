"""Homomorphisms and colourings of 2-edge-coloured graphs."""

from ._core import (
    BranchError,
    SignedGraph,
    canonical_form,
    chromatic,
    count_homomorphisms,
    find_homomorphism,
    find_k_colouring,
    flip_signs,
    from_graph6,
    parse_sg,
    survey,
    target,
    ten_colouring,
    validate_colouring,
    verify,
)

__all__ = [
    "BranchError",
    "SignedGraph",
    "canonical_form",
    "chromatic",
    "count_homomorphisms",
    "find_homomorphism",
    "find_k_colouring",
    "flip_signs",
    "from_graph6",
    "parse_sg",
    "survey",
    "target",
    "ten_colouring",
    "validate_colouring",
    "verify",
]
