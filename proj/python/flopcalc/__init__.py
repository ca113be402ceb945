"""Mod-2 characteristic numbers, flop classes and bordism checks."""

from ._flopcalc import (
    Space,
    SpecError,
    basis_change_diagonal_check,
    binom_mod2,
    e_bundle,
    flop_class,
    hypersurface11,
    intersection_matrix,
    invariant_number_space,
    j_partition,
    lemma_count_number,
    mo_generator,
    number_vector,
    parse_space,
    partitions,
    product,
    quotient_basis,
    r_bundle,
    relation_check,
    rp_product,
    run_cli,
    s_number,
    sw_number,
    verify,
)

__all__ = [
    "Space",
    "SpecError",
    "basis_change_diagonal_check",
    "binom_mod2",
    "e_bundle",
    "flop_class",
    "hypersurface11",
    "intersection_matrix",
    "invariant_number_space",
    "j_partition",
    "lemma_count_number",
    "mo_generator",
    "number_vector",
    "parse_space",
    "partitions",
    "product",
    "quotient_basis",
    "r_bundle",
    "relation_check",
    "rp_product",
    "run_cli",
    "s_number",
    "sw_number",
    "verify",
]
