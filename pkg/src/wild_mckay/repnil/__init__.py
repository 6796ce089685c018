"""alpha_p- and Z/pZ-representations: nilpotent Jordan matrices, exp(xi eps), derivations, invariants."""

from wild_mckay.repnil.coaction import (
    CoactionMatrix,
    check_axioms_of,
    check_coaction_axioms,
    coaction,
    coaction_tensor,
    direct_sum_rule_check,
    exp_at_one_check,
    inverse_factorials,
    representation_checks,
    tensor_rule_check,
)
from wild_mckay.repnil.derivation import (
    automorphism_apply,
    derivation_apply,
    derivation_power,
    invariant_basis,
    kernel_check,
    leibniz_check,
    monomials_of_degree,
    nilpotence_check,
    span_contains,
)
from wild_mckay.repnil.fpmatrix import (
    BlockTooLarge,
    DimensionMismatch,
    FpMatrix,
    NotPNilpotent,
    direct_sum,
    fp_matrix_power,
    h_generator,
    is_p_nilpotent,
    jordan_nilpotent,
    jordan_type,
    kronecker,
    tensor_nilpotent,
)
from wild_mckay.repnil.polynomial import (
    FpPolynomial,
    InvalidPolynomial,
    default_names,
    fp_polynomial_from_dict,
    parse_polynomial,
)

__all__ = [
    "BlockTooLarge",
    "CoactionMatrix",
    "DimensionMismatch",
    "FpMatrix",
    "FpPolynomial",
    "InvalidPolynomial",
    "NotPNilpotent",
    "automorphism_apply",
    "check_axioms_of",
    "check_coaction_axioms",
    "coaction",
    "coaction_tensor",
    "default_names",
    "derivation_apply",
    "derivation_power",
    "direct_sum",
    "direct_sum_rule_check",
    "exp_at_one_check",
    "fp_matrix_power",
    "fp_polynomial_from_dict",
    "h_generator",
    "invariant_basis",
    "inverse_factorials",
    "is_p_nilpotent",
    "jordan_nilpotent",
    "jordan_type",
    "kernel_check",
    "kronecker",
    "leibniz_check",
    "monomials_of_degree",
    "nilpotence_check",
    "parse_polynomial",
    "representation_checks",
    "span_contains",
    "tensor_nilpotent",
    "tensor_rule_check",
]
