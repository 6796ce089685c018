"""Change of variables between arcs of V/G and twisted jets of V, for d = (2)."""

from wild_mckay.covars.integrals import (
    ZERO_WEIGHT,
    AffineWeight,
    CovPart,
    StratumWeight,
    cov_integral,
    cov_oracle_check,
    cov_total_check,
    cov_truncated,
    cov_weighted_integral,
    expected_part,
    negative_rewrite_check,
    parse_weight,
    strata_up_to,
)
from wild_mckay.covars.jets import (
    InvalidStratumSpec,
    JetLevel,
    LevelOrder,
    TwistedJetStratum,
    base_level,
    covariant_term,
    cyl_measure,
    fiber_dim,
    jet_cylinder_measure,
    jet_transition_dim,
    level_consistency_check,
    parse_stratum_spec,
    s_equals_shtprime_plus_two,
    s_f,
    stratum_truncated_class,
    weight_exponent,
)

__all__ = [
    "AffineWeight",
    "CovPart",
    "InvalidStratumSpec",
    "JetLevel",
    "LevelOrder",
    "StratumWeight",
    "TwistedJetStratum",
    "ZERO_WEIGHT",
    "base_level",
    "cov_integral",
    "cov_oracle_check",
    "cov_total_check",
    "cov_truncated",
    "cov_weighted_integral",
    "covariant_term",
    "cyl_measure",
    "expected_part",
    "fiber_dim",
    "jet_cylinder_measure",
    "jet_transition_dim",
    "level_consistency_check",
    "negative_rewrite_check",
    "parse_stratum_spec",
    "parse_weight",
    "s_equals_shtprime_plus_two",
    "s_f",
    "strata_up_to",
    "stratum_truncated_class",
    "weight_exponent",
]
