"""Shift functions sht, sht', the invariant D_d, and the stringy integrals over Delta_H / Delta_G."""

from wild_mckay.stringy.dimseq import (
    DdReport,
    DimSeq,
    InvalidDimSeq,
    InvalidJ,
    dd,
    dd_report,
    dimension_sequences,
    sht,
    sht_at_f,
    sht_prime_at_f,
)
from wild_mckay.stringy.integrals import (
    IntegrandVariant,
    StratumTerm,
    Variant,
    domain_agreement_check,
    oracle_check,
    periodicity_check,
    stratum_terms,
    stringy_integral,
    stringy_integral_truncated,
    variant_relation_check,
)

__all__ = [
    "DdReport",
    "DimSeq",
    "IntegrandVariant",
    "InvalidDimSeq",
    "InvalidJ",
    "StratumTerm",
    "Variant",
    "dd",
    "dd_report",
    "dimension_sequences",
    "domain_agreement_check",
    "oracle_check",
    "periodicity_check",
    "sht",
    "sht_at_f",
    "sht_prime_at_f",
    "stratum_terms",
    "stringy_integral",
    "stringy_integral_truncated",
    "variant_relation_check",
]
