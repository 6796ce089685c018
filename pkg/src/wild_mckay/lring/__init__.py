"""Exact arithmetic in the localized Grothendieck-ring fragment Z[L, L^-1][(1 - L^-a)^-1]."""

from wild_mckay.lring.series import (
    InvalidWindow,
    TruncatedSeries,
    mv_expand,
    mv_tail_bound,
    series_agree,
    series_eval,
    series_render,
    series_tail_bound,
    series_to_dict,
)
from wild_mckay.lring.value import (
    INFINITY,
    ONE,
    ZERO,
    Divergent,
    IndeterminateProduct,
    IndeterminateSum,
    InvalidMotivicValue,
    MotivicValue,
    PoleAtQ,
    geom_sum,
    mv_L,
    mv_add,
    mv_eq,
    mv_fraction,
    mv_from_dict,
    mv_from_int,
    mv_mul,
    mv_neg,
    mv_poly,
    mv_reduce,
    mv_render,
    mv_shift,
    mv_specialize,
    mv_sub,
    mv_to_dict,
)

__all__ = [
    "Divergent",
    "INFINITY",
    "IndeterminateProduct",
    "IndeterminateSum",
    "InvalidMotivicValue",
    "InvalidWindow",
    "MotivicValue",
    "ONE",
    "PoleAtQ",
    "TruncatedSeries",
    "ZERO",
    "geom_sum",
    "mv_L",
    "mv_add",
    "mv_eq",
    "mv_expand",
    "mv_fraction",
    "mv_from_dict",
    "mv_from_int",
    "mv_mul",
    "mv_neg",
    "mv_poly",
    "mv_reduce",
    "mv_render",
    "mv_shift",
    "mv_specialize",
    "mv_sub",
    "mv_tail_bound",
    "mv_to_dict",
    "series_agree",
    "series_eval",
    "series_render",
    "series_tail_bound",
    "series_to_dict",
]
