"""Moduli of G- and H-torsors over the punctured formal disk: strata, cylinders, measures."""

from wild_mckay.moduli.strata import (
    CylinderG,
    InvalidStratum,
    StratumH,
    count_stratum_points,
    cylinder_measure_G,
    delta_G_level_dim,
    dim_delta_H_geq,
    level_stability_check,
    partition_check,
    raise_level,
    strata_up_to,
    stratum_class_H,
    stratum_cylinder_G,
)
from wild_mckay.moduli.torsors import (
    ORD_INFINITY,
    InvalidOrder,
    Order,
    TorsorClass,
    TorsorGroup,
    is_zero_order,
    torsor_presentation,
    validate_order,
)

__all__ = [
    "CylinderG",
    "InvalidOrder",
    "InvalidStratum",
    "ORD_INFINITY",
    "Order",
    "StratumH",
    "TorsorClass",
    "TorsorGroup",
    "count_stratum_points",
    "cylinder_measure_G",
    "delta_G_level_dim",
    "dim_delta_H_geq",
    "is_zero_order",
    "level_stability_check",
    "partition_check",
    "raise_level",
    "strata_up_to",
    "stratum_class_H",
    "stratum_cylinder_G",
    "torsor_presentation",
    "validate_order",
]
