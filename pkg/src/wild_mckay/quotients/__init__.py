"""Explicit quotient presentations, their symbolic verification and F_q point counts."""

from wild_mckay.quotients.examples import (
    EXAMPLE_IDS,
    QuotientExample,
    UnknownExample,
    builtin_examples,
    ex_d2_H,
    ex_d3,
    ex_d22_p2,
    generator_invariance,
    get_example,
    presentation_check,
    verify_presentation,
)
from wild_mckay.quotients.galois import GaloisField
from wild_mckay.quotients.points import UnsupportedPresentation, affine_class, count_points, specialization_check

__all__ = [
    "EXAMPLE_IDS",
    "GaloisField",
    "QuotientExample",
    "UnknownExample",
    "UnsupportedPresentation",
    "affine_class",
    "builtin_examples",
    "count_points",
    "ex_d2_H",
    "ex_d22_p2",
    "ex_d3",
    "generator_invariance",
    "get_example",
    "presentation_check",
    "specialization_check",
    "verify_presentation",
]
