"""Motivic values: Z[L, L^-1] localized at the factors (1 - L^-a), plus infinity.

Values are kept in factored form.  Equality is decided by cross-multiplying
into Z[L, L^-1]; :func:`mv_reduce` cancels exactly dividing factors for
display and serialization only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from wild_mckay.errors import WildMcKayError
from wild_mckay.lring.laurent import (
    Laurent,
    lp_add,
    lp_clean,
    lp_denominator,
    lp_divide_one_minus,
    lp_mul,
    lp_render,
    lp_scale,
    lp_shift,
    lp_sorted_terms,
)


class IndeterminateProduct(WildMcKayError):
    """Infinity multiplied by zero."""


class IndeterminateSum(WildMcKayError):
    """Infinity minus infinity."""


class Divergent(WildMcKayError):
    """A geometric series with nonnegative ratio exponent."""


class PoleAtQ(WildMcKayError):
    """A denominator factor vanishes at the specialization point."""


class InvalidMotivicValue(WildMcKayError):
    """Malformed MotivicValue payload."""


@dataclass(frozen=True, slots=True)
class MotivicValue:
    """numerator / prod (1 - L^-a), or the absorbing infinite element."""

    numerator: tuple[tuple[int, int], ...] = ()
    denominator_factors: tuple[int, ...] = ()
    infinite: bool = False

    def __post_init__(self) -> None:
        if self.infinite and (self.numerator or self.denominator_factors):
            raise InvalidMotivicValue("infinite value carries numerator or denominator")
        if any(a < 1 for a in self.denominator_factors):
            raise InvalidMotivicValue("denominator factors must be >= 1")
        if any(c == 0 for _, c in self.numerator):
            raise InvalidMotivicValue("numerator stores a zero coefficient")

    # -- Constructors -------------------------------------------------------

    @classmethod
    def build(cls, numerator: Mapping[int, int], denominator: list[int] | tuple[int, ...] = ()) -> "MotivicValue":
        """Canonical storage: terms descending, factors ascending, zero has no factors."""
        terms = tuple(lp_sorted_terms(lp_clean(numerator)))
        if not terms:
            return ZERO
        return cls(numerator=terms, denominator_factors=tuple(sorted(denominator)))

    @property
    def num(self) -> Laurent:
        return dict(self.numerator)

    @property
    def is_zero(self) -> bool:
        return not self.infinite and not self.numerator

    # -- Operator sugar -----------------------------------------------------

    def __add__(self, other: "MotivicValue | int") -> "MotivicValue":
        return mv_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: "MotivicValue | int") -> "MotivicValue":
        return mv_sub(self, _coerce(other))

    def __rsub__(self, other: "MotivicValue | int") -> "MotivicValue":
        return mv_sub(_coerce(other), self)

    def __mul__(self, other: "MotivicValue | int") -> "MotivicValue":
        return mv_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "MotivicValue":
        return mv_neg(self)

    def __str__(self) -> str:
        return mv_render(self)


ZERO = MotivicValue()
ONE = MotivicValue(numerator=((0, 1),))
INFINITY = MotivicValue(infinite=True)


def _coerce(x: "MotivicValue | int") -> MotivicValue:
    return x if isinstance(x, MotivicValue) else mv_from_int(x)


def mv_from_int(n: int) -> MotivicValue:
    return MotivicValue.build({0: n})


def mv_L(k: int = 1, coeff: int = 1) -> MotivicValue:
    """The monomial coeff * L^k."""
    return MotivicValue.build({k: coeff})


def mv_poly(terms: Mapping[int, int]) -> MotivicValue:
    return MotivicValue.build(terms)


def mv_fraction(numerator: Mapping[int, int], denominator: list[int] | tuple[int, ...]) -> MotivicValue:
    return MotivicValue.build(numerator, denominator)


# -- Ring operations ----------------------------------------------------------


def _common_denominator(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[list[int], list[int], list[int]]:
    """Multiset union of *a* and *b*, plus the factors each side is missing."""
    ca, cb = Counter(a), Counter(b)
    union = ca | cb
    return sorted(union.elements()), sorted((union - ca).elements()), sorted((union - cb).elements())


def mv_add(a: MotivicValue, b: MotivicValue) -> MotivicValue:
    """Exact sum; infinity absorbs."""
    if a.infinite or b.infinite:
        return INFINITY
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    common, missing_a, missing_b = _common_denominator(a.denominator_factors, b.denominator_factors)
    num = lp_add(
        lp_mul(a.num, lp_denominator(missing_a)),
        lp_mul(b.num, lp_denominator(missing_b)),
    )
    return MotivicValue.build(num, common)


def mv_neg(a: MotivicValue) -> MotivicValue:
    """Negation; infinity is unsigned."""
    if a.infinite:
        return INFINITY
    return MotivicValue.build(lp_scale(a.num, -1), a.denominator_factors)


def mv_sub(a: MotivicValue, b: MotivicValue) -> MotivicValue:
    if a.infinite and b.infinite:
        raise IndeterminateSum("infinity - infinity")
    return mv_add(a, mv_neg(b))


def mv_mul(a: MotivicValue, b: MotivicValue) -> MotivicValue:
    """Exact product; denominators concatenate."""
    if a.infinite or b.infinite:
        if a.is_zero or b.is_zero:
            raise IndeterminateProduct("infinity * 0")
        return INFINITY
    return MotivicValue.build(
        lp_mul(a.num, b.num),
        a.denominator_factors + b.denominator_factors,
    )


def mv_shift(a: MotivicValue, k: int) -> MotivicValue:
    """Multiply by L^k."""
    if a.infinite:
        return INFINITY
    return MotivicValue.build(lp_shift(a.num, k), a.denominator_factors)


def mv_eq(a: MotivicValue, b: MotivicValue) -> bool:
    """Equality of rational functions by cross-multiplication; infinity equals only infinity."""
    if a.infinite or b.infinite:
        return a.infinite and b.infinite
    left = lp_mul(a.num, lp_denominator(b.denominator_factors))
    right = lp_mul(b.num, lp_denominator(a.denominator_factors))
    return left == right


def mv_reduce(a: MotivicValue) -> MotivicValue:
    """Cancel every denominator factor that divides the numerator exactly."""
    if a.infinite or a.is_zero:
        return a
    num = a.num
    remaining = list(a.denominator_factors)
    changed = True
    while changed:
        changed = False
        for factor in sorted(set(remaining), reverse=True):
            quotient = lp_divide_one_minus(num, factor)
            if quotient is not None:
                num = quotient
                remaining.remove(factor)
                changed = True
                break
    return MotivicValue.build(num, remaining)


def geom_sum(term: MotivicValue, r: int) -> MotivicValue:
    """Closed form term / (1 - L^r) of sum_{m >= 0} term * L^(r m)."""
    if r >= 0:
        raise Divergent(f"geometric ratio L^{r} does not tend to zero")
    if term.infinite:
        return INFINITY
    return MotivicValue.build(term.num, term.denominator_factors + (-r,))


def mv_specialize(a: MotivicValue, q: Fraction | int) -> Fraction:
    """Exact value at L = q."""
    if a.infinite:
        raise PoleAtQ("cannot specialize infinity")
    q = Fraction(q)
    if q == 0:
        raise PoleAtQ("L = 0 is a pole of every Laurent monomial")
    den = Fraction(1)
    for factor in a.denominator_factors:
        value = 1 - q ** (-factor)
        if value == 0:
            raise PoleAtQ(f"factor (1 - L^-{factor}) vanishes at L = {q}")
        den *= value
    num = sum((c * q**e for e, c in a.numerator), Fraction(0))
    return num / den


# -- Rendering and serialization ---------------------------------------------


def mv_render(a: MotivicValue) -> str:
    """Text form, e.g. ``L^3 + 2*L^2`` or ``(L^2 - L)/(1 - L^-3)``."""
    if a.infinite:
        return "infinity"
    if not a.denominator_factors:
        return lp_render(a.num)
    num_text = lp_render(a.num)
    if len(a.numerator) > 1:
        num_text = f"({num_text})"
    factors = [f"(1 - L^-{f})" for f in a.denominator_factors]
    den_text = factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")"
    return f"{num_text}/{den_text}"


def mv_to_dict(a: MotivicValue) -> dict[str, Any]:
    return {
        "infinite": a.infinite,
        "num": [[e, c] for e, c in a.numerator],
        "den": list(a.denominator_factors),
    }


def mv_from_dict(data: Any) -> MotivicValue:
    """Parse the JSON form; raises InvalidMotivicValue on malformed payloads."""
    if not isinstance(data, dict):
        raise InvalidMotivicValue("expected a JSON object")
    infinite = data.get("infinite", False)
    num = data.get("num", [])
    den = data.get("den", [])
    if not isinstance(infinite, bool) or not isinstance(num, list) or not isinstance(den, list):
        raise InvalidMotivicValue("fields infinite/num/den have wrong types")
    if infinite:
        if num or den:
            raise InvalidMotivicValue("infinite value must have empty num and den")
        return INFINITY
    terms: Laurent = {}
    for pair in num:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise InvalidMotivicValue(f"bad numerator term: {pair!r}")
        terms[pair[0]] = terms.get(pair[0], 0) + pair[1]
    if not all(isinstance(a, int) and not isinstance(a, bool) and a >= 1 for a in den):
        raise InvalidMotivicValue("denominator entries must be integers >= 1")
    return MotivicValue.build(terms, den)


__all__ = [
    "Divergent",
    "INFINITY",
    "IndeterminateProduct",
    "IndeterminateSum",
    "InvalidMotivicValue",
    "MotivicValue",
    "ONE",
    "PoleAtQ",
    "ZERO",
    "geom_sum",
    "mv_L",
    "mv_add",
    "mv_eq",
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
    "mv_to_dict",
]
