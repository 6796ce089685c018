"""Truncated Laurent series in descending powers of L.

A :class:`TruncatedSeries` carries exact coefficients on the window
``[window_low, window_high]``; the series it abbreviates has no terms above
``window_high`` and every omitted term lies strictly below ``window_low``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from wild_mckay.errors import WildMcKayError
from wild_mckay.lring.laurent import Laurent, lp_clean, lp_render, lp_sorted_terms
from wild_mckay.lring.value import MotivicValue, PoleAtQ


class InvalidWindow(WildMcKayError):
    """window_low > window_high, or a coefficient outside the window."""


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """Finite window of a Laurent series with a guaranteed tail bound."""

    window_low: int
    window_high: int
    coefficients: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.window_low > self.window_high:
            raise InvalidWindow(f"window [{self.window_low}, {self.window_high}] is empty")
        for e, _ in self.coefficients:
            if not self.window_low <= e <= self.window_high:
                raise InvalidWindow(f"exponent {e} outside window")

    @classmethod
    def build(cls, low: int, high: int, terms: Mapping[int, int]) -> "TruncatedSeries":
        """Keep the nonzero terms of *terms* that fall inside the window."""
        inside = {e: c for e, c in lp_clean(terms).items() if low <= e <= high}
        return cls(window_low=low, window_high=high, coefficients=tuple(lp_sorted_terms(inside)))

    @property
    def coeffs(self) -> Laurent:
        return dict(self.coefficients)

    def coefficient(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def restrict(self, low: int) -> "TruncatedSeries":
        """Narrow the window to start at *low* (which must not lie below the current low)."""
        if low < self.window_low:
            raise InvalidWindow(f"cannot widen window below {self.window_low}")
        high = max(low, self.window_high)
        return TruncatedSeries.build(low, high, self.coeffs)

    def __str__(self) -> str:
        return series_render(self)


def mv_expand(a: MotivicValue, lo: int) -> TruncatedSeries:
    """Expand *a* as a series in L^-1, exact on all exponents >= *lo*.

    Each factor 1/(1 - L^-k) is applied by the recurrence s'[e] = s[e] + s'[e+k]
    running downward from the top exponent.
    """
    if a.infinite:
        raise PoleAtQ("cannot expand infinity")
    num = a.num
    if not num:
        return TruncatedSeries.build(lo, lo, {})
    high = max(num)
    if high < lo:
        return TruncatedSeries.build(lo, lo, {})
    current = {e: c for e, c in num.items() if e >= lo}
    for k in a.denominator_factors:
        nxt: Laurent = {}
        for e in range(high, lo - 1, -1):
            c = current.get(e, 0) + nxt.get(e + k, 0)
            if c:
                nxt[e] = c
        current = nxt
    return TruncatedSeries.build(lo, high, current)


def series_eval(s: TruncatedSeries, q: Fraction | int) -> Fraction:
    """Exact value of the window's coefficients at L = q."""
    q = Fraction(q)
    return sum((c * q**e for e, c in s.coefficients), Fraction(0))


def series_tail_bound(s: TruncatedSeries, q: Fraction | int, coefficient_bound: int) -> Fraction:
    """Bound for |omitted tail| at L = q when omitted coefficients are at most *coefficient_bound*.

    sum_{e < low} B |q|^e = B |q|^(low-1) / (1 - |q|^-1) for |q| > 1.
    """
    r = abs(Fraction(q))
    return coefficient_bound * r ** (s.window_low - 1) / (1 - 1 / r)


def _denominator_coefficient_bound(m: int, n: int) -> int:
    """Upper bound for the coefficient of L^-n in a product of m factors 1/(1 - L^-a), all a >= 1.

    Solutions of sum a_i t_i = n inject into compositions of n into m parts,
    so the count is at most C(n + m - 1, m - 1).
    """
    if m == 0:
        return 1 if n == 0 else 0
    return math.comb(n + m - 1, m - 1)


def mv_tail_bound(a: MotivicValue, lo: int, q: Fraction | int) -> Fraction:
    """Bound for |mv_specialize(a, q) - series_eval(mv_expand(a, lo), q)|, valid for |q| > 1."""
    if a.infinite:
        raise PoleAtQ("cannot bound the tail of infinity")
    r = abs(Fraction(q))
    if r <= 1:
        raise WildMcKayError(f"tail bound needs |q| > 1, got {q}")
    x = 1 / r
    m = len(a.denominator_factors)
    whole = 1 / (1 - x) ** m
    bound = Fraction(0)
    for k, c in a.num.items():
        # the numerator term c L^k lands below lo once it is shifted by L^-n, n > k - lo
        first = max(0, k - lo + 1)
        kept = sum((_denominator_coefficient_bound(m, n) * x**n for n in range(first)), Fraction(0))
        bound += abs(c) * r**k * (whole - kept)
    return bound


def series_agree(a: TruncatedSeries, b: TruncatedSeries) -> bool:
    """Exact coefficient equality on the overlap of the two windows."""
    low = max(a.window_low, b.window_low)
    high = max(a.window_high, b.window_high)
    ca, cb = a.coeffs, b.coeffs
    return all(ca.get(e, 0) == cb.get(e, 0) for e in range(low, high + 1))


def series_render(s: TruncatedSeries) -> str:
    body = lp_render(s.coeffs)
    tail = s.window_low - 1
    return f"{body} + O(L^{tail})"


def series_to_dict(s: TruncatedSeries) -> dict[str, Any]:
    return {
        "window": [s.window_low, s.window_high],
        "coefficients": [[e, c] for e, c in s.coefficients],
    }
