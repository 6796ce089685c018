"""Motivic integrals of L^{-sht} and L^{-sht'} over Delta_H and Delta_G.

Stratum j = p q + e (1 <= e <= p - 1) has class (L - 1) L^{(p-1) q + e - 1}
and sht(j) = sht(e) + q D_d, so each residue class e contributes a geometric
series of ratio L^{p - 1 - D_d}.  The integrals converge exactly when
D_d >= p; otherwise the result is the infinite value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from wild_mckay.errors import WildMcKayError
from wild_mckay.lring import (
    INFINITY,
    ONE,
    Divergent,
    MotivicValue,
    TruncatedSeries,
    geom_sum,
    mv_add,
    mv_eq,
    mv_expand,
    mv_L,
    mv_mul,
    mv_shift,
    mv_sub,
    series_agree,
)
from wild_mckay.model.report import CheckReport
from wild_mckay.moduli.strata import (
    StratumH,
    cylinder_measure_G,
    stratum_class_H,
    stratum_cylinder_G,
)
from wild_mckay.moduli.torsors import TorsorGroup
from wild_mckay.stringy.dimseq import DimSeq, dd, sht

ShtFn = Callable[[DimSeq, int], int]


class Variant(Enum):
    """Which shift function is integrated."""

    SHT = "sht"
    SHT_PRIME = "sht-prime"


@dataclass(frozen=True, slots=True)
class IntegrandVariant:
    tag: Variant = Variant.SHT
    domain: TorsorGroup = TorsorGroup.H


@dataclass(frozen=True, slots=True)
class StratumTerm:
    """One stratum's contribution measure * L^{-u}."""

    stratum: StratumH
    measure: MotivicValue
    weight: int
    contribution: MotivicValue


def _u(d: DimSeq, tag: Variant, j: int | None, sht_fn: ShtFn) -> int:
    """u = sht or sht' on stratum j (None: zero stratum)."""
    if j is None:
        return 0 if tag is Variant.SHT else -d.total
    value = sht_fn(d, j)
    return value if tag is Variant.SHT else value - d.length


def _stratum_measure(s: StratumH, domain: TorsorGroup, level: int) -> MotivicValue:
    """mu_H of the stratum, or mu_G of its pullback along tau_0 recorded at *level*."""
    if domain is TorsorGroup.H:
        return stratum_class_H(s)
    return cylinder_measure_G(stratum_cylinder_G(s, level))


def stringy_integral(
    d: DimSeq,
    v: IntegrandVariant,
    *,
    level: int = 1,
    # Testing hook for negative controls
    _sht: ShtFn | None = None,
) -> MotivicValue:
    """Exact closed form of the integral of L^{-u}, or INFINITY when D_d < p."""
    sht_fn = _sht or sht
    p = d.prime
    ratio = p - 1 - dd(d)
    if ratio >= 0:
        return INFINITY
    zero = StratumH.zero(p)
    total = mv_mul(_stratum_measure(zero, v.domain, level), mv_L(-_u(d, v.tag, None, sht_fn)))
    for e in range(1, p):
        s = StratumH(prime=p, j=e)
        first = mv_shift(_stratum_measure(s, v.domain, level), -_u(d, v.tag, e, sht_fn))
        total = mv_add(total, geom_sum(first, ratio))
    return total


def stratum_terms(d: DimSeq, v: IntegrandVariant, J: int, *, level: int = 1) -> list[StratumTerm]:
    """Contributions of the zero stratum and every stratum j <= J."""
    p = d.prime
    terms: list[StratumTerm] = []
    strata = [StratumH.zero(p)] + [StratumH(prime=p, j=j) for j in range(1, J + 1) if j % p]
    for s in strata:
        measure = _stratum_measure(s, v.domain, level)
        weight = -_u(d, v.tag, s.j, sht)
        terms.append(StratumTerm(stratum=s, measure=measure, weight=weight, contribution=mv_shift(measure, weight)))
    return terms


def _top_exponent(d: DimSeq, tag: Variant, j: int) -> int:
    """Highest exponent of stratum j's contribution: (j - floor(j/p)) - u(j)."""
    return (j - j // d.prime) - _u(d, tag, j, sht)


def stringy_integral_truncated(d: DimSeq, v: IntegrandVariant, J: int, *, level: int = 1) -> TruncatedSeries:
    """Partial sum over strata j <= J with a provable tail bound.

    Omitted strata j > J all lie in residue classes whose contributions
    decrease along j = e, e + p, ...; the window starts just above the
    largest exponent any omitted stratum can reach.
    """
    if J < 1:
        raise WildMcKayError(f"cutoff J must be >= 1, got {J}")
    p = d.prime
    ratio = p - 1 - dd(d)
    if ratio >= 0:
        raise Divergent(f"D_d = {dd(d)} < p = {p}: no tail bound exists")

    partial: dict[int, int] = {}
    for term in stratum_terms(d, v, J, level=level):
        for e, c in term.contribution.numerator:
            partial[e] = partial.get(e, 0) + c

    omitted_tops = []
    full_tops = [_u_zero_exponent(d, v.tag)]
    for e in range(1, p):
        full_tops.append(_top_exponent(d, v.tag, e))
        first_omitted = e + p * ((J - e) // p + 1) if e <= J else e
        omitted_tops.append(_top_exponent(d, v.tag, first_omitted))
    low = max(omitted_tops) + 1
    high = max(max(full_tops), low)
    return TruncatedSeries.build(low, high, partial)


def _u_zero_exponent(d: DimSeq, tag: Variant) -> int:
    return -_u(d, tag, None, sht)


# -- Property checks -----------------------------------------------------------


def periodicity_check(d: DimSeq, jmax: int) -> CheckReport:
    """sht(j + p) = sht(j) + D_d and sht nondecreasing, for all valid j <= jmax."""
    name = f"periodicity(d=({d}), p={d.prime})"
    p, D = d.prime, dd(d)
    previous = None
    for j in range(1, jmax + 1):
        if j % p == 0:
            continue
        value = sht(d, j)
        if sht(d, j + p) != value + D:
            return CheckReport.fail(name, f"sht({j + p}) != sht({j}) + {D}", j=j)
        if previous is not None and value < previous:
            return CheckReport.fail(name, f"sht decreases at j = {j}", j=j)
        previous = value
    return CheckReport.ok(name)


def variant_relation_check(d: DimSeq) -> CheckReport:
    """sht' integral = L^{|d|} + L^l (sht integral - 1)."""
    name = f"variant-relation(d=({d}), p={d.prime})"
    plain = stringy_integral(d, IntegrandVariant(Variant.SHT))
    primed = stringy_integral(d, IntegrandVariant(Variant.SHT_PRIME))
    if plain.infinite or primed.infinite:
        if plain.infinite and primed.infinite:
            return CheckReport.ok(name, "both divergent")
        return CheckReport.fail(name, "exactly one variant diverges")
    expected = mv_add(mv_L(d.total), mv_shift(mv_sub(plain, ONE), d.length))
    if not mv_eq(primed, expected):
        return CheckReport.fail(name, f"sht' integral {primed} != {expected}")
    return CheckReport.ok(name)


def domain_agreement_check(d: DimSeq, tag: Variant, *, level: int = 1) -> CheckReport:
    """The Delta_G integral equals the Delta_H integral."""
    name = f"G/H agreement(d=({d}), p={d.prime}, {tag.value})"
    h = stringy_integral(d, IntegrandVariant(tag, TorsorGroup.H))
    g = stringy_integral(d, IntegrandVariant(tag, TorsorGroup.G), level=level)
    if not mv_eq(g, h):
        return CheckReport.fail(name, f"G gives {g}, H gives {h}")
    return CheckReport.ok(name)


def oracle_check(d: DimSeq, v: IntegrandVariant, J: int) -> CheckReport:
    """Closed form expansion matches the truncated stratum sum on its window."""
    name = f"oracle(d=({d}), p={d.prime}, {v.tag.value}, {v.domain.value}, J={J})"
    closed = stringy_integral(d, v)
    if closed.infinite:
        return CheckReport.ok(name, "divergent; no window")
    truncated = stringy_integral_truncated(d, v, J)
    expanded = mv_expand(closed, truncated.window_low)
    if not series_agree(expanded, truncated):
        return CheckReport.fail(name, f"expansion {expanded} != partial sum {truncated}")
    return CheckReport.ok(name, window=[truncated.window_low, truncated.window_high])
