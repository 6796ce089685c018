"""Change of variables for d = (2): sums of covariant terms over the twisted-jet strata.

With weight w, a nonneg stratum contributes (L - 1) L^{1 - p i + w} and a
neg stratum (L - 1)^2 L^{e - d - p - p i + w}.  For an affine weight
w = alpha i + beta d + gamma these are geometric in i (ratio L^{alpha - p})
and in d (ratio L^{beta - 1}).  With w = 0 the total is L^2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping

from wild_mckay.covars.jets import TwistedJetStratum, covariant_term, cyl_measure, weight_exponent
from wild_mckay.errors import WildMcKayError
from wild_mckay.lring import (
    ZERO,
    Divergent,
    MotivicValue,
    TruncatedSeries,
    geom_sum,
    mv_add,
    mv_eq,
    mv_expand,
    mv_fraction,
    mv_L,
    mv_mul,
    mv_poly,
    mv_shift,
    series_agree,
)
from wild_mckay.model.report import CheckReport, combine_reports
from wild_mckay.primes import require_prime


class CovPart(Enum):
    NONNEG = "nonneg"
    NEG = "neg"
    ALL = "all"


@dataclass(frozen=True, slots=True)
class AffineWeight:
    """alpha i + beta d + gamma."""

    alpha: int = 0
    beta: int = 0
    gamma: int = 0

    def at(self, i: int, d: int = 0) -> int:
        return self.alpha * i + self.beta * d + self.gamma

    def __str__(self) -> str:
        return f"i={self.alpha},d={self.beta},c={self.gamma}"


@dataclass(frozen=True, slots=True)
class StratumWeight:
    """One affine weight for the nonneg strata and one per residue class e of the neg strata."""

    nonneg: AffineWeight = AffineWeight()
    neg: AffineWeight = AffineWeight()
    per_residue: Mapping[int, AffineWeight] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.nonneg.beta != 0:
            raise WildMcKayError("nonneg strata have no d index; their weight must not depend on d")

    @classmethod
    def uniform(cls, alpha: int = 0, beta: int = 0, gamma: int = 0) -> "StratumWeight":
        """The same functional everywhere; beta only acts on neg strata."""
        return cls(nonneg=AffineWeight(alpha, 0, gamma), neg=AffineWeight(alpha, beta, gamma))

    def for_residue(self, e: int) -> AffineWeight:
        return self.per_residue.get(e, self.neg)

    def value(self, s: TwistedJetStratum) -> int:
        if s.is_nonneg:
            return self.nonneg.at(s.i)
        return self.for_residue(s.e).at(s.i, s.d)

    def to_dict(self) -> dict[str, Any]:
        def affine(w: AffineWeight) -> dict[str, int]:
            return {"i": w.alpha, "d": w.beta, "c": w.gamma}

        return {
            "nonneg": affine(self.nonneg),
            "neg": affine(self.neg),
            "per_residue": {str(e): affine(w) for e, w in sorted(self.per_residue.items())},
        }

    def __str__(self) -> str:
        clauses = [f"nonneg:{self.nonneg}", f"neg:{self.neg}"]
        clauses += [f"e={e}:{w}" for e, w in sorted(self.per_residue.items())]
        return ";".join(clauses)


ZERO_WEIGHT = StratumWeight()

_CLAUSE = re.compile(r"^\s*(?:(nonneg|neg|e=\d+)\s*:)?\s*(.*)$")


def parse_weight(text: str) -> StratumWeight:
    """'i=A,d=B,c=G' for every stratum, or ';'-separated clauses 'nonneg:...', 'neg:...', 'e=K:...'."""
    nonneg: AffineWeight | None = None
    neg: AffineWeight | None = None
    per_residue: dict[int, AffineWeight] = {}
    for clause in filter(None, (c.strip() for c in text.split(";"))):
        m = _CLAUSE.match(clause)
        target, body = m.groups() if m else (None, clause)
        coeffs = {"i": 0, "d": 0, "c": 0}
        for part in filter(None, (s.strip() for s in body.split(","))):
            key, sep, value = part.partition("=")
            key = key.strip()
            if not sep or key not in coeffs:
                raise WildMcKayError(f"bad weight term {part!r} (expected i=, d= or c=)")
            try:
                coeffs[key] = int(value)
            except ValueError:
                raise WildMcKayError(f"bad weight term {part!r}") from None
        w = AffineWeight(coeffs["i"], coeffs["d"], coeffs["c"])
        if target is None:
            nonneg, neg = AffineWeight(w.alpha, 0, w.gamma), w
        elif target == "nonneg":
            nonneg = w
        elif target == "neg":
            neg = w
        else:
            per_residue[int(target.split("=")[1])] = w
    return StratumWeight(
        nonneg=nonneg or AffineWeight(),
        neg=neg or AffineWeight(),
        per_residue=per_residue,
    )


_L_MINUS_ONE = mv_poly({1: 1, 0: -1})


def _nonneg_sum(p: int, w: AffineWeight) -> MotivicValue:
    first = mv_shift(_L_MINUS_ONE, 1 + w.gamma)
    return geom_sum(first, w.alpha - p)


def _neg_sum(p: int, w: StratumWeight) -> MotivicValue:
    total = ZERO
    square = mv_mul(_L_MINUS_ONE, _L_MINUS_ONE)
    for e in range(1, p):
        a = w.for_residue(e)
        first = mv_shift(square, e - p + a.gamma)
        total = mv_add(total, geom_sum(geom_sum(first, a.alpha - p), a.beta - 1))
    return total


def _check_residues(p: int, w: StratumWeight) -> None:
    stray = sorted(e for e in w.per_residue if not 1 <= e <= p - 1)
    if stray:
        raise WildMcKayError(f"residue clauses e={stray} out of range for p={p} (expected 1..{p - 1})")


def cov_weighted_integral(p: int, w: StratumWeight, part: CovPart = CovPart.ALL) -> MotivicValue:
    """Closed form of sum over strata of mu(stratum) L^{w - s_f - (p-1) ord(a)}."""
    require_prime(p)
    _check_residues(p, w)
    if part is CovPart.NONNEG:
        return _nonneg_sum(p, w.nonneg)
    if part is CovPart.NEG:
        return _neg_sum(p, w)
    return mv_add(_nonneg_sum(p, w.nonneg), _neg_sum(p, w))


def cov_integral(p: int, part: CovPart = CovPart.ALL) -> MotivicValue:
    """The unweighted sums: (L^2 - L)/(1 - L^-p), (L - L^{2-p})/(1 - L^-p), and L^2 in total."""
    return cov_weighted_integral(p, ZERO_WEIGHT, part)


def expected_part(p: int, part: CovPart) -> MotivicValue:
    if part is CovPart.NONNEG:
        return mv_fraction({2: 1, 1: -1}, [p])
    if part is CovPart.NEG:
        return mv_fraction({1: 1, 2 - p: -1}, [p])
    return mv_L(2)


# -- Direct summation ----------------------------------------------------------


def _ratios(p: int, w: StratumWeight) -> list[int]:
    ratios = [w.nonneg.alpha - p]
    for e in range(1, p):
        a = w.for_residue(e)
        ratios += [a.alpha - p, a.beta - 1]
    return ratios


def strata_up_to(p: int, imax: int, dmax: int) -> list[TwistedJetStratum]:
    strata = [TwistedJetStratum.nonneg(p, i) for i in range(imax + 1)]
    for e in range(1, p):
        for d in range(dmax + 1):
            strata.extend(TwistedJetStratum.neg(p, d, e, i) for i in range(imax + 1))
    return strata


def _top(s: TwistedJetStratum, w: StratumWeight) -> int:
    """Highest exponent of the stratum's term."""
    degree = 1 if s.is_nonneg else 2
    return degree + (1 - s.i if s.is_nonneg else s.d * (s.prime - 1) + s.e - s.i) + w.value(s) + weight_exponent(s)


def cov_truncated(p: int, w: StratumWeight, imax: int, dmax: int) -> TruncatedSeries:
    """Partial sum over i <= imax, d <= dmax, exact on the window above every omitted term."""
    require_prime(p)
    _check_residues(p, w)
    if imax < 0 or dmax < 0:
        raise WildMcKayError("cutoffs must be >= 0")
    if any(r >= 0 for r in _ratios(p, w)):
        raise Divergent(f"weight {w} gives a nonnegative ratio exponent; no tail bound exists")
    partial: dict[int, int] = {}
    strata = strata_up_to(p, imax, dmax)
    for s in strata:
        for exp, c in covariant_term(s, w.value(s)).numerator:
            partial[exp] = partial.get(exp, 0) + c
    omitted = [TwistedJetStratum.nonneg(p, imax + 1)]
    for e in range(1, p):
        omitted += [TwistedJetStratum.neg(p, 0, e, imax + 1), TwistedJetStratum.neg(p, dmax + 1, e, 0)]
    low = max(_top(s, w) for s in omitted) + 1
    high = max(max(_top(s, w) for s in strata), low)
    return TruncatedSeries.build(low, high, partial)


# -- Checks --------------------------------------------------------------------


def cov_total_check(p: int) -> CheckReport:
    """Both parts and their sum against the closed forms."""
    reports = []
    for part in CovPart:
        got = cov_integral(p, part)
        want = expected_part(p, part)
        reports.append(
            CheckReport.ok(part.value) if mv_eq(got, want) else CheckReport.fail(part.value, f"{got} != {want}")
        )
    return combine_reports(f"change-of-variables(p={p})", reports)


def cov_oracle_check(p: int, w: StratumWeight = ZERO_WEIGHT, imax: int = 60, dmax: int = 60) -> CheckReport:
    name = f"covars-oracle(p={p}, imax={imax}, dmax={dmax})"
    closed = cov_weighted_integral(p, w)
    truncated = cov_truncated(p, w, imax, dmax)
    expanded = mv_expand(closed, truncated.window_low)
    if not series_agree(expanded, truncated):
        return CheckReport.fail(name, f"expansion {expanded} != partial sum {truncated}")
    return CheckReport.ok(name, window=[truncated.window_low, truncated.window_high])


def negative_rewrite_check(p: int, dmax: int, imax: int) -> CheckReport:
    """mu(C_{d,e,i}) L^{-(d+1)-(p-1)(d+1+i)} = (L - 1)^2 L^{-p i + e - d - p}, term by term."""
    name = f"negative-rewrite(p={p}, dmax={dmax}, imax={imax})"
    square = mv_mul(_L_MINUS_ONE, _L_MINUS_ONE)
    for e in range(1, p):
        for d in range(dmax + 1):
            for i in range(imax + 1):
                s = TwistedJetStratum.neg(p, d, e, i)
                lhs = mv_mul(cyl_measure(s), mv_L(-(d + 1) - (p - 1) * (d + 1 + i)))
                rhs = mv_shift(square, -p * i + e - d - p)
                if not mv_eq(lhs, rhs):
                    return CheckReport.fail(name, f"stratum {s}: {lhs} != {rhs}")
    return CheckReport.ok(name)
