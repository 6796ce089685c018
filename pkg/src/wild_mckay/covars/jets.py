"""Twisted-jet strata for d = (2) and their cylinder measures.

A stratum fixes the torsor part f up to its order and the offset i of
ord(a) above s_f:

    nonneg:  ord(f) >= 0 (or f = 0),           ord(a) = i
    neg:     ord(f) = -(p d + e), 1 <= e < p,  ord(a) = s_f + i = d + 1 + i

Its image in the (m, n)-jets with m = i, n = 0 has class
[pi_{i,0}] = (L - 1) L^{i+1} (nonneg) or (L - 1)^2 L^{d(p-1)+e+i} (neg),
and the measure is that class times L^{-2m-(p-1)n}.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Any

from wild_mckay.errors import WildMcKayError
from wild_mckay.lring import MotivicValue, mv_L, mv_eq, mv_mul, mv_poly, mv_shift
from wild_mckay.model.report import CheckReport
from wild_mckay.moduli.torsors import InvalidOrder, Order, is_zero_order
from wild_mckay.primes import require_prime
from wild_mckay.stringy.dimseq import DimSeq, sht_prime_at_f


class LevelOrder(WildMcKayError):
    """A jet transition must go to a level that is at least as high."""


class InvalidStratumSpec(WildMcKayError):
    """Stratum text does not match 'nonneg:i=K' or 'neg:d=A,e=B,i=K'."""


def s_f(p: int, ord_f: Order) -> int:
    """max{0, ceil(-ord(f) / p)}."""
    require_prime(p)
    if is_zero_order(ord_f):
        return 0
    if not isinstance(ord_f, int) or isinstance(ord_f, bool):
        raise InvalidOrder(f"ord(f) must be an integer or +infinity, got {ord_f!r}")
    if ord_f >= 0:
        return 0
    if ord_f % p == 0:
        raise InvalidOrder(f"ord(f) = {ord_f} is divisible by p = {p}")
    return math.ceil(-ord_f / p)


@dataclass(frozen=True, slots=True)
class TwistedJetStratum:
    prime: int
    i: int
    d: int | None = None
    e: int | None = None

    def __post_init__(self) -> None:
        require_prime(self.prime)
        if self.i < 0:
            raise InvalidStratumSpec(f"offset i must be >= 0, got {self.i}")
        if (self.d is None) != (self.e is None):
            raise InvalidStratumSpec("negative strata need both d and e")
        if self.d is not None:
            if self.d < 0:
                raise InvalidStratumSpec(f"d must be >= 0, got {self.d}")
            if not 1 <= self.e <= self.prime - 1:
                raise InvalidStratumSpec(f"e must lie in 1..{self.prime - 1}, got {self.e}")

    @classmethod
    def nonneg(cls, p: int, i: int) -> "TwistedJetStratum":
        return cls(prime=p, i=i)

    @classmethod
    def neg(cls, p: int, d: int, e: int, i: int) -> "TwistedJetStratum":
        return cls(prime=p, i=i, d=d, e=e)

    @property
    def is_nonneg(self) -> bool:
        return self.d is None

    @property
    def order_of_f(self) -> Order:
        """A representative ord(f): 0 for the nonneg strata."""
        return 0 if self.d is None else -(self.prime * self.d + self.e)

    @property
    def s(self) -> int:
        return s_f(self.prime, self.order_of_f)

    @property
    def order_of_a(self) -> int:
        return self.s + self.i

    def __str__(self) -> str:
        if self.is_nonneg:
            return f"nonneg:i={self.i}"
        return f"neg:d={self.d},e={self.e},i={self.i}"

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.prime, "kind": "nonneg" if self.is_nonneg else "neg", "d": self.d, "e": self.e, "i": self.i}


_SPEC = re.compile(r"^\s*(nonneg|neg)\s*:\s*(.*)$")


def parse_stratum_spec(text: str, p: int) -> TwistedJetStratum:
    """'nonneg:i=K' or 'neg:d=A,e=B,i=K'."""
    m = _SPEC.match(text)
    if not m:
        raise InvalidStratumSpec(f"cannot parse stratum {text!r}")
    kind, body = m.groups()
    fields: dict[str, int] = {}
    for part in filter(None, (s.strip() for s in body.split(","))):
        key, sep, value = part.partition("=")
        try:
            if not sep:
                raise ValueError(part)
            fields[key.strip()] = int(value)
        except ValueError:
            raise InvalidStratumSpec(f"bad field {part!r} in stratum {text!r}") from None
    expected = {"i"} if kind == "nonneg" else {"d", "e", "i"}
    if set(fields) != expected:
        raise InvalidStratumSpec(f"{kind} stratum needs fields {sorted(expected)}, got {sorted(fields)}")
    if kind == "nonneg":
        return TwistedJetStratum.nonneg(p, fields["i"])
    return TwistedJetStratum.neg(p, fields["d"], fields["e"], fields["i"])


@dataclass(frozen=True, slots=True)
class JetLevel:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise LevelOrder(f"jet levels are nonnegative, got ({self.m}, {self.n})")


def jet_transition_dim(p: int, source: JetLevel, target: JetLevel) -> int:
    """Fiber dimension of J_{m',n'} -> J_{m,n}: 2(m' - m) + (p - 1)(n' - n)."""
    require_prime(p)
    if target.m < source.m or target.n < source.n:
        raise LevelOrder(f"cannot go from level ({source.m}, {source.n}) down to ({target.m}, {target.n})")
    return 2 * (target.m - source.m) + (p - 1) * (target.n - source.n)


def fiber_dim(p: int, s_f: int, n: int, ord_a: int) -> int:
    """s_f + (p - 1) n + (p - 1) ord(a); callers stay in the regime m = m' p, m' >= ord(alpha)."""
    return s_f + (p - 1) * n + (p - 1) * ord_a


_L_MINUS_ONE = mv_poly({1: 1, 0: -1})


def cyl_measure(s: TwistedJetStratum) -> MotivicValue:
    """(L - 1) L^{1-i} on nonneg strata, (L - 1)^2 L^{d(p-1)+e-i} on neg strata."""
    if s.is_nonneg:
        return mv_shift(_L_MINUS_ONE, 1 - s.i)
    return mv_shift(mv_mul(_L_MINUS_ONE, _L_MINUS_ONE), s.d * (s.prime - 1) + s.e - s.i)


def base_level(s: TwistedJetStratum) -> JetLevel:
    """The lowest level at which the stratum is a cylinder."""
    return JetLevel(m=s.i, n=0)


def stratum_truncated_class(s: TwistedJetStratum, level: JetLevel) -> MotivicValue:
    """Class of the image of the stratum in J_{m,n}."""
    base = base_level(s)
    if s.is_nonneg:
        cls = mv_shift(_L_MINUS_ONE, s.i + 1)
    else:
        cls = mv_shift(mv_mul(_L_MINUS_ONE, _L_MINUS_ONE), s.d * (s.prime - 1) + s.e + s.i)
    return mv_shift(cls, jet_transition_dim(s.prime, base, level))


def jet_cylinder_measure(s: TwistedJetStratum, level: JetLevel) -> MotivicValue:
    """[image in J_{m,n}] L^{-2m-(p-1)n}."""
    return mv_shift(stratum_truncated_class(s, level), -2 * level.m - (s.prime - 1) * level.n)


def level_consistency_check(s: TwistedJetStratum, extra_m: int = 3, extra_n: int = 3) -> CheckReport:
    """The measure recorded at every level above the base agrees with cyl_measure."""
    name = f"level-consistency({s}, p={s.prime})"
    expected = cyl_measure(s)
    base = base_level(s)
    for dm in range(extra_m + 1):
        for dn in range(extra_n + 1):
            level = JetLevel(base.m + dm, base.n + dn)
            got = jet_cylinder_measure(s, level)
            if not mv_eq(got, expected):
                return CheckReport.fail(name, f"level ({level.m}, {level.n}) gives {got}, expected {expected}")
    return CheckReport.ok(name)


def s_equals_shtprime_plus_two(p: int, jmax: int) -> CheckReport:
    """s_f = sht'(f) + 2 for d = (2), f = 0 and every ord(f) = -j, j <= jmax."""
    require_prime(p)
    if jmax < 1:
        raise WildMcKayError(f"jmax must be >= 1, got {jmax}")
    name = f"s_f = sht' + 2 (p={p}, jmax={jmax})"
    d = DimSeq(entries=(2,), prime=p)
    for order in [math.inf] + [-j for j in range(1, jmax + 1) if j % p]:
        lhs = s_f(p, order)
        rhs = sht_prime_at_f(d, order) + 2
        if lhs != rhs:
            return CheckReport.fail(name, f"ord(f) = {order}: s_f = {lhs}, sht' + 2 = {rhs}", order=str(order))
    return CheckReport.ok(name)


def weight_exponent(s: TwistedJetStratum) -> int:
    """-s_f - (p - 1) ord(a), the change-of-variables factor of the stratum."""
    return -s.s - (s.prime - 1) * s.order_of_a


def covariant_term(s: TwistedJetStratum, extra: int = 0) -> MotivicValue:
    """mu(stratum) L^{extra - s_f - (p-1) ord(a)}."""
    return mv_mul(cyl_measure(s), mv_L(extra + weight_exponent(s)))
