"""Dimension sequences d = (d_1, ..., d_l) and the shift numbers sht, sht'."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from wild_mckay.errors import WildMcKayError
from wild_mckay.moduli.torsors import Order, is_zero_order
from wild_mckay.primes import require_prime


class InvalidDimSeq(WildMcKayError):
    """Entries must satisfy 1 <= d_lambda <= p and be nonincreasing."""


class InvalidJ(WildMcKayError):
    """sht(j) needs j >= 1 prime to p."""


@dataclass(frozen=True, slots=True)
class DimSeq:
    """Jordan block sizes shared by the G-representation V and the H-representation W."""

    entries: tuple[int, ...]
    prime: int

    def __post_init__(self) -> None:
        require_prime(self.prime)
        if not self.entries:
            raise InvalidDimSeq("dimension sequence is empty")
        for d in self.entries:
            if not isinstance(d, int) or isinstance(d, bool) or not 1 <= d <= self.prime:
                raise InvalidDimSeq(f"entry {d!r} outside 1..{self.prime}")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise InvalidDimSeq(f"entries {self.entries} are not nonincreasing")

    @classmethod
    def parse(cls, text: str, p: int) -> "DimSeq":
        """Parse ``"3,1,1"``."""
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError as e:
            raise InvalidDimSeq(f"cannot parse dimension sequence {text!r}") from e
        return cls(entries=entries, prime=p)

    @property
    def length(self) -> int:
        """l"""
        return len(self.entries)

    @property
    def total(self) -> int:
        """|d|"""
        return sum(self.entries)

    @property
    def dd(self) -> int:
        return dd(self)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.entries)

    def to_dict(self) -> dict[str, Any]:
        return {"entries": list(self.entries), "p": self.prime}


@dataclass(frozen=True, slots=True)
class DdReport:
    """D_d together with the classification it controls."""

    value: int
    prime: int

    @property
    def convergent(self) -> bool:
        """Integrals converge (and W/H is canonical) exactly when D_d >= p."""
        return self.value >= self.prime

    @property
    def trivial(self) -> bool:
        return self.value == 0

    @property
    def pseudo_reflection(self) -> bool:
        """d = (2,1,...,1): the quotient is an affine space."""
        return self.value == 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "dd": self.value,
            "p": self.prime,
            "convergent": self.convergent,
            "trivial": self.trivial,
            "pseudo_reflection": self.pseudo_reflection,
        }


def dd(d: DimSeq) -> int:
    """D_d = sum (d_lambda - 1) d_lambda / 2."""
    return sum((x - 1) * x // 2 for x in d.entries)


def dd_report(d: DimSeq) -> DdReport:
    return DdReport(value=dd(d), prime=d.prime)


def sht(d: DimSeq, j: int) -> int:
    """sht(j) = sum_lambda sum_{i=1}^{d_lambda - 1} floor(i j / p)."""
    p = d.prime
    if not isinstance(j, int) or j < 1 or j % p == 0:
        raise InvalidJ(f"j = {j!r} must be >= 1 and prime to p = {p}")
    return sum((i * j) // p for block in d.entries for i in range(1, block))


def _negated_order(order: Order, d: DimSeq) -> int | None:
    """-ord(f) for the negative strata, None for f = 0 or ord(f) >= 0 (tau_0(f) = 0)."""
    if is_zero_order(order) or order >= 0:
        if not is_zero_order(order) and order % d.prime == 0:
            raise InvalidJ(f"ord(f) = {order} is divisible by p = {d.prime}")
        return None
    return -int(order)


def sht_at_f(d: DimSeq, order_of_f: Order) -> int:
    """sht(f) = sht(-ord f) for ord f < 0, and 0 on the zero stratum / ord f >= 0."""
    j = _negated_order(order_of_f, d)
    return 0 if j is None else sht(d, j)


def sht_prime_at_f(d: DimSeq, order_of_f: Order) -> int:
    """sht'(f) = sht(f) - l for ord f < 0, and -|d| on the zero stratum / ord f >= 0."""
    j = _negated_order(order_of_f, d)
    return -d.total if j is None else sht(d, j) - d.length


def dimension_sequences(p: int, max_total: int) -> list[DimSeq]:
    """Every valid d with |d| <= max_total, by total then reverse-lex."""
    require_prime(p)
    out: list[DimSeq] = []

    def parts(remaining: int, cap: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        return [(k,) + rest for k in range(min(cap, remaining), 0, -1) for rest in parts(remaining - k, k)]

    for total in range(1, max_total + 1):
        out.extend(DimSeq(entries=e, prime=p) for e in parts(total, p))
    return out
