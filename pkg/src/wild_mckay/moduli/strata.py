"""Order strata of Delta_H, cylinders of Delta_G, and their measures.

Delta_H^{>=-j} is the affine space of coefficient tuples (c_i) indexed by
the exponents -i, 1 <= i <= j, p not dividing i.  Delta_{G,n} is Delta_H
times A^{n(p-1)}; a cylinder of level n has measure [tau_n(C)] L^{-n(p-1)}.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from wild_mckay.config import check_budget
from wild_mckay.errors import WildMcKayError
from wild_mckay.lring import ONE, MotivicValue, mv_add, mv_eq, mv_L, mv_mul, mv_poly, mv_shift
from wild_mckay.model.report import CheckReport
from wild_mckay.primes import prime_power_exponent, require_prime

logger = logging.getLogger(__name__)


class InvalidStratum(WildMcKayError):
    """j must be a positive integer prime to p."""


@dataclass(frozen=True, slots=True)
class StratumH:
    """{f in Delta_H : ord(f) = -j}, or the zero stratum {0} when j is None."""

    prime: int
    j: int | None = None

    def __post_init__(self) -> None:
        require_prime(self.prime)
        if self.j is None:
            return
        if not isinstance(self.j, int) or self.j < 1 or self.j % self.prime == 0:
            raise InvalidStratum(f"stratum index j = {self.j!r} must be >= 1 and prime to p = {self.prime}")

    @classmethod
    def zero(cls, p: int) -> "StratumH":
        return cls(prime=p, j=None)

    @property
    def is_zero(self) -> bool:
        return self.j is None

    @property
    def order(self) -> float | int:
        """ord(f) on the stratum."""
        return float("inf") if self.j is None else -self.j


@dataclass(frozen=True, slots=True)
class CylinderG:
    """A cylinder of Delta_G of level n, recorded by the class of tau_n(C)."""

    level: int
    truncated_class: MotivicValue
    prime: int

    def __post_init__(self) -> None:
        require_prime(self.prime)
        if self.level < 0:
            raise WildMcKayError(f"level must be >= 0, got {self.level}")
        if self.truncated_class.infinite:
            raise WildMcKayError("cylinder class must be finite")


def dim_delta_H_geq(p: int, j: int) -> int:
    """Dimension j - floor(j/p) of the affine space Delta_H^{>=-j}."""
    require_prime(p)
    if j < 1:
        raise InvalidStratum(f"j must be >= 1, got {j}")
    return j - j // p


def delta_G_level_dim(p: int, j: int, n: int) -> int:
    """Dimension of Delta_{G,n}^{>=-j} = Delta_H^{>=-j} x A^{n(p-1)}."""
    if n < 0:
        raise WildMcKayError(f"level must be >= 0, got {n}")
    return dim_delta_H_geq(p, j) + n * (p - 1)


def stratum_class_H(s: StratumH) -> MotivicValue:
    """[{ord(f) = -j}] = (L - 1) L^{j - floor(j/p) - 1}; the zero stratum is a point."""
    if s.is_zero:
        return ONE
    dim = dim_delta_H_geq(s.prime, s.j)
    return mv_shift(mv_poly({1: 1, 0: -1}), dim - 1)


def cylinder_measure_G(c: CylinderG) -> MotivicValue:
    """mu_G(C) = [tau_n(C)] L^{-n(p-1)}."""
    return mv_shift(c.truncated_class, -c.level * (c.prime - 1))


def stratum_cylinder_G(s: StratumH, level: int) -> CylinderG:
    """tau_0^{-1}(s) viewed at level n: the full fiber A^{n(p-1)} over the stratum.

    The zero stratum pulls back to Delta_G^{>=0}.
    """
    if level < 0:
        raise WildMcKayError(f"level must be >= 0, got {level}")
    cls = mv_mul(stratum_class_H(s), mv_L(level * (s.prime - 1)))
    return CylinderG(level=level, truncated_class=cls, prime=s.prime)


def raise_level(c: CylinderG, steps: int = 1) -> CylinderG:
    """The same cylinder recorded at level n + steps."""
    return CylinderG(
        level=c.level + steps,
        truncated_class=mv_shift(c.truncated_class, steps * (c.prime - 1)),
        prime=c.prime,
    )


def strata_up_to(p: int, J: int) -> list[StratumH]:
    """The zero stratum followed by all strata with j <= J, in increasing j."""
    require_prime(p)
    return [StratumH.zero(p)] + [StratumH(prime=p, j=j) for j in range(1, J + 1) if j % p]


def count_stratum_points(p: int, j: int | None, q: int, *, budget: int | None = None) -> int:
    """Count F_q-points of {ord(f) = -j} by enumerating coefficient tuples.

    Only "is the coefficient zero" matters, so the q field elements are
    represented by the symbols 0..q-1.
    """
    prime_power_exponent(q, p)
    if j is None:
        return 1
    s = StratumH(prime=p, j=j)
    slots = [i for i in range(1, s.j + 1) if i % p]
    check_budget(q ** len(slots), budget)
    logger.debug("enumerating %d coefficient slots over F_%d", len(slots), q)
    leading = slots.index(s.j)
    return sum(1 for coeffs in itertools.product(range(q), repeat=len(slots)) if coeffs[leading] != 0)


def partition_check(p: int, J: int) -> CheckReport:
    """Zero stratum plus strata j <= J add up to [Delta_H^{>=-J}] = L^{J - floor(J/p)}."""
    name = f"partition(p={p}, J={J})"
    total = ONE
    for s in strata_up_to(p, J)[1:]:
        total = mv_add(total, stratum_class_H(s))
    expected = mv_L(dim_delta_H_geq(p, J))
    if not mv_eq(total, expected):
        return CheckReport.fail(name, f"sum of strata is {total}, expected {expected}")
    return CheckReport.ok(name)


def level_stability_check(c: CylinderG, steps: int = 3) -> CheckReport:
    """The measure of *c* does not change when it is recorded at higher levels."""
    name = f"level-stability(level={c.level})"
    base = cylinder_measure_G(c)
    for k in range(1, steps + 1):
        lifted = cylinder_measure_G(raise_level(c, k))
        if not mv_eq(base, lifted):
            return CheckReport.fail(name, f"level {c.level + k} gives {lifted}, level {c.level} gives {base}")
    return CheckReport.ok(name)
