"""Torsor classes over Spec k((t)) and their algebra presentations.

alpha_p-torsors (group G) are parameterized by Laurent series with only
exponents prime to p; Z/pZ-torsors (group H) by Laurent polynomials with
only negative exponents prime to p.  A class is recorded by its group and
ord(f); ord(0) is the distinguished value +infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from wild_mckay.errors import WildMcKayError
from wild_mckay.primes import require_prime

ORD_INFINITY = math.inf

Order = int | float


class TorsorGroup(Enum):
    """Which group scheme the torsor is for."""

    G = "G"  # alpha_p
    H = "H"  # Z/pZ


class InvalidOrder(WildMcKayError):
    """ord(f) incompatible with the moduli space."""


def is_zero_order(order: Order) -> bool:
    return order == ORD_INFINITY


def validate_order(order: Order, p: int, group: TorsorGroup) -> Order:
    """Check ord(f) against the moduli description of *group*."""
    if is_zero_order(order):
        return order
    if not isinstance(order, int) or isinstance(order, bool):
        raise InvalidOrder(f"ord(f) must be an integer or +infinity, got {order!r}")
    if order % p == 0:
        raise InvalidOrder(f"ord(f) = {order} is divisible by p = {p}")
    if group is TorsorGroup.H and order >= 0:
        raise InvalidOrder(f"H-torsor data has only negative exponents, got ord(f) = {order}")
    return order


@dataclass(frozen=True, slots=True)
class TorsorClass:
    """A torsor up to the data used by the integrands: its group and ord(f)."""

    group: TorsorGroup
    order_of_f: Order
    prime: int

    def __post_init__(self) -> None:
        require_prime(self.prime)
        validate_order(self.order_of_f, self.prime, self.group)

    @property
    def is_trivial(self) -> bool:
        return is_zero_order(self.order_of_f)


def _order_text(order: Order) -> str:
    return "+infinity" if is_zero_order(order) else str(order)


def torsor_presentation(t: TorsorClass) -> str:
    """Human-readable presentation of the torsor algebra and its action."""
    p = t.prime
    if t.group is TorsorGroup.H:
        if t.is_trivial:
            return (
                f"k((t))[z]/(z^{p} - z), f = 0 (trivial torsor), "
                f"action z ↦ z + 1"
            )
        return (
            f"k((t))[z]/(z^{p} - z - f), f with ord(f) = {_order_text(t.order_of_f)}, "
            f"action z ↦ z + 1"
        )
    if t.is_trivial:
        return (
            f"k((t))[z]/(z^{p}), f = 0 (non-reduced degenerate algebra; "
            f"integral model O_f = k[[t]][z]/(z^{p})), action z ↦ z + ε"
        )
    if t.order_of_f > 0:
        return (
            f"k((t))[z]/(z^{p} - f), f with ord(f) = {t.order_of_f} "
            f"(tau_0(f) = 0, integral model O_f = k[[t]][z]/(z^{p} - f)), action z ↦ z + ε"
        )
    return (
        f"k((t))[z]/(z^{p} - f), f with ord(f) = {t.order_of_f}, "
        f"action z ↦ z + ε"
    )
