"""Prime and prime-power validation shared by the CLI and the modules."""

from __future__ import annotations

from sympy import factorint, isprime

from wild_mckay.errors import WildMcKayError


class InvalidPrime(WildMcKayError):
    """The characteristic must be a prime number."""


class WrongCharacteristic(WildMcKayError):
    """q is not a power of the expected prime."""


def require_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise InvalidPrime(f"p must be prime, got {p!r}")
    return p


def prime_power_exponent(q: int, p: int) -> int:
    """Return k with q = p^k (k >= 1), or raise WrongCharacteristic."""
    require_prime(p)
    if q < 2:
        raise WrongCharacteristic(f"q = {q} is not a power of {p}")
    factors = factorint(q)
    if set(factors) != {p}:
        raise WrongCharacteristic(f"q = {q} is not a power of {p}")
    return factors[p]


def characteristic_of(q: int) -> int:
    """The prime p with q = p^k, k >= 1."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise WrongCharacteristic(f"q = {q!r} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise WrongCharacteristic(f"q = {q} is not a prime power")
    return next(iter(factors))
