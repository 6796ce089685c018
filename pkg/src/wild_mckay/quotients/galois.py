"""Finite fields F_q, q = p^k, with discrete log / antilog tables.

Elements are the integers 0..q-1; the base-p digits of an element are its
coordinates in the basis 1, a, ..., a^{k-1}, where a is a root of a
primitive polynomial found by search.  The prime subfield is 0..p-1.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from wild_mckay.primes import WrongCharacteristic, prime_power_exponent


class GaloisField:
    def __init__(self, p: int, k: int = 1):
        if k < 1:
            raise WrongCharacteristic(f"extension degree must be >= 1, got {k}")
        prime_power_exponent(p**k, p)
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus, self.exp_table = _primitive_tables(p, k)
        self.log_table = [0] * self.q
        for i, x in enumerate(self.exp_table):
            self.log_table[x] = i

    @classmethod
    def of_order(cls, q: int, p: int) -> "GaloisField":
        return cls(p, prime_power_exponent(q, p))

    def __repr__(self) -> str:
        return f"GaloisField(q={self.q})"

    def elements(self) -> range:
        return range(self.q)

    def digits(self, a: int) -> list[int]:
        return _digits(a, self.p, self.k)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return _from_digits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))], self.p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return _from_digits([(-x) % self.p for x in self.digits(a)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] * n) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _from_digits(ds: list[int], p: int) -> int:
    value = 0
    for d in reversed(ds):
        value = value * p + d
    return value


@lru_cache(maxsize=None)
def _primitive_tables(p: int, k: int) -> tuple[tuple[int, ...], list[int]]:
    """First monic x^k + c_{k-1} x^{k-1} + ... + c_0 (in lex order of (c_0, ..)) whose root generates F_q^*."""
    q = p**k
    if k == 1:
        g = next(g for g in range(1, p) if _order_mod_p(g, p) == p - 1) if p > 2 else 1
        table = [1]
        for _ in range(p - 2):
            table.append((table[-1] * g) % p)
        return (), table
    for lower in itertools.product(range(p), repeat=k):
        if lower[0] == 0:
            continue
        table = _powers_of_root(lower, p, k)
        if table is not None and len(table) == q - 1:
            return lower, table
    raise WrongCharacteristic(f"no primitive polynomial of degree {k} over F_{p}")


def _order_mod_p(g: int, p: int) -> int:
    x, n = g % p, 1
    while x != 1:
        x = (x * g) % p
        n += 1
    return n


def _powers_of_root(lower: tuple[int, ...], p: int, k: int) -> list[int] | None:
    """a^0, a^1, ... until a^n = 1, with a^k = -(c_0 + ... + c_{k-1} a^{k-1})."""
    q = p**k
    current = [1] + [0] * (k - 1)
    table = [1]
    for _ in range(q - 1):
        top = current[-1]
        shifted = [0] + current[:-1]
        current = [(s - top * c) % p for s, c in zip(shifted, lower)]
        value = _from_digits(current, p)
        if value == 1:
            return table
        table.append(value)
    return None
