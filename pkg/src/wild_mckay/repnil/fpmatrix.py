"""Dense square matrices over F_p and the Jordan matrices attached to d."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from wild_mckay.errors import WildMcKayError
from wild_mckay.primes import require_prime
from wild_mckay.repnil.linalg import rank_mod_p
from wild_mckay.stringy.dimseq import DimSeq


class BlockTooLarge(WildMcKayError):
    """A nilpotent Jordan block of size > p is not p-nilpotent."""


class DimensionMismatch(WildMcKayError):
    """Operands have incompatible sizes."""


class NotPNilpotent(WildMcKayError):
    """xi^p != 0, so exp(xi eps) is not a coaction."""


@dataclass(frozen=True, slots=True)
class FpMatrix:
    """Row-major n x n matrix with entries reduced mod p."""

    prime: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        require_prime(self.prime)
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise DimensionMismatch("matrix is not square")
            if any(not 0 <= x < self.prime for x in row):
                raise WildMcKayError("entries must be reduced mod p")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]]) -> "FpMatrix":
        return cls(prime=p, rows=tuple(tuple(x % p for x in row) for row in rows))

    @classmethod
    def zero(cls, p: int, n: int) -> "FpMatrix":
        return cls.from_rows(p, [[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls.from_rows(p, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        _check_same(self, other)
        return FpMatrix.from_rows(
            self.prime,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        _check_same(self, other)
        return FpMatrix.from_rows(
            self.prime,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        _check_same(self, other)
        cols = list(zip(*other.rows))
        return FpMatrix.from_rows(
            self.prime,
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows],
        )

    def scale(self, k: int) -> "FpMatrix":
        return FpMatrix.from_rows(self.prime, [[k * x for x in row] for row in self.rows])

    def transpose(self) -> "FpMatrix":
        return FpMatrix(prime=self.prime, rows=tuple(zip(*self.rows)) if self.rows else ())

    def power(self, k: int) -> "FpMatrix":
        return fp_matrix_power(self, k)

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.prime, "rows": [list(r) for r in self.rows]}

    def render(self) -> str:
        return "\n".join("[" + " ".join(str(x) for x in row) + "]" for row in self.rows)


def _check_same(a: FpMatrix, b: FpMatrix) -> None:
    if a.prime != b.prime or a.dim != b.dim:
        raise DimensionMismatch(f"{a.dim}x{a.dim} over F_{a.prime} vs {b.dim}x{b.dim} over F_{b.prime}")


def fp_matrix_power(m: FpMatrix, k: int) -> FpMatrix:
    """m^k by repeated squaring (k >= 0)."""
    if k < 0:
        raise WildMcKayError("negative matrix power")
    result = FpMatrix.identity(m.prime, m.dim)
    base = m
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def direct_sum(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """Block-diagonal a (+) b."""
    if a.prime != b.prime:
        raise DimensionMismatch("direct sum over different primes")
    n, m = a.dim, b.dim
    rows = [list(r) + [0] * m for r in a.rows] + [[0] * n + list(r) for r in b.rows]
    return FpMatrix.from_rows(a.prime, rows)


def kronecker(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """a (x) b, indexing basis vectors (i, k) as i * dim(b) + k."""
    if a.prime != b.prime:
        raise DimensionMismatch("tensor product over different primes")
    n, m = a.dim, b.dim
    rows = [
        [a.rows[i][j] * b.rows[k][l] for j in range(n) for l in range(m)]
        for i in range(n)
        for k in range(m)
    ]
    return FpMatrix.from_rows(a.prime, rows)


def tensor_nilpotent(xi: FpMatrix, eta: FpMatrix) -> FpMatrix:
    """xi (x) 1 + 1 (x) eta, the nilpotent of the tensor product representation."""
    return kronecker(xi, FpMatrix.identity(eta.prime, eta.dim)) + kronecker(
        FpMatrix.identity(xi.prime, xi.dim), eta
    )


def jordan_nilpotent(d: DimSeq) -> FpMatrix:
    """Block-diagonal nilpotent with superdiagonal-1 blocks of sizes d_lambda."""
    p = d.prime
    if any(block > p for block in d.entries):
        raise BlockTooLarge(f"block sizes {d.entries} exceed p = {p}")
    n = d.total
    rows = [[0] * n for _ in range(n)]
    offset = 0
    for block in d.entries:
        for i in range(block - 1):
            rows[offset + i][offset + i + 1] = 1
        offset += block
    return FpMatrix.from_rows(p, rows)


def h_generator(d: DimSeq) -> FpMatrix:
    """sigma = I + jordan_nilpotent(d): unipotent Jordan blocks, sigma^p = I."""
    xi = jordan_nilpotent(d)
    return FpMatrix.identity(d.prime, xi.dim) + xi


def is_p_nilpotent(xi: FpMatrix) -> bool:
    return fp_matrix_power(xi, xi.prime).is_zero


def jordan_type(m: FpMatrix) -> tuple[int, ...]:
    """Block sizes of a nilpotent matrix, read off the ranks of its powers.

    The number of blocks of size >= k is rank(m^{k-1}) - rank(m^k).
    """
    ranks = [m.dim]
    power = FpMatrix.identity(m.prime, m.dim)
    for _ in range(m.dim):
        power = power @ m
        ranks.append(rank_mod_p(power.rows, m.prime))
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise NotPNilpotent("matrix is not nilpotent")
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes: list[int] = []
    for k, count in enumerate(at_least, start=1):
        exactly = count - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exactly)
    return tuple(sorted(sizes, reverse=True))
