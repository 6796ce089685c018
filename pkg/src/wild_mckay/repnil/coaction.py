"""The coaction exp(xi eps) of alpha_p and the comodule axioms.

A coaction on F_p^n is a matrix with entries in F_p[eps]/(eps^p), stored as
its eps-components phi_0, ..., phi_{p-1}.  Counit and coassociativity are
checked component-wise:

    phi_0 = I,    phi_a phi_b = binom(a + b, a) phi_{a+b}   (phi_k = 0 for k >= p)

which is (id (x) Delta) phi = (phi (x) id) phi with Delta(eps) = eps (x) 1 + 1 (x) eps
written out in the two-variable ring F_p[eps1, eps2]/(eps1^p, eps2^p).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Any

from wild_mckay.errors import WildMcKayError
from wild_mckay.model.report import CheckReport, combine_reports
from wild_mckay.repnil.fpmatrix import (
    DimensionMismatch,
    FpMatrix,
    NotPNilpotent,
    direct_sum,
    fp_matrix_power,
    h_generator,
    is_p_nilpotent,
    jordan_nilpotent,
    jordan_type,
    kronecker,
    tensor_nilpotent,
)
from wild_mckay.stringy.dimseq import DimSeq


@dataclass(frozen=True, slots=True)
class CoactionMatrix:
    """sum_i components[i] eps^i with len(components) == p."""

    prime: int
    components: tuple[FpMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.prime:
            raise WildMcKayError(f"a coaction over F_{self.prime} needs {self.prime} components")
        dims = {c.dim for c in self.components}
        primes = {c.prime for c in self.components}
        if len(dims) != 1 or primes != {self.prime}:
            raise DimensionMismatch("coaction components disagree in size or characteristic")

    @property
    def dim(self) -> int:
        return self.components[0].dim

    def component(self, i: int) -> FpMatrix:
        if 0 <= i < self.prime:
            return self.components[i]
        return FpMatrix.zero(self.prime, self.dim)

    def at(self, value: int) -> FpMatrix:
        """Specialize eps to a scalar in F_p."""
        total = FpMatrix.zero(self.prime, self.dim)
        for i, c in enumerate(self.components):
            total = total + c.scale(pow(value, i, self.prime))
        return total

    def entry(self, i: int, j: int) -> dict[int, int]:
        """The (i, j) entry as a polynomial in eps: {power: coefficient}."""
        return {k: c.entry(i, j) for k, c in enumerate(self.components) if c.entry(i, j)}

    def render(self) -> str:
        def poly(terms: dict[int, int]) -> str:
            if not terms:
                return "0"
            parts = []
            for k, c in sorted(terms.items()):
                mono = "" if k == 0 else ("eps" if k == 1 else f"eps^{k}")
                if not mono:
                    parts.append(str(c))
                else:
                    parts.append(mono if c == 1 else f"{c}*{mono}")
            return " + ".join(parts)

        return "\n".join(
            "[" + ", ".join(poly(self.entry(i, j)) for j in range(self.dim)) + "]" for i in range(self.dim)
        )

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.prime, "components": [[list(r) for r in c.rows] for c in self.components]}


def inverse_factorials(p: int) -> list[int]:
    """(i!)^{-1} mod p for 0 <= i < p."""
    return [pow(factorial(i), -1, p) for i in range(p)]


def coaction(xi: FpMatrix) -> CoactionMatrix:
    """exp(xi eps) = sum_{i<p} xi^i eps^i / i!."""
    p = xi.prime
    if not is_p_nilpotent(xi):
        raise NotPNilpotent(f"xi^{p} != 0")
    inv = inverse_factorials(p)
    return CoactionMatrix(prime=p, components=tuple(fp_matrix_power(xi, i).scale(inv[i]) for i in range(p)))


def check_axioms_of(phi: CoactionMatrix) -> CheckReport:
    """Counit and coassociativity of an arbitrary eps-matrix."""
    p, n = phi.prime, phi.dim
    name = f"coaction-axioms(n={n}, p={p})"
    identity = FpMatrix.identity(p, n)
    if phi.component(0) != identity:
        i, j = _first_difference(phi.component(0), identity)
        return CheckReport.fail(name, f"counit violated at entry ({i}, {j})", axiom="counit", entry=[i, j])
    for a in range(p):
        for b in range(p):
            lhs = phi.component(a + b).scale(comb(a + b, a)) if a + b < p else FpMatrix.zero(p, n)
            rhs = phi.component(a) @ phi.component(b)
            if lhs != rhs:
                i, j = _first_difference(lhs, rhs)
                return CheckReport.fail(
                    name,
                    f"coassociativity violated at eps1^{a} eps2^{b}, entry ({i}, {j})",
                    axiom="coassociativity",
                    powers=[a, b],
                    entry=[i, j],
                )
    return CheckReport.ok(name)


def check_coaction_axioms(xi: FpMatrix) -> CheckReport:
    return check_axioms_of(coaction(xi))


def _first_difference(a: FpMatrix, b: FpMatrix) -> tuple[int, int]:
    for i in range(a.dim):
        for j in range(a.dim):
            if a.entry(i, j) != b.entry(i, j):
                return i, j
    return -1, -1


def coaction_tensor(phi: CoactionMatrix, psi: CoactionMatrix) -> CoactionMatrix:
    """phi (x) psi in End(M (x) N) (x) F_p[eps]/(eps^p)."""
    p = phi.prime
    n = phi.dim * psi.dim
    components = []
    for k in range(p):
        total = FpMatrix.zero(p, n)
        for a in range(k + 1):
            total = total + kronecker(phi.component(a), psi.component(k - a))
        components.append(total)
    return CoactionMatrix(prime=p, components=tuple(components))


def tensor_rule_check(xi: FpMatrix, eta: FpMatrix) -> CheckReport:
    """exp((xi (x) 1 + 1 (x) eta) eps) = exp(xi eps) (x) exp(eta eps)."""
    name = f"tensor-rule(n={xi.dim}x{eta.dim}, p={xi.prime})"
    lhs = coaction(tensor_nilpotent(xi, eta))
    rhs = coaction_tensor(coaction(xi), coaction(eta))
    for k in range(xi.prime):
        if lhs.component(k) != rhs.component(k):
            return CheckReport.fail(name, f"eps^{k} components differ", power=k)
    return CheckReport.ok(name)


def direct_sum_rule_check(xi: FpMatrix, eta: FpMatrix) -> CheckReport:
    """exp((xi (+) eta) eps) is the block sum of exp(xi eps) and exp(eta eps)."""
    name = f"direct-sum-rule(n={xi.dim}+{eta.dim}, p={xi.prime})"
    lhs = coaction(direct_sum(xi, eta))
    a, b = coaction(xi), coaction(eta)
    for k in range(xi.prime):
        if lhs.component(k) != direct_sum(a.component(k), b.component(k)):
            return CheckReport.fail(name, f"eps^{k} components differ", power=k)
    return CheckReport.ok(name)


def exp_at_one_check(d: DimSeq) -> CheckReport:
    """exp(xi) versus the H-generator sigma = I + xi.

    Both are unipotent with Jordan type d; they coincide exactly when every
    block has size <= 2.
    """
    name = f"exp-at-one(d=({d}), p={d.prime})"
    xi = jordan_nilpotent(d)
    exp_one = coaction(xi).at(1)
    sigma = h_generator(d)
    identity = FpMatrix.identity(d.prime, xi.dim)
    types = (jordan_type(exp_one - identity), jordan_type(sigma - identity))
    if types[0] != d.entries or types[1] != d.entries:
        return CheckReport.fail(name, f"Jordan types {types[0]} / {types[1]} != {d.entries}")
    small_blocks = max(d.entries) <= 2
    if small_blocks != (exp_one == sigma):
        return CheckReport.fail(name, "exp(xi) = sigma must hold exactly when all blocks have size <= 2")
    return CheckReport.ok(name, "equal" if small_blocks else "conjugate (same Jordan type)")


def representation_checks(d: DimSeq) -> CheckReport:
    """xi^p = 0, sigma^p = I, the comodule axioms, and exp(xi) against sigma."""
    xi = jordan_nilpotent(d)
    sigma = h_generator(d)
    p = d.prime
    reports = [
        CheckReport.ok("xi^p = 0") if is_p_nilpotent(xi) else CheckReport.fail("xi^p = 0", "nonzero power"),
        CheckReport.ok("sigma^p = I")
        if fp_matrix_power(sigma, p) == FpMatrix.identity(p, sigma.dim)
        else CheckReport.fail("sigma^p = I", "sigma has order != p"),
        check_coaction_axioms(xi),
        exp_at_one_check(d),
    ]
    return combine_reports(f"representation(d=({d}), p={p})", reports)
