"""The derivation of F_p[x_1..x_n] extending a nilpotent xi, and its kernels.

xi acts on the span of the variables by D(x_j) = sum_i xi[i][j] x_i, so the
Jordan block of size 3 gives D(x) = 0, D(y) = x, D(z) = y.  D extends to
monomials by the Leibniz rule.
"""

from __future__ import annotations

from typing import Iterator

from wild_mckay.errors import WildMcKayError
from wild_mckay.model.report import CheckReport
from wild_mckay.repnil.fpmatrix import DimensionMismatch, FpMatrix
from wild_mckay.repnil.linalg import nullspace_mod_p, rank_mod_p
from wild_mckay.repnil.polynomial import Exponents, FpPolynomial


def _variable_images(m: FpMatrix) -> list[FpPolynomial]:
    """x_j -> sum_i m[i][j] x_i."""
    n, p = m.dim, m.prime
    return [
        FpPolynomial.build(p, n, {tuple(int(k == i) for k in range(n)): m.entry(i, j) for i in range(n)})
        for j in range(n)
    ]


def _check_dims(m: FpMatrix, f: FpPolynomial) -> None:
    if m.dim != f.nvars or m.prime != f.prime:
        raise DimensionMismatch(
            f"{m.dim}x{m.dim} matrix over F_{m.prime} cannot act on F_{f.prime}[{f.nvars} vars]"
        )


def derivation_apply(xi: FpMatrix, f: FpPolynomial) -> FpPolynomial:
    """D(f), using D(x^e) = sum_j e_j x^{e - e_j} D(x_j)."""
    _check_dims(xi, f)
    p, n = f.prime, f.nvars
    images = [img.coefficients for img in _variable_images(xi)]
    acc: dict[Exponents, int] = {}
    for exps, c in f.terms:
        for j, e in enumerate(exps):
            if e % p == 0:
                continue
            lowered = list(exps)
            lowered[j] -= 1
            scale = c * e
            for var_exps, a in images[j].items():
                i = var_exps.index(1)
                target = list(lowered)
                target[i] += 1
                key = tuple(target)
                acc[key] = acc.get(key, 0) + scale * a
    return FpPolynomial.build(p, n, acc)


def derivation_power(xi: FpMatrix, f: FpPolynomial, k: int) -> FpPolynomial:
    for _ in range(k):
        f = derivation_apply(xi, f)
        if f.is_zero:
            break
    return f


def automorphism_apply(sigma: FpMatrix, f: FpPolynomial) -> FpPolynomial:
    """f(sigma x): the ring automorphism with x_j -> sum_i sigma[i][j] x_i."""
    _check_dims(sigma, f)
    return f.compose(_variable_images(sigma))


def monomials_of_degree(n: int, k: int) -> list[Exponents]:
    """Exponent vectors of total degree k, graded-lex descending."""

    def gen(remaining: int, slots: int) -> Iterator[Exponents]:
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in gen(remaining - first, slots - 1):
                yield (first,) + rest

    return list(gen(k, n))


def invariant_basis(xi: FpMatrix, maxdeg: int) -> list[FpPolynomial]:
    """Basis of ker D in each degree 0..maxdeg, degree by degree.

    Columns are the monomials of one degree in graded-lex descending order;
    each basis element has coefficient 1 at a free column and no support on
    the other free columns.
    """
    if maxdeg < 1:
        raise WildMcKayError(f"maxdeg must be >= 1, got {maxdeg}")
    p, n = xi.prime, xi.dim
    basis: list[FpPolynomial] = []
    for k in range(maxdeg + 1):
        monos = monomials_of_degree(n, k)
        index = {m: c for c, m in enumerate(monos)}
        rows = [[0] * len(monos) for _ in monos]
        for col, m in enumerate(monos):
            image = derivation_apply(xi, FpPolynomial.monomial(p, m))
            for exps, c in image.terms:
                rows[index[exps]][col] = c
        for v in nullspace_mod_p(rows, len(monos), p):
            basis.append(FpPolynomial.build(p, n, {monos[c]: x for c, x in enumerate(v) if x}))
    return basis


def span_contains(basis: list[FpPolynomial], f: FpPolynomial) -> bool:
    """True when f is an F_p-linear combination of *basis*."""
    if f.is_zero:
        return True
    support = sorted({e for g in basis + [f] for e, _ in g.terms}, reverse=True)
    col = {e: i for i, e in enumerate(support)}

    def vector(g: FpPolynomial) -> list[int]:
        v = [0] * len(support)
        for e, c in g.terms:
            v[col[e]] = c
        return v

    rows = [vector(g) for g in basis]
    before = rank_mod_p(rows, f.prime) if rows else 0
    return rank_mod_p(rows + [vector(f)], f.prime) == before


# -- Property checks -----------------------------------------------------------


def leibniz_check(xi: FpMatrix, f: FpPolynomial, g: FpPolynomial) -> CheckReport:
    """D(f g) = D(f) g + f D(g)."""
    name = "leibniz"
    lhs = derivation_apply(xi, f * g)
    rhs = derivation_apply(xi, f) * g + f * derivation_apply(xi, g)
    if lhs != rhs:
        return CheckReport.fail(name, f"D(fg) = {lhs} but D(f)g + fD(g) = {rhs}", f=str(f), g=str(g))
    return CheckReport.ok(name)


def nilpotence_check(xi: FpMatrix, maxdeg: int) -> CheckReport:
    """D^p vanishes on every monomial of degree <= maxdeg."""
    p, n = xi.prime, xi.dim
    name = f"D^p = 0 (n={n}, p={p}, deg<={maxdeg})"
    for k in range(1, maxdeg + 1):
        for m in monomials_of_degree(n, k):
            image = derivation_power(xi, FpPolynomial.monomial(p, m), p)
            if not image.is_zero:
                return CheckReport.fail(name, f"D^{p}({FpPolynomial.monomial(p, m)}) = {image}", monomial=list(m))
    return CheckReport.ok(name)


def kernel_check(xi: FpMatrix, maxdeg: int) -> CheckReport:
    """Every element of invariant_basis is annihilated by D."""
    name = f"kernel(n={xi.dim}, p={xi.prime}, deg<={maxdeg})"
    basis = invariant_basis(xi, maxdeg)
    for f in basis:
        image = derivation_apply(xi, f)
        if not image.is_zero:
            return CheckReport.fail(name, f"D({f}) = {image}")
    return CheckReport.ok(name, f"{len(basis)} basis element(s)", size=len(basis))

