"""Sparse polynomials in n variables over F_p.

Terms are kept in graded-lex descending order (total degree first, then
exponent vectors compared lexicographically with x1 largest).  Text input is
parsed with sympy; output uses the variables x1..xn and coefficients 0..p-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from sympy import Poly, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import PolynomialError

from wild_mckay.errors import WildMcKayError
from wild_mckay.primes import require_prime

Exponents = tuple[int, ...]

ALIASES = ("x", "y", "z")


class InvalidPolynomial(WildMcKayError):
    """Text or data that does not describe a polynomial over F_p."""


def _grlex_key(exps: Exponents) -> tuple[int, Exponents]:
    return (sum(exps), exps)


@dataclass(frozen=True, slots=True)
class FpPolynomial:
    prime: int
    nvars: int
    terms: tuple[tuple[Exponents, int], ...] = ()

    def __post_init__(self) -> None:
        require_prime(self.prime)
        for exps, c in self.terms:
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise InvalidPolynomial(f"bad exponent vector {exps} for {self.nvars} variables")
            if not 0 < c < self.prime:
                raise InvalidPolynomial(f"coefficient {c} not in 1..{self.prime - 1}")

    # -- Constructors -------------------------------------------------------

    @classmethod
    def build(cls, p: int, nvars: int, coefficients: Mapping[Exponents, int]) -> "FpPolynomial":
        """Reduce mod p, drop zeros and sort."""
        cleaned = {tuple(e): c % p for e, c in coefficients.items() if c % p}
        ordered = sorted(cleaned.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        return cls(prime=p, nvars=nvars, terms=tuple(ordered))

    @classmethod
    def zero(cls, p: int, nvars: int) -> "FpPolynomial":
        return cls(prime=p, nvars=nvars)

    @classmethod
    def constant(cls, p: int, nvars: int, c: int) -> "FpPolynomial":
        return cls.build(p, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, p: int, nvars: int, index: int) -> "FpPolynomial":
        """The coordinate x_{index+1}."""
        if not 0 <= index < nvars:
            raise InvalidPolynomial(f"variable index {index} out of range for {nvars} variables")
        exps = tuple(int(i == index) for i in range(nvars))
        return cls.build(p, nvars, {exps: 1})

    @classmethod
    def monomial(cls, p: int, exps: Sequence[int], c: int = 1) -> "FpPolynomial":
        return cls.build(p, len(exps), {tuple(exps): c})

    # -- Accessors ----------------------------------------------------------

    @property
    def coefficients(self) -> dict[Exponents, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=-1)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.coefficients.get(tuple(exps), 0)

    def homogeneous_part(self, k: int) -> "FpPolynomial":
        return FpPolynomial(self.prime, self.nvars, tuple(t for t in self.terms if sum(t[0]) == k))

    def variables_used(self) -> set[int]:
        return {i for exps, _ in self.terms for i, e in enumerate(exps) if e}

    # -- Arithmetic ---------------------------------------------------------

    def _check(self, other: "FpPolynomial") -> None:
        if self.prime != other.prime or self.nvars != other.nvars:
            raise InvalidPolynomial(
                f"incompatible rings F_{self.prime}[{self.nvars} vars] and F_{other.prime}[{other.nvars} vars]"
            )

    def __add__(self, other: "FpPolynomial") -> "FpPolynomial":
        self._check(other)
        acc = self.coefficients
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return FpPolynomial.build(self.prime, self.nvars, acc)

    def __neg__(self) -> "FpPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "FpPolynomial") -> "FpPolynomial":
        return self + (-other)

    def __mul__(self, other: "FpPolynomial | int") -> "FpPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        acc: dict[Exponents, int] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = tuple(x + y for x, y in zip(ea, eb))
                acc[e] = (acc.get(e, 0) + ca * cb) % self.prime
        return FpPolynomial.build(self.prime, self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FpPolynomial":
        if k < 0:
            raise InvalidPolynomial("negative polynomial power")
        result = FpPolynomial.constant(self.prime, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, k: int) -> "FpPolynomial":
        return FpPolynomial.build(self.prime, self.nvars, {e: c * k for e, c in self.terms})

    def compose(self, images: Sequence["FpPolynomial"]) -> "FpPolynomial":
        """Substitute images[i] for x_{i+1}; the result lives in the images' ring."""
        if len(images) != self.nvars:
            raise InvalidPolynomial(f"expected {self.nvars} images, got {len(images)}")
        if not images:
            return self
        target = images[0]
        for g in images[1:]:
            target._check(g)
        powers: dict[tuple[int, int], FpPolynomial] = {}

        def power(i: int, k: int) -> FpPolynomial:
            if (i, k) not in powers:
                powers[(i, k)] = images[i] ** k
            return powers[(i, k)]

        result = FpPolynomial.zero(target.prime, target.nvars)
        for exps, c in self.terms:
            term = FpPolynomial.constant(target.prime, target.nvars, c)
            for i, k in enumerate(exps):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    # -- Output -------------------------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if self.is_zero:
            return "0"
        parts = []
        for exps, c in self.terms:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.prime,
            "nvars": self.nvars,
            "terms": [[list(e), c] for e, c in self.terms],
        }


def default_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def fp_polynomial_from_dict(data: Any) -> FpPolynomial:
    if not isinstance(data, dict) or not {"p", "nvars", "terms"} <= set(data):
        raise InvalidPolynomial("polynomial payload needs 'p', 'nvars' and 'terms'")
    try:
        coefficients = {tuple(int(x) for x in e): int(c) for e, c in data["terms"]}
        return FpPolynomial.build(int(data["p"]), int(data["nvars"]), coefficients)
    except (TypeError, ValueError) as e:
        raise InvalidPolynomial(f"malformed polynomial payload: {e}") from e


_TRANSFORMS = standard_transformations + (convert_xor,)


def parse_polynomial(text: str, p: int, nvars: int, names: Sequence[str] | None = None) -> FpPolynomial:
    """Parse text such as ``"y^2 - 2*x*z"`` into F_p[x1..xn].

    Variables are x1..xn, or *names* when given; for n <= 3 the aliases
    x, y, z are accepted as well.  Rational coefficients are reduced mod p
    when their denominator is prime to p.
    """
    require_prime(p)
    if nvars < 1:
        raise InvalidPolynomial("need at least one variable")
    canonical = list(names) if names is not None else default_names(nvars)
    gens = [Symbol(n) for n in canonical]
    local: dict[str, Symbol] = {n: s for n, s in zip(canonical, gens)}
    if names is None and nvars <= len(ALIASES):
        for alias, s in zip(ALIASES, gens):
            local.setdefault(alias, s)
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS, evaluate=True)
        poly = Poly(expr, *gens)
    except (SympifyError, PolynomialError, SyntaxError, TypeError) as e:
        raise InvalidPolynomial(f"cannot parse polynomial {text!r}: {e}") from e
    coefficients: dict[Exponents, int] = {}
    for monom, coeff in poly.terms():
        if not coeff.is_Rational:
            raise InvalidPolynomial(f"coefficient {coeff} of {text!r} is not rational")
        num, den = int(coeff.p), int(coeff.q)
        if den % p == 0:
            raise InvalidPolynomial(f"coefficient {coeff} has denominator divisible by p = {p}")
        exps = tuple(int(e) for e in monom)
        coefficients[exps] = (num * pow(den, -1, p)) % p
    return FpPolynomial.build(p, nvars, coefficients)
