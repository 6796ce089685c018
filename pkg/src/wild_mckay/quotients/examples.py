"""Built-in quotient presentations and their verification.

ex_d3      d = (3), p >= 3:  k[x, y, z]^D = k[2x, y^p, z^p, y^2 - 2xz]
           = k[X, Y, Z, W] / (Y^2 - W^p - X^p Z)
ex_d22_p2  d = (2, 2), p = 2:  generators x0, y0^2, x1, y1^2, x0 y1 + x1 y0
           = k[V, W, X, Y, Z] / (Z^2 + V^2 Y + X^2 W)
ex_d2_H    d = (2), Z/pZ acting on the plane:  k[x^p - x y^{p-1}, y], a polynomial ring
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from wild_mckay.errors import WildMcKayError
from wild_mckay.model.report import CheckReport, combine_reports
from wild_mckay.moduli.torsors import TorsorGroup
from wild_mckay.primes import WrongCharacteristic, require_prime
from wild_mckay.repnil import (
    FpPolynomial,
    automorphism_apply,
    derivation_apply,
    h_generator,
    jordan_nilpotent,
    parse_polynomial,
)
from wild_mckay.stringy.dimseq import DimSeq


class UnknownExample(WildMcKayError):
    """No built-in example with this identifier."""


@dataclass(frozen=True, slots=True)
class QuotientExample:
    identifier: str
    prime: int
    dimseq: DimSeq
    group: TorsorGroup
    ambient_names: tuple[str, ...]
    generators: tuple[FpPolynomial, ...]
    presentation_names: tuple[str, ...]
    relations: tuple[FpPolynomial, ...] = ()

    def __post_init__(self) -> None:
        if len(self.presentation_names) != len(self.generators):
            raise WildMcKayError(
                f"{self.identifier}: {len(self.presentation_names)} presentation variables "
                f"for {len(self.generators)} generators"
            )
        for g in self.generators:
            if g.nvars != len(self.ambient_names) or g.prime != self.prime:
                raise WildMcKayError(f"{self.identifier}: generator {g} lives in the wrong ring")
        for r in self.relations:
            if r.nvars != len(self.presentation_names) or r.prime != self.prime:
                raise WildMcKayError(f"{self.identifier}: relation {r} lives in the wrong ring")

    @property
    def dimension(self) -> int:
        """Affine dimension of the presented scheme (hypersurface or affine space)."""
        return len(self.presentation_names) - len(self.relations)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.identifier,
            "p": self.prime,
            "d": list(self.dimseq.entries),
            "group": self.group.value,
            "ambient": list(self.ambient_names),
            "generators": [g.render(self.ambient_names) for g in self.generators],
            "presentation": list(self.presentation_names),
            "relations": [r.render(self.presentation_names) for r in self.relations],
        }


def _parse_all(texts: list[str], p: int, names: tuple[str, ...]) -> tuple[FpPolynomial, ...]:
    return tuple(parse_polynomial(t, p, len(names), names=names) for t in texts)


def ex_d3(p: int = 3) -> QuotientExample:
    require_prime(p)
    if p < 3:
        raise WrongCharacteristic("ex_d3 needs p >= 3")
    ambient = ("x", "y", "z")
    presentation = ("X", "Y", "Z", "W")
    return QuotientExample(
        identifier="ex_d3",
        prime=p,
        dimseq=DimSeq(entries=(3,), prime=p),
        group=TorsorGroup.G,
        ambient_names=ambient,
        generators=_parse_all(["2*x", f"y^{p}", f"z^{p}", "y^2 - 2*x*z"], p, ambient),
        presentation_names=presentation,
        relations=_parse_all([f"Y^2 - W^{p} - X^{p}*Z"], p, presentation),
    )


def ex_d22_p2(p: int = 2) -> QuotientExample:
    if p != 2:
        raise WrongCharacteristic(f"ex_d22_p2 is stated for p = 2, got {p}")
    ambient = ("x0", "y0", "x1", "y1")
    presentation = ("V", "W", "X", "Y", "Z")
    return QuotientExample(
        identifier="ex_d22_p2",
        prime=2,
        dimseq=DimSeq(entries=(2, 2), prime=2),
        group=TorsorGroup.G,
        ambient_names=ambient,
        generators=_parse_all(["x0", "y0^2", "x1", "y1^2", "x0*y1 + x1*y0"], 2, ambient),
        presentation_names=presentation,
        relations=_parse_all(["Z^2 + V^2*Y + X^2*W"], 2, presentation),
    )


def ex_d2_H(p: int = 2) -> QuotientExample:
    require_prime(p)
    ambient = ("x", "y")
    presentation = ("U", "T")
    return QuotientExample(
        identifier="ex_d2_H",
        prime=p,
        dimseq=DimSeq(entries=(2,), prime=p),
        group=TorsorGroup.H,
        ambient_names=ambient,
        generators=_parse_all([f"x^{p} - x*y^{p - 1}", "y"], p, ambient),
        presentation_names=presentation,
    )


_BUILDERS = {"ex_d3": (ex_d3, 3), "ex_d22_p2": (ex_d22_p2, 2), "ex_d2_H": (ex_d2_H, 2)}

EXAMPLE_IDS = tuple(_BUILDERS)


def builtin_examples(p_d3: int = 3, p_h: int = 2) -> list[QuotientExample]:
    return [ex_d3(p_d3), ex_d22_p2(), ex_d2_H(p_h)]


def get_example(identifier: str, p: int | None = None) -> QuotientExample:
    try:
        builder, default_p = _BUILDERS[identifier]
    except KeyError:
        raise UnknownExample(f"unknown example {identifier!r} (known: {', '.join(EXAMPLE_IDS)})") from None
    return builder(default_p if p is None else p)


def verify_presentation(e: QuotientExample) -> FpPolynomial:
    """The relation with the generators substituted, in the ambient ring; zero when the presentation holds."""
    residual = FpPolynomial.zero(e.prime, len(e.ambient_names))
    for r in e.relations:
        residual = residual + r.compose(e.generators)
    return residual


def generator_invariance(e: QuotientExample) -> CheckReport:
    """Each generator is killed by the derivation (G) or fixed by the automorphism (H).

    The H-action on coordinates is the dual of sigma, x_j -> sum_i sigma[j][i] x_i,
    so x is moved to x + y and y is fixed.
    """
    name = f"generator-invariance({e.identifier}, p={e.prime})"
    for g in e.generators:
        if e.group is TorsorGroup.G:
            image = derivation_apply(jordan_nilpotent(e.dimseq), g)
            if not image.is_zero:
                return CheckReport.fail(name, f"D({g.render(e.ambient_names)}) = {image.render(e.ambient_names)}")
        else:
            moved = automorphism_apply(h_generator(e.dimseq).transpose(), g)
            if moved != g:
                return CheckReport.fail(
                    name, f"sigma({g.render(e.ambient_names)}) = {moved.render(e.ambient_names)}"
                )
    return CheckReport.ok(name, f"{len(e.generators)} generator(s) invariant")


def presentation_check(e: QuotientExample) -> CheckReport:
    """Residual is zero and every generator is invariant."""
    residual = verify_presentation(e)
    reports = [
        CheckReport.ok("residual")
        if residual.is_zero
        else CheckReport.fail("residual", f"nonzero residual {residual.render(e.ambient_names)}"),
        generator_invariance(e),
    ]
    return combine_reports(f"presentation({e.identifier}, p={e.prime})", reports)
