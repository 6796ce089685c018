"""Brute-force F_q point counts of the presented quotients."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from wild_mckay.config import check_budget
from wild_mckay.errors import ContractViolation, WildMcKayError
from wild_mckay.lring import MotivicValue, mv_L, mv_specialize
from wild_mckay.model.report import CheckReport
from wild_mckay.quotients.examples import QuotientExample
from wild_mckay.quotients.galois import GaloisField
from wild_mckay.repnil import FpPolynomial

logger = logging.getLogger(__name__)


class UnsupportedPresentation(WildMcKayError):
    """The presented scheme is not a hypersurface or an affine space."""


@dataclass(frozen=True, slots=True)
class _Elimination:
    """Relation = rest + coeff * v^power, with v occurring nowhere in rest."""

    variable: int
    coeff: int
    power: int
    rest: FpPolynomial


def _find_elimination(r: FpPolynomial) -> _Elimination | None:
    """A variable that occurs in exactly one monomial, and alone there."""
    for v in range(r.nvars):
        containing = [(e, c) for e, c in r.terms if e[v]]
        if len(containing) != 1:
            continue
        exps, c = containing[0]
        if any(x for i, x in enumerate(exps) if i != v):
            continue
        rest = FpPolynomial(r.prime, r.nvars, tuple(t for t in r.terms if not t[0][v]))
        return _Elimination(variable=v, coeff=c, power=exps[v], rest=rest)
    return None


def _evaluate(f: FpPolynomial, field: GaloisField, point: dict[int, int]) -> int:
    total = 0
    for exps, c in f.terms:
        value = c
        for i, e in enumerate(exps):
            if e:
                value = field.mul(value, field.pow(point[i], e))
        total = field.add(total, value)
    return total


def count_points(e: QuotientExample, q: int, *, budget: int | None = None) -> int:
    """|X(F_q)| for X = Spec k[presentation vars]/(relations), by enumeration.

    When the relation has the shape rest + c v^k with v isolated, v is not
    enumerated: for each assignment of the other variables the number of
    solutions is read from the preimage count of w -> c w^k.
    """
    field = GaloisField.of_order(q, e.prime)
    logger.debug("counting %s over F_%d", e.identifier, q)
    n = len(e.presentation_names)
    if not e.relations:
        check_budget(q**n, budget)
        return sum(1 for _ in itertools.product(field.elements(), repeat=n))
    if len(e.relations) > 1:
        raise UnsupportedPresentation(f"{e.identifier}: {len(e.relations)} relations, only hypersurfaces are enumerated")
    relation = e.relations[0]
    elim = _find_elimination(relation)
    if elim is None:
        check_budget(q**n, budget)
        count = 0
        for values in itertools.product(field.elements(), repeat=n):
            if _evaluate(relation, field, dict(enumerate(values))) == 0:
                count += 1
        return count

    check_budget(q ** (n - 1), budget)
    logger.debug("eliminating variable %d (power %d)", elim.variable, elim.power)
    preimages = [0] * q
    for w in field.elements():
        preimages[field.mul(elim.coeff, field.pow(w, elim.power))] += 1
    if sum(preimages) != q:
        raise ContractViolation(f"preimage counts of w -> {elim.coeff}*w^{elim.power} sum to {sum(preimages)}, not {q}")
    others = [i for i in range(n) if i != elim.variable]
    count = 0
    for values in itertools.product(field.elements(), repeat=n - 1):
        rest = _evaluate(elim.rest, field, dict(zip(others, values)))
        count += preimages[field.neg(rest)]
    return count


def specialization_check(v: MotivicValue, e: QuotientExample, q: int, *, budget: int | None = None) -> CheckReport:
    """mv_specialize(v, q) against the enumerated point count."""
    name = f"specialization({e.identifier}, q={q})"
    expected = mv_specialize(v, q)
    counted = count_points(e, q, budget=budget)
    if expected != counted:
        return CheckReport.fail(name, f"value at L={q} is {expected}, enumeration gives {counted}", counted=counted)
    return CheckReport.ok(name, f"{counted} points", counted=counted)


def affine_class(e: QuotientExample) -> MotivicValue:
    """L^dim, the class the point counts are compared against."""
    return mv_L(e.dimension)
