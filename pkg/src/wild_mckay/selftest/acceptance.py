"""The acceptance suite behind ``wild-mckay selftest``.

Each criterion folds its individual checks into one CheckReport.  ``quick``
shrinks the grids to a sub-second subset.
"""

from __future__ import annotations

import logging
import random
from typing import Callable

from wild_mckay.covars import cov_total_check, s_equals_shtprime_plus_two
from wild_mckay.lring import ONE, MotivicValue, mv_eq, mv_poly, mv_render
from wild_mckay.model.report import CheckReport, combine_reports
from wild_mckay.moduli import (
    StratumH,
    cylinder_measure_G,
    level_stability_check,
    partition_check,
    stratum_cylinder_G,
)
from wild_mckay.moduli.torsors import TorsorGroup
from wild_mckay.quotients import affine_class, ex_d2_H, ex_d3, ex_d22_p2, presentation_check, specialization_check
from wild_mckay.repnil import (
    FpPolynomial,
    jordan_nilpotent,
    kernel_check,
    leibniz_check,
    nilpotence_check,
    representation_checks,
)
from wild_mckay.stringy import (
    DimSeq,
    IntegrandVariant,
    Variant,
    dd,
    dimension_sequences,
    domain_agreement_check,
    oracle_check,
    stringy_integral,
)

ShtFn = Callable[[DimSeq, int], int]

GRID_PRIMES = (2, 3, 5, 7)

logger = logging.getLogger(__name__)


def _golden_values() -> list[tuple[DimSeq, Variant, MotivicValue | None]]:
    """(d, variant, expected); None means divergent."""
    d3 = DimSeq(entries=(3,), prime=3)
    d22 = DimSeq(entries=(2, 2), prime=2)
    return [
        (d3, Variant.SHT, mv_poly({1: 2, 0: 1})),
        (d3, Variant.SHT_PRIME, mv_poly({3: 1, 2: 2})),
        (d22, Variant.SHT, mv_poly({1: 1, 0: 1})),
        (d22, Variant.SHT_PRIME, mv_poly({4: 1, 3: 1})),
        (DimSeq(entries=(3,), prime=5), Variant.SHT, None),
        (DimSeq(entries=(3,), prime=7), Variant.SHT, None),
    ]


def golden_values(_sht: ShtFn | None = None) -> CheckReport:
    reports = []
    for d, tag, expected in _golden_values():
        name = f"d=({d}), p={d.prime}, {tag.value}"
        got = stringy_integral(d, IntegrandVariant(tag), _sht=_sht)
        if expected is None:
            ok = got.infinite
        else:
            ok = not got.infinite and mv_eq(got, expected)
        want = "infinity" if expected is None else mv_render(expected)
        reports.append(CheckReport.ok(name) if ok else CheckReport.fail(name, f"got {mv_render(got)}, expected {want}"))
    return combine_reports("1 golden values", reports)


def _grid(quick: bool) -> list[DimSeq]:
    max_total = 4 if quick else 6
    primes = (2, 3) if quick else GRID_PRIMES
    return [d for p in primes for d in dimension_sequences(p, max_total)]


def convergence_dichotomy(quick: bool = False, _sht: ShtFn | None = None) -> CheckReport:
    reports = []
    for d in _grid(quick):
        finite = not stringy_integral(d, IntegrandVariant(), _sht=_sht).infinite
        name = f"d=({d}), p={d.prime}"
        if finite != (dd(d) >= d.prime):
            reports.append(CheckReport.fail(name, f"finite={finite} but D_d={dd(d)}"))
        else:
            reports.append(CheckReport.ok(name))
    return combine_reports("2 convergence dichotomy", reports)


def domain_agreement(quick: bool = False) -> CheckReport:
    reports = [domain_agreement_check(d, tag) for d in _grid(quick) for tag in Variant]
    return combine_reports("3 G/H equality", reports)


def oracle_equivalence(quick: bool = False, cutoff: int = 60) -> CheckReport:
    reports = []
    for d in _grid(quick):
        if dd(d) < d.prime:
            continue
        for tag in Variant:
            for domain in TorsorGroup:
                reports.append(oracle_check(d, IntegrandVariant(tag, domain), 20 if quick else cutoff))
    return combine_reports("4 oracle equivalence", reports)


def change_of_variables(quick: bool = False) -> CheckReport:
    primes = (2, 3) if quick else (2, 3, 5, 7, 11, 13)
    return combine_reports("5 change of variables = L^2", [cov_total_check(p) for p in primes])


def s_f_identity(quick: bool = False) -> CheckReport:
    jmax = 100 if quick else 1000
    return combine_reports("6 s_f = sht' + 2", [s_equals_shtprime_plus_two(p, jmax) for p in GRID_PRIMES])


def presentations(quick: bool = False) -> CheckReport:
    examples = [ex_d3(p) for p in ((3,) if quick else (3, 5, 7))] + [ex_d22_p2()]
    return combine_reports("7 presentation residuals", [presentation_check(e) for e in examples])


def point_counts(quick: bool = False) -> CheckReport:
    cases = [
        (ex_d3(3), (3, 9) if quick else (3, 9, 27)),
        (ex_d22_p2(), (2,) if quick else (2, 4)),
        (ex_d2_H(2), (2, 4) if quick else (2, 4, 8)),
    ]
    reports = [specialization_check(affine_class(e), e, q) for e, qs in cases for q in qs]
    return combine_reports("8 point-count specialization", reports)


def random_polynomial(rng: random.Random, p: int, n: int, maxdeg: int, terms: int) -> FpPolynomial:
    coefficients: dict[tuple[int, ...], int] = {}
    for _ in range(terms):
        exps = [0] * n
        for _ in range(rng.randint(0, maxdeg)):
            exps[rng.randrange(n)] += 1
        coefficients[tuple(exps)] = rng.randrange(p)
    return FpPolynomial.build(p, n, coefficients)


def representation_suite(quick: bool = False, seed: int = 0) -> CheckReport:
    rng = random.Random(seed)
    primes = (2, 3) if quick else (2, 3, 5)
    max_total = 3 if quick else 5
    pairs = 10 if quick else 100
    nil_degree = 3 if quick else 6
    reports = []
    for p in primes:
        for d in dimension_sequences(p, max_total):
            xi = jordan_nilpotent(d)
            reports.append(representation_checks(d))
            leibniz = [
                leibniz_check(
                    xi,
                    random_polynomial(rng, p, d.total, 3, 4),
                    random_polynomial(rng, p, d.total, 3, 4),
                )
                for _ in range(pairs)
            ]
            reports.append(combine_reports(f"leibniz(d=({d}), p={p})", leibniz))
            reports.append(nilpotence_check(xi, nil_degree))
            reports.append(kernel_check(xi, 2 if quick else 3))
    return combine_reports("9 representation theory", reports)


def measure_normalizations(quick: bool = False) -> CheckReport:
    reports = []
    for p in GRID_PRIMES:
        for level in (0, 1, 2):
            measure = cylinder_measure_G(stratum_cylinder_G(StratumH.zero(p), level))
            name = f"mu_G(Delta_G^>=0) (p={p}, level={level})"
            reports.append(CheckReport.ok(name) if mv_eq(measure, ONE) else CheckReport.fail(name, mv_render(measure)))
        reports.append(partition_check(p, 10 if quick else 50))
        for j in (1, 2, 3):
            if j % p:
                reports.append(level_stability_check(stratum_cylinder_G(StratumH(prime=p, j=j), 1)))
    return combine_reports("10 measure normalizations", reports)


def run_acceptance(
    quick: bool = False,
    # Testing hook for negative controls
    _sht: ShtFn | None = None,
) -> list[CheckReport]:
    """All ten criteria in order."""
    runners: list[Callable[[], CheckReport]] = [
        lambda: golden_values(_sht),
        lambda: convergence_dichotomy(quick, _sht),
        lambda: domain_agreement(quick),
        lambda: oracle_equivalence(quick),
        lambda: change_of_variables(quick),
        lambda: s_f_identity(quick),
        lambda: presentations(quick),
        lambda: point_counts(quick),
        lambda: representation_suite(quick),
        lambda: measure_normalizations(quick),
    ]
    reports = []
    for run in runners:
        report = run()
        logger.info("%s", report.render())
        reports.append(report)
    return reports
