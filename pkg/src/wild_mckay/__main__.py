"""CLI entry point for wild-mckay."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from wild_mckay.config import load_config
from wild_mckay.covars import (
    CovPart,
    cov_integral,
    cov_truncated,
    cov_weighted_integral,
    cyl_measure,
    parse_stratum_spec,
    parse_weight,
    s_equals_shtprime_plus_two,
)
from wild_mckay.errors import ContractViolation, WildMcKayError
from wild_mckay.lring import (
    INFINITY,
    Divergent,
    InvalidMotivicValue,
    MotivicValue,
    TruncatedSeries,
    mv_from_dict,
    mv_reduce,
    mv_render,
    mv_to_dict,
    series_render,
    series_to_dict,
)
from wild_mckay.model.report import CheckReport, combine_reports
from wild_mckay.moduli import (
    CylinderG,
    StratumH,
    TorsorClass,
    TorsorGroup,
    count_stratum_points,
    cylinder_measure_G,
    partition_check,
    stratum_class_H,
    torsor_presentation,
)
from wild_mckay.moduli.torsors import ORD_INFINITY
from wild_mckay.primes import characteristic_of, require_prime
from wild_mckay.quotients import EXAMPLE_IDS, count_points, get_example, specialization_check, verify_presentation
from wild_mckay.repnil import (
    check_coaction_axioms,
    coaction,
    derivation_apply,
    direct_sum_rule_check,
    invariant_basis,
    jordan_nilpotent,
    parse_polynomial,
    tensor_rule_check,
)
from wild_mckay.selftest import run_acceptance
from wild_mckay.stringy import (
    DimSeq,
    IntegrandVariant,
    Variant,
    stratum_terms,
    stringy_integral,
    stringy_integral_truncated,
)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wild-mckay",
        description="Exact motivic integrals for wild alpha_p and Z/pZ quotients",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(sub: Any, name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="Machine-readable JSON output")
        return p

    # stringy command
    stringy = add(subparsers, "stringy", "Stringy integral of L^{-sht} or L^{-sht'}")
    stringy.add_argument("--p", type=int, required=True, help="Characteristic")
    stringy.add_argument("--d", type=str, required=True, help="Dimension sequence, e.g. 3,1,1")
    stringy.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.SHT.value)
    stringy.add_argument("--domain", choices=[g.value for g in TorsorGroup], default=TorsorGroup.H.value)
    stringy.add_argument("--level", type=int, default=None, help="Cylinder level for --domain G")
    stringy.add_argument("--truncate", type=int, default=None, metavar="J", help="Partial sum over strata j <= J")
    stringy.add_argument("--terms", type=int, default=None, metavar="J", help="List stratum contributions j <= J")

    # moduli command
    moduli = subparsers.add_parser("moduli", help="Torsor strata and their classes")
    moduli_sub = moduli.add_subparsers(dest="action", required=True)
    m_stratum = add(moduli_sub, "stratum", "Class of the stratum ord(f) = -j (omit --j for f = 0)")
    m_stratum.add_argument("--p", type=int, required=True)
    m_stratum.add_argument("--j", type=int, default=None)
    m_measure = add(moduli_sub, "measure-g", "mu_G of a level-n cylinder given the class of its truncation")
    m_measure.add_argument("--p", type=int, required=True)
    m_measure.add_argument("--level", type=int, required=True)
    m_measure.add_argument("--class", dest="truncated_class", type=str, required=True, help="MotivicValue JSON")
    m_count = add(moduli_sub, "count", "Count F_q-points of a stratum by enumeration")
    m_count.add_argument("--p", type=int, required=True)
    m_count.add_argument("--j", type=int, default=None)
    m_count.add_argument("--q", type=int, required=True)
    m_count.add_argument("--budget", type=int, default=None, help="Enumeration cap (tuples)")
    m_part = add(moduli_sub, "partition", "Check that the strata j <= J partition Delta_H^{>=-J}")
    m_part.add_argument("--p", type=int, required=True)
    m_part.add_argument("--J", type=int, required=True)
    m_pres = add(moduli_sub, "presentation", "Algebra presenting the torsor of f")
    m_pres.add_argument("--p", type=int, required=True)
    m_pres.add_argument("--group", choices=[g.value for g in TorsorGroup], required=True)
    m_pres.add_argument("--ord", type=int, default=None, help="ord(f); omit for f = 0")

    # rep command
    rep = subparsers.add_parser("rep", help="Nilpotent representations, coactions and invariants")
    rep_sub = rep.add_subparsers(dest="action", required=True)
    for name, help_text in [
        ("jordan", "Block nilpotent xi of Jordan type d"),
        ("coaction", "The coaction exp(xi eps)"),
        ("check-axioms", "Counit and coassociativity of exp(xi eps)"),
        ("invariants", "Kernel of the derivation, degree by degree"),
        ("derive", "Apply the derivation to a polynomial"),
        ("tensor", "Tensor and direct-sum rules for exp(xi eps)"),
    ]:
        r = add(rep_sub, name, help_text)
        r.add_argument("--p", type=int, required=True)
        r.add_argument("--d", type=str, required=True)
        if name == "invariants":
            r.add_argument("--maxdeg", type=int, default=None)
        if name == "derive":
            r.add_argument("--poly", type=str, required=True, help="Polynomial in x1..xn (or x, y, z)")
        if name == "tensor":
            r.add_argument("--e", type=str, required=True, help="Second dimension sequence")

    # quotient command
    quotient = subparsers.add_parser("quotient", help="Built-in quotient presentations")
    q_sub = quotient.add_subparsers(dest="action", required=True)
    q_verify = add(q_sub, "verify", "Substitute the generators into the relation")
    q_verify.add_argument("--example", choices=EXAMPLE_IDS, required=True)
    q_verify.add_argument("--p", type=int, default=None)
    q_count = add(q_sub, "count", "Count F_q-points of the presented scheme")
    q_count.add_argument("--example", choices=EXAMPLE_IDS, required=True)
    q_count.add_argument("--q", type=int, required=True)
    q_count.add_argument("--budget", type=int, default=None)
    q_check = add(q_sub, "check", "Compare a motivic value at L = q with the point count")
    q_check.add_argument("--example", choices=EXAMPLE_IDS, required=True)
    q_check.add_argument("--q", type=int, required=True)
    q_check.add_argument("--value", type=str, required=True, help="MotivicValue JSON")
    q_check.add_argument("--budget", type=int, default=None)

    # covars command
    covars = subparsers.add_parser("covars", help="Change of variables for d = (2)")
    c_sub = covars.add_subparsers(dest="action", required=True)
    c_total = add(c_sub, "total", "Sum over all twisted-jet strata")
    c_total.add_argument("--p", type=int, required=True)
    c_part = add(c_sub, "part", "Sum over the nonneg or the neg strata")
    c_part.add_argument("--p", type=int, required=True)
    c_part.add_argument("--which", choices=[CovPart.NONNEG.value, CovPart.NEG.value], required=True)
    c_sf = add(c_sub, "sf-check", "Check s_f = sht' + 2")
    c_sf.add_argument("--p", type=int, required=True)
    c_sf.add_argument("--jmax", type=int, required=True)
    c_measure = add(c_sub, "measure", "Measure of one stratum")
    c_measure.add_argument("--p", type=int, required=True)
    c_measure.add_argument("--stratum", type=str, required=True, help="nonneg:i=K or neg:d=A,e=B,i=K")
    c_weighted = add(c_sub, "weighted", "Sum with an affine stratum weight")
    c_weighted.add_argument("--p", type=int, required=True)
    c_weighted.add_argument("--weight", type=str, required=True, help="e.g. i=-1 or nonneg:c=-1;neg:i=-1,d=0")
    c_trunc = add(c_sub, "truncate", "Direct partial sum over i, d <= cutoff")
    c_trunc.add_argument("--p", type=int, required=True)
    c_trunc.add_argument("--cutoff", type=int, default=None)
    c_trunc.add_argument("--weight", type=str, default="")

    # selftest command
    selftest = add(subparsers, "selftest", "Run the acceptance suite")
    selftest.add_argument("--quick", action="store_true", help="Sub-second subset")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT, stream=sys.stderr)
    handlers: dict[str, Callable[[argparse.Namespace, dict[str, Any]], int]] = {
        "stringy": cmd_stringy,
        "moduli": cmd_moduli,
        "rep": cmd_rep,
        "quotient": cmd_quotient,
        "covars": cmd_covars,
        "selftest": cmd_selftest,
    }
    try:
        config = load_config(Path.cwd(), {"budget": getattr(args, "budget", None)})
        return handlers[args.command](args, config)
    except WildMcKayError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except ContractViolation as e:
        print(f"Error: contract violation: {e}", file=sys.stderr)
        return 1


# -- Output helpers ------------------------------------------------------------


def _emit_json(payload: dict[str, Any]) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_value(args: argparse.Namespace, value: MotivicValue, **context: Any) -> int:
    reduced = mv_reduce(value)
    if args.json:
        _emit_json({**context, "value": mv_to_dict(reduced), "text": mv_render(reduced)})
    else:
        print(mv_render(reduced))
    return 0


def _emit_series(args: argparse.Namespace, series: TruncatedSeries, **context: Any) -> int:
    if args.json:
        _emit_json({**context, "series": series_to_dict(series), "text": series_render(series)})
    else:
        print(series_render(series))
    return 0


def _emit_report(args: argparse.Namespace, report: CheckReport) -> int:
    if args.json:
        _emit_json({"report": report.to_dict()})
    else:
        print(report.render())
    return 0 if report.passed else 1


def _parse_value(text: str) -> MotivicValue:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidMotivicValue(f"invalid JSON: {err}") from None
    return mv_from_dict(payload)


def _dimseq(text: str, p: int) -> DimSeq:
    require_prime(p)
    return DimSeq.parse(text, p)


# -- Commands ------------------------------------------------------------------


def cmd_stringy(args: argparse.Namespace, config: dict[str, Any]) -> int:
    """Closed form, truncated partial sum, or per-stratum listing."""
    d = _dimseq(args.d, args.p)
    v = IntegrandVariant(Variant(args.variant), TorsorGroup(args.domain))
    level = args.level if args.level is not None else config["cylinder_level"]
    context = {"p": d.prime, "d": list(d.entries), "variant": v.tag.value, "domain": v.domain.value}

    if args.terms is not None:
        terms = stratum_terms(d, v, args.terms, level=level)
        if args.json:
            _emit_json(
                {
                    **context,
                    "terms": [
                        {
                            "j": t.stratum.j,
                            "measure": mv_to_dict(t.measure),
                            "weight": t.weight,
                            "contribution": mv_to_dict(t.contribution),
                        }
                        for t in terms
                    ],
                }
            )
        else:
            for t in terms:
                label = "0" if t.stratum.is_zero else str(t.stratum.j)
                print(f"j={label}: ({mv_render(t.measure)}) * L^{t.weight} = {mv_render(t.contribution)}")
        return 0

    if args.truncate is not None:
        try:
            series = stringy_integral_truncated(d, v, args.truncate, level=level)
        except Divergent:
            return _emit_value(args, INFINITY, **context, cutoff=args.truncate)
        return _emit_series(args, series, **context, cutoff=args.truncate)

    return _emit_value(args, stringy_integral(d, v, level=level), **context)


def cmd_moduli(args: argparse.Namespace, config: dict[str, Any]) -> int:
    require_prime(args.p)
    if args.action == "stratum":
        s = StratumH(prime=args.p, j=args.j)
        return _emit_value(args, stratum_class_H(s), p=args.p, j=args.j)
    if args.action == "measure-g":
        c = CylinderG(level=args.level, truncated_class=_parse_value(args.truncated_class), prime=args.p)
        return _emit_value(args, cylinder_measure_G(c), p=args.p, level=args.level)
    if args.action == "count":
        count = count_stratum_points(args.p, args.j, args.q, budget=config["budget"])
        if args.json:
            _emit_json({"p": args.p, "j": args.j, "q": args.q, "count": count})
        else:
            print(count)
        return 0
    if args.action == "partition":
        return _emit_report(args, partition_check(args.p, args.J))
    order = ORD_INFINITY if args.ord is None else args.ord
    text = torsor_presentation(TorsorClass(group=TorsorGroup(args.group), order_of_f=order, prime=args.p))
    if args.json:
        _emit_json({"p": args.p, "group": args.group, "ord": args.ord, "presentation": text})
    else:
        print(text)
    return 0


def cmd_rep(args: argparse.Namespace, config: dict[str, Any]) -> int:
    d = _dimseq(args.d, args.p)
    xi = jordan_nilpotent(d)
    if args.action == "jordan":
        if args.json:
            _emit_json({"d": list(d.entries), "matrix": xi.to_dict()})
        else:
            print(xi.render())
        return 0
    if args.action == "coaction":
        phi = coaction(xi)
        if args.json:
            _emit_json({"d": list(d.entries), "coaction": phi.to_dict()})
        else:
            print(phi.render())
        return 0
    if args.action == "check-axioms":
        return _emit_report(args, check_coaction_axioms(xi))
    if args.action == "invariants":
        maxdeg = args.maxdeg if args.maxdeg is not None else config["maxdeg"]
        basis = invariant_basis(xi, maxdeg)
        if args.json:
            _emit_json({"d": list(d.entries), "maxdeg": maxdeg, "basis": [f.to_dict() for f in basis]})
        else:
            for f in basis:
                print(f.render())
        return 0
    if args.action == "derive":
        f = parse_polynomial(args.poly, d.prime, d.total)
        image = derivation_apply(xi, f)
        if args.json:
            _emit_json({"d": list(d.entries), "input": f.to_dict(), "derivative": image.to_dict()})
        else:
            print(image.render())
        return 0
    eta = jordan_nilpotent(_dimseq(args.e, args.p))
    report = combine_reports(
        f"tensor(d=({d}), e=({args.e}), p={args.p})",
        [tensor_rule_check(xi, eta), direct_sum_rule_check(xi, eta)],
    )
    return _emit_report(args, report)


def cmd_quotient(args: argparse.Namespace, config: dict[str, Any]) -> int:
    if args.action == "verify":
        e = get_example(args.example, args.p)
        residual = verify_presentation(e)
        if args.json:
            _emit_json({"example": e.to_dict(), "residual": residual.to_dict(), "zero": residual.is_zero})
        else:
            print(residual.render(e.ambient_names))
        return 0 if residual.is_zero else 1

    e = get_example(args.example, characteristic_of(args.q))
    if args.action == "count":
        count = count_points(e, args.q, budget=config["budget"])
        if args.json:
            _emit_json({"example": e.identifier, "q": args.q, "count": count})
        else:
            print(count)
        return 0

    return _emit_report(args, specialization_check(_parse_value(args.value), e, args.q, budget=config["budget"]))


def cmd_covars(args: argparse.Namespace, config: dict[str, Any]) -> int:
    p = require_prime(args.p)
    if args.action == "total":
        return _emit_value(args, cov_integral(p, CovPart.ALL), p=p, part="all")
    if args.action == "part":
        return _emit_value(args, cov_integral(p, CovPart(args.which)), p=p, part=args.which)
    if args.action == "sf-check":
        return _emit_report(args, s_equals_shtprime_plus_two(p, args.jmax))
    if args.action == "measure":
        s = parse_stratum_spec(args.stratum, p)
        return _emit_value(args, cyl_measure(s), p=p, stratum=str(s))
    if args.action == "weighted":
        w = parse_weight(args.weight)
        try:
            value = cov_weighted_integral(p, w)
        except Divergent:
            value = INFINITY
        return _emit_value(args, value, p=p, weight=w.to_dict())
    cutoff = args.cutoff if args.cutoff is not None else config["truncate"]
    w = parse_weight(args.weight)
    try:
        series = cov_truncated(p, w, cutoff, cutoff)
    except Divergent:
        return _emit_value(args, INFINITY, p=p, cutoff=cutoff)
    return _emit_series(args, series, p=p, cutoff=cutoff)


def cmd_selftest(args: argparse.Namespace, config: dict[str, Any]) -> int:
    """Run every acceptance criterion and print a summary."""
    reports = run_acceptance(quick=args.quick)
    passed = sum(1 for r in reports if r.passed)
    failed = len(reports) - passed

    if args.json:
        _emit_json({"reports": [r.to_dict() for r in reports], "passed": passed, "failed": failed})
    else:
        for r in reports:
            print(r.render())
        print()
        print("=== SELFTEST SUMMARY ===")
        print(f"Passed: {passed}")
        print(f"Failed: {failed}")

    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
