"""Command line front end.

Subcommands: verify, cs, demazure, rmatrix, metaplectic, wreath.  Every
command prints a deterministic text report (or JSON with --json) and exits
nonzero if any check failed.  HECKEKIT_JOBS controls internal parallelism of
the independent per-pair checks.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import GaussRules, LaurentPoly, RationalFunction, v
from .metaplectic import (
    build_datum,
    met_demazure_word,
    metaplectic_schema_instance,
    whittaker_value,
)
from .parsing import parse_poly
from .reports import Report
from .rmatrix import (
    check_hecke,
    check_parametrized_ybe,
    check_triangularity,
    check_ybe,
    doubler_scalar,
    free_gamma_spec,
    gauss_gamma_spec,
    jimbo_t_matrix,
    limit_instance,
    check_finite_hecke,
    check_star_word_identity,
    check_wreath_intertwining,
    check_wreath_star,
    r_affine,
    r_gl,
    r_tilde,
    tensor_schema_instance,
    untwisted_spec,
    wreath_operator,
)
from .roots import build_cartan, weight_monomial, weyl_group
from .schema import generic_instance, verify_instance
from .whittaker import (
    apply_demazure,
    check_cs,
    check_demazure_relations,
    cs_product,
    cs_rhs,
    demazure_variant,
    idempotent_apply,
    spherical_schema_instance,
    whittaker_schema_instance,
)

P = LaurentPoly
RF = RationalFunction


def _parse_weight(text: str) -> tuple[int, ...]:
    cleaned = text.strip().strip("()")
    if not cleaned:
        raise argparse.ArgumentTypeError("empty weight")
    try:
        return tuple(int(x) for x in cleaned.replace(" ", "").split(","))
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}") from err


def _emit(report: Report, as_json: bool) -> int:
    print(report.to_json() if as_json else report.render_text())
    return 0 if report.passed else 1


def _default_lambdas(cartan) -> list[tuple[int, ...]]:
    if cartan.cartan_type == "G2":
        return [(1, 1, 1), (0, 1, -1), (1, -2, 1)]
    return [tuple(1 if j == i else 0 for j in range(cartan.dim)) for i in range(cartan.dim)]


def run_verify(args) -> int:
    cartan = build_cartan(args.type)
    if args.instance == "generic":
        inst = generic_instance(cartan)
    elif args.instance == "whittaker":
        inst = whittaker_schema_instance(cartan)
    elif args.instance == "spherical":
        inst = spherical_schema_instance(cartan)
    elif args.instance == "metaplectic":
        datum = build_datum(cartan, args.n, args.B)
        inst = metaplectic_schema_instance(datum)
    elif args.instance == "rmatrix":
        rank = int(args.type[1])
        inst = tensor_schema_instance(args.n, rank + 1, "gauss" if args.gauss else "none", args.power or 1)
    else:
        raise SystemExit(f"unsupported instance {args.instance!r}")
    lambdas = list(args.bernstein or [])
    if args.instance == "metaplectic" and not lambdas:
        lambdas = list(datum.lattice_basis)
    report = verify_instance(inst, lambdas=lambdas, spherical=args.spherical)
    quad_braid = [c.passed for c in report.checks if c.name.startswith(("quadratic", "braid"))]
    print(quad_braid)  # the bracket of quadratic/braid flags
    return _emit(report, args.json)


def run_cs(args) -> int:
    cartan = build_cartan(args.type)
    group = weyl_group(cartan)
    if not cartan.is_dominant(args.weight):
        raise SystemExit(f"weight {args.weight} is not dominant for {args.type}")
    var = demazure_variant("whittaker", cartan, group)
    lhs = idempotent_apply(var, args.weight)
    rhs = cs_rhs(cartan, group, args.weight)
    print(f"I(z^{args.weight}) = {lhs.render()}")
    print(f"product form     = ({cs_product(cartan).render()}) * chi_lambda")
    report = Report(f"casselman-shalika {args.type} {args.weight}")
    report.add("idempotent equals product formula", lhs == rhs, lhs.render(), rhs.render())
    return _emit(report, args.json)


def run_demazure(args) -> int:
    cartan = build_cartan(args.type)
    group = weyl_group(cartan)
    var = demazure_variant(args.kind, cartan, group, modified=not args.plain)
    weights = [tuple(w) for w in (args.weights or _default_lambdas(cartan))]
    report = check_demazure_relations(var, weights)
    if args.kind == "whittaker":
        plain = demazure_variant(args.kind, cartan, group, modified=False)
        zrho = weight_monomial(cartan.rho)
        for i in range(cartan.rank):
            out = apply_demazure(plain, i, zrho)
            report.add(f"antispherical T_{i + 1} z^rho = -z^rho", out == RF.from_poly(-zrho))
    else:
        lusztig = demazure_variant("lusztig", cartan, group)
        for i in range(cartan.rank):
            report.add(
                f"T_{i + 1} 1 = v",
                apply_demazure(lusztig, i, P.one()) == RF.from_poly(v()),
            )
    return _emit(report, args.json)


def run_rmatrix(args) -> int:
    n = args.n
    if n > 4:
        raise SystemExit("rmatrix checks support n <= 4")
    rules = GaussRules.standard(n)
    report = Report(f"rmatrix n={n} {args.check}")
    if args.check == "ybe":
        spec = gauss_gamma_spec(n, rules) if args.gauss else untwisted_spec(n)
        check_ybe(r_gl(spec), report)
    elif args.check == "pybe":
        if args.gauss:
            check_parametrized_ybe(lambda x: r_tilde(n, x.with_rules(rules), rules), report)
        else:
            check_parametrized_ybe(lambda x: r_affine(untwisted_spec(n), x), report)
            check_parametrized_ybe(lambda x: r_affine(free_gamma_spec(n), x), report, name="parametrized YBE (twisted)")
    elif args.check == "hecke":
        check_hecke(untwisted_spec(n), report)
        check_hecke(free_gamma_spec(n), report)
    elif args.check == "triangularity":
        if args.gauss:
            check_triangularity(lambda x: r_tilde(n, x.with_rules(rules), rules), RF.one(rules), report, name="tau R(x) tau R(1/x) = I")
        else:
            check_triangularity(lambda x: r_affine(untwisted_spec(n), x), doubler_scalar(), report)
    elif args.check == "schema":
        if args.r > 3:
            raise SystemExit("schema check supports r <= 3")
        inst = tensor_schema_instance(n, args.r, "gauss" if args.gauss else "none", args.power or 1)
        report = verify_instance(inst, lambdas=_default_lambdas(inst.cartan))
    else:
        raise SystemExit(f"unknown rmatrix check {args.check!r}")
    return _emit(report, args.json)


def run_metaplectic(args) -> int:
    datum = build_datum(f"A{args.r - 1}", args.n, args.B)
    lam = args.weight or tuple(0 for _ in range(args.r))
    if not datum.cartan.is_dominant(lam):
        raise SystemExit(f"weight {lam} is not dominant")
    values = whittaker_value(datum, lam)
    print(f"spherical Whittaker values for GL_{args.r}, n={args.n}, lambda={lam}:")
    width = max(len(str(rep)) for rep in datum.coset_reps)
    total = P.zero(datum.rules)
    for rep, value in zip(datum.coset_reps, values):
        print(f"  {str(rep):<{width}}  {value.render()}")
        total = total + value
    print(f"  aggregate: {total.render()}")
    expected = RF.zero(datum.rules)
    mono = weight_monomial(tuple(-x for x in lam), datum.rules)
    for w in datum.group:
        expected = expected + met_demazure_word(datum, w.word, mono)
    if args.inject_mismatch:
        expected = expected + RF.one(datum.rules)
    report = Report(f"metaplectic GL_{args.r} n={args.n} lambda={lam}")
    agg_rf = RF.from_poly(total)
    report.add(
        "aggregate equals Demazure sum",
        agg_rf == expected,
        total.render(),
        expected.render(),
    )
    return _emit(report, args.json)


def run_wreath(args) -> int:
    space, ops = limit_instance(args.n, args.r)
    report = check_finite_hecke(space, ops, name=f"wreath n={args.n} r={args.r}")
    ts = [jimbo_t_matrix(args.n, args.r, i) for i in range(args.r - 1)]
    for i, t in enumerate(ts):
        wo = wreath_operator(space, t, i)
        report.add(f"limit equals wreath (i={i + 1})", ops[i].equals(wo))
        check_wreath_intertwining(space, ops[i], t, report)
        check_wreath_star(space, ops[i], t, report)
    check_star_word_identity(space, ts, report)
    return _emit(report, args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckekit", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="schema relation checks for a chosen instance")
    p.add_argument("--type", default="A2", help="Cartan type (A1..A4, B2, C2, G2)")
    p.add_argument("--instance", default="generic",
                   choices=["generic", "whittaker", "spherical", "metaplectic", "rmatrix"])
    p.add_argument("--bernstein", type=_parse_weight, action="append",
                   help="weight for the Bernstein relation, e.g. '(1,0,0)'; repeatable")
    p.add_argument("--n", type=int, default=2, help="cover degree / R-matrix dimension")
    p.add_argument("--B", default="dot", help="bilinear form for metaplectic instances")
    p.add_argument("--gauss", action="store_true", help="Gauss-twisted R-matrix instance")
    p.add_argument("--power", type=int, help="exponent power for the rmatrix instance")
    p.add_argument("--spherical", action="store_true", help="also check the spherical idempotent")
    p.set_defaults(fn=run_verify)

    p = sub.add_parser("cs", help="spherical idempotent vs the product formula")
    p.add_argument("--type", default="A2")
    p.add_argument("--weight", type=_parse_weight, required=True)
    p.set_defaults(fn=run_cs)

    p = sub.add_parser("demazure", help="Demazure operator relation suite")
    p.add_argument("--type", default="A2")
    p.add_argument("--kind", default="whittaker", choices=["whittaker", "lusztig"])
    p.add_argument("--plain", action="store_true", help="use the unconjugated action")
    p.add_argument("--weights", type=_parse_weight, action="append")
    p.set_defaults(fn=run_demazure)

    p = sub.add_parser("rmatrix", help="Yang-Baxter / Hecke / triangularity checks")
    p.add_argument("check", choices=["ybe", "pybe", "hecke", "triangularity", "schema"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--gauss", action="store_true")
    p.add_argument("--power", type=int)
    p.set_defaults(fn=run_rmatrix)

    p = sub.add_parser("metaplectic", help="spherical Whittaker value table for a GL cover")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--B", default="dot")
    p.add_argument("--weight", type=_parse_weight)
    p.add_argument("--inject-mismatch", action="store_true",
                   help="deliberately break the cross-check (negative control)")
    p.set_defaults(fn=run_metaplectic)

    p = sub.add_parser("wreath", help="limit instance and wreath construction checks")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(fn=run_wreath)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
