"""Acceptance suite: the ten exit criteria, one printed line each.

All checks are exact (zero tolerance); the stated runtime budgets are
asserted as well.  Run with `pytest -s tests/test_acceptance.py -v` to see
the per-criterion lines.
"""

import random
import time
from itertools import product

from heckekit.algebra import GaussRules, LaurentPoly, RationalFunction, v
from heckekit.metaplectic import (
    rmatrix_dictionary_check,
    build_datum,
    check_met_demazure_match,
    check_met_demazure_relations,
    metaplectic_schema_instance,
    scattering_block,
)
from heckekit.linalg import is_scalar_matrix, mat_mul
from heckekit.rmatrix import (
    check_finite_hecke,
    check_hecke,
    check_parametrized_ybe,
    check_star_word_identity,
    check_triangularity,
    check_wreath_intertwining,
    check_wreath_star,
    check_ybe,
    doubler_scalar,
    free_gamma_spec,
    jimbo_t_matrix,
    limit_instance,
    r_affine,
    r_gl,
    r_tilde,
    tensor_schema_instance,
    untwisted_spec,
    wreath_operator,
)
from heckekit.roots import build_cartan, weight_monomial, weyl_group
from heckekit.schema import (
    check_braid,
    check_composition,
    check_quadratic,
    generic_instance,
    verify_instance,
)
from heckekit.whittaker import (
    apply_demazure,
    check_demazure_relations,
    cs_rhs,
    demazure_polynomial,
    demazure_variant,
    idempotent_apply,
    spherical_schema_instance,
    whittaker_schema_instance,
)

P = LaurentPoly
RF = RationalFunction


def _report(number: int, name: str, passed: bool, elapsed: float, budget: float) -> None:
    status = "PASS" if passed and elapsed < budget else "FAIL"
    print(f"ACCEPTANCE {number:2d} [{name}]: {status} ({elapsed:.1f}s / budget {budget:.0f}s)")
    assert passed, f"criterion {number} ({name}) failed"
    assert elapsed < budget, f"criterion {number} exceeded its {budget:.0f}s budget ({elapsed:.1f}s)"


def dominant_box(cartan, bound=2):
    out = []
    for coords in product(range(bound + 1), repeat=cartan.dim):
        if cartan.in_lattice(coords) and cartan.is_dominant(coords):
            out.append(coords)
    return out


def test_criterion_1_appendix_replication():
    start = time.time()
    ok = True
    for name in ("A2", "C2", "G2"):
        inst = generic_instance(build_cartan(name))
        rep = check_quadratic(inst, 0)
        check_quadratic(inst, 1, rep)
        check_braid(inst, 0, 1, rep)
        flags = [c.passed for c in rep.checks]
        ok = ok and flags == [True, True, True]
    _report(1, "generic A2/C2/G2 quadratic+braid", ok, time.time() - start, 60)


def test_criterion_2_bernstein():
    start = time.time()
    ok = True
    whit = whittaker_schema_instance(build_cartan("A2"))
    sph = spherical_schema_instance(build_cartan("A2"))
    basis3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for inst, basis in [
        (whit, basis3),
        (sph, basis3),
        (tensor_schema_instance(2, 2, "none", 1), [(1, 0), (0, 1)]),
    ]:
        rep = verify_instance(inst, lambdas=basis, composition=False)
        ok = ok and rep.passed
    datum = build_datum("A1", 2)
    rep = verify_instance(metaplectic_schema_instance(datum), lambdas=datum.lattice_basis, composition=False)
    ok = ok and rep.passed
    _report(2, "Bernstein relation across instances", ok, time.time() - start, 30)


def test_criterion_3_casselman_shalika():
    start = time.time()
    ok = True
    for name in ("A1", "A2", "C2"):
        cartan = build_cartan(name)
        group = weyl_group(cartan)
        var = demazure_variant("whittaker", cartan, group)
        for lam in dominant_box(cartan, 2):
            ok = ok and idempotent_apply(var, lam) == cs_rhs(cartan, group, lam)
    g2 = build_cartan("G2")
    group = weyl_group(g2)
    var = demazure_variant("whittaker", g2, group)
    for lam in [(0, 0, 0)] + list(g2.fundamental_weights()):
        ok = ok and idempotent_apply(var, lam) == cs_rhs(g2, group, lam)
    _report(3, "Casselman-Shalika product formula", ok, time.time() - start, 120)


def test_criterion_4_demazure_suites():
    start = time.time()
    ok = True
    # antispherical, every supported type and index (plain form and its modified twin)
    for name in ("A1", "A2", "A3", "A4", "B2", "C2", "G2"):
        cartan = build_cartan(name)
        group = weyl_group(cartan)
        plain = demazure_variant("whittaker", cartan, group, modified=False)
        modified = demazure_variant("whittaker", cartan, group)
        zrho = weight_monomial(cartan.rho)
        zmrho = weight_monomial(tuple(-r for r in cartan.rho))
        for i in range(cartan.rank):
            ok = ok and apply_demazure(plain, i, zrho) == RF.from_poly(-zrho)
            ok = ok and apply_demazure(modified, i, zmrho) == RF.from_poly(-zmrho)
    # polynomial stability on 50 random monomials
    rng = random.Random(2024)
    a2 = build_cartan("A2")
    group = weyl_group(a2)
    variants = [demazure_variant(kind, a2, group, modified=m) for kind in ("whittaker", "lusztig") for m in (True, False)]
    for _ in range(50):
        lam = tuple(rng.randint(-3, 3) for _ in range(3))
        var = variants[rng.randrange(len(variants))]
        out = demazure_polynomial(var, rng.randrange(2), weight_monomial(lam))
        ok = ok and isinstance(out, P)
    # quadratic + braid on monomial bases, all rank-2 types, both variants
    for name in ("A2", "B2", "C2", "G2"):
        cartan = build_cartan(name)
        group = weyl_group(cartan)
        rng = random.Random(7)
        weights = []
        while len(weights) < 6:
            lam = tuple(rng.randint(-3, 3) for _ in range(cartan.dim))
            if cartan.in_lattice(lam):
                weights.append(lam)
        for kind in ("whittaker", "lusztig"):
            rep = check_demazure_relations(demazure_variant(kind, cartan, group), weights)
            ok = ok and rep.passed
    _report(4, "Demazure operator suites", ok, time.time() - start, 60)


def test_criterion_5_rmatrix_suite():
    start = time.time()
    ok = True
    for n in (2, 3):
        ok = ok and check_ybe(r_gl(untwisted_spec(n))).passed
        ok = ok and check_parametrized_ybe(lambda x, n=n: r_affine(untwisted_spec(n), x)).passed
        ok = ok and check_parametrized_ybe(lambda x, n=n: r_affine(free_gamma_spec(n), x)).passed
        rules = GaussRules.standard(n)
        ok = ok and check_parametrized_ybe(lambda x, n=n, rules=rules: r_tilde(n, x.with_rules(rules), rules)).passed
        ok = ok and check_hecke(untwisted_spec(n)).passed
        ok = ok and check_triangularity(
            lambda x, n=n, rules=rules: r_tilde(n, x.with_rules(rules), rules), RF.one(rules)
        ).passed
        spec = free_gamma_spec(n)
        ok = ok and r_affine(spec, P.zero()).equals(r_gl(spec))
    ok = ok and check_triangularity(lambda x: r_affine(untwisted_spec(2), x), doubler_scalar()).passed
    ok = ok and check_triangularity(lambda x: r_affine(free_gamma_spec(2), x), doubler_scalar()).passed
    _report(5, "R-matrix YBE/Hecke/triangularity suite", ok, time.time() - start, 120)


def test_criterion_6_wreath():
    start = time.time()
    ok = True
    for (n, r) in [(2, 2), (2, 3)]:
        space, ops = limit_instance(n, r)
        ok = ok and check_finite_hecke(space, ops).passed
        ts = [jimbo_t_matrix(n, r, i) for i in range(r - 1)]
        ok = ok and check_star_word_identity(space, ts).passed
        for i, t in enumerate(ts):
            ok = ok and ops[i].equals(wreath_operator(space, t, i))
            ok = ok and check_wreath_intertwining(space, ops[i], t).passed
            ok = ok and check_wreath_star(space, ops[i], t).passed
    _report(6, "wreath construction and z->0 limit", ok, time.time() - start, 60)


def test_criterion_7_metaplectic_schema():
    start = time.time()
    ok = True
    for ct in ("A1", "A2"):
        for n in (1, 2, 3):
            datum = build_datum(ct, n)
            inst = metaplectic_schema_instance(datum)
            ok = ok and verify_instance(inst, lambdas=datum.lattice_basis).passed
            # diagonal scalars depend on z only through z^{n_alpha alpha}
            for i in range(datum.cartan.rank):
                mono = inst.x_monomial(datum.group.identity, i)
                (exps, _), = mono.terms.items()
                ok = ok and all(e % datum.n_alpha(i) == 0 for _, e in exps)
        # n = 1 collapses to the Whittaker instance
        datum1 = build_datum(ct, 1)
        inst1 = metaplectic_schema_instance(datum1)
        whit = whittaker_schema_instance(datum1.cartan, datum1.group)
        for (w, i), mat in whit.a_matrices.items():
            expected = RF(
                mat[0][0].num.with_rules(datum1.rules),
                tuple(f.with_rules(datum1.rules) for f in mat[0][0].den),
            )
            ok = ok and inst1.A(w, i)[0][0] == expected
    _report(7, "metaplectic schema GL_2/GL_3, n = 1..3", ok, time.time() - start, 180)


def test_criterion_8_met_demazure():
    start = time.time()
    ok = True
    box2 = [(a, b) for a in range(-2, 3) for b in range(-2, 3)]
    box3 = [(a, b, c) for a in range(-2, 3) for b in range(-2, 3) for c in range(-2, 3)]
    for ct, box in [("A1", box2), ("A2", box3)]:
        for n in (2, 3):
            datum = build_datum(ct, n)
            ok = ok and check_met_demazure_match(datum, box).passed
            relation_box = box if ct == "A1" else box[:: max(1, len(box) // 40)]
            ok = ok and check_met_demazure_relations(datum, relation_box).passed
    _report(8, "block action equals metaplectic Demazure", ok, time.time() - start, 180)


def test_criterion_9_rmatrix_dictionary():
    start = time.time()
    ok = True
    for (r, n) in [(2, 2), (2, 3), (3, 2)]:
        ok = ok and rmatrix_dictionary_check(r, n).passed
    _report(9, "R-matrix dictionary for GL covers", ok, time.time() - start, 120)


def test_criterion_10_negative_controls():
    start = time.time()
    ok = True
    # (a) one A entry scaled by 2: quadratic fails with a localized entry
    inst = generic_instance(build_cartan("A2"))
    bad = inst.perturbed(inst.group.simple(0), 0, 2)
    rep = check_quadratic(bad, 0)
    failure = rep.first_failure()
    ok = ok and (not rep.passed) and failure is not None and "entry" in (failure.lhs or "")
    # (b) one gamma value scaled by 2: triangularity fails
    spec = free_gamma_spec(2).perturbed(0, 1, 2)
    rep = check_triangularity(lambda x: r_affine(spec, x), doubler_scalar())
    ok = ok and not rep.passed
    # (c) one tau coefficient scaled by 2: the composition scalar fails
    datum = build_datum("A1", 2)
    for which in ("tau1", "tau2"):
        block = scattering_block(datum, 0, perturb=which)
        s = datum.group.simple(0)
        at_s = tuple(tuple(datum.group.at_point(s, x) for x in row) for row in block)
        scalar = is_scalar_matrix(mat_mul(at_s, block))
        expected = metaplectic_schema_instance(datum).composition_scalar(datum.group.identity, 0)
        ok = ok and (scalar is None or not (scalar == expected))
    _report(10, "negative controls (perturbations fail loudly)", ok, time.time() - start, 30)
