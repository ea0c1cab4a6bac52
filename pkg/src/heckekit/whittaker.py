"""Demazure-Whittaker and Demazure-Lusztig operators, and the spherical idempotent.

Two one-dimensional schema instances (Whittaker and spherical functionals)
and the corresponding divided-difference actions on Laurent polynomials.
Each variant exists in two coordinate conventions related by z -> z^{-1}:
the plain one, where T_i z^rho = -z^rho, and the modified one, where
theta_lambda multiplies by z^{-lambda} and the spherical idempotent
evaluates to prod (1 - v z^{-alpha}) chi_lambda(z).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import LaurentPoly, RationalFunction, v
from .linalg import Matrix
from .reports import Report
from .roots import CartanDatum, WeylElement, WeylGroup, coroot_monomial, weight_monomial, weyl_character
from .schema import SchemaInstance, c_function

P = LaurentPoly
RF = RationalFunction


def whittaker_schema_instance(cartan: CartanDatum, group: WeylGroup | None = None) -> SchemaInstance:
    """k = 1 instance with A(w, i) = (1 - v (wz)^{-alpha_i})/(1 - (wz)^{alpha_i})."""
    group = group or WeylGroup(cartan)
    a = {}
    for w in group:
        for i in range(cartan.rank):
            x = coroot_monomial(group.inverse(w).act(cartan.simple_coroots[i]))
            value = RF(P.one() - v() * x.monomial_inverse(), (P.one() - x,), simplify=False)
            a[(w, i)] = ((value,),)
    return SchemaInstance(cartan, group, 1, a, name="whittaker")


def spherical_schema_instance(cartan: CartanDatum, group: WeylGroup | None = None) -> SchemaInstance:
    """k = 1 instance with A(w, i) = (1 - v (wz)^{alpha_i})/(1 - (wz)^{alpha_i})."""
    group = group or WeylGroup(cartan)
    a = {}
    for w in group:
        for i in range(cartan.rank):
            x = coroot_monomial(group.inverse(w).act(cartan.simple_coroots[i]))
            a[(w, i)] = ((c_function(x),),)
    return SchemaInstance(cartan, group, 1, a, name="spherical")


@dataclass
class DemazureVariant:
    """kind = "whittaker" or "lusztig"; modified selects the z -> z^{-1} conjugate."""

    kind: str
    cartan: CartanDatum
    group: WeylGroup
    modified: bool = True

    def __post_init__(self) -> None:
        if self.kind not in ("whittaker", "lusztig"):
            raise ValueError(f"unknown Demazure variant {self.kind!r}")


def demazure_variant(kind: str, cartan: CartanDatum, group: WeylGroup | None = None, modified: bool = True) -> DemazureVariant:
    return DemazureVariant(kind, cartan, group or WeylGroup(cartan), modified)


def demazure_coefficients(var: DemazureVariant, i: int) -> tuple[RF, RF]:
    """(c0, c1) with T_i f = c0 * f + c1 * f(s_i z)."""
    x = coroot_monomial(var.cartan.simple_coroots[i])
    one = P.one()
    if not var.modified:
        d = RF((one - v()) * x, (one - x,), simplify=False)
        if var.kind == "whittaker":
            c1 = RF(one - v() * x, (one - x.monomial_inverse(),), simplify=False)
        else:
            c1 = RF(one - v() * x.monomial_inverse(), (one - x.monomial_inverse(),), simplify=False)
        return d, c1
    c0 = RF(one - v(), (x - one,), simplify=False)
    if var.kind == "whittaker":
        c1 = RF(v() * x.monomial_inverse() - one, (x - one,), simplify=False)
    else:
        # Demazure-Lusztig: (f - f^s)/(x - 1) - v (f - x f^s)/(x - 1)
        c1 = RF(v() * x - one, (x - one,), simplify=False)
    return c0, c1


def apply_demazure(var: DemazureVariant, i: int, f, modified: bool | None = None):
    """Apply the operator exactly; Laurent polynomials stay Laurent polynomials."""
    if modified is not None and modified != var.modified:
        var = DemazureVariant(var.kind, var.cartan, var.group, modified)
    if isinstance(f, P):
        f = RF.from_poly(f)
    c0, c1 = demazure_coefficients(var, i)
    fs = var.group.act_fn(var.group.simple(i), f)
    return c0 * f + c1 * fs


def demazure_polynomial(var: DemazureVariant, i: int, f: LaurentPoly) -> LaurentPoly:
    """apply_demazure on a polynomial, with the divisibility assertion."""
    return apply_demazure(var, i, f).as_poly()


def modified_theta(lam: Sequence[int], f):
    """theta_lambda in the modified action: multiply by z^{-lambda}."""
    mono = weight_monomial(tuple(-int(x) for x in lam))
    if isinstance(f, P):
        return mono * f
    return RF.from_poly(mono) * f


def apply_demazure_word(var: DemazureVariant, w: WeylElement, f):
    """T_w f along the canonical reduced word of w."""
    if isinstance(f, P):
        f = RF.from_poly(f)
    for i in w.word[::-1]:
        f = apply_demazure(var, i, f)
    return f


_IDEMPOTENT_CACHE: dict[tuple[str, str, bool], "TwistedGroupElement"] = {}


def idempotent_apply(var: DemazureVariant, lam: Sequence[int]) -> LaurentPoly:
    """sum_w T_w z^lambda, an exact Laurent polynomial.

    The operator sum_w T_w is computed once per (type, variant) in the
    twisted group ring with cancelled coefficients, then applied to the
    monomial; this keeps the cost per weight flat.
    """
    if not var.cartan.is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    key = (var.cartan.cartan_type, var.kind, var.modified)
    element = _IDEMPOTENT_CACHE.get(key)
    if element is None:
        element = idempotent_element(var)
        element = TwistedGroupElement(var.group, {w: c.cancelled() for w, c in element.coeffs.items()})
        _IDEMPOTENT_CACHE[key] = element
    return element.act_on(weight_monomial(lam)).as_poly()


def cs_product(cartan: CartanDatum) -> LaurentPoly:
    """prod over positive coroots of (1 - v z^{-alpha})."""
    result = P.one()
    for beta in cartan.positive_coroots:
        result = result * (P.one() - v() * coroot_monomial(beta, -1))
    return result


def cs_rhs(cartan: CartanDatum, group: WeylGroup, lam: Sequence[int]) -> LaurentPoly:
    """The closed product side: prod (1 - v z^{-alpha}) * chi_lambda(z)."""
    return cs_product(cartan) * weyl_character(cartan, group, lam)


def check_cs(var: DemazureVariant, lam: Sequence[int], report: Report | None = None) -> Report:
    """Spherical idempotent applied to z^lambda equals the closed product, exactly."""
    report = report or Report(f"casselman-shalika {var.cartan.cartan_type}")

    def check():
        lhs = idempotent_apply(var, lam)
        rhs = cs_rhs(var.cartan, var.group, lam)
        if lhs == rhs:
            return True, None, None
        return False, lhs.render(), rhs.render()

    report.run(f"I(z^{tuple(lam)}) = prod (1 - v z^-a) chi", check)
    return report


def check_demazure_relations(var: DemazureVariant, weights: Sequence[Sequence[int]], report: Report | None = None) -> Report:
    """Quadratic and braid relations as operators, tested on a monomial basis."""
    report = report or Report(f"demazure relations {var.kind} {var.cartan.cartan_type}")
    rank = var.cartan.rank
    vv = RF.from_poly(v())

    def quad(i, lam):
        f = weight_monomial(lam)
        once = apply_demazure(var, i, f)
        twice = apply_demazure(var, i, once)
        rhs = (vv - 1) * once + vv * RF.from_poly(f)
        return (twice == rhs, twice.render() if not (twice == rhs) else None,
                rhs.render() if not (twice == rhs) else None)

    def braid(i, j, lam):
        m = var.cartan.braid_orders[i][j]
        f = RF.from_poly(weight_monomial(lam))
        left, right = f, f
        seq_l = [i if t % 2 == 0 else j for t in range(m)]
        for t in reversed(seq_l):
            left = apply_demazure(var, t, left)
        seq_r = [j if t % 2 == 0 else i for t in range(m)]
        for t in reversed(seq_r):
            right = apply_demazure(var, t, right)
        ok = left == right
        return (ok, None if ok else left.render(), None if ok else right.render())

    for lam in weights:
        for i in range(rank):
            report.run(f"quadratic i={i + 1} on z^{tuple(lam)}", lambda i=i, lam=lam: quad(i, lam))
        for i in range(rank):
            for j in range(i + 1, rank):
                report.run(f"braid ({i + 1},{j + 1}) on z^{tuple(lam)}", lambda i=i, j=j, lam=lam: braid(i, j, lam))
    return report


# -- the twisted group ring ----------------------------------------------------


@dataclass
class TwistedGroupElement:
    """Element sum_w c_w * w of the twisted group ring of W over the function field."""

    group: WeylGroup
    coeffs: dict[WeylElement, RationalFunction]

    def _clean(self) -> "TwistedGroupElement":
        return TwistedGroupElement(self.group, {w: c for w, c in self.coeffs.items() if not c.is_zero()})

    def add(self, other: "TwistedGroupElement") -> "TwistedGroupElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return TwistedGroupElement(self.group, out)._clean()

    def mul(self, other: "TwistedGroupElement") -> "TwistedGroupElement":
        """(f w)(g y) = (f * act_fn(w, g)) (w y)."""
        out: dict[WeylElement, RationalFunction] = {}
        for w, f in self.coeffs.items():
            for y, g in other.coeffs.items():
                coeff = f * self.group.act_fn(w, g)
                wy = self.group.mul(w, y)
                out[wy] = out[wy] + coeff if wy in out else coeff
        return TwistedGroupElement(self.group, out)._clean()

    def scale(self, c: RationalFunction) -> "TwistedGroupElement":
        return TwistedGroupElement(self.group, {w: c * f for w, f in self.coeffs.items()})._clean()

    def act_on(self, f) -> RationalFunction:
        if isinstance(f, P):
            f = RF.from_poly(f)
        total = RF.zero()
        for w, c in self.coeffs.items():
            total = total + c * self.group.act_fn(w, f)
        return total

    def coeff(self, w: WeylElement) -> RationalFunction:
        return self.coeffs.get(w, RF.zero())

    def equals(self, other: "TwistedGroupElement") -> bool:
        for w in set(self.coeffs) | set(other.coeffs):
            if not (self.coeff(w) == other.coeff(w)):
                return False
        return True


def group_element(group: WeylGroup, w: WeylElement) -> TwistedGroupElement:
    return TwistedGroupElement(group, {w: RF.one()})


def function_element(group: WeylGroup, f: RationalFunction) -> TwistedGroupElement:
    return TwistedGroupElement(group, {group.identity: f})


def to_element(var: DemazureVariant, i: int) -> TwistedGroupElement:
    """The Demazure operator as c0 * 1_W + c1 * s_i in the twisted group ring."""
    c0, c1 = demazure_coefficients(var, i)
    return TwistedGroupElement(var.group, {var.group.identity: c0, var.group.simple(i): c1})


def to_element_word(var: DemazureVariant, w: WeylElement) -> TwistedGroupElement:
    result = group_element(var.group, var.group.identity)
    for i in w.word:
        result = result.mul(to_element(var, i))
    return result


def idempotent_element(var: DemazureVariant) -> TwistedGroupElement:
    """sum_w T_w in the twisted group ring (coefficients cancelled as it grows)."""
    total = None
    cache: dict[WeylElement, TwistedGroupElement] = {}

    def element(w: WeylElement) -> TwistedGroupElement:
        if w.length == 0:
            return group_element(var.group, w)
        if w not in cache:
            i = w.word[0]
            product = to_element(var, i).mul(element(var.group.left_mul_simple(i, w)))
            cache[w] = TwistedGroupElement(
                var.group, {y: c.cancelled() for y, c in product.coeffs.items()}
            )
        return cache[w]

    for w in var.group:
        e = element(w)
        total = e if total is None else total.add(e)
    return total
