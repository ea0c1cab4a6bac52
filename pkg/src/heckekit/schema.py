"""The block representation schema for the affine Hecke algebra.

Instance data: a Cartan datum, a block dimension k, and for every pair
(w, i) a k x k rational-function matrix A(w, i) representing the map
M(wz) -> M(s_i wz).  From these the generators

    T_i:  diagonal block D_i(wz) * I_k,  off-diagonal block (w, s_i w) = A(s_i w, i)
    theta_lambda:  diagonal block (wz)^lambda * I_k

act on the |W|*k dimensional sum of blocks, and the quadratic, braid,
composition-scalar and Bernstein relations are verified exactly.

root_scale generalizes every exponent alpha_i to scale_i * alpha_i, which is
how the metaplectic instances run on the dual torus of the cover.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Sequence

from .algebra import (
    GaussRules,
    LaurentPoly,
    NotDivisible,
    RationalFunction,
    exact_divide,
    v,
)
from .linalg import (
    Matrix,
    first_difference,
    identity_matrix,
    is_scalar_matrix,
    mat_add,
    mat_mul,
    mat_scalar,
    parallel_map,
    zero_matrix,
)
from .reports import Report
from .roots import CartanDatum, WeylElement, WeylGroup, coroot_monomial, weight_monomial


@dataclass
class SchemaInstance:
    cartan: CartanDatum
    group: WeylGroup
    block_dim: int
    a_matrices: dict[tuple[WeylElement, int], Matrix]
    root_scale: tuple[int, ...] = ()
    rules: GaussRules | None = None
    name: str = "instance"

    def __post_init__(self) -> None:
        if not self.root_scale:
            self.root_scale = tuple(1 for _ in range(self.cartan.rank))

    def A(self, w: WeylElement, i: int) -> Matrix:
        try:
            return self.a_matrices[(w, i)]
        except KeyError:
            raise KeyError(f"missing A entry for (w={w.name()}, i={i + 1})") from None

    def x_monomial(self, w: WeylElement, i: int, power: int = 1) -> LaurentPoly:
        """(wz)^{power * scale_i * alpha_i} = z^{w^{-1}(power * scale_i * alpha_i)}."""
        alpha = self.cartan.simple_coroots[i]
        winv = self.group.inverse(w)
        vec = winv.act(alpha)
        return coroot_monomial(vec, power * self.root_scale[i], self.rules)

    def d_scalar(self, w: WeylElement, i: int) -> RationalFunction:
        """D_i(wz) = (1 - v)(wz)^{scale alpha_i} / (1 - (wz)^{scale alpha_i})."""
        x = self.x_monomial(w, i)
        one = LaurentPoly.one(self.rules)
        return RationalFunction((one - v(self.rules)) * x, (one - x,), simplify=False)

    def composition_scalar(self, w: WeylElement, i: int) -> RationalFunction:
        """The forced value of A(s_i w, i) A(w, i): C(X) C(X^{-1}) at X = (wz)^{scale alpha_i}."""
        x = self.x_monomial(w, i)
        return c_function(x, self.rules) * c_function(x.monomial_inverse(), self.rules)

    def perturbed(self, w: WeylElement, i: int, factor=2) -> "SchemaInstance":
        """Copy with one A entry scaled; used as a negative control."""
        a = dict(self.a_matrices)
        a[(w, i)] = mat_scalar(RationalFunction.const(factor, self.rules), a[(w, i)])
        return replace(self, a_matrices=a, name=f"{self.name}-perturbed")


def c_function(x: LaurentPoly, rules: GaussRules | None = None) -> RationalFunction:
    """C(x) = (1 - v x)/(1 - x)."""
    one = LaurentPoly.one(rules)
    return RationalFunction(one - v(rules) * x, (one - x,), simplify=False)


@dataclass
class BlockOperator:
    """Sparse |W| x |W| grid of k x k blocks, keyed (target, source)."""

    inst: SchemaInstance
    blocks: dict[tuple[WeylElement, WeylElement], Matrix] = field(default_factory=dict)

    def block(self, target: WeylElement, source: WeylElement) -> Matrix:
        got = self.blocks.get((target, source))
        if got is None:
            return zero_matrix(self.inst.block_dim, self.inst.rules)
        return got

    def compose(self, other: "BlockOperator") -> "BlockOperator":
        out: dict[tuple[WeylElement, WeylElement], Matrix] = {}
        by_target: dict[WeylElement, list[tuple[WeylElement, Matrix]]] = {}
        for (t2, s2), m2 in other.blocks.items():
            by_target.setdefault(t2, []).append((s2, m2))
        for (t1, s1), m1 in self.blocks.items():
            for s2, m2 in by_target.get(s1, ()):  # s1 is other's target
                product = mat_mul(m1, m2)
                key = (t1, s2)
                out[key] = mat_add_sparse(out.get(key), product)
        return BlockOperator(self.inst, _drop_zero_blocks(out))

    def add(self, other: "BlockOperator") -> "BlockOperator":
        out = dict(self.blocks)
        for key, m in other.blocks.items():
            out[key] = mat_add_sparse(out.get(key), m)
        return BlockOperator(self.inst, _drop_zero_blocks(out))

    def sub(self, other: "BlockOperator") -> "BlockOperator":
        return self.add(other.scale(RationalFunction.const(-1, self.inst.rules)))

    def scale(self, c: RationalFunction) -> "BlockOperator":
        return BlockOperator(self.inst, {k: mat_scalar(c, m) for k, m in self.blocks.items()})

    def equals(self, other: "BlockOperator") -> bool:
        return self.difference(other) is None

    def difference(self, other: "BlockOperator") -> str | None:
        """None if equal, else a rendering of the first differing entry."""
        keys = set(self.blocks) | set(other.blocks)
        for t, s in sorted(keys, key=lambda k: (k[0].word, k[1].word)):
            diff = first_difference(self.block(t, s), other.block(t, s))
            if diff is not None:
                r, c, x, y = diff
                return (
                    f"block ({t.name()}, {s.name()}) entry ({r}, {c}): "
                    f"{x.render()}  !=  {y.render()}"
                )
        return None


def mat_add_sparse(a: Matrix | None, b: Matrix) -> Matrix:
    return b if a is None else mat_add(a, b)


def _drop_zero_blocks(blocks: dict) -> dict:
    return {k: m for k, m in blocks.items() if any(not x.is_zero() for row in m for x in row)}


# -- operator constructors -------------------------------------------------------


def build_T(inst: SchemaInstance, i: int) -> BlockOperator:
    """The Hecke generator acting on the sum of blocks."""
    blocks: dict[tuple[WeylElement, WeylElement], Matrix] = {}
    ident = identity_matrix(inst.block_dim, inst.rules)
    for w in inst.group:
        blocks[(w, w)] = mat_scalar(inst.d_scalar(w, i), ident)
        sw = inst.group.left_mul_simple(i, w)
        blocks[(w, sw)] = inst.A(sw, i)
    return BlockOperator(inst, _drop_zero_blocks(blocks))


def build_theta(inst: SchemaInstance, lam: Sequence[int]) -> BlockOperator:
    """theta_lambda: diagonal block (wz)^lambda * I_k."""
    blocks = {}
    ident = identity_matrix(inst.block_dim, inst.rules)
    for w in inst.group:
        winv = inst.group.inverse(w)
        mono = weight_monomial(winv.act(lam), inst.rules)
        blocks[(w, w)] = mat_scalar(RationalFunction.from_poly(mono), ident)
    return BlockOperator(inst, blocks)


def identity_operator(inst: SchemaInstance) -> BlockOperator:
    ident = identity_matrix(inst.block_dim, inst.rules)
    return BlockOperator(inst, {(w, w): ident for w in inst.group})


def apply_Tw(inst: SchemaInstance, w: WeylElement, _cache: dict | None = None) -> BlockOperator:
    """T_w as the product along a reduced word (well-defined once braids hold)."""
    if _cache is not None and w in _cache:
        return _cache[w]
    if w.length == 0:
        result = identity_operator(inst)
    else:
        i = w.word[0]
        rest = inst.group.left_mul_simple(i, w)
        result = build_T(inst, i).compose(apply_Tw(inst, rest, _cache))
    if _cache is not None:
        _cache[w] = result
    return result


def spherical_sum(inst: SchemaInstance) -> BlockOperator:
    """The spherical element sum_w T_w in this representation."""
    cache: dict = {}
    total = None
    for w in inst.group:
        tw = apply_Tw(inst, w, cache)
        total = tw if total is None else total.add(tw)
    return total


def poincare_polynomial(group: WeylGroup, rules: GaussRules | None = None) -> LaurentPoly:
    total = LaurentPoly.zero(rules)
    for w in group:
        total = total + v(rules) ** w.length
    return total


# -- relation checks -------------------------------------------------------------


def check_composition(inst: SchemaInstance, report: Report | None = None) -> Report:
    """A(s_i w, i) A(w, i) equals the forced composition scalar, for every (w, i).

    The per-pair checks are independent and run through parallel_map
    (worker count from HECKEKIT_JOBS; sequential by default).
    """
    report = report or Report(f"{inst.name}: composition scalar")
    pairs = [(w, i) for i in range(inst.cartan.rank) for w in inst.group]

    def evaluate(pair):
        w, i = pair
        start = time.perf_counter()
        sw = inst.group.left_mul_simple(i, w)
        product = mat_mul(inst.A(sw, i), inst.A(w, i))
        expected = inst.composition_scalar(w, i)
        scalar = is_scalar_matrix(product)
        if scalar is None:
            result = (False, "A(s_i w) A(w) is not scalar", expected.render())
        elif scalar == expected:
            result = (True, None, None)
        else:
            result = (False, scalar.render(), expected.render())
        return result + (time.perf_counter() - start,)

    for (w, i), (passed, lhs, rhs, elapsed) in zip(pairs, parallel_map(evaluate, pairs)):
        report.add(f"composition scalar (w={w.name()}, i={i + 1})", passed, lhs, rhs, elapsed)
    return report


def check_quadratic(inst: SchemaInstance, i: int, report: Report | None = None) -> Report:
    """T_i^2 = (v - 1) T_i + v, exactly."""
    report = report or Report(f"{inst.name}: quadratic")

    def check():
        t = build_T(inst, i)
        vv = RationalFunction.from_poly(v(inst.rules))
        lhs = t.compose(t)
        rhs = t.scale(vv - 1).add(identity_operator(inst).scale(vv))
        diff = lhs.difference(rhs)
        return (diff is None, diff, "T^2 = (v-1)T + v") if diff else (True, None, None)

    report.run(f"quadratic T_{i + 1}", check)
    return report


def check_braid(inst: SchemaInstance, i: int, j: int, report: Report | None = None) -> Report:
    """Alternating products of length n(i, j) agree, exactly."""
    report = report or Report(f"{inst.name}: braid")
    m = inst.cartan.braid_orders[i][j]

    def product(first: int, second: int) -> BlockOperator:
        ops = [build_T(inst, first), build_T(inst, second)]
        result = None
        for t in range(m):
            op = ops[t % 2]
            result = op if result is None else result.compose(op)
        return result

    def check():
        diff = product(i, j).difference(product(j, i))
        return (diff is None, diff, f"braid of order {m}") if diff else (True, None, None)

    report.run(f"braid T_{i + 1} T_{j + 1} (order {m})", check)
    return report


def check_bernstein(inst: SchemaInstance, lam: Sequence[int], i: int, report: Report | None = None) -> Report:
    """theta_lam T_i - T_i theta_{s_i lam} = (v-1)(theta_lam - theta_{s_i lam})/(1 - theta_{-scale alpha_i}).

    The right side is computed by exact division in the theta algebra;
    divisibility is part of the check.
    """
    report = report or Report(f"{inst.name}: bernstein")
    lam = tuple(int(x) for x in lam)

    def check():
        s = inst.group.simple(i)
        slam = s.act(lam)
        t = build_T(inst, i)
        lhs = build_theta(inst, lam).compose(t).sub(t.compose(build_theta(inst, slam)))
        numerator = weight_monomial(lam, inst.rules) - weight_monomial(slam, inst.rules)
        alpha = inst.cartan.simple_coroots[i]
        denominator = LaurentPoly.one(inst.rules) - coroot_monomial(alpha, -inst.root_scale[i], inst.rules)
        try:
            quotient = exact_divide(numerator, denominator)
        except NotDivisible:
            return False, "rhs numerator not divisible by 1 - theta_{-scale alpha}", "Bernstein"
        blocks = {}
        ident = identity_matrix(inst.block_dim, inst.rules)
        vv = RationalFunction.from_poly(v(inst.rules))
        for w in inst.group:
            q_at_w = inst.group.at_point(w, quotient)
            blocks[(w, w)] = mat_scalar((vv - 1) * RationalFunction.from_poly(q_at_w), ident)
        rhs = BlockOperator(inst, _drop_zero_blocks(blocks))
        diff = lhs.difference(rhs)
        return (diff is None, diff, "Bernstein relation") if diff else (True, None, None)

    report.run(f"bernstein lambda={lam} i={i + 1}", check)
    return report


def check_spherical_idempotent(inst: SchemaInstance, report: Report | None = None) -> Report:
    """(sum_w T_w)^2 = (sum_w v^{l(w)}) * sum_w T_w."""
    report = report or Report(f"{inst.name}: spherical idempotent")

    def check():
        s = spherical_sum(inst)
        scale = RationalFunction.from_poly(poincare_polynomial(inst.group, inst.rules))
        diff = s.compose(s).difference(s.scale(scale))
        return (diff is None, diff, "I^2 = P(v) I") if diff else (True, None, None)

    report.run("spherical idempotent", check)
    return report


def verify_instance(
    inst: SchemaInstance,
    lambdas: Sequence[Sequence[int]] = (),
    composition: bool = True,
    spherical: bool = False,
) -> Report:
    """Quadratic + braid (+ optional composition, Bernstein, idempotent) checks."""
    report = Report(f"{inst.name} ({inst.cartan.cartan_type})")
    if composition:
        check_composition(inst, report)
    for i in range(inst.cartan.rank):
        check_quadratic(inst, i, report)
    for i in range(inst.cartan.rank):
        for j in range(i + 1, inst.cartan.rank):
            check_braid(inst, i, j, report)
    for lam in lambdas:
        for i in range(inst.cartan.rank):
            check_bernstein(inst, lam, i, report)
    if spherical:
        check_spherical_idempotent(inst, report)
    return report


# -- the generic (free-symbol) instance -------------------------------------------


def intertwiner_symbol(i: int, w: WeylElement) -> str:
    """a{i}_{word(w)}: the free symbol for the map out of a descent block."""
    return f"a{i + 1}_{w.name()}"


def generic_instance(cartan: CartanDatum, group: WeylGroup | None = None) -> SchemaInstance:
    """Free-symbol instance: k = 1, one invertible symbol per descent pair.

    Ascent entries are the composition-scalar-forced quotients, and the single
    braid constraint along the two maximal chains eliminates the top-cell
    symbol (for A2: a2_121 = a1_121*a2_21*a1_1/(a1_12*a2_2)).
    """
    if cartan.rank > 2:
        raise ValueError("generic instance supports rank <= 2")
    group = group or WeylGroup(cartan)
    symbols: dict[tuple[WeylElement, int], RationalFunction] = {}
    for w in group:
        for i in range(cartan.rank):
            if group.is_left_descent(i, w):
                symbols[(w, i)] = RationalFunction.from_poly(
                    LaurentPoly.symbol(intertwiner_symbol(i, w))
                )
    if cartan.rank == 2:
        _eliminate_top_symbol(cartan, group, symbols)

    def ascent_value(w: WeylElement, i: int) -> RationalFunction:
        inst_x = coroot_monomial(group.inverse(w).act(cartan.simple_coroots[i]))
        scalar = c_function(inst_x) * c_function(inst_x.monomial_inverse())
        return scalar / symbols[(group.left_mul_simple(i, w), i)]

    a_matrices: dict[tuple[WeylElement, int], Matrix] = {}
    for w in group:
        for i in range(cartan.rank):
            if (w, i) in symbols:
                value = symbols[(w, i)]
            else:
                value = ascent_value(w, i)
            a_matrices[(w, i)] = ((value,),)
    return SchemaInstance(cartan, group, 1, a_matrices, name="generic")


def _maximal_chain(group: WeylGroup, start: int, length: int) -> list[tuple[int, WeylElement]]:
    """Letters and elements u_t = s_{c_t} ... s_{c_1} along one alternating chain."""
    out = []
    u = group.identity
    letter = start
    for _ in range(length):
        u = group.left_mul_simple(letter, u)
        out.append((letter, u))
        letter = 1 - letter
    return out


def _eliminate_top_symbol(cartan: CartanDatum, group: WeylGroup, symbols: dict) -> None:
    """Solve the rank-2 braid constraint for the i=2 top-cell symbol.

    Both maximal chains enumerate all positive coroots, so the forced
    C-factor pairs cancel and the constraint is a bare product identity in
    the free symbols.
    """
    m = cartan.braid_orders[0][1]
    w0 = group.longest()
    left = _maximal_chain(group, 0, m)
    right = _maximal_chain(group, 1, m)
    target = (w0, 1)
    if (left[-1][0], left[-1][1]) == (1, w0):
        same, other = left, right
    else:
        same, other = right, left
    value = RationalFunction.one()
    for letter, u in other:
        value = value * symbols[(u, letter)]
    for letter, u in same:
        if (u, letter) == target:
            continue
        value = value / symbols[(u, letter)]
    symbols[target] = value
