"""Quantum-group R-matrices and the Hecke modules they generate.

Covers: the gl(n) R-matrix and its affine family R(x) = R - x R_21^{-1},
the Drinfeld-twisted families R^gamma and R^gamma(x), the Gauss-sum
normalized family used for metaplectic scattering, Yang-Baxter /
Hecke-relation / triangularity verifiers, the schema instance on tensor
products of evaluation modules, the z -> 0 limit, and the wreath
construction on W * U.

Twist convention: the coefficient of e_aa (x) e_bb is gamma_ab^{-1} for every
a != b, in both the constant and the parametrized family (this is what
conjugation by a diagonal F-matrix exp(sum (H_a (x) H_b - H_b (x) H_a) f_ab)
produces).  The quadratic and triangularity checks then hold exactly when
gamma_ab * gamma_ba = 1, which the twist structure supplies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Sequence

from .algebra import GaussRules, LaurentPoly, RationalFunction, gauss_symbol, v
from .linalg import (
    Matrix,
    apply_matrix,
    first_difference,
    identity_matrix,
    is_scalar_matrix,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_scalar,
    mat_sub,
    nullspace,
    zero_matrix,
)
from .reports import Report
from .roots import CartanDatum, WeylElement, WeylGroup, build_cartan, coroot_monomial
from .schema import BlockOperator, SchemaInstance, _drop_zero_blocks

P = LaurentPoly
RF = RationalFunction


def words(n: int, arity: int):
    return list(iproduct(range(n), repeat=arity))


def word_index(word: Sequence[int], n: int) -> int:
    idx = 0
    for a in word:
        idx = idx * n + a
    return idx


@dataclass
class TensorOperator:
    """Endomorphism of the arity-fold tensor power of C^n, with exact entries."""

    n: int
    arity: int
    mat: Matrix

    def compose(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(self.n, self.arity, mat_mul(self.mat, other.mat))

    def add(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(self.n, self.arity, mat_add(self.mat, other.mat))

    def sub(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(self.n, self.arity, mat_sub(self.mat, other.mat))

    def scale(self, c) -> "TensorOperator":
        c = c if isinstance(c, RF) else RF.from_poly(c)
        return TensorOperator(self.n, self.arity, mat_scalar(c, self.mat))

    def inverse(self) -> "TensorOperator":
        return TensorOperator(self.n, self.arity, mat_inverse(self.mat))

    def equals(self, other: "TensorOperator") -> bool:
        return first_difference(self.mat, other.mat) is None

    def embed(self, slots: tuple[int, int], arity: int) -> "TensorOperator":
        """Place this arity-2 operator on the given slots, identity elsewhere."""
        if self.arity != 2:
            raise ValueError("embed expects an arity-2 operator")
        n = self.n
        rules = self.mat[0][0].num.rules
        all_words = words(n, arity)
        zero = RF.zero(rules)
        rows = []
        for target in all_words:
            row = [zero] * len(all_words)
            for source in all_words:
                if any(target[k] != source[k] for k in range(arity) if k not in slots):
                    continue
                entry = self.mat[word_index((target[slots[0]], target[slots[1]]), n)][
                    word_index((source[slots[0]], source[slots[1]]), n)
                ]
                row[word_index(source, n)] = entry
            rows.append(tuple(row))
        return TensorOperator(n, arity, tuple(rows))


def tau_operator(n: int, rules: GaussRules | None = None) -> TensorOperator:
    """The flip x (x) y -> y (x) x as a basis permutation on tensor words."""
    zero, one = RF.zero(rules), RF.one(rules)
    size = n * n
    rows = []
    for (a, b) in words(n, 2):
        row = [zero] * size
        row[word_index((b, a), n)] = one
        rows.append(tuple(row))
    return TensorOperator(n, 2, tuple(rows))


@dataclass
class RMatrixSpec:
    """Dimension n and the twist table gamma (gamma[a][b], diagonal unused)."""

    n: int
    gamma: tuple[tuple[RF, ...], ...] | None = None
    rules: GaussRules | None = None

    def gamma_entry(self, a: int, b: int) -> RF:
        if self.gamma is None:
            return RF.one(self.rules)
        return self.gamma[a][b]

    def perturbed(self, a: int, b: int, factor=2) -> "RMatrixSpec":
        table = [list(row) for row in self.gamma] if self.gamma else [
            [RF.one(self.rules)] * self.n for _ in range(self.n)
        ]
        table[a][b] = RF.const(factor, self.rules) * table[a][b]
        return RMatrixSpec(self.n, tuple(tuple(row) for row in table), self.rules)


def untwisted_spec(n: int) -> RMatrixSpec:
    return RMatrixSpec(n, None, None)


def free_gamma_spec(n: int, paired: bool = True) -> RMatrixSpec:
    """Symbolic twist table; with paired=True, gamma_ba = gamma_ab^{-1}."""
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            if a == b:
                row.append(RF.one())
            elif a < b:
                row.append(RF.from_poly(P.symbol(f"gam{a + 1}{b + 1}")))
            elif paired:
                row.append(RF.from_poly(P.monomial({f"gam{b + 1}{a + 1}": -1})))
            else:
                row.append(RF.from_poly(P.symbol(f"gam{a + 1}{b + 1}")))
        table.append(tuple(row))
    return RMatrixSpec(n, tuple(table))


def gauss_gamma_spec(n: int, rules: GaussRules | None = None) -> RMatrixSpec:
    """gamma_ab = -g(a - b)/sqrt(v); satisfies the pairing since g(a)g(-a) = v."""
    rules = rules or GaussRules.standard(n)
    uinv = P.monomial({"u": -1}, rules=rules)
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            if a == b:
                row.append(RF.one(rules))
            else:
                row.append(RF.from_poly(-gauss_symbol(a - b, rules) * uinv))
        table.append(tuple(row))
    return RMatrixSpec(n, tuple(table), rules)


def r_gl(spec: RMatrixSpec) -> TensorOperator:
    """R = sum_a u e_aa^2 + sum_{a != b} gamma_ab^{-1} e_aa e_bb + (u - u^{-1}) sum_{a > b} e_ab e_ba."""
    n, rules = spec.n, spec.rules
    uu = RF.from_poly(P.symbol("u", rules))
    c = uu - RF.from_poly(P.monomial({"u": -1}, rules=rules))
    zero = RF.zero(rules)
    size = n * n
    rows = [[zero] * size for _ in range(size)]
    for (a, b) in words(n, 2):
        col = word_index((a, b), n)
        if a == b:
            rows[col][col] = uu
        else:
            rows[col][col] = spec.gamma_entry(a, b).inverse()
            if a > b:
                # e_ab (x) e_ba sends (b, a) to (a, b)
                rows[col][word_index((b, a), n)] = c
    return TensorOperator(n, 2, tuple(tuple(r) for r in rows))


def r_affine(spec: RMatrixSpec, x: LaurentPoly) -> TensorOperator:
    """The parametrized family; r_affine(spec, 0) == r_gl(spec)."""
    n, rules = spec.n, spec.rules
    one = P.one(rules)
    uu = P.symbol("u", rules)
    uinv = P.monomial({"u": -1}, rules=rules)
    c = RF.from_poly(uu - uinv)
    zero = RF.zero(rules)
    size = n * n
    rows = [[zero] * size for _ in range(size)]
    for (a, b) in words(n, 2):
        col = word_index((a, b), n)
        if a == b:
            rows[col][col] = RF.from_poly(uu - x * uinv)
        else:
            rows[col][col] = spec.gamma_entry(a, b).inverse() * RF.from_poly(one - x)
            swap = word_index((b, a), n)
            rows[col][swap] = c if a > b else RF.from_poly(x) * c
    return TensorOperator(n, 2, tuple(tuple(r) for r in rows))


def r_affine_linear(spec: RMatrixSpec, x: LaurentPoly) -> TensorOperator:
    """R - x R_21^{-1}, by exact inversion; equals r_affine for the untwisted spec."""
    r = r_gl(spec)
    tau = tau_operator(spec.n, spec.rules)
    r21 = tau.compose(r).compose(tau)
    return r.sub(r21.inverse().scale(RF.from_poly(x)))


def r_tilde(n: int, x: LaurentPoly, rules: GaussRules | None = None) -> TensorOperator:
    """The Gauss-sum normalized family: triangular with tau R(x) tau R(x^{-1}) = I."""
    rules = rules or GaussRules.standard(n)
    if rules.modulus != n:
        raise ValueError("Gauss modulus must equal the dimension n")
    one = P.one(rules)
    vv = v(rules)
    den = one - vv * x
    zero = RF.zero(rules)
    size = n * n
    rows = [[zero] * size for _ in range(size)]
    exch = one - vv
    for (a, b) in words(n, 2):
        col = word_index((a, b), n)
        if a == b:
            rows[col][col] = RF(x - vv, (den,), simplify=False)
        else:
            rows[col][col] = RF(gauss_symbol(a - b, rules) * (one - x), (den,), simplify=False)
            swap = word_index((b, a), n)
            rows[col][swap] = RF(exch if a > b else x * exch, (den,), simplify=False)
    return TensorOperator(n, 2, tuple(tuple(r) for r in rows))


# -- verifiers --------------------------------------------------------------------


def check_ybe(op: TensorOperator, report: Report | None = None, name: str = "YBE") -> Report:
    """Constant Yang-Baxter equation R12 R13 R23 = R23 R13 R12 on three slots."""
    report = report or Report(name)

    def check():
        r12 = op.embed((0, 1), 3)
        r13 = op.embed((0, 2), 3)
        r23 = op.embed((1, 2), 3)
        lhs = r12.compose(r13).compose(r23)
        rhs = r23.compose(r13).compose(r12)
        diff = first_difference(lhs.mat, rhs.mat)
        if diff is None:
            return True, None, None
        r, c, xe, ye = diff
        return False, f"entry ({r},{c}): {xe.render()}", ye.render()

    report.run(name, check)
    return report


def check_parametrized_ybe(build: Callable[[LaurentPoly], TensorOperator], report: Report | None = None, name: str = "parametrized YBE") -> Report:
    """R12(x) R13(xy) R23(y) = R23(y) R13(xy) R12(x) with symbolic x and y."""
    report = report or Report(name)

    def check():
        x, y = P.symbol("x"), P.symbol("y")
        r12 = build(x).embed((0, 1), 3)
        r13 = build(x * y).embed((0, 2), 3)
        r23 = build(y).embed((1, 2), 3)
        lhs = r12.compose(r13).compose(r23)
        rhs = r23.compose(r13).compose(r12)
        diff = first_difference(lhs.mat, rhs.mat)
        if diff is None:
            return True, None, None
        r, c, xe, ye = diff
        return False, f"entry ({r},{c}): {xe.render()}", ye.render()

    report.run(name, check)
    return report


def check_hecke(spec: RMatrixSpec, report: Report | None = None) -> Report:
    """T = u tau R satisfies T^2 = (v-1)T + v and the order-3 braid on three slots."""
    report = report or Report(f"hecke relations n={spec.n}")
    rules = spec.rules
    uu = RF.from_poly(P.symbol("u", rules))
    t = tau_operator(spec.n, rules).compose(r_gl(spec)).scale(uu)

    def quadratic():
        vv = RF.from_poly(v(rules))
        lhs = t.compose(t)
        rhs = t.scale(vv - 1).add(TensorOperator(spec.n, 2, identity_matrix(spec.n ** 2, rules)).scale(vv))
        diff = first_difference(lhs.mat, rhs.mat)
        if diff is None:
            return True, None, None
        r, c, xe, ye = diff
        return False, f"entry ({r},{c}): {xe.render()}", ye.render()

    def braid():
        t12 = t.embed((0, 1), 3)
        t23 = t.embed((1, 2), 3)
        lhs = t12.compose(t23).compose(t12)
        rhs = t23.compose(t12).compose(t23)
        diff = first_difference(lhs.mat, rhs.mat)
        if diff is None:
            return True, None, None
        r, c, xe, ye = diff
        return False, f"entry ({r},{c}): {xe.render()}", ye.render()

    report.run(f"quadratic u*tau*R (n={spec.n})", quadratic)
    report.run(f"braid on three slots (n={spec.n})", braid)
    return report


def check_triangularity(
    build: Callable[[LaurentPoly], TensorOperator],
    expected: RF,
    report: Report | None = None,
    name: str = "triangularity",
) -> Report:
    """tau R(x) tau R(x^{-1}) equals the expected scalar times the identity."""
    report = report or Report(name)

    def check():
        x = P.symbol("x")
        op_x = build(x)
        op_xinv = build(x.monomial_inverse())
        rules = op_x.mat[0][0].num.rules
        tau = tau_operator(op_x.n, rules)
        product = tau.compose(op_x).compose(tau).compose(op_xinv)
        scalar = is_scalar_matrix(product.mat)
        if scalar is None:
            diff = first_difference(product.mat, mat_scalar(expected, identity_matrix(op_x.n ** 2, rules)))
            r, c, xe, ye = diff
            return False, f"not scalar at ({r},{c}): {xe.render()}", ye.render()
        if scalar == expected:
            return True, None, None
        return False, scalar.render(), expected.render()

    report.run(name, check)
    return report


def doubler_scalar(rules: GaussRules | None = None) -> RF:
    """(u - x/u)(u - 1/(x u)) -- the composition scalar of the affine family."""
    x = P.symbol("x", rules)
    uu = P.symbol("u", rules)
    uinv = P.monomial({"u": -1}, rules=rules)
    return RF.from_poly((uu - x * uinv) * (uu - x.monomial_inverse() * uinv))


# -- tensor schema instance --------------------------------------------------------


def tensor_schema_instance(
    n: int,
    r: int,
    twist: str = "none",
    power: int = 1,
    xi: Callable[[LaurentPoly], RF] | None = None,
) -> SchemaInstance:
    """The Hecke module on r-fold tensor products of n-dimensional evaluation modules.

    twist = "none": A(w, i) = u/(1 - X) (tau R(X))_{i,i+1} with X = (wz)^{alpha_i}.
    twist = "gauss": the Gauss-sum table; with power = n the entries use
    X = (wz)^{n alpha_i} and the Gauss-normalized family with prefactor
    (1 - v X)/(1 - X), which is the metaplectic dictionary's shape.
    xi, when given, multiplies A(w, i) by xi(X); any xi with
    xi(x) xi(x^{-1}) = 1 leaves every relation intact.
    """
    if twist not in ("none", "gauss"):
        raise ValueError("twist must be 'none' or 'gauss'")
    if power not in (1, n):
        raise ValueError("power must be 1 or n")
    cartan = build_cartan(f"A{r - 1}")
    group = WeylGroup(cartan)
    rules = GaussRules.standard(n) if twist == "gauss" else None
    spec = gauss_gamma_spec(n, rules) if twist == "gauss" else untwisted_spec(n)
    tau = tau_operator(n, rules)
    one = P.one(rules)
    uu = P.symbol("u", rules)
    a_matrices = {}
    for w in group:
        winv = group.inverse(w)
        for i in range(cartan.rank):
            x = coroot_monomial(winv.act(cartan.simple_coroots[i]), power, rules)
            if twist == "gauss" and power == n:
                local = tau.compose(r_tilde(n, x, rules))
                prefactor = RF(one - v(rules) * x, (one - x,), simplify=False)
            else:
                local = tau.compose(r_affine(spec, x))
                prefactor = RF(uu, (one - x,), simplify=False)
            if xi is not None:
                prefactor = prefactor * xi(x)
            op = local.embed((i, i + 1), r).scale(prefactor)
            a_matrices[(w, i)] = op.mat
    name = f"tensor n={n} r={r} twist={twist} power={power}"
    return SchemaInstance(cartan, group, n ** r, a_matrices, tuple(power for _ in range(cartan.rank)), rules, name)


def check_content_preservation(inst: SchemaInstance, report: Report | None = None) -> Report:
    """Tensor-word content (the gl(n) weight) is preserved by every A entry."""
    report = report or Report(f"{inst.name}: content preservation")
    r = inst.cartan.rank + 1  # block_dim = n^r
    n = round(inst.block_dim ** (1.0 / r))
    assert n ** r == inst.block_dim
    all_words = words(n, r)

    def check():
        for (w, i), m in inst.a_matrices.items():
            for row, target in enumerate(all_words):
                for col, source in enumerate(all_words):
                    if sorted(target) != sorted(source) and not m[row][col].is_zero():
                        return False, f"A(w={w.name()}, i={i + 1}) entry ({row},{col})", "content changed"
        return True, None, None

    report.run("content preservation", check)
    return report


# -- the z -> 0 limit and the wreath construction -----------------------------------


@dataclass
class BlockSpace:
    """Duck-typed stand-in for a SchemaInstance: just a group and a block size."""

    cartan: CartanDatum
    group: WeylGroup
    block_dim: int
    rules: GaussRules | None = None
    name: str = "finite block space"


def hecke_inverse(t: Matrix, rules: GaussRules | None = None) -> Matrix:
    """T^{-1} = (T - (v-1)) / v, valid whenever T satisfies the quadratic relation."""
    k = len(t)
    vv = RF.from_poly(v(rules))
    shifted = mat_sub(t, mat_scalar(vv - 1, identity_matrix(k, rules)))
    return mat_scalar(RF.one(rules) / vv, shifted)


def wreath_operator(space: BlockSpace, t: Matrix, i: int, t_inv: Matrix | None = None) -> BlockOperator:
    """The wreath action: T_i phi_{s_i w} on descents, (v-1) + v T_i^{-1} phi_{s_i w} on ascents."""
    group = space.group
    rules = space.rules
    vv = RF.from_poly(v(rules))
    t_inv = t_inv if t_inv is not None else hecke_inverse(t, rules)
    ident = identity_matrix(space.block_dim, rules)
    blocks = {}
    for w in group:
        sw = group.left_mul_simple(i, w)
        if sw.length < w.length:
            blocks[(w, sw)] = t
        else:
            blocks[(w, w)] = mat_scalar(vv - 1, ident)
            blocks[(w, sw)] = mat_scalar(vv, t_inv)
    return BlockOperator(space, _drop_zero_blocks(blocks))


def jimbo_t_matrix(n: int, r: int, i: int) -> Matrix:
    """T_i = u (tau R)_{i,i+1} on the r-fold tensor power."""
    t = tau_operator(n).compose(r_gl(untwisted_spec(n))).scale(RF.from_poly(P.symbol("u")))
    return t.embed((i, i + 1), r).mat


def limit_instance(n: int, r: int) -> tuple[BlockSpace, list[BlockOperator]]:
    """The z -> 0 specialization of the tensor instance, via exact matrix inversion.

    Diagonal blocks degenerate to 0 or v - 1 per descent, and the off-diagonal
    maps to u (tau R)^{+-1}; (tau R)^{-1} is computed by Gaussian elimination,
    independently of the Hecke shortcut used by the wreath construction.
    """
    cartan = build_cartan(f"A{r - 1}")
    group = WeylGroup(cartan)
    space = BlockSpace(cartan, group, n ** r)
    uu = RF.from_poly(P.symbol("u"))
    vv = RF.from_poly(v())
    ident = identity_matrix(space.block_dim)
    tau = tau_operator(n)
    r_mat = r_gl(untwisted_spec(n))
    ops = []
    for i in range(cartan.rank):
        tau_r = tau.compose(r_mat).embed((i, i + 1), r)
        tau_r_inv = TensorOperator(n, r, mat_inverse(tau_r.mat))
        blocks = {}
        for w in group:
            sw = group.left_mul_simple(i, w)
            if sw.length > w.length:
                blocks[(w, w)] = mat_scalar(vv - 1, ident)
                blocks[(w, sw)] = tau_r_inv.scale(uu).mat
            else:
                blocks[(w, sw)] = tau_r.scale(uu).mat
        ops.append(BlockOperator(space, _drop_zero_blocks(blocks)))
    return space, ops


def check_finite_hecke(space: BlockSpace, ops: list[BlockOperator], report: Report | None = None, name: str = "finite Hecke") -> Report:
    """Quadratic and braid relations for explicit block operators over W."""
    from .schema import identity_operator

    report = report or Report(name)
    vv = RF.from_poly(v(space.rules))
    ident = BlockOperator(space, {(w, w): identity_matrix(space.block_dim, space.rules) for w in space.group})
    for i, t in enumerate(ops):
        def quad(t=t, i=i):
            diff = t.compose(t).difference(t.scale(vv - 1).add(ident.scale(vv)))
            return (diff is None, diff, "T^2 = (v-1)T + v") if diff else (True, None, None)

        report.run(f"quadratic block T_{i + 1}", quad)
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            m = space.cartan.braid_orders[i][j]

            def braid(i=i, j=j, m=m):
                seq = [ops[i] if t % 2 == 0 else ops[j] for t in range(m)]
                lhs = None
                for op in seq:
                    lhs = op if lhs is None else lhs.compose(op)
                seq = [ops[j] if t % 2 == 0 else ops[i] for t in range(m)]
                rhs = None
                for op in seq:
                    rhs = op if rhs is None else rhs.compose(op)
                diff = lhs.difference(rhs)
                return (diff is None, diff, f"braid order {m}") if diff else (True, None, None)

            report.run(f"braid block ({i + 1},{j + 1})", braid)
    return report


def delta_matrix(space: BlockSpace, star: bool = False) -> dict[WeylElement, Matrix]:
    """Blocks of Delta (identity) or Delta^* ((-v)^{l(w)} identity) per w."""
    vv = RF.from_poly(v(space.rules))
    ident = identity_matrix(space.block_dim, space.rules)
    out = {}
    for w in space.group:
        scalar = (RF.const(-1, space.rules) * vv) ** w.length if star else RF.one(space.rules)
        out[w] = mat_scalar(scalar, ident)
    return out


def check_wreath_intertwining(
    space: BlockSpace,
    op: BlockOperator,
    t: Matrix,
    report: Report | None = None,
) -> Report:
    """Delta intertwines the wreath action with T_i, as a matrix identity."""
    report = report or Report("wreath intertwining")

    def check():
        delta = delta_matrix(space, star=False)
        for w in space.group:
            lhs = None
            for (wt, ws), block in op.blocks.items():
                if wt != w:
                    continue
                term = mat_mul(block, delta[ws])
                lhs = term if lhs is None else mat_add(lhs, term)
            rhs = mat_mul(delta[w], t)
            diff = first_difference(lhs, rhs)
            if diff is not None:
                r, c, xe, ye = diff
                return False, f"block {w.name()} entry ({r},{c}): {xe.render()}", ye.render()
        return True, None, None

    report.run("Delta intertwining", check)
    return report


def star_matrix(t: Matrix, rules: GaussRules | None = None) -> Matrix:
    """T* = (v - 1) - T = -v T^{-1}: the order-2 twist of the Hecke generators."""
    k = len(t)
    vv = RF.from_poly(v(rules))
    return mat_sub(mat_scalar(vv - 1, identity_matrix(k, rules)), t)


def eigenline_basis(t: Matrix, eigenvalue: RF) -> list[tuple[RF, ...]]:
    k = len(t)
    rules = t[0][0].num.rules
    return nullspace(mat_sub(t, mat_scalar(eigenvalue, identity_matrix(k, rules))))


def check_wreath_star(space: BlockSpace, op: BlockOperator, t: Matrix, report: Report | None = None) -> Report:
    """The *-twisted diagonal, verified per T_i-eigenline.

    T* = -v T^{-1} swaps the eigenvalues v and -1.  On the v-eigenline, the
    diagonal with weights (-v)^{l(w)} satisfies wreath(Delta* phi) =
    Delta*(T* phi) = -Delta*(phi); on the (-1)-eigenline the same identity
    holds with weights (-v)^{-l(w)} and value v.  (The single-orientation
    diagonal cannot intertwine both lines at once: expanding the two case
    branches forces T = v there.)
    """
    report = report or Report("wreath star twist")
    rules = space.rules
    vv = RF.from_poly(v(rules))

    def apply_to(vec: dict[WeylElement, tuple[RF, ...]]):
        out = {w: None for w in space.group}
        for (wt, ws), block in op.blocks.items():
            img = apply_matrix(block, vec[ws])
            out[wt] = img if out[wt] is None else tuple(a + b for a, b in zip(out[wt], img))
        zero = tuple(RF.zero(rules) for _ in range(space.block_dim))
        return {w: (x if x is not None else zero) for w, x in out.items()}

    def diagonal(phi, sign):
        return {
            w: tuple(((RF.const(-1, rules) * vv) ** (sign * w.length)) * x for x in phi)
            for w in space.group
        }

    def check():
        star = star_matrix(t, rules)
        plus = eigenline_basis(t, vv)
        minus = eigenline_basis(t, RF.const(-1, rules))
        if len(plus) + len(minus) != space.block_dim:
            return False, f"eigenspace dims {len(plus)}+{len(minus)}", str(space.block_dim)
        for phi in plus:
            starred = apply_matrix(star, phi)  # = -phi on this line
            vec = diagonal(phi, +1)
            got = apply_to(vec)
            want = diagonal(starred, +1)
            for w in space.group:
                for a, b in zip(got[w], want[w]):
                    if not (a == b):
                        return False, f"v-eigenline at {w.name()}: {a.render()}", b.render()
        for phi in minus:
            starred = apply_matrix(star, phi)  # = v phi on this line
            vec = diagonal(phi, -1)
            got = apply_to(vec)
            want = diagonal(starred, -1)
            for w in space.group:
                for a, b in zip(got[w], want[w]):
                    if not (a == b):
                        return False, f"(-1)-eigenline at {w.name()}: {a.render()}", b.render()
        return True, None, None

    report.run("Delta* eigenline intertwining", check)
    return report


def check_star_word_identity(space: BlockSpace, t_matrices: list[Matrix], report: Report | None = None) -> Report:
    """T_w^* = (-v)^{l(w)} T_{w^{-1}}^{-1} as exact matrix identities, all w."""
    report = report or Report("star word identity")
    rules = space.rules
    vv = RF.from_poly(v(rules))
    k = len(t_matrices[0])

    def word_product(mats: list[Matrix], word: tuple[int, ...]) -> Matrix:
        out = identity_matrix(k, rules)
        for i in word:
            out = mat_mul(out, mats[i])
        return out

    def check():
        stars = [star_matrix(t, rules) for t in t_matrices]
        for w in space.group:
            lhs = word_product(stars, w.word)
            winv = space.group.inverse(w)
            rhs = mat_scalar(
                (RF.const(-1, rules) * vv) ** w.length,
                mat_inverse(word_product(t_matrices, winv.word)),
            )
            diff = first_difference(lhs, rhs)
            if diff is not None:
                r, c, xe, ye = diff
                return False, f"w={w.name()} entry ({r},{c}): {xe.render()}", ye.render()
        return True, None, None

    report.run("T_w* = (-v)^l T_{w^-1}^{-1}", check)
    return report
