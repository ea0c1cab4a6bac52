"""Finite Cartan data and Weyl groups as lattice automorphisms.

Supported types: A1..A4 (GL-style ambient Z^{r+1}), C2, B2, G2.  The root
system Phi^vee lives inside the character lattice of a torus with
coordinates z1..zd; Weyl elements carry canonical reduced words, and the
Weyl character formula is evaluated exactly.

Realizations follow the standard ambient spaces: type A_r has
alpha_i = e_i - e_{i+1} in Z^{r+1}; C2 has (1,-1), (0,2); G2 sits in the
rank-3 ambient with alpha_1 = (0,1,-1), alpha_2 = (1,-2,1).  B2 is realized
as C2 with the two simple indices swapped (its coroot lattice data); this is
the unique integral realization admitting a monomial z^rho.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import GaussRules, LaurentPoly, RationalFunction, exact_divide

Vector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def _vec(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _intvec(xs: Iterable) -> IntVector:
    out = []
    for x in xs:
        f = Fraction(x)
        if f.denominator != 1:
            raise ValueError(f"non-integral coordinate {f}")
        out.append(int(f))
    return tuple(out)


def _dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class CartanDatum:
    cartan_type: str
    dim: int
    simple_coroots: tuple[IntVector, ...]
    pairings: tuple[Vector, ...]          # functionals <alpha_i, .>
    rho: IntVector                        # lattice vector with <alpha_i, rho> = 1
    positive_coroots: tuple[IntVector, ...] = field(default=())
    braid_orders: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def rank(self) -> int:
        return len(self.simple_coroots)

    def pairing(self, i: int, mu: Sequence) -> Fraction:
        return _dot(self.pairings[i], mu)

    def pairing_int(self, i: int, mu: Sequence) -> int:
        value = self.pairing(i, mu)
        if value.denominator != 1:
            raise ValueError(f"weight {tuple(mu)} is not in the lattice of {self.cartan_type}")
        return int(value)

    def in_lattice(self, mu: Sequence) -> bool:
        return all(self.pairing(i, mu).denominator == 1 for i in range(self.rank))

    def is_dominant(self, mu: Sequence) -> bool:
        return all(self.pairing_int(i, mu) >= 0 for i in range(self.rank))

    def fundamental_weights(self) -> tuple[IntVector, ...]:
        """One lattice representative per fundamental weight (pairing delta_ij)."""
        out = []
        for i in range(self.rank):
            for cand in self._weight_candidates():
                if all(self.pairing(j, cand) == (1 if j == i else 0) for j in range(self.rank)):
                    out.append(cand)
                    break
            else:
                raise ValueError("no fundamental weight representative found")
        return tuple(out)

    def _weight_candidates(self):
        from itertools import product

        span = range(-3, 4)
        for cand in product(span, repeat=self.dim):
            yield tuple(cand)


def _simple_reflection_matrix(cartan: CartanDatum, i: int) -> tuple[Vector, ...]:
    """Matrix of s_i in ambient coordinates, as a tuple of rows."""
    d = cartan.dim
    alpha = cartan.simple_coroots[i]
    rows = []
    for r in range(d):
        row = []
        for c in range(d):
            e = Fraction(1 if r == c else 0)
            row.append(e - Fraction(alpha[r]) * cartan.pairings[i][c])
        rows.append(tuple(row))
    return tuple(rows)


def _mat_vec(m: tuple[Vector, ...], v: Sequence) -> Vector:
    return tuple(_dot(row, v) for row in m)


def _mat_mul(a: tuple[Vector, ...], b: tuple[Vector, ...]) -> tuple[Vector, ...]:
    bt = list(zip(*b))
    return tuple(tuple(_dot(row, col) for col in bt) for row in a)


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[Vector, ...]
    word: tuple[int, ...]
    length: int

    def act(self, mu: Sequence) -> IntVector:
        return _intvec(_mat_vec(self.matrix, mu))

    def name(self) -> str:
        return "".join(str(i + 1) for i in self.word) if self.word else "e"

    def __repr__(self) -> str:
        return f"WeylElement({self.name()})"


class WeylGroup:
    """All |W| elements with canonical reduced words, closed under multiplication."""

    def __init__(self, cartan: CartanDatum):
        self.cartan = cartan
        self._simple_matrices = [_simple_reflection_matrix(cartan, i) for i in range(cartan.rank)]
        self.elements: list[WeylElement] = []
        self._by_matrix: dict[tuple[Vector, ...], WeylElement] = {}
        self._generate()
        self._bruhat_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}

    def _generate(self) -> None:
        d = self.cartan.dim
        identity = tuple(tuple(Fraction(1 if r == c else 0) for c in range(d)) for r in range(d))
        start = WeylElement(identity, (), 0)
        self.elements = [start]
        self._by_matrix = {identity: start}
        frontier = [start]
        while frontier:
            discovered: dict[tuple[Vector, ...], tuple[int, ...]] = {}
            for u in frontier:
                for i in range(self.cartan.rank):
                    m = _mat_mul(self._simple_matrices[i], u.matrix)
                    if m in self._by_matrix:
                        continue
                    word = (i,) + u.word
                    if m not in discovered or word < discovered[m]:
                        discovered[m] = word
            frontier = []
            for m, word in discovered.items():
                w = WeylElement(m, word, len(word))
                self._by_matrix[m] = w
                self.elements.append(w)
                frontier.append(w)
        self.elements.sort(key=lambda w: (w.length, w.word))
        if self.cartan.rank == 2:
            self._rename_longest()

    def _rename_longest(self) -> None:
        # Alternating word ending in s_1 ("121", "2121", "212121"), matching
        # the conventional spelling for the rank-2 longest element.
        w0 = self.longest()
        m = w0.length
        word = tuple(0 if (m - 1 - j) % 2 == 0 else 1 for j in range(m))
        renamed = WeylElement(w0.matrix, word, m)
        self._by_matrix[w0.matrix] = renamed
        self.elements[self.elements.index(w0)] = renamed

    # -- group structure ------------------------------------------------------

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def simple(self, i: int) -> WeylElement:
        return self._by_matrix[self._simple_matrices[i]]

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._by_matrix[_mat_mul(a.matrix, b.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        result = self.identity
        for i in w.word:
            result = self.mul(self.simple(i), result)
        return result

    def left_mul_simple(self, i: int, w: WeylElement) -> WeylElement:
        return self._by_matrix[_mat_mul(self._simple_matrices[i], w.matrix)]

    def is_left_descent(self, i: int, w: WeylElement) -> bool:
        return self.left_mul_simple(i, w).length < w.length

    def longest(self) -> WeylElement:
        return max(self.elements, key=lambda w: w.length)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def bruhat_le(self, u: WeylElement, w: WeylElement) -> bool:
        """Standard Bruhat order via the descent recursion (subword criterion)."""
        key = (u.word, w.word)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        if u.length > w.length:
            result = False
        elif u.length == 0:
            result = True
        elif u.matrix == w.matrix:
            result = True
        else:
            i = next(j for j in range(self.cartan.rank) if self.is_left_descent(j, w))
            sw = self.left_mul_simple(i, w)
            su = self.left_mul_simple(i, u)
            result = self.bruhat_le(su if su.length < u.length else u, sw)
        self._bruhat_cache[key] = result
        return result

    # -- actions on weights and functions ------------------------------------

    def act(self, w: WeylElement, mu: Sequence) -> IntVector:
        return w.act(mu)

    def act_fn(self, w: WeylElement, f):
        """act_fn(w, z^mu) = z^{w mu}; a ring homomorphism on z-monomials."""
        if isinstance(f, RationalFunction):
            return RationalFunction(
                self.act_fn(w, f.num),
                tuple(self.act_fn(w, g) for g in f.den),
                simplify=False,
            )
        return _apply_matrix_to_poly(f, w.matrix, self.cartan.dim)

    def at_point(self, w: WeylElement, f):
        """Evaluate a z-function at the torus point w*z: f(wz) = act_fn(w^{-1}, f)."""
        return self.act_fn(self.inverse(w), f)


def _apply_matrix_to_poly(f: LaurentPoly, matrix: tuple[Vector, ...], dim: int) -> LaurentPoly:
    terms = {}
    for mono, coeff in f.terms.items():
        exps = dict(mono)
        vec = [exps.pop(f"z{i + 1}", 0) for i in range(dim)]
        image = _intvec(_mat_vec(matrix, vec))
        for i, e in enumerate(image):
            if e:
                exps[f"z{i + 1}"] = exps.get(f"z{i + 1}", 0) + e
        key = tuple(sorted((s, e) for s, e in exps.items() if e != 0))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return LaurentPoly(terms, f.rules)


def _positive_closure(cartan_type: str, simples: list[IntVector], pairings: list[Vector], rho) -> tuple[IntVector, ...]:
    seen = {tuple(a) for a in simples}
    frontier = list(simples)
    while frontier:
        beta = frontier.pop()
        for i in range(len(simples)):
            k = _dot(pairings[i], beta)
            if k.denominator != 1:
                raise ValueError(f"non-integral Cartan pairing in {cartan_type}")
            image = tuple(b - int(k) * a for b, a in zip(beta, simples[i]))
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    positives = [b for b in seen if _dot(rho, b) > 0]
    positives.sort(key=lambda b: (_dot(rho, b), b))
    return tuple(positives)


_REALIZATIONS: dict[str, dict] = {
    "A1": dict(dim=2),
    "A2": dict(dim=3),
    "A3": dict(dim=4),
    "A4": dict(dim=5),
    "C2": dict(
        dim=2,
        simples=[(1, -1), (0, 2)],
        pairings=[(1, -1), (0, 1)],
        rho=(2, 1),
    ),
    "B2": dict(
        dim=2,
        simples=[(0, 2), (1, -1)],
        pairings=[(0, 1), (1, -1)],
        rho=(2, 1),
    ),
    "G2": dict(
        dim=3,
        simples=[(0, 1, -1), (1, -2, 1)],
        pairings=[(0, 1, -1), (Fraction(1, 3), Fraction(-2, 3), Fraction(1, 3))],
        rho=(3, -1, -2),
    ),
}


def build_cartan(cartan_type: str) -> CartanDatum:
    """Cartan data for a supported type, with positive coroots and rho."""
    spec = _REALIZATIONS.get(cartan_type)
    if spec is None:
        raise ValueError(f"unsupported Cartan type {cartan_type!r} (use A1..A4, B2, C2, G2)")
    if cartan_type.startswith("A"):
        r = int(cartan_type[1])
        d = r + 1
        simples = [tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(d)) for i in range(r)]
        pairings = [_vec(s) for s in simples]
        rho = tuple(range(r, -1, -1))
    else:
        d = spec["dim"]
        simples = [tuple(s) for s in spec["simples"]]
        pairings = [_vec(p) for p in spec["pairings"]]
        rho = tuple(spec["rho"])
    positives = _positive_closure(cartan_type, simples, pairings, rho)
    rank = len(simples)
    datum = CartanDatum(
        cartan_type=cartan_type,
        dim=d,
        simple_coroots=tuple(simples),
        pairings=tuple(pairings),
        rho=rho,
        positive_coroots=positives,
    )
    orders = _braid_orders(datum)
    return CartanDatum(
        cartan_type=cartan_type,
        dim=d,
        simple_coroots=tuple(simples),
        pairings=tuple(pairings),
        rho=rho,
        positive_coroots=positives,
        braid_orders=orders,
    )


def _braid_orders(cartan: CartanDatum) -> tuple[tuple[int, ...], ...]:
    mats = [_simple_reflection_matrix(cartan, i) for i in range(cartan.rank)]
    d = cartan.dim
    identity = tuple(tuple(Fraction(1 if r == c else 0) for c in range(d)) for r in range(d))
    orders = []
    for i in range(cartan.rank):
        row = []
        for j in range(cartan.rank):
            if i == j:
                row.append(1)
                continue
            m = _mat_mul(mats[i], mats[j])
            power, count = m, 1
            while power != identity:
                power = _mat_mul(power, m)
                count += 1
            row.append(count)
        orders.append(tuple(row))
    return tuple(orders)


def weyl_group(cartan: CartanDatum) -> WeylGroup:
    return WeylGroup(cartan)


def coroot_monomial(beta: Sequence[int], scale: int = 1, rules: GaussRules | None = None) -> LaurentPoly:
    """z^{scale * beta}."""
    return LaurentPoly.monomial({f"z{i + 1}": scale * int(b) for i, b in enumerate(beta)}, rules=rules)


def weight_monomial(mu: Sequence[int], rules: GaussRules | None = None) -> LaurentPoly:
    return coroot_monomial(mu, 1, rules)


def weyl_character(cartan: CartanDatum, group: WeylGroup, lam: Sequence[int]) -> LaurentPoly:
    """chi_lambda(z) as an exact Laurent polynomial (Weyl sum; divisibility asserted)."""
    if not cartan.is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    lam_rho = tuple(int(a) + b for a, b in zip(lam, cartan.rho))
    num = LaurentPoly.zero()
    den = LaurentPoly.zero()
    for w in group:
        sign = -1 if w.length % 2 else 1
        num = num + weight_monomial(w.act(lam_rho), ) * sign
        den = den + weight_monomial(w.act(cartan.rho)) * sign
    return exact_divide(num, den)


def weyl_character_sum_form(cartan: CartanDatum, group: WeylGroup, lam: Sequence[int]) -> RationalFunction:
    """The rational Weyl sum sum_w z^{w lam} / prod (1 - z^{-w alpha}); equals chi_lambda."""
    total = RationalFunction.zero()
    for w in group:
        num = weight_monomial(w.act(lam))
        den = tuple(
            LaurentPoly.one() - coroot_monomial(w.act(beta), -1)
            for beta in cartan.positive_coroots
        )
        total = total + RationalFunction(num, den, simplify=False)
    return total
