"""Exact multivariate Laurent polynomials and rational functions over Q.

Symbols are plain names ("z1", "u", "g2", "a1_121"); monomials map names to
integer exponents (negative allowed).  The deformation parameter v is always
written as u^2, so every coefficient ring here is Q[u^{+-1}, ...].

Gauss symbols g0, g1, ... are ordinary commuting symbols until a
:class:`GaussRules` context is attached, which rewrites g_a * g_{n-a} to
pair_value and g_0 to zero_value at construction time.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple[tuple[str, int], ...]


class NotDivisible(Exception):
    """Raised by :func:`exact_divide` when the quotient is not a Laurent polynomial."""


class PoleError(Exception):
    """Raised when a rational function is evaluated at a zero of its denominator."""


class ContextMismatch(Exception):
    """Raised when two operands carry incompatible Gauss rewrite rules."""


def _mono(exps: Mapping[str, int]) -> Monomial:
    return tuple(sorted((s, e) for s, e in exps.items() if e != 0))


def _gauss_index(name: str) -> int | None:
    if name.startswith("g") and name[1:].isdigit():
        return int(name[1:])
    return None


@dataclass(frozen=True)
class GaussRules:
    """Rewrite rules for formal n-th order Gauss-sum symbols.

    ``g_a * g_{(n-a) mod n} -> pair_value`` for a != 0 mod n, and
    ``g_0 -> zero_value``.  The defaults (u^2 and -u^2) are the normalized
    sums; both values are configurable.  Reduction is greedy per residue
    pair, which is confluent on monomials.
    """

    modulus: int
    pair_value: "LaurentPoly"
    zero_value: "LaurentPoly"

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("Gauss modulus must be >= 1")
        for value in (self.pair_value, self.zero_value):
            if value.rules is not None:
                raise ValueError("pair/zero values must be rule-free polynomials")
            if any(_gauss_index(s) is not None for s in value.symbols()):
                raise ValueError("pair/zero values must not contain Gauss symbols")

    @staticmethod
    def standard(modulus: int) -> "GaussRules":
        u2 = LaurentPoly.monomial({"u": 2})
        return GaussRules(modulus, u2, -u2)


def _merge_rules(a: GaussRules | None, b: GaussRules | None) -> GaussRules | None:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise ContextMismatch(f"incompatible Gauss rules: {a} vs {b}")


class LaurentPoly:
    """Immutable exact Laurent polynomial with Fraction coefficients."""

    __slots__ = ("terms", "rules", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None, rules: GaussRules | None = None):
        self.rules = rules
        normalized: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            reduced = _gauss_reduce(mono, coeff, rules) if rules is not None else ((mono, coeff),)
            for m2, c2 in reduced:
                c = normalized.get(m2, Fraction(0)) + c2
                if c:
                    normalized[m2] = c
                else:
                    normalized.pop(m2, None)
        self.terms = normalized
        self._hash = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(rules: GaussRules | None = None) -> "LaurentPoly":
        return LaurentPoly({}, rules)

    @staticmethod
    def const(value, rules: GaussRules | None = None) -> "LaurentPoly":
        return LaurentPoly({(): Fraction(value)}, rules)

    @staticmethod
    def one(rules: GaussRules | None = None) -> "LaurentPoly":
        return LaurentPoly.const(1, rules)

    @staticmethod
    def monomial(exps: Mapping[str, int], coeff=1, rules: GaussRules | None = None) -> "LaurentPoly":
        return LaurentPoly({_mono(exps): Fraction(coeff)}, rules)

    @staticmethod
    def symbol(name: str, rules: GaussRules | None = None) -> "LaurentPoly":
        return LaurentPoly.monomial({name: 1}, rules=rules)

    def with_rules(self, rules: GaussRules | None) -> "LaurentPoly":
        return LaurentPoly(self.terms, rules)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.rules)
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        rules = _merge_rules(self.rules, other.rules)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = terms.get(mono, Fraction(0)) + coeff
            if c:
                terms[mono] = c
            else:
                terms.pop(mono, None)
        return LaurentPoly(terms, rules)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()}, self.rules)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        rules = _merge_rules(self.rules, other.rules)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                exps = dict(d1)
                for s, e in m2:
                    exps[s] = exps.get(s, 0) + e
                key = _mono(exps)
                c = terms.get(key, Fraction(0)) + c1 * c2
                if c:
                    terms[key] = c
                else:
                    terms.pop(key, None)
        return LaurentPoly(terms, rules)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.monomial_inverse() ** (-n)
        result = LaurentPoly.one(self.rules)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        """Inverse of a single-term polynomial (monomials are the Laurent units)."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (mono, coeff), = self.terms.items()
        return LaurentPoly({tuple((s, -e) for s, e in mono): 1 / coeff}, self.rules)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.rules)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def symbols(self) -> set[str]:
        return {s for mono in self.terms for s, _ in mono}

    # -- substitution and evaluation ----------------------------------------

    def substitute_monomials(self, images: Mapping[str, Mapping[str, int]]) -> "LaurentPoly":
        """Ring homomorphism sending each mapped symbol to a monomial; others fixed."""
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            exps: dict[str, int] = {}
            for s, e in mono:
                image = images.get(s)
                if image is None:
                    exps[s] = exps.get(s, 0) + e
                else:
                    for t, f in image.items():
                        exps[t] = exps.get(t, 0) + e * f
            key = _mono(exps)
            c = terms.get(key, Fraction(0)) + coeff
            if c:
                terms[key] = c
            else:
                terms.pop(key, None)
        return LaurentPoly(terms, self.rules)

    def eval(self, point: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = coeff
            for s, e in mono:
                if s not in point:
                    raise ValueError(f"unassigned symbol {s!r}")
                base = Fraction(point[s])
                if base == 0 and e < 0:
                    raise PoleError(f"{s} = 0 raised to a negative power")
                value *= base ** e
            total += value
        return total

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms in ascending graded-lex order on symbol names."""
        if not self.terms:
            return "0"
        names = sorted(self.symbols())
        index = {s: i for i, s in enumerate(names)}

        def key(mono: Monomial):
            vec = [0] * len(names)
            for s, e in mono:
                vec[index[s]] = e
            return (sum(e for _, e in mono), vec)

        parts = []
        for mono, coeff in sorted(self.terms.items(), key=lambda kv: key(kv[0])):
            factors = [s if e == 1 else f"{s}^{e}" for s, e in mono]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()})"


def _gauss_reduce(mono: Monomial, coeff: Fraction, rules: GaussRules) -> Iterable[tuple[Monomial, Fraction]]:
    """Canonical form of one term under the Gauss rewrite system."""
    n = rules.modulus
    plain: dict[str, int] = {}
    gexp: dict[int, int] = {}
    for s, e in mono:
        a = _gauss_index(s)
        if a is None:
            plain[s] = plain.get(s, 0) + e
        else:
            a %= n
            gexp[a] = gexp.get(a, 0) + e
    if not gexp:
        yield mono, coeff
        return
    multiplier = LaurentPoly.const(coeff)
    pair_invertible = len(rules.pair_value.terms) == 1
    zero_count = gexp.pop(0, 0)
    if zero_count > 0:
        multiplier = multiplier * rules.zero_value ** zero_count
    elif zero_count < 0:
        multiplier = multiplier * rules.zero_value.monomial_inverse() ** (-zero_count)
    for a in sorted(gexp):
        b = (n - a) % n
        if b < a:
            continue
        if b == a:
            e = gexp.get(a, 0)
            if e >= 0 or pair_invertible:
                pairs, leftover = divmod(e, 2)
            else:
                pairs, leftover = 0, e
            gexp[a] = leftover
        else:
            ea, eb = gexp.get(a, 0), gexp.get(b, 0)
            if ea > 0 and eb > 0:
                pairs = min(ea, eb)
            elif ea < 0 and eb < 0 and pair_invertible:
                pairs = max(ea, eb)
            else:
                pairs = 0
            gexp[a], gexp[b] = ea - pairs, eb - pairs
        if pairs > 0:
            multiplier = multiplier * rules.pair_value ** pairs
        elif pairs < 0:
            multiplier = multiplier * rules.pair_value.monomial_inverse() ** (-pairs)
    for a, e in gexp.items():
        if e:
            plain[f"g{a}"] = plain.get(f"g{a}", 0) + e
    base = _mono(plain)
    for m2, c2 in multiplier.terms.items():
        exps = dict(base)
        for s, e in m2:
            exps[s] = exps.get(s, 0) + e
        yield _mono(exps), c2


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """Exact add/sub/mul; Gauss rewriting applies if a rules context is active."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _monomial_content(p: LaurentPoly) -> dict[str, int]:
    """Componentwise minimum exponent over all terms (the unit part of p)."""
    mins: dict[str, int] = {}
    symbols = p.symbols()
    for mono, _ in p.terms.items():
        d = dict(mono)
        for s in symbols:
            e = d.get(s, 0)
            if s not in mins or e < mins[s]:
                mins[s] = e
    return {s: e for s, e in mins.items() if e != 0}


def _shift(p: LaurentPoly, shift: Mapping[str, int]) -> LaurentPoly:
    if not shift:
        return p
    return p * LaurentPoly.monomial(shift, rules=p.rules)


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with r*q == p exactly, or raise :class:`NotDivisible`.

    Both operands are normalized by their unit (monomial) content first;
    this reduces Laurent divisibility to polynomial divisibility, where a
    single-divisor division with graded-lex leading terms is a complete test.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rules = _merge_rules(p.rules, q.rules)
    if p.is_zero():
        return LaurentPoly.zero(rules)
    cp, cq = _monomial_content(p), _monomial_content(q)
    phat = _shift(p, {s: -e for s, e in cp.items()})
    qhat = _shift(q, {s: -e for s, e in cq.items()})

    names = sorted(phat.symbols() | qhat.symbols())
    index = {s: i for i, s in enumerate(names)}

    def order(mono: Monomial):
        vec = [0] * len(names)
        for s, e in mono:
            vec[index[s]] = e
        return (sum(vec), vec)

    def leading(poly: LaurentPoly) -> tuple[Monomial, Fraction]:
        m = max(poly.terms, key=order)
        return m, poly.terms[m]

    lq_mono, lq_coeff = leading(qhat)
    lq = dict(lq_mono)
    quotient: dict[Monomial, Fraction] = {}
    rem = phat
    while not rem.is_zero():
        lm, lc = leading(rem)
        t = dict(lm)
        for s, e in lq.items():
            t[s] = t.get(s, 0) - e
        if any(e < 0 for e in t.values()):
            raise NotDivisible(f"({p.render()}) is not divisible by ({q.render()})")
        tm = _mono(t)
        tc = lc / lq_coeff
        quotient[tm] = quotient.get(tm, Fraction(0)) + tc
        rem = rem - LaurentPoly({tm: tc}, rules) * qhat
    shift = dict(cp)
    for s, e in cq.items():
        shift[s] = shift.get(s, 0) - e
    return _shift(LaurentPoly(quotient, rules), shift)


def try_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    try:
        return exact_divide(p, q)
    except NotDivisible:
        return None


class RationalFunction:
    """Fraction num / prod(den) with the denominator kept as a factor multiset.

    Equality is by cross multiplication, so no multivariate gcd is ever
    needed; cancellation happens only by trial exact division of the
    numerator by a factor, plus folding of unit (monomial) factors.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Iterable[LaurentPoly] = (), simplify: bool = True):
        den = tuple(den)
        for f in den:
            if f.is_zero():
                raise ZeroDivisionError("zero polynomial in denominator")
        if simplify:
            num, den = self._simplify(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _simplify(num: LaurentPoly, den: tuple[LaurentPoly, ...]):
        """Cheap normal form: drop unit (monomial) denominator factors only."""
        if num.is_zero():
            return num, ()
        kept: list[LaurentPoly] = []
        for f in den:
            if len(f.terms) == 1:
                num = num * f.monomial_inverse()
            else:
                kept.append(f)
        return num, tuple(kept)

    def cancelled(self) -> "RationalFunction":
        """Cancel denominator factors that exactly divide the numerator."""
        num, kept = self.num, []
        for f in self.den:
            q = try_divide(num, f)
            if q is not None:
                num = q
            else:
                kept.append(f)
        return RationalFunction(num, tuple(kept), simplify=False)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalFunction":
        return RationalFunction(p, (), simplify=False)

    @staticmethod
    def const(value, rules: GaussRules | None = None) -> "RationalFunction":
        return RationalFunction.from_poly(LaurentPoly.const(value, rules))

    @staticmethod
    def zero(rules: GaussRules | None = None) -> "RationalFunction":
        return RationalFunction.from_poly(LaurentPoly.zero(rules))

    @staticmethod
    def one(rules: GaussRules | None = None) -> "RationalFunction":
        return RationalFunction.const(1, rules)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(other, self.num.rules)
        return None

    # -- field operations ------------------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        common: list[LaurentPoly] = []
        rest_other = list(other.den)
        rest_self: list[LaurentPoly] = []
        for f in self.den:
            if f in rest_other:
                rest_other.remove(f)
                common.append(f)
            else:
                rest_self.append(f)
        num = self.num * _product(rest_other) + other.num * _product(rest_self)
        return RationalFunction(num, tuple(common) + tuple(rest_self) + tuple(rest_other))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, simplify=False)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * _product(other.den), self.den + (other.num,))

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = RationalFunction.one(self.num.rules)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "RationalFunction":
        return RationalFunction.one(self.num.rules) / self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return rf_equal(self, other)

    __hash__ = None  # equality is cross-multiplicative

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> LaurentPoly:
        """The underlying Laurent polynomial; NotDivisible if a denominator survives."""
        p = self.num
        for f in self.den:
            p = exact_divide(p, f)
        return p

    def substitute_monomials(self, images: Mapping[str, Mapping[str, int]]) -> "RationalFunction":
        return RationalFunction(
            self.num.substitute_monomials(images),
            tuple(f.substitute_monomials(images) for f in self.den),
            simplify=False,
        )

    def eval(self, point: Mapping[str, Fraction]) -> Fraction:
        value = self.num.eval(point)
        for f in self.den:
            d = f.eval(point)
            if d == 0:
                raise PoleError(f"denominator factor {f.render()} vanishes")
            value /= d
        return value

    def render(self) -> str:
        if not self.den:
            return self.num.render()
        den = "*".join(f"({f.render()})" for f in self.den)
        return f"({self.num.render()}) / {den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()})"


def _product(polys: Iterable[LaurentPoly], rules: GaussRules | None = None) -> LaurentPoly:
    result = LaurentPoly.one(rules)
    for p in polys:
        result = result * p
    return result


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """True iff a == b as rational functions (cross multiplication, no gcd)."""
    rules = _merge_rules(a.num.rules, b.num.rules)
    rest_a = list(a.den)
    rest_b: list[LaurentPoly] = []
    for f in b.den:
        if f in rest_a:
            rest_a.remove(f)  # shared factors cancel before cross multiplying
        else:
            rest_b.append(f)
    return a.num * _product(rest_b, rules) == b.num * _product(rest_a, rules)


def eval_rational(f: RationalFunction, point: Mapping[str, Fraction]) -> Fraction:
    """Exact value at a rational point; PoleError if any denominator vanishes."""
    return f.eval(point)


def conjugate_gauss(obj):
    """The global flip g_a -> g_{(-a) mod n} (the choice-of-embedding toggle)."""
    if isinstance(obj, RationalFunction):
        return RationalFunction(
            conjugate_gauss(obj.num),
            tuple(conjugate_gauss(f) for f in obj.den),
            simplify=False,
        )
    poly: LaurentPoly = obj
    if poly.rules is None:
        return poly
    n = poly.rules.modulus
    terms: dict[Monomial, Fraction] = {}
    for mono, coeff in poly.terms.items():
        exps: dict[str, int] = {}
        for name, exp in mono:
            a = _gauss_index(name)
            if a is not None:
                name = f"g{(-a) % n}"
            exps[name] = exps.get(name, 0) + exp
        key = _mono(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return LaurentPoly(terms, poly.rules)


# -- shared symbol helpers ----------------------------------------------------


def u(rules: GaussRules | None = None) -> LaurentPoly:
    return LaurentPoly.symbol("u", rules)


def v(rules: GaussRules | None = None) -> LaurentPoly:
    """The Hecke parameter v = u^2."""
    return LaurentPoly.monomial({"u": 2}, rules=rules)


def gauss_symbol(a: int, rules: GaussRules) -> LaurentPoly:
    """The Gauss symbol g_{a mod n} (g_0 collapses to zero_value)."""
    return LaurentPoly.symbol(f"g{a % rules.modulus}", rules)


def z_monomial(vec: Iterable[int], coeff=1, rules: GaussRules | None = None) -> LaurentPoly:
    """z^vec in coordinates z1, z2, ..."""
    return LaurentPoly.monomial({f"z{i + 1}": e for i, e in enumerate(vec)}, coeff, rules)
