"""The nil Hecke ring in the D-basis, and the pairing d(e1, e2).

Elements are finite sums ``sum_w f_w D_w`` with polynomial coefficients on
the left.  Everything is built by right multiplication, using

    D_w D_s = D_{ws} if ws > w, else 0
    D_s f   = (s f) D_s + ds(f)

A second, independent evaluation in the delta basis of the smash product
``Q * W`` with rational coefficients lives at the bottom of this module and
is used as an oracle.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from .coxeter import Element, bruhat_leq, canonical_word, reduced_word
from .errors import (
    EndpointMismatch,
    HasD1,
    LengthMismatch,
    NotLinear,
    OracleBoundExceeded,
    OracleFailure,
    SystemMismatch,
)
from .polyring import Polynomial, act, act_element, demazure, demazure_linear, exact_divide, reflect_linear
from .subexpr import U0, Expression, decorate, has_D1

DEFAULT_ORACLE_BOUND = 12


class NHElement:
    """sum over w of coeffs[w] * D_w."""

    __slots__ = ("system", "coeffs")

    def __init__(self, system, coeffs: Optional[Dict[Element, Polynomial]] = None):
        self.system = system
        self.coeffs = {w: f for w, f in (coeffs or {}).items() if f}

    def __eq__(self, other):
        if not isinstance(other, NHElement):
            return NotImplemented
        return self.system is other.system and self.coeffs == other.coeffs

    def __repr__(self):
        names = self.system.generator_names
        parts = [
            f"({f.to_str(names)})*D[{self.system.format_word(canonical_word(w)) or 'id'}]"
            for w, f in sorted(self.coeffs.items(), key=lambda kv: (kv[0].length, canonical_word(kv[0])))
        ]
        return "NHElement(" + (" + ".join(parts) or "0") + ")"

    def __add__(self, other: "NHElement") -> "NHElement":
        out = dict(self.coeffs)
        for w, f in other.coeffs.items():
            out[w] = out[w] + f if w in out else f
        return NHElement(self.system, out)

    def __neg__(self):
        return NHElement(self.system, {w: -f for w, f in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def coefficient(self, w: Element) -> Polynomial:
        return self.coeffs.get(w, Polynomial(self.system.rank))

    def support(self) -> list:
        return list(self.coeffs)

    def scale_left(self, f: Polynomial) -> "NHElement":
        return NHElement(self.system, {w: f * g for w, g in self.coeffs.items()})

    def mul_right_D(self, s: int) -> "NHElement":
        out = {}
        for w, f in self.coeffs.items():
            if not w.is_right_descent(s):
                out[w.right_mul(s)] = f
        return NHElement(self.system, out)

    def mul_right_linear(self, lam, cache: Optional[dict] = None) -> "NHElement":
        """Right multiplication by a linear form (Polynomial or coordinate vector)."""
        vec = _as_vector(self.system, lam)
        if cache is None:
            cache = {}
        n = self.system.rank
        out: Dict[Element, Polynomial] = {}
        for w, f in self.coeffs.items():
            image, lower = _push_linear(w, vec, cache)
            _accumulate(out, w, f * Polynomial.linear(image))
            for v, k in lower.items():
                _accumulate(out, v, f.scale(k))
        return NHElement(self.system, out)

    def mul_right_poly(self, f: Polynomial, cache: Optional[dict] = None) -> "NHElement":
        if f.nvars != self.system.rank:
            raise SystemMismatch("polynomial and system rank differ")
        if f.is_constant():
            return NHElement(self.system, {w: g.scale(f.constant_value()) for w, g in self.coeffs.items()})
        if f.degree() == 1 and f.is_homogeneous():
            return self.mul_right_linear(f, cache)
        if cache is None:
            cache = {}
        out: Dict[Element, Polynomial] = {}
        for w, g in self.coeffs.items():
            for v, h in _push_poly(w, f, cache).items():
                _accumulate(out, v, g * h)
        return NHElement(self.system, out)

    def mul_right_monomials(self, f: Polynomial) -> "NHElement":
        """Right multiplication by f, expanding each monomial as a product of roots."""
        out = NHElement(self.system)
        cache: dict = {}
        for e, c in f.terms.items():
            piece = NHElement(self.system, {w: g.scale(c) for w, g in self.coeffs.items()})
            for i, k in enumerate(e):
                unit = [0] * len(e)
                unit[i] = 1
                for _ in range(k):
                    piece = piece.mul_right_linear(tuple(unit), cache)
            out = out + piece
        return out

    def __mul__(self, other: "NHElement") -> "NHElement":
        """General product; only used to check relations."""
        out = NHElement(self.system)
        for y, g in other.coeffs.items():
            piece = self.mul_right_poly(g)
            for s in reduced_word(y):
                piece = piece.mul_right_D(s)
            out = out + piece
        return out


def _accumulate(out: dict, w: Element, f: Polynomial) -> None:
    if not f:
        return
    if w in out:
        g = out[w] + f
        if g:
            out[w] = g
        else:
            del out[w]
    else:
        out[w] = f


def _as_vector(system, lam) -> tuple:
    if isinstance(lam, Polynomial):
        if lam.nvars != system.rank:
            raise SystemMismatch("linear form and system rank differ")
        return lam.linear_coefficients()
    vec = tuple(int(c) for c in lam)
    if len(vec) != system.rank:
        raise NotLinear(f"coordinate vector of length {len(vec)} for rank {system.rank}")
    return vec


def _push_linear(w: Element, vec: tuple, cache: dict):
    """D_w * lam = (w lam) D_w + sum n_v D_v; returns (w lam, {v: n_v}).

    Peel a right descent: w = w's, so
    D_w lam = (D_w' (s lam)) D_s + ds(lam) D_w'.
    """
    key = (w, vec)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if w.length == 0:
        result = (vec, {})
    else:
        system = w.system
        s = next(t for t, col in enumerate(w.cols) if min(col) < 0)
        wp = w.right_mul(s)
        image, lower = _push_linear(wp, reflect_linear(system, s, vec), cache)
        new_lower: Dict[Element, int] = {}
        for v, k in lower.items():
            if not v.is_right_descent(s):
                vs = v.right_mul(s)
                new_lower[vs] = new_lower.get(vs, 0) + k
        k = demazure_linear(system, s, vec)
        if k:
            new_lower[wp] = new_lower.get(wp, 0) + k
        result = (image, {v: k for v, k in new_lower.items() if k})
    cache[key] = result
    return result


def _push_poly(w: Element, f: Polynomial, cache: dict) -> Dict[Element, Polynomial]:
    """D_w * f written as sum_v P_v D_v, recursing on a right descent of w."""
    key = (w, f)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not f:
        result = {}
    elif w.length == 0:
        result = {w: f}
    else:
        system = w.system
        s = next(t for t, col in enumerate(w.cols) if min(col) < 0)
        wp = w.right_mul(s)
        result = {}
        for v, p in _push_poly(wp, act(system, s, f), cache).items():
            if not v.is_right_descent(s):
                _accumulate(result, v.right_mul(s), p)
        for v, p in _push_poly(wp, demazure(system, s, f), cache).items():
            _accumulate(result, v, p)
    cache[key] = result
    return result


def nh_one(system) -> NHElement:
    return NHElement(system, {system.identity(): Polynomial.constant(system.rank, 1)})


def D(system, w: Element) -> NHElement:
    return NHElement(system, {w: Polynomial.constant(system.rank, 1)})


# factor kinds in f(e1, e2)
ROOT, UNIT, DEMAZURE = "a", "1", "D"


def factor_kinds(dec1: Sequence[str], dec2: Sequence[str]) -> tuple:
    kinds = []
    for a, b in zip(dec1, dec2):
        if a == U0 and b == U0:
            kinds.append(ROOT)
        elif (a == U0) != (b == U0):
            kinds.append(UNIT)
        else:
            kinds.append(DEMAZURE)
    return tuple(kinds)


def _decorate_pair(w: Expression, e1, e2):
    d1 = decorate(w, e1)
    d2 = decorate(w, e2)
    if d1.endpoint != d2.endpoint:
        raise EndpointMismatch(f"endpoints {d1.endpoint!r} and {d2.endpoint!r} differ")
    return d1, d2


def f_element(w: Expression, e1, e2) -> NHElement:
    """The product f_1 f_2 ... f_m in the nil Hecke ring."""
    d1, d2 = _decorate_pair(w, e1, e2)
    return _evaluate(w, factor_kinds(d1.decorations, d2.decorations))


def _evaluate(w: Expression, kinds: Sequence[str], target: Optional[Element] = None) -> NHElement:
    """Left-to-right product; with ``target`` set, drop terms that cannot end at it."""
    system = w.system
    E = nh_one(system)
    cache: dict = {}
    n = system.rank
    # remaining D factors / root factors after position i
    rem_d = [0] * (len(kinds) + 1)
    rem_a = [0] * (len(kinds) + 1)
    for i in range(len(kinds) - 1, -1, -1):
        rem_d[i] = rem_d[i + 1] + (kinds[i] == DEMAZURE)
        rem_a[i] = rem_a[i + 1] + (kinds[i] == ROOT)
    for i, (s, kind) in enumerate(zip(w.letters, kinds)):
        if kind == ROOT:
            unit = [0] * n
            unit[s] = 1
            E = E.mul_right_linear(tuple(unit), cache)
        elif kind == DEMAZURE:
            E = E.mul_right_D(s)
        if target is not None:
            lo = target.length - rem_d[i + 1]
            hi = target.length + rem_a[i + 1]
            E = NHElement(system, {v: f for v, f in E.coeffs.items() if lo <= v.length <= hi})
    return E


def d_coefficient(w: Expression, e1, e2) -> Polynomial:
    """Coefficient of D_x in f(e1, e2), where x is the common endpoint."""
    d1, d2 = _decorate_pair(w, e1, e2)
    if has_D1(d1) or has_D1(d2):
        raise HasD1("pairing is only defined for subexpressions without D1")
    x = d1.endpoint
    return _evaluate(w, factor_kinds(d1.decorations, d2.decorations), target=x).coefficient(x)


# ---------------------------------------------------------------------------
# delta-basis oracle


def _normalize_root(vec: tuple):
    """Return (sign, positive representative) of a nonzero linear form."""
    for c in vec:
        if c:
            return (1, vec) if c > 0 else (-1, tuple(-a for a in vec))
    raise ZeroDivisionError("zero linear form")


class RationalFunction:
    """numerator / prod(linear factors), the factors normalized to be positive.

    No gcd reduction; equality is decided by cross-multiplication.
    """

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator: Polynomial, factors: Optional[Counter] = None):
        self.numerator = numerator
        self.factors = Counter(factors or {})

    @property
    def denominator(self) -> Polynomial:
        out = Polynomial.constant(self.numerator.nvars, 1)
        for vec, k in self.factors.items():
            out = out * Polynomial.linear(vec) ** k
        return out

    def is_zero(self) -> bool:
        return not self.numerator

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if not other.numerator:
            return self
        if not self.numerator:
            return other
        lcm = self.factors | other.factors
        a = self.numerator * _factor_product(self.numerator.nvars, lcm - self.factors)
        b = other.numerator * _factor_product(self.numerator.nvars, lcm - other.factors)
        return RationalFunction(a + b, lcm)

    def __neg__(self):
        return RationalFunction(-self.numerator, self.factors)

    def mul_linear(self, vec: tuple) -> "RationalFunction":
        sign, pos = _normalize_root(vec)
        if self.factors.get(pos):
            factors = Counter(self.factors)
            factors[pos] -= 1
            if not factors[pos]:
                del factors[pos]
            return RationalFunction(self.numerator.scale(sign), factors)
        return RationalFunction(self.numerator * Polynomial.linear(vec), self.factors)

    def div_linear(self, vec: tuple) -> "RationalFunction":
        sign, pos = _normalize_root(vec)
        factors = Counter(self.factors)
        factors[pos] += 1
        return RationalFunction(self.numerator.scale(sign), factors)

    def to_polynomial(self) -> Optional[Polynomial]:
        num = self.numerator
        for vec, k in self.factors.items():
            lin = Polynomial.linear(vec)
            for _ in range(k):
                num = exact_divide(num, lin)
                if num is None:
                    return None
        return num


def _factor_product(nvars: int, factors: Counter) -> Polynomial:
    out = Polynomial.constant(nvars, 1)
    for vec, k in factors.items():
        if k > 0:
            out = out * Polynomial.linear(vec) ** k
    return out


class DeltaElement:
    """sum over w of coeffs[w] * delta_w, coefficients in the fraction field."""

    __slots__ = ("system", "coeffs")

    def __init__(self, system, coeffs=None):
        self.system = system
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def one(cls, system) -> "DeltaElement":
        return cls(system, {system.identity(): RationalFunction(Polynomial.constant(system.rank, 1))})

    def __eq__(self, other):
        if not isinstance(other, DeltaElement):
            return NotImplemented
        zero = RationalFunction(Polynomial(self.system.rank))
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, zero) == other.coeffs.get(k, zero) for k in keys)

    def __add__(self, other: "DeltaElement") -> "DeltaElement":
        out = dict(self.coeffs)
        for y, c in other.coeffs.items():
            out[y] = out[y] + c if y in out else c
        return DeltaElement(self.system, out)

    def mul_left_poly(self, f: Polynomial) -> "DeltaElement":
        return DeltaElement(self.system, {x: RationalFunction(f * c.numerator, c.factors)
                                          for x, c in self.coeffs.items()})

    def mul_right_poly(self, f: Polynomial) -> "DeltaElement":
        return DeltaElement(self.system, {x: RationalFunction(c.numerator * act_element(x, f), c.factors)
                                          for x, c in self.coeffs.items()})

    def mul_right_linear(self, vec: tuple) -> "DeltaElement":
        # (c delta_x)(g delta_id) = c (x g) delta_x
        return DeltaElement(self.system, {x: c.mul_linear(x.apply(vec)) for x, c in self.coeffs.items()})

    def mul_right_D(self, s: int) -> "DeltaElement":
        # D_s = (1/alpha_s)(delta_id - delta_s)
        out: dict = {}
        for x, c in self.coeffs.items():
            q = c.div_linear(x.cols[s])
            for y, term in ((x, q), (x.right_mul(s), -q)):
                out[y] = out[y] + term if y in out else term
        return DeltaElement(self.system, out)


def to_delta(E: NHElement) -> DeltaElement:
    """Expand sum f_w D_w in the delta basis, each D_w along a reduced word."""
    out = DeltaElement(E.system)
    for w, f in E.coeffs.items():
        dw = DeltaElement.one(E.system)
        for s in reduced_word(w):
            dw = dw.mul_right_D(s)
        out = out + dw.mul_left_poly(f)
    return out


def oracle_bound() -> int:
    return int(os.environ.get("NILHECKE_ORACLE_BOUND", DEFAULT_ORACLE_BOUND))


def oracle_delta_d(w: Expression, e1, e2, bound: Optional[int] = None) -> Polynomial:
    """d(e1, e2) recomputed in the delta basis with rational coefficients."""
    if bound is None:
        bound = oracle_bound()
    if len(w.letters) > bound:
        raise OracleBoundExceeded(f"word length {len(w.letters)} exceeds oracle bound {bound}")
    d1 = decorate(w, e1)
    d2 = decorate(w, e2)
    if d1.endpoint != d2.endpoint:
        raise EndpointMismatch(f"endpoints {d1.endpoint!r} and {d2.endpoint!r} differ")
    if has_D1(d1) or has_D1(d2):
        raise HasD1("pairing is only defined for subexpressions without D1")
    system = w.system
    x = d1.endpoint
    n = system.rank

    prod = DeltaElement.one(system)
    for s, a, b in zip(w.letters, d1.decorations, d2.decorations):
        if a == U0 and b == U0:
            unit = [0] * n
            unit[s] = 1
            prod = prod.mul_right_linear(tuple(unit))
        elif (a == U0) == (b == U0):
            prod = prod.mul_right_D(s)

    for y, c in prod.coeffs.items():
        if c.numerator and not bruhat_leq(y, x):
            raise OracleFailure(f"delta support {y!r} is not below the endpoint")

    dx = DeltaElement.one(system)
    for s in canonical_word(x):
        dx = dx.mul_right_D(s)
    lead = dx.coeffs[x]
    top = prod.coeffs.get(x)
    if top is None:
        return Polynomial(n)
    # lead = +-1 / prod(roots)
    sign = lead.numerator.constant_value()
    ratio = RationalFunction(top.numerator.scale(sign) * _factor_product(n, lead.factors), top.factors)
    result = ratio.to_polynomial()
    if result is None:
        raise OracleFailure("D_x coefficient is not a polynomial")
    return result
