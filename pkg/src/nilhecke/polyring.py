"""Sparse polynomials in the simple roots over the integers.

A polynomial is a map from dense exponent tuples (one entry per simple root)
to nonzero ``int`` coefficients.  Roots have graded degree 2.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .errors import InexactDivision, NotLinear, SystemMismatch


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[tuple, int]] = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    # construction
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "Polynomial":
        """The linear form sum(coeffs[i] * alpha_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    # predicates and accessors
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> Optional[int]:
        """Total degree in the variables (None for the zero polynomial)."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def graded_degree(self) -> Optional[int]:
        d = self.degree()
        return None if d is None else 2 * d

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def linear_coefficients(self) -> tuple:
        """Coefficient vector of a linear form; raises NotLinear otherwise."""
        out = [0] * self.nvars
        for e, c in self.terms.items():
            if sum(e) != 1:
                raise NotLinear(f"{self!r} is not a linear form")
            out[e.index(1)] = c
        return tuple(out)

    # arithmetic
    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise SystemMismatch(f"polynomials in {self.nvars} and {other.nvars} variables")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return _raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int) -> "Polynomial":
        if not k:
            return Polynomial(self.nvars)
        return _raw(self.nvars, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return _raw(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.to_str()})"

    def __str__(self):
        return self.to_str()

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [str(i + 1) for i in range(self.nvars)]
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"a_{names[i]}")
                elif k > 1:
                    factors.append(f"a_{names[i]}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending variable i to ``images[i]``."""
        result = Polynomial(self.nvars)
        powers = [[Polynomial.constant(self.nvars, 1)] for _ in range(self.nvars)]
        for e, c in self.terms.items():
            mono = Polynomial.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    pw = powers[i]
                    while len(pw) <= k:
                        pw.append(pw[-1] * images[i])
                    mono = mono * pw[k]
            result = result + mono
        return result


def _raw(nvars: int, terms: dict) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    p.nvars = nvars
    p.terms = terms
    p._hash = None
    return p


def root(system, s: int) -> Polynomial:
    return Polynomial.variable(system.rank, s)


def reflect_linear(system, s: int, vector: Sequence[int]) -> tuple:
    """s applied to a linear form given by its simple-root coordinates."""
    row = system.cartan[s]
    pairing = sum(a * v for a, v in zip(row, vector))
    out = list(vector)
    out[s] -= pairing
    return tuple(out)


def act(system, s: int, f: Polynomial) -> Polynomial:
    """Apply the generator ``s``: alpha_t -> alpha_t - cartan[s][t] * alpha_s."""
    n = system.rank
    if f.nvars != n:
        raise SystemMismatch(f"polynomial in {f.nvars} variables, system of rank {n}")
    row = system.cartan[s]
    images = []
    for t in range(n):
        coeffs = [0] * n
        coeffs[t] += 1
        coeffs[s] -= row[t]
        images.append(Polynomial.linear(coeffs))
    return f.substitute(images)


def act_element(w, f: Polynomial) -> Polynomial:
    """Apply a group element (given as an ``Element``) to ``f``."""
    n = f.nvars
    images = [Polynomial.linear(w.cols[t]) for t in range(n)]
    return f.substitute(images)


def divide_by_variable(f: Polynomial, s: int) -> Polynomial:
    terms = {}
    for e, c in f.terms.items():
        if e[s] == 0:
            raise InexactDivision(f"{f!r} is not divisible by variable {s}")
        e2 = list(e)
        e2[s] -= 1
        terms[tuple(e2)] = c
    return _raw(f.nvars, terms)


def demazure(system, s: int, f: Polynomial) -> Polynomial:
    """The Demazure operator (f - s f) / alpha_s, with exactness enforced."""
    return divide_by_variable(f - act(system, s, f), s)


def demazure_linear(system, s: int, vector: Sequence[int]) -> int:
    """Demazure operator on a linear form: the pairing with the coroot of ``s``."""
    return sum(a * v for a, v in zip(system.cartan[s], vector))


def exact_divide(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Quotient f / g if g divides f in Z[alpha], else None.

    Plain multivariate division by leading terms in lex order; when g | f over
    the integers every step divides exactly.
    """
    f._check(g)
    if not g.terms:
        raise ZeroDivisionError("division by zero polynomial")
    lead_e = max(g.terms)
    lead_c = g.terms[lead_e]
    g_rest = [(e, c) for e, c in g.terms.items() if e != lead_e]
    rem = dict(f.terms)
    quotient = {}
    while rem:
        e = max(rem)
        c = rem[e]
        if any(a < b for a, b in zip(e, lead_e)) or c % lead_c:
            return None
        qe = tuple(a - b for a, b in zip(e, lead_e))
        qc = c // lead_c
        quotient[qe] = qc
        del rem[e]
        for ge, gc in g_rest:
            te = tuple(a + b for a, b in zip(qe, ge))
            v = rem.get(te, 0) - qc * gc
            if v:
                rem[te] = v
            else:
                rem.pop(te, None)
    return _raw(f.nvars, quotient)


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse the textual form produced by ``Polynomial.to_str``."""
    n = len(names)
    index = {f"a_{name}": i for i, name in enumerate(names)}
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    result = Polynomial(n)
    pieces = []
    cur = ""
    for ch in text:
        if ch in "+-" and cur and not cur.endswith("^"):
            pieces.append(cur)
            cur = ch
        else:
            cur += ch
    pieces.append(cur)
    for piece in pieces:
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        coeff = sign
        expo = [0] * n
        for factor in piece.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            var, _, power = factor.partition("^")
            if var not in index:
                raise ValueError(f"unknown variable {var!r}")
            expo[index[var]] += int(power) if power else 1
        result = result + Polynomial(n, {tuple(expo): coeff})
    return result
