"""Laurent polynomials in v with integer coefficients."""
from __future__ import annotations

from typing import Mapping, Optional


class LaurentPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self.coeffs.items()})
        out: dict = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def min_degree(self) -> Optional[int]:
        return min(self.coeffs) if self.coeffs else None

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "v" if k == 1 else f"v^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)


V = LaurentPoly({1: 1})
V_INV = LaurentPoly({-1: 1})
