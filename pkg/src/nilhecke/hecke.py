"""Hecke algebra in the standard basis, products of H_s + v, and the Deodhar cross-check."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .coxeter import Element, canonical_word
from .laurent import V, V_INV, LaurentPoly
from .subexpr import Expression, SuffixTops, defect_generating_function


class HeckeElement:
    __slots__ = ("system", "coeffs")

    def __init__(self, system, coeffs: Optional[Dict[Element, LaurentPoly]] = None):
        self.system = system
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if c}

    @classmethod
    def one(cls, system) -> "HeckeElement":
        return cls(system, {system.identity(): LaurentPoly({0: 1})})

    @classmethod
    def basis(cls, system, w: Element) -> "HeckeElement":
        return cls(system, {w: LaurentPoly({0: 1})})

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.system is other.system and self.coeffs == other.coeffs

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.system, out)

    def scale(self, c: LaurentPoly) -> "HeckeElement":
        return HeckeElement(self.system, {w: a * c for w, a in self.coeffs.items()})

    def coefficient(self, w: Element) -> LaurentPoly:
        return self.coeffs.get(w, LaurentPoly())

    def mul_right_Hs(self, s: int) -> "HeckeElement":
        # H_y H_s = H_ys if ys > y, else H_ys + (v^-1 - v) H_y
        out: Dict[Element, LaurentPoly] = {}
        for y, c in self.coeffs.items():
            ys = y.right_mul(s)
            out[ys] = out[ys] + c if ys in out else c
            if ys.length < y.length:
                extra = c * (V_INV - V)
                out[y] = out[y] + extra if y in out else extra
        return HeckeElement(self.system, out)

    def mul_right_KLs(self, s: int) -> "HeckeElement":
        """Right multiplication by H_s + v."""
        return self.mul_right_Hs(s) + self.scale(V)

    def __str__(self):
        items = sorted(self.coeffs.items(), key=lambda kv: (kv[0].length, canonical_word(kv[0])))
        return " + ".join(
            f"({c})*H[{self.system.format_word(canonical_word(w)) or 'id'}]" for w, c in items
        ) or "0"


def mul_right_Hs(E: HeckeElement, s: int) -> HeckeElement:
    return E.mul_right_Hs(s)


def bott_samelson_product(w: Expression) -> HeckeElement:
    """(H_{s1} + v)(H_{s2} + v)...(H_{sm} + v) in the standard basis."""
    E = HeckeElement.one(w.system)
    for s in w.letters:
        E = E.mul_right_KLs(s)
    return E


@dataclass
class DeodharReport:
    word: str
    passed: bool
    checked: int
    discrepancy: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "status": "PASS" if self.passed else "FAIL",
            "checked": self.checked,
            "discrepancy": self.discrepancy,
        }


def deodhar_check(w: Expression) -> DeodharReport:
    """Compare each H_x coefficient of the product with the defect generating function of x."""
    product = bott_samelson_product(w)
    endpoints = {w.system.identity()}
    for s in w.letters:
        endpoints |= {y.right_mul(s) for y in endpoints}
    candidates = endpoints | set(product.coeffs)
    tops = SuffixTops(w)
    checked = 0
    for x in sorted(candidates, key=lambda y: (y.length, canonical_word(y))):
        coeff = product.coefficient(x)
        gf = defect_generating_function(w, x, tops)
        checked += 1
        if gf != coeff:
            return DeodharReport(
                str(w), False, checked,
                {
                    "x": w.system.format_word(canonical_word(x)),
                    "hecke": str(coeff),
                    "defects": str(gf),
                },
            )
    return DeodharReport(str(w), True, checked)
