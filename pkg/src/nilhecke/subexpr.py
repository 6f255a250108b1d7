"""Expressions, 01-sequences, U/D decorations, defect, and pruned enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .coxeter import CoxeterSystem, Element, bruhat_leq, demazure_product, reduced_word
from .errors import InputError, LengthMismatch
from .laurent import LaurentPoly

U0, U1, D0, D1 = "U0", "U1", "D0", "D1"


@dataclass(frozen=True)
class Expression:
    system: CoxeterSystem
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for s in self.letters:
            self.system.check_index(s)

    @classmethod
    def parse(cls, system: CoxeterSystem, text) -> "Expression":
        return cls(system, system.parse_word(text))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.system.format_word(self.letters)

    def product(self) -> Element:
        return self.system.element(self.letters)

    def star(self) -> Element:
        return demazure_product(self.system, self.letters)


@dataclass(frozen=True)
class DecoratedSubexpression:
    expression: Expression
    bits: tuple
    decorations: tuple
    endpoint: Element
    defect: int

    @property
    def bitstring(self) -> str:
        return "".join(map(str, self.bits))

    def decoration_string(self) -> str:
        return " ".join(self.decorations)


@dataclass(frozen=True)
class EnumerationFilter:
    no_d1: bool = False
    exact_defect: Optional[int] = None
    max_defect: Optional[int] = None


def parse_bits(text: str) -> tuple:
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise InputError(f"bitstring {text!r} must contain only 0 and 1")
    return tuple(int(ch) for ch in text)


def bits_from_decorations(decorations: Sequence[str]) -> tuple:
    return tuple(int(d[1]) for d in decorations)


def decorate(w: Expression, bits: Sequence[int]) -> DecoratedSubexpression:
    bits = tuple(int(b) for b in bits)
    if len(bits) != len(w.letters):
        raise LengthMismatch(f"{len(bits)} bits for an expression of length {len(w.letters)}")
    if any(b not in (0, 1) for b in bits):
        raise InputError("bits must be 0 or 1")
    cur = w.system.identity()
    decorations = []
    defect = 0
    for s, e in zip(w.letters, bits):
        up = not cur.is_right_descent(s)
        decorations.append(("U" if up else "D") + str(e))
        if e:
            cur = cur.right_mul(s)
        elif up:
            defect += 1
        else:
            defect -= 1
    return DecoratedSubexpression(w, bits, tuple(decorations), cur, defect)


def has_D1(d: DecoratedSubexpression) -> bool:
    return D1 in d.decorations


def greedy_subexpression(w: Expression) -> DecoratedSubexpression:
    """Take every letter that goes up; the endpoint is the Demazure product."""
    cur = w.system.identity()
    bits = []
    for s in w.letters:
        if cur.is_right_descent(s):
            bits.append(0)
        else:
            bits.append(1)
            cur = cur.right_mul(s)
    return decorate(w, bits)


def _suffix_star_words(w: Expression) -> list:
    """Reduced words of the Demazure products of each suffix w[i:], i = 0..m."""
    system = w.system
    m = len(w.letters)
    words = []
    for i in range(m + 1):
        words.append(reduced_word(demazure_product(system, w.letters[i:])))
    return words


def iter_subexpressions(
    w: Expression, x: Element, filt: EnumerationFilter = EnumerationFilter()
) -> Iterator[DecoratedSubexpression]:
    """Depth-first search over 01-sequences with endpoint ``x``, in lexicographic order.

    A partial state is cut when ``x`` is not below ``w_i * (suffix)_*``, when the
    remaining letters cannot make up the length, or when a defect filter can
    no longer be met.
    """
    letters = w.letters
    m = len(letters)
    target_len = x.length
    if target_len > m:
        return
    tops = SuffixTops(w)
    exact = filt.exact_defect
    cap = filt.max_defect

    bits = [0] * m
    decs = [""] * m
    reachable: dict = {}

    def viable(i: int, cur: Element, defect: int) -> bool:
        r = m - i
        if target_len > cur.length + r:
            return False
        if exact is not None and not (defect - r <= exact <= defect + r):
            return False
        if cap is not None and defect - r > cap:
            return False
        if i == m:
            return cur == x
        key = (i, cur)
        ok = reachable.get(key)
        if ok is None:
            ok = reachable[key] = bruhat_leq(x, tops.top(i, cur))
        return ok

    def dfs(i: int, cur: Element, defect: int):
        if i == m:
            yield DecoratedSubexpression(w, tuple(bits), tuple(decs), cur, defect)
            return
        s = letters[i]
        up = not cur.is_right_descent(s)
        # bit 0
        nd = defect + (1 if up else -1)
        if viable(i + 1, cur, nd):
            bits[i] = 0
            decs[i] = U0 if up else D0
            yield from dfs(i + 1, cur, nd)
        # bit 1
        if up or not filt.no_d1:
            nxt = cur.right_mul(s)
            if viable(i + 1, nxt, defect):
                bits[i] = 1
                decs[i] = U1 if up else D1
                yield from dfs(i + 1, nxt, defect)

    if viable(0, w.system.identity(), 0):
        yield from dfs(0, w.system.identity(), 0)


def enumerate_subexpressions(
    w: Expression, x: Element, filt: EnumerationFilter = EnumerationFilter()
) -> list:
    return list(iter_subexpressions(w, x, filt))


class SuffixTops:
    """Per-expression cache of ``cur * (w[i:])_*`` used by the reachability cut."""

    def __init__(self, w: Expression):
        self.words = _suffix_star_words(w)
        self._tops: dict = {}

    def top(self, i: int, cur: Element) -> Element:
        key = (i, cur)
        top = self._tops.get(key)
        if top is None:
            top = cur
            for s in self.words[i]:
                if not top.is_right_descent(s):
                    top = top.right_mul(s)
            self._tops[key] = top
        return top


def defect_generating_function(w: Expression, x: Element, tops: Optional[SuffixTops] = None) -> LaurentPoly:
    """Sum of v**defect over all subexpressions of ``w`` with endpoint ``x``.

    Counts completions per (position, prefix element) state instead of listing
    subexpressions, with the same reachability cut as the enumerator.  Pass a
    shared ``tops`` when querying many ``x`` for the same ``w``.
    """
    letters = w.letters
    m = len(letters)
    if x.length > m:
        return LaurentPoly()
    if tops is None:
        tops = SuffixTops(w)
    memo: dict = {}

    def count(i: int, cur: Element) -> dict:
        key = (i, cur)
        if key in memo:
            return memo[key]
        if i == m:
            out = {0: 1} if cur == x else {}
        elif x.length > cur.length + (m - i) or not bruhat_leq(x, tops.top(i, cur)):
            out = {}
        else:
            s = letters[i]
            step = -1 if cur.is_right_descent(s) else 1
            out = {k + step: c for k, c in count(i + 1, cur).items()}
            for k, c in count(i + 1, cur.right_mul(s)).items():
                out[k] = out.get(k, 0) + c
        memo[key] = out
        return out

    return LaurentPoly(count(0, w.system.identity()))


def is_reduced(system: CoxeterSystem, word: Sequence[int]) -> bool:
    return system.element(word).length == len(word)
