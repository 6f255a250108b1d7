"""Coxeter systems from integral generalized Cartan matrices.

An element ``w`` is stored as its action on h* in simple-root coordinates:
``w.cols[t]`` is the coordinate vector of ``w(alpha_t)``.  The generator
``s`` acts by ``s(alpha_t) = alpha_t - cartan[s][t] * alpha_s``.  For a
generalized Cartan matrix this representation is faithful, so elements are
compared by their matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    AsymmetricZero,
    BadGeneratorIndex,
    DiagonalNotTwo,
    OrderMismatch,
    PositiveOffDiagonal,
)

# m_st derived from p = cartan[s][t] * cartan[t][s]; None stands for infinity.
_ORDER_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True, eq=False)
class CoxeterSystem:
    generator_names: tuple
    cartan: tuple
    coxeter_matrix: tuple
    name: str = ""
    _gens: tuple = field(default=(), repr=False)
    _identity: "Element" = field(default=None, repr=False)
    # per generator s: the (t, cartan[s][t]) with t != s and a nonzero entry
    _offdiag: tuple = field(default=(), repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def generator_actions(self) -> tuple:
        """Row-major integer matrix of each generator acting on h*."""
        n = self.rank
        return tuple(
            tuple(
                tuple((1 if i == j else 0) - (self.cartan[s][j] if i == s else 0) for j in range(n))
                for i in range(n)
            )
            for s in range(n)
        )

    def identity(self) -> "Element":
        return self._identity

    def gen(self, s: int) -> "Element":
        self.check_index(s)
        return self._gens[s]

    def check_index(self, s) -> None:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < self.rank:
            raise BadGeneratorIndex(f"generator index {s!r} out of range for rank {self.rank}")

    def index(self, name: str) -> int:
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise BadGeneratorIndex(f"unknown generator name {name!r}") from None

    def parse_word(self, text) -> tuple:
        """Parse a space- or comma-separated word of generator names."""
        if isinstance(text, str):
            tokens = text.replace(",", " ").split()
        else:
            tokens = list(text)
        return tuple(self.index(tok) for tok in tokens)

    def format_word(self, word: Iterable[int]) -> str:
        return " ".join(self.generator_names[s] for s in word)

    def element(self, word: Iterable[int]) -> "Element":
        return element_from_word(self, word)

    def m(self, s: int, t: int) -> Optional[int]:
        return self.coxeter_matrix[s][t]

    def __reduce__(self):
        return (new_system, (self.cartan, self.coxeter_matrix, self.generator_names, self.name))


class Element:
    """A Coxeter group element, stored as an integer matrix with cached length."""

    __slots__ = ("system", "cols", "length", "_hash")

    def __init__(self, system: CoxeterSystem, cols: tuple, length: Optional[int] = None):
        self.system = system
        self.cols = cols
        self._hash = hash(cols)
        if length is None:
            length = len(_strip(self)[0])
        self.length = length

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.system is other.system and self.cols == other.cols

    def __hash__(self):
        return self._hash

    def __repr__(self):
        word = self.system.format_word(canonical_word(self))
        return f"Element({word or 'id'})"

    def __reduce__(self):
        return (Element, (self.system, self.cols, self.length))

    def is_identity(self) -> bool:
        return self.length == 0

    def is_right_descent(self, s: int) -> bool:
        return min(self.cols[s]) < 0

    def right_descents(self) -> list:
        return [s for s in range(len(self.cols)) if min(self.cols[s]) < 0]

    def right_mul(self, s: int) -> "Element":
        cols = self.cols
        cs = cols[s]
        new = list(cols)
        new[s] = tuple([-c for c in cs])
        for t, a in self.system._offdiag[s]:
            new[t] = tuple([x - a * y for x, y in zip(cols[t], cs)])
        down = min(cs) < 0
        return Element(self.system, tuple(new), self.length - 1 if down else self.length + 1)

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        result = self
        for s in reduced_word(other):
            result = result.right_mul(s)
        return result

    def star(self, other) -> "Element":
        """Demazure product with a generator index or another element."""
        if isinstance(other, Element):
            result = self
            for s in reduced_word(other):
                result = demazure_star(result, s)
            return result
        return demazure_star(self, other)

    def inverse(self) -> "Element":
        return element_from_word(self.system, reversed(reduced_word(self)))

    def apply(self, vector: Sequence[int]) -> tuple:
        """Image of a linear form (simple-root coordinates) under this element."""
        n = len(self.cols)
        out = [0] * n
        for t, c in enumerate(vector):
            if c:
                col = self.cols[t]
                for i in range(n):
                    out[i] += c * col[i]
        return tuple(out)


def _p_rule(p: int) -> Optional[int]:
    return _ORDER_FROM_PRODUCT.get(p) if p < 4 else None


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _order_is(matrix, m: int) -> bool:
    n = len(matrix)
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    power = matrix
    for k in range(1, m):
        if power == ident:
            return False
        power = _matmul(power, matrix)
    return power == ident


def new_system(
    cartan,
    coxeter_override=None,
    generator_names: Optional[Sequence[str]] = None,
    name: str = "",
) -> CoxeterSystem:
    """Validate a generalized Cartan matrix and build its Coxeter system.

    ``cartan[s][t]`` is the pairing of the coroot of ``s`` with the root of ``t``.
    ``coxeter_override`` entries may be integers or ``None``/``"inf"`` for infinity.
    """
    cartan = tuple(tuple(int(a) for a in row) for row in cartan)
    n = len(cartan)
    if n < 1 or any(len(row) != n for row in cartan):
        raise ValueError("Cartan matrix must be square of size >= 1")
    for s in range(n):
        if cartan[s][s] != 2:
            raise DiagonalNotTwo(f"cartan[{s}][{s}] = {cartan[s][s]}")
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            if cartan[s][t] > 0:
                raise PositiveOffDiagonal(f"cartan[{s}][{t}] = {cartan[s][t]}")
            if (cartan[s][t] == 0) != (cartan[t][s] == 0):
                raise AsymmetricZero(f"cartan[{s}][{t}] = {cartan[s][t]}, cartan[{t}][{s}] = {cartan[t][s]}")

    if generator_names is None:
        generator_names = [str(i + 1) for i in range(n)]
    generator_names = tuple(str(g) for g in generator_names)
    if len(generator_names) != n or len(set(generator_names)) != n:
        raise ValueError("need one distinct name per generator")

    derived = [[1 if s == t else _p_rule(cartan[s][t] * cartan[t][s]) for t in range(n)] for s in range(n)]
    if coxeter_override is None:
        coxeter = derived
    else:
        coxeter = [[_parse_order(v) for v in row] for row in coxeter_override]
        if len(coxeter) != n or any(len(row) != n for row in coxeter):
            raise OrderMismatch("Coxeter matrix has the wrong shape")
        actions = _actions(cartan)
        for s in range(n):
            if coxeter[s][s] != 1:
                raise OrderMismatch(f"m[{s}][{s}] must be 1")
            for t in range(s + 1, n):
                m = coxeter[s][t]
                if m != coxeter[t][s]:
                    raise OrderMismatch(f"Coxeter matrix not symmetric at ({s}, {t})")
                if m is None:
                    if derived[s][t] is not None:
                        raise OrderMismatch(f"m[{s}][{t}] = inf but (st) has order {derived[s][t]}")
                    continue
                if m < 2 or not _order_is(_matmul(actions[s], actions[t]), m):
                    raise OrderMismatch(f"(st) for s={s}, t={t} does not have order {m}")
    coxeter = tuple(tuple(row) for row in coxeter)

    offdiag = tuple(tuple((t, cartan[s][t]) for t in range(n) if t != s and cartan[s][t]) for s in range(n))
    system = CoxeterSystem(generator_names, cartan, coxeter, name, _offdiag=offdiag)
    ident_cols = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    identity = Element(system, ident_cols, 0)
    object.__setattr__(system, "_identity", identity)
    object.__setattr__(system, "_gens", tuple(identity.right_mul(s) for s in range(n)))
    return system


def _actions(cartan):
    n = len(cartan)
    return [
        tuple(
            tuple((1 if i == j else 0) - (cartan[s][j] if i == s else 0) for j in range(n))
            for i in range(n)
        )
        for s in range(n)
    ]


def _parse_order(value) -> Optional[int]:
    if value is None or (isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "∞")):
        return None
    return int(value)


def element_from_word(system: CoxeterSystem, word: Iterable[int]) -> Element:
    w = system.identity()
    for s in word:
        system.check_index(s)
        w = w.right_mul(s)
    return w


def _strip(w: Element):
    """Remove least right descents until the identity; returns (removed letters, identity)."""
    removed = []
    system = w.system
    cols = w.cols
    n = len(cols)
    while True:
        for s in range(n):
            if min(cols[s]) < 0:
                break
        else:
            return removed, cols
        removed.append(s)
        cs = cols[s]
        new = list(cols)
        new[s] = tuple([-c for c in cs])
        for t, a in system._offdiag[s]:
            new[t] = tuple([x - a * y for x, y in zip(cols[t], cs)])
        cols = tuple(new)


def length(w: Element) -> int:
    return w.length


def is_right_descent(w: Element, s: int) -> bool:
    return w.is_right_descent(s)


def reduced_word(w: Element) -> tuple:
    """Some reduced word for ``w`` (reverse of the descent-stripping sequence)."""
    removed, _ = _strip(w)
    return tuple(reversed(removed))


def canonical_word(w: Element) -> tuple:
    """ShortLex normal form: repeatedly split off the least left descent."""
    removed, _ = _strip(w.inverse()) if w.length else ([], None)
    return tuple(removed)


def bruhat_leq(x: Element, w: Element) -> bool:
    if x.length > w.length:
        return False
    while True:
        if x.length == w.length:
            return x == w
        if x.length == 0:
            return True
        for s, col in enumerate(w.cols):
            if min(col) < 0:
                break
        if min(x.cols[s]) < 0:
            x = x.right_mul(s)
        w = w.right_mul(s)
        if x.length > w.length:
            return False


def demazure_star(x: Element, s: int) -> Element:
    if x.is_right_descent(s):
        return x
    return x.right_mul(s)


def demazure_product(system: CoxeterSystem, word: Iterable[int]) -> Element:
    w = system.identity()
    for s in word:
        system.check_index(s)
        w = demazure_star(w, s)
    return w


def enumerate_group(system: CoxeterSystem, max_length: Optional[int] = None) -> list:
    """All elements up to ``max_length`` (all of W if finite and no bound), by breadth-first search."""
    seen = {system.identity()}
    frontier = [system.identity()]
    out = [system.identity()]
    level = 0
    while frontier and (max_length is None or level < max_length):
        nxt = []
        for w in frontier:
            for s in range(system.rank):
                v = w.right_mul(s)
                if v.length > w.length and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        out.extend(nxt)
        frontier = nxt
        level += 1
    return out
