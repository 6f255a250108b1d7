"""Gram matrices of pairings, integer specialization, Smith normal form, torsion."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional

from sympy import factorint

from .coxeter import Element, canonical_word
from .errors import NonConstantEntries
from .nhring import d_coefficient
from .polyring import Polynomial
from .subexpr import EnumerationFilter, Expression, enumerate_subexpressions


@dataclass
class GramReport:
    word: Expression
    x: Element
    basis: list
    entries: List[List[Polynomial]]
    filter: EnumerationFilter = field(default_factory=lambda: EnumerationFilter(no_d1=True))
    constant_matrix: Optional[List[List[int]]] = None
    determinant: Optional[int] = None
    elementary_divisors: Optional[List[int]] = None
    torsion_primes: Optional[List[int]] = None

    def to_dict(self) -> dict:
        system = self.word.system
        names = system.generator_names
        return {
            "system": system.name,
            "generators": list(names),
            "word": str(self.word),
            "x": system.format_word(canonical_word(self.x)),
            "restriction": "no-D1 subexpressions only",
            "filter": {
                "no_d1": self.filter.no_d1,
                "exact_defect": self.filter.exact_defect,
                "max_defect": self.filter.max_defect,
            },
            "basis": [
                {"bits": d.bitstring, "decorations": list(d.decorations), "defect": d.defect}
                for d in self.basis
            ],
            "entries": [[f.to_str(names) for f in row] for row in self.entries],
            "constant_matrix": self.constant_matrix,
            "determinant": self.determinant,
            "elementary_divisors": self.elementary_divisors,
            "torsion_primes": self.torsion_primes,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _entry(args):
    word, bits1, bits2 = args
    return d_coefficient(word, bits1, bits2)


def gram_matrix(w: Expression, x: Element, filt: EnumerationFilter = EnumerationFilter(no_d1=True),
                jobs: int = 1) -> GramReport:
    filt = replace(filt, no_d1=True)
    basis = enumerate_subexpressions(w, x, filt)
    k = len(basis)
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    tasks = [(w, basis[i].bits, basis[j].bits) for i, j in pairs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_entry, tasks))
    else:
        values = [_entry(t) for t in tasks]
    entries: List[List[Optional[Polynomial]]] = [[None] * k for _ in range(k)]
    for (i, j), val in zip(pairs, values):
        entries[i][j] = entries[j][i] = val
    report = GramReport(w, x, basis, entries, filt)
    if all(f.is_constant() for row in entries for f in row):
        const = [[f.constant_value() for f in row] for row in entries]
        report.constant_matrix = const
        report.determinant = determinant(const)
        report.elementary_divisors = smith_normal_form(const)
        report.torsion_primes = sorted(_primes_of(report.elementary_divisors))
    return report


def determinant(M) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M) -> List[int]:
    """Elementary divisors d1 | d2 | ... (nonnegative, zeros last), length min(rows, cols)."""
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    divisors = []
    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                divisors.extend([0] * (min(rows, cols) - t))
                return divisors
            pi, pj = pivot
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                dirty |= A[i][t] != 0
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        divisors.append(abs(A[t][t]))
    return divisors


def _primes_of(divisors) -> set:
    primes = set()
    for d in divisors:
        if d not in (0, 1):
            primes.update(factorint(d))
    return primes


def torsion_primes(report: GramReport) -> set:
    if report.constant_matrix is None:
        raise NonConstantEntries("Gram matrix has non-constant entries")
    divisors = report.elementary_divisors
    if divisors is None:
        divisors = smith_normal_form(report.constant_matrix)
    return _primes_of(divisors)
