import json

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix

from nilhecke.errors import NonConstantEntries
from nilhecke.forms import determinant, dumps, gram_matrix, smith_normal_form, torsion_primes
from nilhecke.subexpr import EnumerationFilter, Expression

from conftest import system
from oracles import determinantal_divisors

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)
square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(matrices)
def test_smith_normal_form_matches_minors(M):
    divisors = smith_normal_form(M)
    assert divisors == determinantal_divisors(M)
    nonzero = [d for d in divisors if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


@given(square)
def test_determinant(M):
    assert determinant(M) == int(Matrix(M).det())


def test_smith_examples():
    assert smith_normal_form([[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]) == [1, 1, 2]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[6]]) == [6]


def test_braden_d4_gram():
    S = system("D4")
    w = Expression.parse(S, "s u v t s u v")
    x = S.element(S.parse_word("s u v"))
    report = gram_matrix(w, x, EnumerationFilter(exact_defect=0))
    assert report.constant_matrix == [[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]
    assert report.determinant == -2
    assert report.elementary_divisors == [1, 1, 2]
    assert report.torsion_primes == [2]
    assert torsion_primes(report) == {2}


def test_parallel_matches_serial():
    S = system("D4")
    w = Expression.parse(S, "s u v t s u v")
    x = S.element(S.parse_word("s u v"))
    a = gram_matrix(w, x, EnumerationFilter(max_defect=2))
    b = gram_matrix(w, x, EnumerationFilter(max_defect=2), jobs=2)
    assert a.to_json() == b.to_json()


def test_gram_forces_no_d1():
    S = system("A2")
    w = Expression.parse(S, "1 1 1")
    report = gram_matrix(w, S.gen(0), EnumerationFilter(no_d1=False))
    assert report.filter.no_d1
    assert all("D1" not in d.decorations for d in report.basis)


def test_non_constant_entries():
    S = system("B2")
    report = gram_matrix(Expression(S, (0, 1, 0)), S.gen(0))
    assert report.constant_matrix is None
    with pytest.raises(NonConstantEntries):
        torsion_primes(report)
    data = report.to_dict()
    # basis in lexicographic bit order: 001 then 100
    assert [b["bits"] for b in data["basis"]] == ["001", "100"]
    assert data["entries"] == [["a_s*a_t", "a_t"], ["a_t", "-1"]]
    assert data["restriction"] == "no-D1 subexpressions only"


def test_json_is_canonical():
    S = system("D4")
    w = Expression.parse(S, "s u v t s u v")
    x = S.element(S.parse_word("s u v"))
    text = gram_matrix(w, x, EnumerationFilter(exact_defect=0)).to_json()
    assert text.endswith("\n")
    assert dumps(json.loads(text)) == text
