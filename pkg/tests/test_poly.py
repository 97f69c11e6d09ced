import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from keypipes.poly import (
    INT64_MAX,
    CoefficientOverflow,
    Polynomial,
    demazure_pi,
    demazure_quotient,
    key_polynomial,
)
from oracles import from_sympy, kohnert_key, sympy_pi, to_sympy


def polynomials(n, max_exp=4, max_terms=5):
    exps = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.dictionaries(exps, st.integers(-20, 20), max_size=max_terms).map(lambda d: Polynomial(d, n))


def test_text_format():
    f = Polynomial({(2, 0, 1): 3, (0, 1, 0): -1, (0, 0, 0): 5}, 3)
    assert str(f) == "3*x1^2*x3 - x2 + 5"
    assert str(Polynomial.zero(2)) == "0"
    assert str(-Polynomial.var(2, 2)) == "-x2"
    assert str(Polynomial({(1, 1): 1, (2, 0): 1}, 2)) == "x1^2 + x1*x2"


@given(polynomials(3))
def test_parse_inverts_str(f):
    assert Polynomial.parse(str(f), 3) == f


@given(polynomials(3), polynomials(3))
def test_arithmetic_matches_sympy(f, g):
    assert from_sympy(to_sympy(f) * to_sympy(g), 3) == f * g
    assert from_sympy(to_sympy(f) - to_sympy(g), 3) == f - g


def test_overflow_is_reported():
    big = Polynomial.constant(INT64_MAX, 1)
    with pytest.raises(CoefficientOverflow):
        big + 1
    with pytest.raises(CoefficientOverflow):
        big * 2
    assert (big - 1) + 1 == INT64_MAX


def test_mixing_variable_counts_fails():
    with pytest.raises(ValueError):
        Polynomial.var(1, 2) + Polynomial.var(1, 3)


@settings(max_examples=60)
@given(polynomials(3), st.sampled_from([1, 2]))
def test_demazure_matches_division(f, i):
    expected = sympy_pi(i, f)
    assert demazure_pi(i, f) == expected
    assert demazure_quotient(i, f) == expected


@given(polynomials(3), st.sampled_from([1, 2]))
def test_demazure_is_idempotent(f, i):
    once = demazure_pi(i, f)
    assert demazure_pi(i, once) == once


def test_demazure_small_cases():
    x = [Polynomial.var(i, 2) for i in (1, 2)]
    assert demazure_pi(1, x[0]) == x[0] + x[1]
    assert demazure_pi(1, x[1]) == 0
    assert demazure_pi(1, x[1] ** 3) == -(x[0] ** 2 * x[1]) - x[0] * x[1] ** 2
    assert demazure_pi(1, Polynomial.one(2)) == 1


def test_key_of_partition_is_monomial():
    assert key_polynomial((3, 1, 1, 0)) == Polynomial.monomial((3, 1, 1, 0))


def test_worked_example_has_thirteen_terms():
    k = key_polynomial((1, 3, 0, 2))
    assert len(k) == 13
    assert all(c == 1 for _, c in k.items())
    assert k.coefficient((3, 2, 1, 0)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_key_matches_kohnert(n):
    for alpha in itertools.product(range(4), repeat=n):
        assert key_polynomial(alpha) == kohnert_key(alpha), alpha


def test_ascent_choice_does_not_matter():
    for alpha in itertools.product(range(3), repeat=4):
        assert key_polynomial(alpha, choose=lambda a: a[-1]) == key_polynomial(alpha)


def test_bad_compositions():
    with pytest.raises(ValueError):
        key_polynomial((1, -1))
    with pytest.raises(ValueError):
        key_polynomial(())
