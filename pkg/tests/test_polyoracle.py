import pytest
from hypothesis import given, settings, strategies as st

from pdgwebster.polyoracle import (
    Polynomial,
    SymFunExpr,
    check_elementary_derivative,
    check_leibniz_power,
    check_p_nilpotent_on,
    complete_h_in_elementary,
    complete_homogeneous,
    deriv,
    divided_difference,
    elementary,
    iterate_deriv,
    monomials_up_to,
    multiply_by_variable,
    sym_deriv,
)


def t(i, n, p=3, k=1):
    return Polynomial.variable(i, n, p, k)


def test_deriv_examples():
    assert deriv(t(1, 2)) == t(1, 2, k=2)
    for k in range(1, 6):
        assert deriv(t(1, 1, 7, k)) == t(1, 1, 7, k + 1) * k
    assert deriv(Polynomial.constant(1, 2, 3)).is_zero()


def test_elementary_examples():
    assert elementary(0, 3, 5) == 1
    assert elementary(2, 3, 5) == t(1, 3, 5) * t(2, 3, 5) + t(1, 3, 5) * t(3, 3, 5) + t(2, 3, 5) * t(3, 3, 5)
    assert elementary(4, 3, 5).is_zero()


def test_elementary_derivative_examples():
    assert check_elementary_derivative(1, 2, 3)
    assert check_elementary_derivative(2, 3, 2)
    for n in range(1, 5):
        # top case: d(E_n) = E_1 E_n
        assert deriv(elementary(n, n, 5)) == elementary(1, n, 5) * elementary(n, n, 5)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_elementary_derivative_grid(p):
    for n in range(1, 6):
        for i in range(1, n + 1):
            assert check_elementary_derivative(i, n, p)


def test_p_nilpotent_examples():
    assert check_p_nilpotent_on(t(1, 1, 3))
    assert check_p_nilpotent_on(elementary(2, 3, 3))
    assert check_p_nilpotent_on(Polynomial.constant(1, 2, 3))
    # d^2 t = 2 t^3 is nonzero mod 3
    assert not iterate_deriv(t(1, 1, 3), 2).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_p_nilpotent_on_all_small_monomials(p):
    for n in range(1, 5):
        for exps in monomials_up_to(n, 4):
            f = Polynomial(n, p, {exps: 1})
            assert check_p_nilpotent_on(f)


def test_complete_h_examples():
    E = lambda d: SymFunExpr.symbol(d, 3, 7)  # noqa: E731
    assert complete_h_in_elementary(0, 3, 7) == E(0)
    assert complete_h_in_elementary(2, 3, 7) == E(1) * E(1) + E(2) * (-1)
    assert complete_h_in_elementary(3, 3, 7) == E(1) * E(1) * E(1) + E(1) * E(2) * (-2) + E(3)


def test_complete_h_frozen_coefficients():
    # h_4 = E1^4 - 3 E1^2 E2 + E2^2 + 2 E1 E3 - E4, frozen from the polynomial oracle
    h4 = complete_h_in_elementary(4, 4, 101)
    assert h4.coefficient((4, 0, 0, 0)) == 1
    assert h4.coefficient((2, 1, 0, 0)) == 101 - 3
    assert h4.coefficient((0, 2, 0, 0)) == 1
    assert h4.coefficient((1, 0, 1, 0)) == 2
    assert h4.coefficient((0, 0, 0, 1)) == 100


@pytest.mark.parametrize("p", [2, 3, 5])
def test_complete_h_against_enumeration(p):
    for n in range(1, 5):
        for k in range(6):
            assert complete_h_in_elementary(k, n, p).evaluate(n) == complete_homogeneous(k, n, p)


def test_sym_deriv_matches_polynomial_derivative():
    for n in range(1, 5):
        for d in range(1, n + 1):
            lhs = sym_deriv(SymFunExpr.symbol(d, n, 5)).evaluate(n)
            assert lhs == deriv(elementary(d, n, 5))


def test_degree_and_homogeneity():
    f = t(1, 2) * t(2, 2) + t(1, 2, k=2)
    assert f.degree() == 4 and f.is_homogeneous()
    assert (f + 1).degree() is None


def test_divided_difference_matches_definition():
    # (f - s_1 f) = (t1 - t2) * dd(f) for random small f
    n, p = 3, 5
    for exps in monomials_up_to(n, 4):
        f = Polynomial(n, p, {exps: 1})
        swapped = Polynomial(n, p, {(e[1], e[0]) + e[2:]: c for e, c in f.terms.items()})
        assert f - swapped == (t(1, n, p) - t(2, n, p)) * divided_difference(f, 1)


def test_multiply_by_variable():
    assert multiply_by_variable(t(1, 2), 2) == t(1, 2) * t(2, 2)


poly_terms = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.integers(0, 4), max_size=4
)


@settings(max_examples=60, deadline=None)
@given(poly_terms, poly_terms, st.sampled_from([2, 3, 5]))
def test_leibniz_and_linearity(ta, tb, p):
    a, b = Polynomial(3, p, ta), Polynomial(3, p, tb)
    assert deriv(a * b) == deriv(a) * b + a * deriv(b)
    assert deriv(a + b) == deriv(a) + deriv(b)
    assert check_leibniz_power(a, b)
    assert iterate_deriv(a, p).is_zero()


@settings(max_examples=40, deadline=None)
@given(poly_terms)
def test_derivative_raises_degree_by_two(ta):
    a = Polynomial(3, 3, ta)
    if a.is_zero() or a.degree() is None:
        return
    da = deriv(a)
    assert da.is_zero() or da.degree() == a.degree() + 2
