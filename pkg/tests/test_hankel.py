from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp

from hankelcf.errors import ExactDivisionError
from hankelcf.exact import Poly, X
from hankelcf.hankel import (bareiss_det, closed_bernoulli_numbers, closed_bernoulli_odd,
                             closed_chen, closed_euler, det_by_expansion, hankel_det, hankel_matrix,
                             hankel_sign)
from hankelcf.sequences import binomial_transform, from_terms, make_sequence, scaled

from conftest import from_sympy, to_sympy

F = Fraction
BUILTIN = ["bernoulli-num", "euler-num", "bernoulli-poly", "euler-poly", "bernoulli-odd-half",
           "bernoulli-even-half", "bernoulli-even-at-half", "euler-nu-half(0)", "euler-nu-half(1)",
           "euler-nu-half(2)"]
SEXTIC = -X**6 / 540 + F(97, 18900) * X**4 - F(11, 4725) * X**2 + F(16, 55125)


def _sympy_det(seq, n):
    seq = make_sequence(seq)
    m = sp.Matrix(n + 1, n + 1, lambda i, j: to_sympy(seq.gen(i + j)))
    return from_sympy(m.det(method="berkowitz"))


# -- matrix construction -------------------------------------------------------

def test_matrix_examples():
    m = hankel_matrix("bernoulli-poly", 1)
    assert m.rows() == [[Poly.const(1), X - F(1, 2)], [X - F(1, 2), X * X - X + F(1, 6)]]
    assert hankel_matrix("euler-num", 1).rows() == [[Poly.const(1), Poly()], [Poly(), Poly.const(-1)]]
    assert hankel_matrix("euler-poly", 0).rows() == [[Poly.const(1)]]


def test_matrix_is_persymmetric():
    rows = hankel_matrix("euler-nu-half(1)", 4).rows()
    for i in range(5):
        for j in range(5):
            assert rows[i][j] == rows[j][i]
            if i + 1 < 5 and j >= 1:
                assert rows[i][j] == rows[i + 1][j - 1]


# -- oracles -----------------------------------------------------------------

@pytest.mark.parametrize("name", BUILTIN)
def test_bareiss_matches_cofactor_expansion(name):
    seq = make_sequence(name)
    for n in range(5):
        rows = hankel_matrix(seq, n).rows()
        assert bareiss_det(rows) == det_by_expansion(rows)


@pytest.mark.parametrize("name", ["bernoulli-poly", "bernoulli-odd-half", "euler-nu-half(1)", "bernoulli-even-half"])
def test_bareiss_matches_sympy(name):
    for n in range(4):
        assert hankel_det(name, n) == _sympy_det(name, n)


def test_bareiss_pivoting_with_zero_leading_entry():
    rows = [[Poly(), Poly.const(1)], [Poly.const(1), X]]
    assert bareiss_det(rows) == -1
    rows = [[Poly(), X, Poly.const(1)], [X, Poly.const(2), Poly()], [Poly.const(1), Poly(), X * X]]
    assert bareiss_det(rows) == det_by_expansion(rows)


# -- closed forms --------------------------------------------------------------

def test_bernoulli_number_values():
    expected = [1, F(-1, 12), F(-1, 540), F(1, 42000), F(1, 3215625), F(-4, 623959875),
                F(-64, 213746467935)]
    for n, v in enumerate(expected):
        assert hankel_det("bernoulli-num", n) == v
        assert closed_bernoulli_numbers(n) == v


def test_bernoulli_number_n10():
    expected = F(-(2**42) * 3**15 * 5**4, 11**11 * 13**9 * 17**5 * 19**3)
    assert hankel_det("bernoulli-num", 10) == expected
    assert closed_bernoulli_numbers(10) == expected


@pytest.mark.parametrize("n", range(9))
def test_bernoulli_number_closed_form(n):
    assert hankel_det("bernoulli-num", n) == closed_bernoulli_numbers(n)


def test_bernoulli_poly_determinant_is_constant():
    assert hankel_det("bernoulli-poly", 1) == F(-1, 12)
    assert hankel_det("bernoulli-poly", 3) == hankel_det("bernoulli-num", 3)


@pytest.mark.parametrize("n", range(7))
def test_bernoulli_odd_closed_form(n):
    assert hankel_det("bernoulli-odd-half", n) == closed_bernoulli_odd(n)


def test_bernoulli_odd_documented_rows():
    assert closed_bernoulli_odd(0) == X / 2
    assert closed_bernoulli_odd(1) == -(X * X * (X * X - 1)) / 48
    row4 = X**5 * (X * X - 1) ** 4 * (X * X - 4) ** 3 * (X * X - 9) ** 2 * (X * X - 16) / 102900000
    assert closed_bernoulli_odd(4) == row4


@pytest.mark.parametrize("n", range(6))
def test_euler_number_and_polynomial_closed_forms(n):
    assert hankel_det("euler-num", n) == closed_euler("numbers", n)
    assert hankel_det("euler-poly", n) == closed_euler("polys", n)


@pytest.mark.parametrize("n", range(6))
def test_euler_polynomial_case_is_scaled_number_case(n):
    assert hankel_det("euler-poly", n) == hankel_det("euler-num", n) * F(1, 2 ** (n * (n + 1)))


@pytest.mark.parametrize("nu", [0, 1, 2])
@pytest.mark.parametrize("n", range(5))
def test_euler_nu_closed_forms(nu, n):
    assert hankel_det(f"euler-nu-half({nu})", n) == closed_euler(nu, n)


def test_euler_small_examples():
    assert closed_euler("numbers", 1) == -1
    assert closed_euler(0, 1) == -(X * X - 1) / 4
    assert closed_euler(1, 0) == X / 2


@pytest.mark.parametrize("n", range(5))
def test_chen_identity(n):
    assert hankel_det("bernoulli-even-at-half", n) == closed_chen(n)


def test_chen_small_values():
    assert closed_chen(0) == 1
    assert closed_chen(1) == F(1, 45)


def test_even_index_determinants_do_not_factor():
    assert hankel_det("bernoulli-even-half", 1) == -X * X / 12 + F(1, 45)
    assert hankel_det("bernoulli-even-half", 2) == SEXTIC
    # no rational root for the sextic's square-free part in x^2
    u = sp.Symbol("u")
    quartic_in_u = sp.Poly(to_sympy(SEXTIC).subs(sp.Symbol("x") ** 2, u), u)
    assert not [r for r in sp.roots(quartic_in_u, filter="Q")]


def test_sign_parity():
    assert [hankel_sign(n) for n in range(6)] == [1, -1, -1, 1, 1, -1]


# -- seeded invariance properties ------------------------------------------------

def _random_poly(rng: random.Random, degree: int) -> Poly:
    return Poly([F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(degree + 1)])


def _random_sequence(rng: random.Random, length: int):
    terms = [_random_poly(rng, rng.randint(0, 2)) for _ in range(length)]
    terms[0] = terms[0] if terms[0] else Poly.const(1)
    return from_terms(terms)


def test_power_scaling_property_seeded():
    rng = random.Random(2101)
    for case in range(200):
        n = case % 5
        seq = _random_sequence(rng, 2 * n + 1)
        p = _random_poly(rng, rng.randint(0, 1))
        if not p:
            p = X + 1
        assert hankel_det(scaled(seq, p), n) == p ** (n * (n + 1)) * hankel_det(seq, n)


def test_monomial_scaling_on_bernoulli_numbers():
    seq = make_sequence("bernoulli-num")
    for n in range(4):
        assert hankel_det(scaled(seq, X), n) == X ** (n * (n + 1)) * hankel_det(seq, n)


def test_binomial_transform_property_seeded():
    rng = random.Random(2202)
    for case in range(200):
        n = case % 5
        seq = _random_sequence(rng, 2 * n + 1)
        shift = X if case % 2 else _random_poly(rng, 1)
        assert hankel_det(binomial_transform(seq, shift), n) == hankel_det(seq, n)


def test_bernoulli_poly_from_numbers_by_binomial_transform():
    seq = binomial_transform(make_sequence("bernoulli-num"))
    for k in range(8):
        assert seq.gen(k) == make_sequence("bernoulli-poly").gen(k)


def test_exactness_failure_is_loud():
    with pytest.raises(ExactDivisionError):
        (X * X + 1).divide_exact(X + 1)
