from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
import sympy as sp

from hankelcf.errors import DomainError
from hankelcf.exact import Poly, TruncSeries, X, series_divide
from hankelcf.sequences import (bernoulli_number, bernoulli_poly, euler_number, euler_poly,
                                euler_nu_half, from_terms, make_sequence, verify_euler_from_bernoulli,
                                verify_reflection)

from conftest import SX, from_sympy

F = Fraction
N_MAX = 30


def _egf_coefficients(num: TruncSeries, den: TruncSeries) -> list:
    q = series_divide(num, den)
    return [q.coeff(n) * factorial(n) for n in range(q.order + 1)]


def test_bernoulli_numbers_match_generating_function():
    t = TruncSeries("t", {1: 1}, N_MAX + 1)
    em1 = TruncSeries.exp("t", N_MAX + 1) - 1
    coeffs = _egf_coefficients(t, em1)
    for n in range(N_MAX + 1):
        assert coeffs[n] == bernoulli_number(n), n


def test_euler_numbers_match_generating_function():
    # 2e^t / (e^{2t} + 1) = sum E_n t^n / n!
    num = TruncSeries.exp("t", N_MAX).scale(2)
    den = TruncSeries.exp("t", N_MAX, rate=2) + 1
    coeffs = _egf_coefficients(num, den)
    for n in range(N_MAX + 1):
        assert coeffs[n] == euler_number(n), n


def test_euler_polynomials_match_generating_function():
    num = TruncSeries.exp("t", 12, rate=X).scale(2)
    den = TruncSeries.exp("t", 12) + 1
    coeffs = _egf_coefficients(num, den)
    for n in range(13):
        assert coeffs[n] == euler_poly(n), n


def test_bernoulli_polynomials_match_generating_function():
    t = TruncSeries("t", {1: 1}, 13)
    num = t * TruncSeries.exp("t", 13, rate=X)
    den = TruncSeries.exp("t", 13) - 1
    coeffs = _egf_coefficients(num, den)
    for n in range(13):
        assert coeffs[n] == bernoulli_poly(n), n


@pytest.mark.parametrize("n", range(0, 25))
def test_against_sympy(n):
    assert bernoulli_poly(n) == from_sympy(sp.bernoulli(n, SX))
    assert euler_poly(n) == from_sympy(sp.euler(n, SX))
    assert euler_number(n) == int(sp.euler(n))
    # sympy's B_1 convention differs; the polynomial at 0 is unambiguous
    assert bernoulli_number(n) == F(str(sp.bernoulli(n, 0)))


def test_documented_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == F(-1, 2)
    assert bernoulli_number(6) == F(1, 42)
    assert bernoulli_number(7) == 0
    assert bernoulli_number(12) == F(-691, 2730)
    assert bernoulli_poly(2) == X * X - X + F(1, 6)
    assert bernoulli_poly(5) == X**5 - F(5, 2) * X**4 + F(5, 3) * X**3 - X / 6
    assert bernoulli_poly(0) == 1
    assert euler_number(4) == 5 and euler_number(6) == -61
    assert euler_number(3) == 0 and euler_number(0) == 1
    assert euler_poly(3) == X**3 - F(3, 2) * X**2 + F(1, 4)
    assert euler_poly(6) == X**6 - 3 * X**5 + 5 * X**3 - 3 * X
    assert euler_poly(1) == X - F(1, 2)


def test_polynomials_at_special_points():
    for n in range(N_MAX + 1):
        assert bernoulli_poly(n)(0) == bernoulli_number(n)
        assert euler_poly(n)(F(1, 2)) == euler_number(n) / 2**n


def test_odd_index_vanishing():
    for j in range(1, 16):
        assert bernoulli_number(2 * j + 1) == 0
    for j in range(0, 16):
        assert euler_number(2 * j + 1) == 0


@pytest.mark.parametrize("n", [0, 1, 3, 7, 12])
def test_reflection(n):
    assert verify_reflection(n)


@pytest.mark.parametrize("n", [1, 2, 5, 7, 10])
def test_euler_from_bernoulli(n):
    assert verify_euler_from_bernoulli(n)


def test_named_sequence_seeds():
    assert make_sequence("bernoulli-odd-half").gen(0) == X / 2
    assert make_sequence("euler-nu-half(2)").gen(0) == (X * X - 1) / 4
    assert euler_nu_half(1).gen(0) == X / 2
    assert make_sequence("bernoulli-even-half").gen(1) == X * X / 4 - F(1, 12)


def test_sequence_purity_and_caching():
    a = make_sequence("euler-nu-half(1)")
    first = [a.gen(k).to_text() for k in range(8)]
    second = [a.gen(k).to_text() for k in range(8)]
    assert first == second
    assert make_sequence("euler-nu-half( 1 )") is a


def test_composite_grammar():
    base = make_sequence("bernoulli-num")
    sh = make_sequence("shifted(bernoulli-num,2)")
    assert [sh.gen(k) for k in range(5)] == [base.gen(k + 2) for k in range(5)]
    sc = make_sequence("scaled(euler-num,x)")
    assert sc.gen(2) == -(X * X)
    bt = make_sequence("binomial-transform(euler-num)")
    # sum_j C(k,j) E_j x^(k-j) = 2^k E_k((x+1)/2)
    for k in range(6):
        assert bt.gen(k) == euler_poly(k).compose((X + 1) / 2) * 2**k


@pytest.mark.parametrize("bad", ["nope", "euler-nu-half(-1)", "shifted(bernoulli-num)", "scaled(x", "euler-nu-half(a)"])
def test_unknown_or_malformed_specs(bad):
    with pytest.raises(DomainError):
        make_sequence(bad)


def test_unknown_name_lists_known_names():
    with pytest.raises(DomainError, match="bernoulli-num"):
        make_sequence("bernoulli")


def test_finite_sequence_bounds():
    seq = from_terms([1, 2, Poly((0, 1))])
    assert seq.gen(2) == X
    with pytest.raises(IndexError):
        seq.gen(3)
    assert seq.to_json(2) == {"sequence": "custom", "terms": [["1"], ["2"]]}
