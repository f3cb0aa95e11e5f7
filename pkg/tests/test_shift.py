from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hankelcf.errors import ArityError, DegenerateMomentsError
from hankelcf.exact import Poly, X
from hankelcf.hankel import closed_bernoulli_odd, closed_euler, hankel_det
from hankelcf.orthopoly import FAMILIES, family_params, jacobi_from_moments
from hankelcf.sequences import bernoulli_poly, from_terms, make_sequence, shifted
from hankelcf.shift import (BandMatrix, dn0_closed, dn_via_determinant, dn_via_recurrence,
                            s_from_shifted, shifted_hankel_prop62, table3_rows)

F = Fraction
TABLE3 = [
    (X * X - 3) / 4,
    (X**4 - 18 * X**2 + 41) / 16,
    (X**6 - 53 * X**4 + 655 * X**2 - 1323) / 64,
    (X**8 - 116 * X**6 + 3958 * X**4 - 41364 * X**2 + 77841) / 256,
]
SEQS = ["bernoulli-num", "euler-num", "bernoulli-poly", "euler-poly", "bernoulli-odd-half",
        "euler-nu-half(0)", "euler-nu-half(1)", "euler-nu-half(2)"]


def test_table3_rows():
    assert [d for _, d in table3_rows(3)] == TABLE3


def test_recurrence_seeds():
    p = family_params("euler-nu(1)", 4)
    assert dn_via_recurrence(p.s, p.t, -1) == 1
    assert dn_via_recurrence(p.s, p.t, 0) == (X * X - 3) / 4
    assert dn_via_recurrence(p.s, p.t, 2) == TABLE3[2]


def test_band_determinant_examples():
    p0 = family_params("euler-nu(0)", 3)
    assert dn_via_determinant(BandMatrix(p0.s, p0.t, 1)) == (X * X - 1) * (X * X - 9) / 16
    assert dn_via_determinant(BandMatrix(p0.s, p0.t, 0)) == -p0.s[0]
    p1 = family_params("euler-nu(1)", 4)
    assert dn_via_determinant(BandMatrix(p1.s, p1.t, 3)) == TABLE3[3]


def test_band_matrix_layout():
    m = BandMatrix((1, 2, 3), (4, 5), 2).rows()
    assert m[0] == [Poly.const(-1), Poly.const(1), Poly()]
    assert m[1] == [Poly.const(4), Poly.const(-2), Poly.const(1)]
    assert m[2] == [Poly(), Poly.const(5), Poly.const(-3)]


@pytest.mark.parametrize("family", FAMILIES)
def test_recurrence_matches_determinant(family):
    p = family_params(family, 6)
    for n in range(6):
        assert dn_via_recurrence(p.s, p.t, n) == dn_via_determinant(BandMatrix(p.s, p.t, n))


def test_recurrence_matches_determinant_random():
    rng = random.Random(61)
    for _ in range(100):
        n = rng.randint(0, 5)
        s = [Poly([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]) for _ in range(n + 1)]
        t = [Poly([F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(2)]) for _ in range(n)]
        assert dn_via_recurrence(s, t, n) == dn_via_determinant(BandMatrix(s, t, n))


def test_arity_errors():
    with pytest.raises(ArityError):
        dn_via_recurrence([1], [], 2)
    with pytest.raises(ArityError):
        BandMatrix((1,), (), 1)


@pytest.mark.parametrize("n", range(6))
def test_nu0_band_minors_closed_form(n):
    p = family_params("euler-nu(0)", 6)
    assert dn0_closed(n) == dn_via_recurrence(p.s, p.t, n)


def test_nu0_closed_examples():
    assert dn0_closed(0) == (X * X - 1) / 4
    assert dn0_closed(2) == (X * X - 1) * (X * X - 9) * (X * X - 25) / 64


@pytest.mark.parametrize("seq", SEQS)
@pytest.mark.parametrize("shift", [1, 2])
def test_shifted_hankel_formula_matches_direct(seq, shift):
    base = make_sequence(seq)
    for n in range(5):
        assert shifted_hankel_prop62(base, n, shift) == hankel_det(shifted(base, shift), n), n


def test_shift_by_one_is_nu_shift_by_two():
    for nu in (0, 1):
        base = make_sequence(f"euler-nu-half({nu})")
        for n in range(5):
            assert hankel_det(shifted(base, 1), n) == hankel_det(f"euler-nu-half({nu + 2})", n)


@pytest.mark.parametrize("n", range(4))
def test_euler_shift_instances(n):
    prod = Poly.const(1)
    for l in range(n + 1):
        prod = prod * (X * X - (2 * l + 1) ** 2) / 4
    assert closed_euler(2, n) == closed_euler(0, n) * prod
    assert hankel_det("euler-nu-half(3)", n) == hankel_det("euler-nu-half(1)", n) * TABLE3[n]


def test_s_from_shifted_examples():
    w = jacobi_from_moments("bernoulli-odd-half", 3)
    assert s_from_shifted("bernoulli-odd-half", 1) == w.s_at(1)
    assert s_from_shifted("euler-nu-half(0)", 0) == family_params("euler-nu(0)", 1).s_at(0)
    e = make_sequence("euler-num")
    assert s_from_shifted(e, 2) == 0
    with pytest.raises(DegenerateMomentsError):
        s_from_shifted(e, 1)  # H_0 of k -> E_{k+1} is E_1 = 0
    assert jacobi_from_moments(e, 4).s == (0, 0, 0, 0)


def test_s_from_shifted_agrees_with_published_parameters():
    for fam, seq in [("bernoulli-odd", "bernoulli-odd-half"), ("euler-nu(1)", "euler-nu-half(1)"),
                     ("touchard", "bernoulli-num")]:
        p = family_params(fam, 4)
        for n in range(4):
            assert s_from_shifted(seq, n) == p.s_at(n)


def test_s_from_shifted_degenerate():
    with pytest.raises(DegenerateMomentsError):
        s_from_shifted(from_terms([1, 0, 1, 0, 1, 0]), 1)


@pytest.mark.parametrize("n", range(4))
def test_odd_shift_retains_linear_factors(n):
    shifted_seq = shifted(make_sequence("bernoulli-odd-half"), 1)
    for k in range(3):
        assert shifted_seq.gen(k) == bernoulli_poly(2 * k + 3).compose((X + 1) / 2)
    det = hankel_det(shifted_seq, n)
    # the factors of the unshifted determinant, with multiplicity: x^(n+1) and (x^2 - l^2)^(n+1-l)
    factors = [X ** (n + 1)] + [Poly((-(l * l), 0, 1)) ** (n + 1 - l) for l in range(1, n + 1)]
    product = Poly.const(1)
    for f in factors:
        product = product * f
    assert closed_bernoulli_odd(n).divide_exact(product).is_const()
    det.divide_exact(product)
