from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp

from hankelcf.cfrac import (CFSpec, cf_approximant, cf_equivalence, cf_even_contraction,
                            cf_odd_contraction, determinant_identity_holds, jfraction_series,
                            moment_series, verify_jfraction_vs_moments)
from hankelcf.errors import (ArityError, ContractionError, DomainError, EquivalenceError,
                             FormalCancellationError)
from hankelcf.exact import LaurentPoly, Poly, TruncSeries, X
from hankelcf.formal import FORMAL_KINDS, formal_F, psi_asymptotic, psi_prime_asymptotic
from hankelcf.orthopoly import FAMILIES, family_params, family_sequence, jacobi_from_moments
from hankelcf.sequences import bernoulli_poly, euler_poly

F = Fraction
T = sp.Symbol("t")
HALF_SHIFT = (X + 1) / 2


def _random_cf(rng: random.Random, depth: int) -> CFSpec:
    def q():
        return F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))

    return CFSpec.from_lists(q(), [q() for _ in range(depth)], [q() for _ in range(depth)])


def _value(cf: CFSpec, n: int):
    """Oracle: evaluate the finite fraction bottom-up, no recurrences."""
    acc = None
    for m in range(n, 0, -1):
        acc = cf.num(m) / (cf.den(m) + (acc if acc is not None else 0))
    return cf.b0 + (acc if acc is not None else 0)


# -- approximants --------------------------------------------------------------

def test_approximant_trivial_case():
    ap = cf_approximant(CFSpec.from_lists(0, [1], [1]), 1)
    assert (ap.A, ap.B) == (1, 1)


def test_ramanujan_depth_one_at_b_equal_one():
    s = sp.Symbol("s")
    cf = CFSpec(0, lambda m: 1 if m == 1 else -4 * ((m - 1) ** 2 - 1) * (m - 1) ** 4,
                lambda m: (2 * m - 1) * (s**2 - 1 + 2 * m * (m - 1) + 1))
    ap = cf_approximant(cf, 1)
    assert sp.simplify(ap.A / ap.B - 1 / s**2) == 0
    deeper = cf_approximant(cf, 5)
    assert deeper.terminated and deeper.n == 1


def test_jfraction_depth_zero():
    c0, s0 = sp.symbols("c0 s0")
    cf = CFSpec(0, lambda m: c0, lambda m: 1 + s0 * T)
    ap = cf_approximant(cf, 1)
    assert sp.simplify(ap.A / ap.B - c0 / (1 + s0 * T)) == 0


def test_approximants_match_direct_evaluation():
    rng = random.Random(31)
    for _ in range(500):
        depth = rng.randint(1, 4)
        cf = _random_cf(rng, depth)
        for n in range(depth + 1):
            try:
                expected = _value(cf, n)
            except ZeroDivisionError:
                continue
            ap = cf_approximant(cf, n)
            if ap.B != 0:
                assert ap.value() == expected


def test_determinant_identity():
    rng = random.Random(32)
    for _ in range(200):
        cf = _random_cf(rng, 4)
        assert determinant_identity_holds(cf, 4)


# -- equivalence -----------------------------------------------------------------

def test_equivalence_preserves_approximants():
    rng = random.Random(33)
    for _ in range(500):
        depth = rng.randint(1, 4)
        cf = _random_cf(rng, depth)
        rs = [F(1)] + [F(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 4)) for _ in range(depth)]
        eq = cf_equivalence(cf, rs.__getitem__, depth)
        for n in range(depth + 1):
            assert cf_approximant(eq, n).same_value(cf_approximant(cf, n))


def test_identity_equivalence():
    cf = CFSpec.from_lists(F(1, 2), [1, 2, 3], [4, 5, 6])
    eq = cf_equivalence(cf, lambda m: 1, 3)
    assert eq.to_lists(3) == cf.to_lists(3)


def test_equivalence_rejects_zero_factor():
    cf = CFSpec.from_lists(0, [1, 2], [3, 4])
    with pytest.raises(EquivalenceError):
        cf_equivalence(cf, lambda m: 1 if m != 2 else 0, 2)
    with pytest.raises(EquivalenceError):
        cf_equivalence(cf, lambda m: 2, 2)


def test_ramanujan_fraction_becomes_bernoulli_jfraction():
    # s = 2/z, b = x, rescaled by r_m = z^2/(4(2m-1)); partial quantities as Laurent polynomials in z
    def z(e, c):
        return LaurentPoly({e: c})

    x2 = X * X
    ram = CFSpec(0, lambda m: z(0, X) if m == 1 else z(0, -4 * ((m - 1) ** 2 - x2) * (m - 1) ** 4),
                 lambda m: (2 * m - 1) * (z(-2, 4) + z(0, 2 * m * (m - 1) + 1 - x2)))
    eq = cf_equivalence(ram, lambda m: 1 if m == 0 else z(2, F(1, 4 * (2 * m - 1))), 6)
    w = family_params("bernoulli-odd", 6)
    assert eq.num(1) == z(2, w.c0 / 2)
    for m in range(1, 7):
        assert eq.den(m) == z(0, 1) + z(2, w.s[m - 1])
        if m >= 2:
            assert eq.num(m) == z(4, -w.t[m - 2])


# -- contractions ------------------------------------------------------------------

def _s_fraction(alpha):
    return CFSpec(0, lambda m: 1 if m == 1 else -alpha[m - 1] * T, lambda m: 1)


def test_even_contraction_symbolic_pattern():
    alpha = [None] + list(sp.symbols("alpha1:10"))
    even = cf_even_contraction(_s_fraction(alpha), 4)
    assert even.b0 == 0
    assert sp.expand(even.num(1)) == 1
    assert sp.expand(even.den(1) - (1 - alpha[1] * T)) == 0
    for k in range(2, 5):
        assert sp.expand(even.num(k) + alpha[2 * k - 3] * alpha[2 * k - 2] * T**2) == 0
        assert sp.expand(even.den(k) - (1 - (alpha[2 * k - 2] + alpha[2 * k - 1]) * T)) == 0


def test_odd_contraction_symbolic_pattern():
    alpha = [None] + list(sp.symbols("alpha1:12"))
    odd = cf_odd_contraction(_s_fraction(alpha), 4)
    assert sp.expand(odd.b0) == 1
    assert sp.expand(odd.num(1) - alpha[1] * T) == 0
    for k in range(1, 5):
        assert sp.expand(odd.den(k) - (1 - (alpha[2 * k - 1] + alpha[2 * k]) * T)) == 0
        if k >= 2:
            assert sp.expand(odd.num(k) + alpha[2 * k - 2] * alpha[2 * k - 1] * T**2) == 0


def test_contractions_match_symbolic_approximants():
    a = [None] + list(sp.symbols("a1:10"))
    b = [sp.Symbol("b0")] + list(sp.symbols("b1:10"))
    cf = CFSpec(b[0], a.__getitem__, b.__getitem__)
    even, odd = cf_even_contraction(cf, 3), cf_odd_contraction(cf, 3)
    for k in range(4):
        e, o = cf_approximant(even, k), cf_approximant(odd, k)
        full_e, full_o = cf_approximant(cf, 2 * k), cf_approximant(cf, 2 * k + 1)
        assert sp.cancel(e.A / e.B - full_e.A / full_e.B) == 0
        assert sp.cancel(o.A / o.B - full_o.A / full_o.B) == 0


def test_contractions_on_random_rational_fractions():
    rng = random.Random(34)
    checked = 0
    for _ in range(500):
        depth = rng.randint(1, 4)
        cf = _random_cf(rng, 2 * depth + 1)
        even, odd = cf_even_contraction(cf, depth), cf_odd_contraction(cf, depth)
        for k in range(depth + 1):
            assert cf_approximant(even, k).same_value(cf_approximant(cf, 2 * k))
            assert cf_approximant(odd, k).same_value(cf_approximant(cf, 2 * k + 1))
            checked += 1
    assert checked >= 1000


def test_contraction_with_unit_partial_quantities():
    ones = CFSpec(0, lambda m: 1, lambda m: 1)
    even, odd = cf_even_contraction(ones, 1), cf_odd_contraction(ones, 1)
    assert cf_approximant(even, 1).same_value(cf_approximant(ones, 2))
    assert cf_approximant(odd, 1).same_value(cf_approximant(ones, 3))
    assert cf_approximant(odd, 0).value() == cf_approximant(ones, 1).value()
    assert cf_even_contraction(ones, 0).b0 == 0


def test_contraction_rejects_vanishing_denominators():
    cf = CFSpec.from_lists(0, [1, 1, 1, 1], [1, 0, 1, 1])
    with pytest.raises(ContractionError):
        cf_even_contraction(cf, 1)
    cf = CFSpec.from_lists(0, [1, 1, 1, 1], [0, 1, 1, 1])
    with pytest.raises(ContractionError):
        cf_odd_contraction(cf, 1)


def test_finite_spec_arity():
    with pytest.raises(ArityError):
        CFSpec.from_lists(0, [1], [1, 2])
    with pytest.raises(ArityError):
        CFSpec.from_lists(0, [1], [1]).num(2)


# -- J-fractions and moment series -----------------------------------------------------

def test_jfraction_series_examples():
    w = family_params("bernoulli-odd", 4)
    s = jfraction_series(w, 2)
    assert s.coeff(0) == X / 2 and s.coeff(2) == (X**3 - X) / 8
    assert jfraction_series(family_params("euler-nu(1)", 3), 0).coeff(0) == X / 2


@pytest.mark.parametrize("family", FAMILIES)
def test_jfraction_matches_moments(family):
    params = family_params(family, 8)
    assert verify_jfraction_vs_moments(family_sequence(family), params, 12)


@pytest.mark.parametrize("family", FAMILIES)
def test_perturbed_parameters_fail(family):
    params = family_params(family, 8)
    bad = params.perturbed("t", 1, F(1, 7))
    assert not verify_jfraction_vs_moments(family_sequence(family), bad, 12)


def test_jfraction_depth_stability():
    params = jacobi_from_moments("bernoulli-odd-half", 6)
    for order in (2, 4, 6, 8):
        assert jfraction_series(params, order).agrees_with(jfraction_series(params, 10), order)


def test_moment_series_layout():
    m = moment_series("euler-num", 6)
    assert [m.coeff(e) for e in range(7)] == [1, 0, 0, 0, -1, 0, 0]
    m = moment_series("euler-nu-half(0)", 4)
    assert m.coeff(2) == euler_poly(2).compose(HALF_SHIFT)


# -- formal polygamma series -----------------------------------------------------------

def test_psi_asymptotic_examples():
    s = psi_asymptotic(F(1, 2), 3)
    assert s.log_coeff == 1 and s.coeff(1) == 0
    s0 = psi_asymptotic(0, 5)
    for n in range(1, 6):
        assert s0.coeff(n) == (-1) ** (n + 1) * bernoulli_poly(n)(0) / n


def test_psi_prime_asymptotic_examples():
    assert psi_prime_asymptotic(0, 1).coeff(1) == 1
    assert psi_prime_asymptotic(F(1, 2), 4).coeff(2) == 0
    assert not psi_prime_asymptotic(X, 4).has_log()
    diff = psi_prime_asymptotic((1 + X) / 2, 6) - psi_prime_asymptotic((1 - X) / 2, 6)
    assert diff.coeff(1) == 0 and diff.coeff(2) == -X
    for n in range(2, 6):
        expect = (-1) ** n * (bernoulli_poly(n).compose((1 + X) / 2) - bernoulli_poly(n).compose((1 - X) / 2))
        assert diff.coeff(n + 1) == expect


@pytest.mark.parametrize("kind", FORMAL_KINDS)
def test_formal_series_match_moments_through_order_16(kind):
    series = formal_F(kind, 16)
    assert not series.has_log()
    for k in range(9):
        if kind == "bernoulli-odd":
            want = bernoulli_poly(2 * k + 1).compose(HALF_SHIFT)
        else:
            nu = int(kind[-1])
            want = euler_poly(2 * k + nu).compose(HALF_SHIFT)
        assert series.coeff(2 * k) == want, (kind, k)
        assert series.coeff(2 * k + 1) == 0 if 2 * k + 1 <= 16 else True


def test_formal_series_small_orders():
    assert formal_F("euler-nu0", 0).coeff(0) == 1
    s = formal_F("euler-nu1", 4)
    assert [s.coeff(e) for e in (0, 2, 4)] == [euler_poly(n).compose(HALF_SHIFT) for n in (1, 3, 5)]


def test_formal_series_preconditions():
    with pytest.raises(DomainError):
        formal_F("bernoulli-odd", 3)
    with pytest.raises(DomainError):
        formal_F("gamma", 4)


def test_surviving_log_term_is_an_error():
    bad = psi_asymptotic(X, 4) + psi_asymptotic(0, 4)
    assert bad.has_log()
    with pytest.raises(FormalCancellationError):
        bad.shift(-1)
    with pytest.raises(FormalCancellationError):
        bad * TruncSeries("w", {0: 1}, 4)
