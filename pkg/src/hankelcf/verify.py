"""Registry of every identity the package machine-checks, and a runner that
produces a JSON-ready report.

Each check returns a list of failure messages; an empty list is a pass.
Checks take the effective depth and a seeded ``random.Random``.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .cfrac import (CFSpec, cf_approximant, cf_equivalence, cf_even_contraction, cf_odd_contraction,
                    determinant_identity_holds, moment_series, verify_jfraction_vs_moments)
from .errors import DomainError
from .exact import LaurentPoly, Poly, TruncSeries, X, Y, YPoly, series_divide
from .formal import formal_F
from .hankel import (bareiss_det, closed_bernoulli_numbers, closed_bernoulli_odd, closed_chen, closed_euler,
                     det_by_expansion, hankel_det, hankel_matrix)
from .numerics import digamma, trigamma, validate_identity
from .orthopoly import (FAMILIES, family_params, family_sequence, jacobi_from_moments, named_family,
                        orth_poly_det, orth_poly_rec, verify_orthogonality)
from .render import factor_even_linear
from .sequences import (bernoulli_number, bernoulli_poly, binomial_transform, euler_number, euler_poly,
                        from_terms, make_sequence, scaled, shifted, verify_euler_from_bernoulli,
                        verify_reflection)
from .shift import (BandMatrix, dn0_closed, dn_via_determinant, dn_via_recurrence, s_from_shifted,
                    shifted_hankel_prop62, table3_rows)

__all__ = ["IDENTITY_REGISTRY", "MODULES", "Identity", "random_fraction", "random_poly", "resolve_scope",
           "run_verification"]

MODULES = ("exact-core", "special-seq", "hankel-engine", "orthopoly-engine", "cfrac-engine", "shift-engine",
           "numerics")

BUILTIN_SEQUENCES = ("bernoulli-num", "euler-num", "bernoulli-poly", "euler-poly", "bernoulli-odd-half",
                     "euler-nu-half(0)", "euler-nu-half(1)", "euler-nu-half(2)")


@dataclass(frozen=True)
class Identity:
    id: str
    module: str
    summary: str
    depth: int
    run: Callable[[int, random.Random], list[str]]
    aliases: tuple[str, ...] = ()


IDENTITY_REGISTRY: dict[str, Identity] = {}


def _identity(id_: str, module: str, depth: int, summary: str, aliases: tuple[str, ...] = ()):
    def register(fn):
        IDENTITY_REGISTRY[id_] = Identity(id_, module, summary, depth, fn, aliases)
        return fn
    return register


def random_fraction(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_poly(rng: random.Random, max_degree: int = 3, nonzero: bool = False) -> Poly:
    while True:
        p = Poly([random_fraction(rng) for _ in range(rng.randint(0, max_degree) + 1)])
        if p or not nonzero:
            return p


def _expect(failures: list[str], ok: bool, message: str) -> None:
    if not ok:
        failures.append(message)


# ---------------------------------------------------------------------------
# exact-core
# ---------------------------------------------------------------------------


@_identity("ring-axioms", "exact-core", 5, "ring laws, exact division and composition on random polynomials")
def _ring_axioms(depth, rng):
    fails: list[str] = []
    for i in range(100 * depth):
        p, q, r = (random_poly(rng) for _ in range(3))
        _expect(fails, (p + q) + r == p + (q + r) and p * q == q * p, f"case {i}: add/mul laws")
        _expect(fails, p * (q + r) == p * q + p * r, f"case {i}: distributivity")
        if q:
            _expect(fails, (p * q).divide_exact(q) == p, f"case {i}: exact division")
        _expect(fails, p.compose(q).compose(r) == p.compose(q.compose(r)), f"case {i}: composition")
    return fails


@_identity("series-divide", "exact-core", 6, "series division inverts multiplication")
def _series_divide(depth, rng):
    fails = []
    order = 2 * depth
    for i in range(20 * depth):
        num = TruncSeries("t", {k: random_poly(rng, 2) for k in range(order + 1)}, order)
        lead = Poly.const(random_fraction(rng, nonzero=True))  # a unit, so every quotient stays polynomial
        den = TruncSeries("t", {0: lead, **{k: random_poly(rng, 1) for k in range(1, order + 1)}}, order)
        _expect(fails, (series_divide(num, den) * den).agrees_with(num, order), f"case {i}")
    return fails


# ---------------------------------------------------------------------------
# special-seq
# ---------------------------------------------------------------------------


@_identity("bernoulli-generating-function", "special-seq", 30,
           "B_n = n! [t^n] t/(e^t - 1)", ("eq-1.1",))
def _bernoulli_gf(depth, rng):
    n_max = max(depth, 30)
    e = TruncSeries.exp("t", n_max + 1)
    gf = series_divide(TruncSeries("t", {1: 1}, n_max + 1), e - 1)
    return [f"B_{n}" for n in range(n_max + 1) if gf.coeff(n) * factorial(n) != bernoulli_number(n)]


@_identity("euler-generating-function", "special-seq", 30,
           "E_n(x) = n! [t^n] 2e^(xt)/(e^t + 1), E_n = 2^n E_n(1/2)", ("eq-1.3",))
def _euler_gf(depth, rng):
    n_max = max(depth, 30)
    gf = series_divide(TruncSeries.exp("t", n_max, rate=X) * 2, TruncSeries.exp("t", n_max) + 1)
    fails = [f"E_{n}(x)" for n in range(n_max + 1) if gf.coeff(n) * factorial(n) != euler_poly(n)]
    fails += [f"E_{n}" for n in range(n_max + 1) if euler_poly(n)(Fraction(1, 2)) * 2**n != euler_number(n)]
    return fails


@_identity("bernoulli-euler-table", "special-seq", 6, "B_n, E_n, B_n(x), E_n(x) for n <= 6", ("table-2",))
def _table2(depth, rng):
    b = ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"]
    e = [1, 0, -1, 0, 5, 0, -61]
    fails = [f"B_{n}" for n in range(7) if bernoulli_number(n) != Fraction(b[n])]
    fails += [f"E_{n}" for n in range(7) if euler_number(n) != e[n]]
    fails += [f"B_{n}(0)" for n in range(31) if bernoulli_poly(n)(0) != bernoulli_number(n)]
    return fails


@_identity("reflection", "special-seq", 20, "B_n(1-x) = (-1)^n B_n(x), likewise E_n", ("eq-4.7",))
def _reflection(depth, rng):
    return [f"n={n}" for n in range(depth + 1) if not verify_reflection(n)]


@_identity("euler-from-bernoulli", "special-seq", 20, "E_{n-1}(x) = 2^n/n (B_n((x+1)/2) - B_n(x/2))",
           ("eq-2.0", "eq-5.14a"))
def _euler_from_bernoulli(depth, rng):
    return [f"n={n}" for n in range(1, depth + 1) if not verify_euler_from_bernoulli(n)]


@_identity("sequence-shift-adapter", "special-seq", 10, "c^(nu)_{k+1} = c^(nu+2)_k", ("eq-6.2",))
def _shift_adapter(depth, rng):
    fails = []
    for nu in range(3):
        a, b = shifted(make_sequence(f"euler-nu-half({nu})"), 1), make_sequence(f"euler-nu-half({nu + 2})")
        fails += [f"nu={nu}, k={k}" for k in range(depth + 1) if a.gen(k) != b.gen(k)]
    return fails


# ---------------------------------------------------------------------------
# hankel-engine
# ---------------------------------------------------------------------------

_BERNOULLI_HANKEL = ("1", "-1/12", "-1/540", "1/42000", "1/3215625", "-4/623959875", "-64/213746467935")
_BERNOULLI_H10 = Fraction(-(2**42) * 3**15 * 5**4, 11**11 * 13**9 * 17**5 * 19**3)


@_identity("hankel-bernoulli-numbers", "hankel-engine", 10,
           "H_n(B_k) listed values and product formula", ("eq-1.5",))
def _hankel_bernoulli_numbers(depth, rng):
    fails = []
    for n in range(min(depth, 6) + 1):
        _expect(fails, hankel_det("bernoulli-num", n) == Fraction(_BERNOULLI_HANKEL[n]), f"listed n={n}")
    for n in range(min(depth, 8) + 1):
        _expect(fails, hankel_det("bernoulli-num", n) == closed_bernoulli_numbers(n), f"closed n={n}")
    if depth >= 10:
        _expect(fails, hankel_det("bernoulli-num", 10) == _BERNOULLI_H10, "n=10")
    _expect(fails, hankel_det("bernoulli-poly", 1) == Fraction(-1, 12), "H_1(B_k(x))")
    return fails


_TABLE1_LATEX = (
    r"\frac{1}{2}x",
    r"-\frac{1}{48}x^2(x^2-1)",
    r"-\frac{1}{4\,320}x^3(x^2-1)^2(x^2-2^2)",
    r"\frac{1}{672\,000}x^4(x^2-1)^3(x^2-2^2)^2(x^2-3^2)",
    r"\frac{1}{102\,900\,000}x^5(x^2-1)^4(x^2-2^2)^3(x^2-3^2)^2(x^2-4^2)",
)


@_identity("hankel-bernoulli-odd", "hankel-engine", 6,
           "H_n(B_{2k+1}((x+1)/2)) product formula and factored table", ("thm-1.1", "eq-1.6", "table-1"))
def _hankel_bernoulli_odd(depth, rng):
    fails = []
    for n in range(depth + 1):
        det = hankel_det("bernoulli-odd-half", n)
        _expect(fails, det == closed_bernoulli_odd(n), f"n={n}")
        if n < len(_TABLE1_LATEX):
            _expect(fails, factor_even_linear(det).latex() == _TABLE1_LATEX[n], f"table row {n}")
    return fails


@_identity("hankel-euler-numbers", "hankel-engine", 5,
           "H_n(E_k) and H_n(E_k(x)) products, H_n(E_k(x)) = 2^(-n(n+1)) H_n(E_k)", ("eq-5.1", "eq-2.3"))
def _hankel_euler_numbers(depth, rng):
    fails = []
    for n in range(depth + 1):
        num, pol = hankel_det("euler-num", n), hankel_det("euler-poly", n)
        _expect(fails, num == closed_euler("numbers", n), f"numbers n={n}")
        _expect(fails, pol == closed_euler("polys", n), f"polys n={n}")
        _expect(fails, pol == num * Fraction(1, 2 ** (n * (n + 1))), f"scaling n={n}")
    return fails


@_identity("hankel-euler-nu", "hankel-engine", 4,
           "H_n(E_{2k+nu}((x+1)/2)) products for nu = 0, 1, 2", ("cor-5.2", "eq-5.7", "eq-5.8", "eq-5.9"))
def _hankel_euler_nu(depth, rng):
    return [f"nu={nu}, n={n}" for nu in range(3) for n in range(depth + 1)
            if hankel_det(f"euler-nu-half({nu})", n) != closed_euler(nu, n)]


@_identity("hankel-chen", "hankel-engine", 4, "H_n(B_2k(1/2)) product formula", ("chen",))
def _hankel_chen(depth, rng):
    return [f"n={n}" for n in range(depth + 1) if hankel_det("bernoulli-even-at-half", n) != closed_chen(n)]


_SEXTIC = Poly((Fraction(16, 55125), 0, Fraction(-11, 4725), 0, Fraction(97, 18900), 0, Fraction(-1, 540)))


@_identity("hankel-non-factoring", "hankel-engine", 2,
           "H_1 and H_2 of B_2k((x+1)/2) as displayed (no product formula)")
def _hankel_non_factoring(depth, rng):
    fails = []
    h1 = Poly((Fraction(1, 45), 0, Fraction(-1, 12)))
    _expect(fails, hankel_det("bernoulli-even-half", 1) == h1, "n=1")
    if depth >= 2:
        _expect(fails, hankel_det("bernoulli-even-half", 2) == _SEXTIC, "n=2")
    return fails


@_identity("hankel-scaling", "hankel-engine", 4, "H_n(p^k c_k) = p^(n(n+1)) H_n(c_k)", ("lemma-2.1", "eq-2.1"))
def _hankel_scaling(depth, rng):
    fails = []
    for i in range(200):
        n = rng.randint(0, depth)
        base = from_terms([random_poly(rng, 1) for _ in range(2 * n + 1)], f"random{i}")
        p = random_poly(rng, 1, nonzero=True)
        lhs = hankel_det(scaled(base, p), n)
        _expect(fails, lhs == p ** (n * (n + 1)) * hankel_det(base, n), f"case {i}, n={n}")
    return fails


@_identity("hankel-binomial", "hankel-engine", 4,
           "H_n(sum_j C(k,j) c_j x^(k-j)) = H_n(c_k)", ("lemma-2.2", "eq-2.2"))
def _hankel_binomial(depth, rng):
    fails = []
    for i in range(200):
        n = rng.randint(0, depth)
        base = from_terms([random_fraction(rng) for _ in range(2 * n + 1)], f"random{i}")
        _expect(fails, hankel_det(binomial_transform(base), n) == hankel_det(base, n), f"case {i}, n={n}")
    return fails


@_identity("bareiss-vs-expansion", "hankel-engine", 4, "fraction-free elimination equals cofactor expansion")
def _bareiss_vs_expansion(depth, rng):
    fails = []
    for name in BUILTIN_SEQUENCES + ("bernoulli-even-half", "bernoulli-even-at-half"):
        for n in range(depth + 1):
            rows = hankel_matrix(name, n).entries
            _expect(fails, bareiss_det(rows) == det_by_expansion(rows), f"{name}, n={n}")
    return fails


# ---------------------------------------------------------------------------
# orthopoly-engine
# ---------------------------------------------------------------------------


@_identity("orthogonality", "orthopoly-engine", 5,
           "L(y^r P_n) = 0 for r < n and H_n/H_{n-1} for r = n", ("cor-3.2", "eq-3.7"))
def _orthogonality(depth, rng):
    fails = []
    for fam in FAMILIES:
        seq = family_sequence(fam)
        for n in range(depth + 1):
            p = orth_poly_det(seq, n)
            for r in range(n + 1):
                got = verify_orthogonality(seq, n, r, p)
                want = hankel_det(seq, n).divide_exact(hankel_det(seq, n - 1)) if r == n else Poly()
                _expect(fails, got == want, f"{fam}, n={n}, r={r}")
    return fails


@_identity("det-vs-recurrence", "orthopoly-engine", 5,
           "bordered-determinant P_n equals the published three-term recurrence",
           ("thm-4.1", "thm-5.1", "eq-3.5", "eq-3.6", "eq-4.2", "eq-5.4"))
def _det_vs_recurrence(depth, rng):
    fails = []
    for fam in FAMILIES:
        seq = family_sequence(fam)
        params = family_params(fam, depth)
        for n in range(depth + 1):
            _expect(fails, orth_poly_det(seq, n) == orth_poly_rec(params, n), f"{fam}, n={n}")
            _expect(fails, named_family(fam, n) == orth_poly_rec(params, n), f"{fam} named, n={n}")
    return fails


@_identity("hankel-product", "orthopoly-engine", 5, "H_n = c_0^(n+1) t_1^n t_2^(n-1) ... t_n",
           ("cor-3.3", "lemma-3.4", "eq-3.8", "eq-3.10"))
def _hankel_product(depth, rng):
    fails = []
    for fam in FAMILIES:
        seq, p = family_sequence(fam), family_params(fam, depth)
        for n in range(depth + 1):
            prod = p.c0 ** (n + 1)
            for j in range(1, n + 1):
                prod = prod * p.t_at(j) ** (n + 1 - j)
            _expect(fails, prod == hankel_det(seq, n), f"{fam}, n={n}")
    return fails


@_identity("jacobi-params", "orthopoly-engine", 5,
           "recurrence coefficients recovered from raw moments", ("eq-4.3", "eq-5.5", "eq-5.2"))
def _jacobi_params(depth, rng):
    fails = []
    for fam in FAMILIES:
        got, want = jacobi_from_moments(family_sequence(fam), depth), family_params(fam, depth)
        _expect(fails, got == want, fam)
    return fails


_R4 = YPoly((Fraction(12, 35), Fraction(10, 7), Fraction(17, 7), 2, 1))


@_identity("touchard", "orthopoly-engine", 5, "Touchard's R_n and L(y^r R_n) = 0", ("eq-3.1", "eq-3.2"))
def _touchard(depth, rng):
    fails = []
    _expect(fails, orth_poly_det("bernoulli-num", 1) == Y + Fraction(1, 2), "R_1")
    _expect(fails, orth_poly_det("bernoulli-num", 4) == _R4, "R_4")
    _expect(fails, orth_poly_rec(family_params("alsalam-carlitz", 3), 3) == Y**3 + 5 * Y, "Q_3")
    return fails


# ---------------------------------------------------------------------------
# cfrac-engine
# ---------------------------------------------------------------------------


@_identity("jfraction-moments", "cfrac-engine", 6,
           "J-fraction expansions reproduce the moment series", ("lemma-4.2", "lemma-5.3", "eq-4.4", "eq-5.10a"))
def _jfraction_moments(depth, rng):
    fails = []
    order = 2 * depth
    for fam in FAMILIES:
        params = family_params(fam, depth + 2)
        seq = family_sequence(fam)
        _expect(fails, verify_jfraction_vs_moments(seq, params, order), fam)
        if params.t[0] != 0:
            bad = params.perturbed("t", 1, Fraction(1, 7))
            _expect(fails, not verify_jfraction_vs_moments(seq, bad, order), f"{fam}: perturbed control passed")
    return fails


_FORMAL = {"bernoulli-odd": "bernoulli-odd-half", "euler-nu0": "euler-nu-half(0)",
           "euler-nu1": "euler-nu-half(1)", "euler-nu2": "euler-nu-half(2)"}


@_identity("formal-series", "cfrac-engine", 8,
           "polygamma asymptotic series assemble into the moment series",
           ("lemma-4.3", "lemma-5.4", "eq-4.5", "eq-5.11", "eq-5.12", "eq-5.12a"))
def _formal_series(depth, rng):
    order = 2 * depth
    return [kind for kind, seq in _FORMAL.items()
            if not formal_F(kind, order).agrees_with(moment_series(seq, order), order)]


def _random_cf(rng: random.Random, length: int) -> CFSpec:
    nums = [random_fraction(rng, nonzero=True) for _ in range(length)]
    dens = [random_fraction(rng, nonzero=True) for _ in range(length)]
    return CFSpec.from_lists(random_fraction(rng), nums, dens)


@_identity("contraction-laws", "cfrac-engine", 4,
           "even/odd contractions reproduce approximants 2k and 2k+1", ("def-3.5", "lemma-3.6", "eq-3.14"))
def _contraction_laws(depth, rng):
    fails = []
    for i in range(500):
        cf = _random_cf(rng, 2 * depth + 2)
        k = rng.randint(0, depth)
        even, odd = cf_even_contraction(cf, k), cf_odd_contraction(cf, k)
        _expect(fails, cf_approximant(even, k).same_value(cf_approximant(cf, 2 * k)), f"even case {i}, k={k}")
        _expect(fails, cf_approximant(odd, k).same_value(cf_approximant(cf, 2 * k + 1)), f"odd case {i}, k={k}")
    return fails


@_identity("equivalence", "cfrac-engine", 4, "equivalence transforms keep every approximant", ("eq-3.13",))
def _equivalence(depth, rng):
    fails = []
    for i in range(500):
        cf = _random_cf(rng, depth)
        rs = [Fraction(1)] + [random_fraction(rng, nonzero=True) for _ in range(depth)]
        eq = cf_equivalence(cf, rs.__getitem__, depth)
        for m in range(depth + 1):
            _expect(fails, cf_approximant(eq, m).same_value(cf_approximant(cf, m)), f"case {i}, m={m}")
        _expect(fails, determinant_identity_holds(cf, depth), f"determinant identity, case {i}")
    return fails


def _z(e: int, coeff=1) -> LaurentPoly:
    return LaurentPoly.monomial(e, coeff)


@_identity("cf-displays", "cfrac-engine", 4,
           "the displayed equivalence and contraction steps to the J-fractions",
           ("eq-3.15", "eq-3.16", "eq-4.8", "eq-4.9", "eq-5.18", "eq-5.19", "eq-5.22"))
def _cf_displays(depth, rng):
    fails = []
    # Ramanujan's fraction at s = 2/z, b = x, rescaled by r_m = z^2/(4(2m-1)).
    x2 = X * X
    ram = CFSpec(0,
                 lambda m: _z(0, X) if m == 1 else _z(0, -4 * ((m - 1) ** 2 - x2) * (m - 1) ** 4),
                 lambda m: (2 * m - 1) * (_z(-2, 4) + _z(0, 2 * m * (m - 1) + 1 - x2)))
    eq = cf_equivalence(ram, lambda m: 1 if m == 0 else _z(2, Fraction(1, 4 * (2 * m - 1))), depth + 1)
    w = family_params("bernoulli-odd", depth + 1)
    _expect(fails, eq.num(1) == _z(2, w.c0 / 2), "Ramanujan: first numerator")
    for m in range(1, depth + 2):
        _expect(fails, eq.den(m) == _z(0, 1) + _z(2, w.s[m - 1]), f"Ramanujan: denominator {m}")
        if m >= 2:
            _expect(fails, eq.num(m) == _z(4, -w.t[m - 2]), f"Ramanujan: numerator {m}")

    # Lange's fraction at s = 2/z, b = 1, a = x, rescaled by r_m = z/2.
    def lange_a(n: int) -> Poly:
        return Poly.const(n * n) if n % 2 == 0 else n * n - x2

    lange = CFSpec(0, lambda m: _z(-1, 2) if m == 1 else _z(0, lange_a(m - 1)), lambda m: _z(-1, 2))
    eq = cf_equivalence(lange, lambda m: 1 if m == 0 else _z(1, Fraction(1, 2)), 2 * depth + 2)
    for m in range(1, 2 * depth + 3):
        _expect(fails, eq.den(m) == 1, f"Lange: denominator {m}")
        want = _z(0, 1) if m == 1 else _z(2, lange_a(m - 1) / 4)
        _expect(fails, eq.num(m) == want, f"Lange: numerator {m}")

    # Same fraction in t = z^2 (YPoly in t), then contracted.
    alpha = [None] + [-lange_a(n) / 4 for n in range(1, 2 * depth + 4)]
    s_frac = CFSpec(0, lambda m: YPoly.const(1) if m == 1 else YPoly((0, -alpha[m - 1])), lambda m: 1)
    even = cf_even_contraction(s_frac, depth)
    e0 = family_params("euler-nu(0)", depth)
    for k in range(1, depth + 1):
        _expect(fails, even.den(k) == YPoly((1, e0.s[k - 1])), f"even contraction: denominator {k}")
        if k >= 2:
            _expect(fails, even.num(k) == YPoly((0, 0, -e0.t[k - 2])), f"even contraction: numerator {k}")
    odd = cf_odd_contraction(s_frac, depth)
    e2 = family_params("euler-nu(2)", depth)
    _expect(fails, odd.b0 == 1, "odd contraction: leading 1")
    _expect(fails, odd.num(1) == YPoly((0, e2.c0)), "odd contraction: first numerator")
    for k in range(1, depth + 1):
        _expect(fails, odd.den(k) == YPoly((1, e2.s[k - 1])), f"odd contraction: denominator {k}")
        if k >= 2:
            _expect(fails, odd.num(k) == YPoly((0, 0, -e2.t[k - 2])), f"odd contraction: numerator {k}")
    return fails


# ---------------------------------------------------------------------------
# shift-engine
# ---------------------------------------------------------------------------

_TABLE3 = (
    (-3, 0, 1),
    (41, 0, -18, 0, 1),
    (-1323, 0, 655, 0, -53, 0, 1),
    (77841, 0, -41364, 0, 3958, 0, -116, 0, 1),
)


@_identity("table-3", "shift-engine", 3, "band minors d_n for the nu = 1 Euler family", ("table-3",))
def _table3(depth, rng):
    rows = table3_rows(min(depth, 3))
    return [f"n={n}" for n, d in rows if d * 4 ** (n + 1) != Poly(_TABLE3[n])]


@_identity("band-minors", "shift-engine", 5, "minor recurrence equals the band-matrix determinant",
           ("eq-6.4", "eq-6.10"))
def _band_minors(depth, rng):
    fails = []
    for fam in FAMILIES:
        p = family_params(fam, depth + 1)
        for n in range(depth + 1):
            _expect(fails, dn_via_recurrence(p.s, p.t, n) == dn_via_determinant(BandMatrix(p.s, p.t, n)),
                    f"{fam}, n={n}")
    for i in range(50):
        s = [random_poly(rng, 2) for _ in range(depth + 1)]
        t = [random_poly(rng, 2) for _ in range(depth)]
        _expect(fails, dn_via_recurrence(s, t, depth) == dn_via_determinant(BandMatrix(s, t, depth)),
                f"random case {i}")
    return fails


@_identity("euler-band-closed", "shift-engine", 5, "d_n^(0) = prod (x^2 - (2l+1)^2)/4", ("lemma-6.4", "eq-6.9"))
def _euler_band_closed(depth, rng):
    p = family_params("euler-nu(0)", depth + 1)
    return [f"n={n}" for n in range(depth + 1)
            if dn0_closed(n) != dn_via_determinant(BandMatrix(p.s, p.t, n))]


@_identity("shifted-hankel", "shift-engine", 4,
           "H_n(a_{k+1}) and H_n(a_{k+2}) from unshifted Jacobi data", ("prop-6.2", "eq-6.5", "eq-6.6"))
def _shifted_hankel(depth, rng):
    fails = []
    for name in BUILTIN_SEQUENCES:
        seq = make_sequence(name)
        for shift in (1, 2):
            direct = shifted(seq, shift)
            for n in range(depth + 1):
                _expect(fails, shifted_hankel_prop62(seq, n, shift) == hankel_det(direct, n),
                        f"{name}, shift {shift}, n={n}")
    return fails


@_identity("shifted-euler", "shift-engine", 3, "H_n(c^(nu+2)) = H_n(c^(nu)) d_n^(nu) for nu = 0, 1",
           ("eq-6.11", "eq-6.12"))
def _shifted_euler(depth, rng):
    fails = []
    p1 = family_params("euler-nu(1)", depth + 1)
    for n in range(depth + 1):
        _expect(fails, hankel_det("euler-nu-half(2)", n) == hankel_det("euler-nu-half(0)", n) * dn0_closed(n),
                f"nu=0, n={n}")
        _expect(fails, hankel_det("euler-nu-half(3)", n)
                == hankel_det("euler-nu-half(1)", n) * dn_via_recurrence(p1.s, p1.t, n), f"nu=1, n={n}")
    return fails


@_identity("s-from-shifted", "shift-engine", 4, "s_n from shifted Hankel determinants", ("prop-6.3", "eq-6.7"))
def _s_from_shifted(depth, rng):
    fails = []
    for fam in ("touchard", "bernoulli-odd", "euler-nu(0)", "euler-nu(1)", "euler-nu(2)"):
        p = family_params(fam, depth + 1)
        seq = family_sequence(fam)
        fails += [f"{fam}, n={n}" for n in range(depth + 1) if s_from_shifted(seq, n) != p.s[n]]
    return fails


@_identity("bernoulli-shift-factors", "shift-engine", 3,
           "H_n(B_{2k+3}((x+1)/2)) keeps the linear factors of H_n(B_{2k+1}((x+1)/2))")
def _bernoulli_shift_factors(depth, rng):
    fails = []
    seq = shifted(make_sequence("bernoulli-odd-half"), 1)
    for n in range(depth + 1):
        det = hankel_det(seq, n)
        fac = factor_even_linear(closed_bernoulli_odd(n))
        linear = [X] + [X - l for l, _ in fac.factors] + [X + l for l, _ in fac.factors]
        for f in linear:
            _expect(fails, not det.divmod(f)[1], f"n={n}: not divisible by {f.pretty()}")
    return fails


# ---------------------------------------------------------------------------
# numerics
# ---------------------------------------------------------------------------

ANALYTIC_CASES = (
    ("ramanujan-48", {"s": 10.0, "b": 0.5}),
    ("ramanujan-48", {"s": 6.0, "b": 0.3}),
    ("ramanujan-48", {"s": 8.0, "b": 1.5}),
    ("lange-518", {"s": 10.0, "a": 0.5, "b": 1.0}),
    ("lange-518", {"s": 8.0, "a": 1.3, "b": 0.8}),
    ("lange-518", {"s": 12.0, "a": 2.0, "b": 1.5}),
    ("lange-520", {"s": 10.0, "a": 0.5}),
    ("lange-520", {"s": 12.0, "a": 1.0}),
    ("lange-520", {"s": 16.0, "a": 2.5}),
)
TERMINATING_CASES = (("ramanujan-48", {"s": 4.0, "b": 1.0}), ("ramanujan-48", {"s": 7.5, "b": 1.0}))


@_identity("analytic-cf", "numerics", 30, "polygamma sides equal the continued fractions numerically",
           ("eq-4.8", "eq-5.18", "eq-5.20"))
def _analytic_cf(depth, rng):
    fails = []
    d = max(depth, 30)
    for which, params in ANALYTIC_CASES:
        r = validate_identity(which, params, d)
        _expect(fails, r.abs_err < 1e-10, f"{which} {params}: error {r.abs_err:.3e}")
    for which, params in TERMINATING_CASES:
        r = validate_identity(which, params, d)
        _expect(fails, r.abs_err < 1e-14, f"{which} {params}: error {r.abs_err:.3e}")
    return fails


@_identity("polygamma-float", "numerics", 200, "digamma/trigamma recurrences and special values")
def _polygamma_float(depth, rng):
    import math

    fails = []
    gamma = 0.5772156649015329
    _expect(fails, abs(digamma(1.0) + gamma) < 1e-12, "psi(1)")
    _expect(fails, abs(digamma(0.5) + gamma + 2 * math.log(2)) < 1e-12, "psi(1/2)")
    _expect(fails, abs(trigamma(1.0) - math.pi**2 / 6) < 1e-12, "psi'(1)")
    _expect(fails, abs(trigamma(0.5) - math.pi**2 / 2) < 1e-12, "psi'(1/2)")
    for i in range(max(depth, 200)):
        v = rng.uniform(0.1, 50.0)
        _expect(fails, abs(digamma(v + 1) - digamma(v) - 1 / v) < 1e-13, f"psi recurrence at {v}")
        _expect(fails, abs(trigamma(v) - trigamma(v + 1) - 1 / v**2) < 1e-12, f"psi' recurrence at {v}")
    return fails


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


def resolve_scope(scope: str) -> list[Identity]:
    """'all', a module name, an identity id, or an alias."""
    if scope == "all":
        return sorted(IDENTITY_REGISTRY.values(), key=lambda i: i.id)
    if scope in MODULES:
        return sorted((i for i in IDENTITY_REGISTRY.values() if i.module == scope), key=lambda i: i.id)
    if scope in IDENTITY_REGISTRY:
        return [IDENTITY_REGISTRY[scope]]
    hits = [i for i in IDENTITY_REGISTRY.values() if scope in i.aliases]
    if hits:
        return sorted(hits, key=lambda i: i.id)
    raise DomainError(f"unknown scope {scope!r}: use 'all', a module ({', '.join(MODULES)}) or an identity id")


def run_verification(scope: str = "all", max_depth: int | None = None, seed: int = 0,
                     timing: bool = True) -> dict:
    """Run the selected checks; ``max_depth`` caps each check's natural depth."""
    if max_depth is not None and max_depth < 1:
        raise DomainError("max-depth must be >= 1")
    results = []
    for ident in resolve_scope(scope):
        depth = ident.depth if max_depth is None else min(ident.depth, max_depth)
        rng = random.Random(f"{seed}:{ident.id}")
        start = time.perf_counter()
        try:
            failures = ident.run(depth, rng)
        except Exception as exc:  # a crash is a failed identity, not a crashed run
            failures = [f"{type(exc).__name__}: {exc}"]
        entry = {"id": ident.id, "module": ident.module, "aliases": list(ident.aliases),
                 "summary": ident.summary, "depth": depth, "passed": not failures,
                 "failures": failures[:10]}
        if timing:
            entry["seconds"] = round(time.perf_counter() - start, 4)
        results.append(entry)
    return {"scope": scope, "max_depth": max_depth, "seed": seed,
            "passed": all(r["passed"] for r in results), "results": results}

