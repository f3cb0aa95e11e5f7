"""Formal asymptotic series of the digamma and trigamma functions, and the
moment generating series they assemble into.

Series are built in ``w = 1/Z`` where the argument is ``Z + a``::

    psi(Z + a)  = log Z + sum_{m>=1} (-1)^(m+1) B_m(a)/m  w^m
    psi'(Z + a) =         sum_{m>=0} (-1)^m     B_m(a)    w^(m+1)

Changing to the moment variable z is an exponent map: ``Z = 1/z`` gives
``w = z``, ``Z = 1/(2z)`` gives ``w = 2z`` (coefficient e scales by 2^e).
Log terms must cancel before any such change.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, FormalCancellationError
from .exact import Poly, TruncSeries, X
from .sequences import bernoulli_poly

__all__ = ["FORMAL_KINDS", "formal_F", "psi_asymptotic", "psi_prime_asymptotic"]

FORMAL_KINDS = ("bernoulli-odd", "euler-nu0", "euler-nu1", "euler-nu2")


def psi_asymptotic(a, order: int) -> TruncSeries:
    """psi(Z + a) in powers of w = 1/Z through w^order; log slot holds log Z."""
    a = Poly.coerce(a)
    coeffs = {}
    for m in range(1, order + 1):
        c = bernoulli_poly(m).compose(a) / m
        coeffs[m] = c if m % 2 else -c
    return TruncSeries("w", coeffs, order, min_exp=min(1, order), log_coeff=1)


def psi_prime_asymptotic(a, order: int) -> TruncSeries:
    """psi'(Z + a) in powers of w = 1/Z through w^order."""
    a = Poly.coerce(a)
    coeffs = {}
    for m in range(0, order):
        c = bernoulli_poly(m).compose(a)
        coeffs[m + 1] = -c if m % 2 else c
    return TruncSeries("w", coeffs, order, min_exp=min(1, order))


def _linear(c0, c1) -> Poly:
    return Poly((Fraction(c0), Fraction(c1)))


def _power_series(s: TruncSeries, order: int) -> TruncSeries:
    """Drop the (zero) negative-exponent slots; anything nonzero there is an assembly error."""
    if s.has_log():
        raise FormalCancellationError(f"log term survived with coefficient {s.log_coeff}")
    for e in range(s.min_exp, 0):
        if s.coeff(e):
            raise FormalCancellationError(f"nonzero coefficient at z^{e}")
    return TruncSeries("z", {e: s.coeff(e) for e in range(0, order + 1)}, order, min_exp=0)


def _euler_digamma_combination(signs: tuple[int, int, int, int], order: int) -> TruncSeries:
    # arguments 1/(2z) + (3+x)/4, (1+x)/4, (3-x)/4, (1-x)/4
    shifts = (_linear(Fraction(3, 4), Fraction(1, 4)), _linear(Fraction(1, 4), Fraction(1, 4)),
              _linear(Fraction(3, 4), Fraction(-1, 4)), _linear(Fraction(1, 4), Fraction(-1, 4)))
    total = None
    for sign, a in zip(signs, shifts):
        term = psi_asymptotic(a, order).scale(sign)
        total = term if total is None else total + term
    if total.has_log():
        raise FormalCancellationError(f"log coefficients do not cancel: {total.log_coeff}")
    return total


def formal_F(kind: str, order: int) -> TruncSeries:
    """Generating series of a moment family, assembled from polygamma expansions.

    bernoulli-odd:  (psi'(1/z + (1-x)/2) - psi'(1/z + (1+x)/2)) / (2 z^2)
                    = sum_k B_{2k+1}((x+1)/2) z^(2k)
    euler-nu0:      (psi(q1) - psi(q2) + psi(q3) - psi(q4)) / (2z)
    euler-nu1:      (-psi(q1) + psi(q2) + psi(q3) - psi(q4)) / (2z^2)
    euler-nu2:      (F_nu0 - 1) / z^2
    with q1..q4 = 1/(2z) + (3+x)/4, (1+x)/4, (3-x)/4, (1-x)/4; the Euler
    series equal sum_k E_{2k+nu}((x+1)/2) z^(2k).
    """
    if order < 0 or order % 2:
        raise DomainError("order must be even and >= 0")
    if kind == "bernoulli-odd":
        diff = (psi_prime_asymptotic((1 - X) / 2, order + 2)
                - psi_prime_asymptotic((1 + X) / 2, order + 2))
        return _power_series(diff.relabel("z").shift(-2).scale(Fraction(1, 2)), order)
    if kind == "euler-nu0":
        g = _euler_digamma_combination((1, -1, 1, -1), order + 1)
        return _power_series(g.rescale(2, var="z").shift(-1).scale(Fraction(1, 2)), order)
    if kind == "euler-nu1":
        g = _euler_digamma_combination((-1, 1, 1, -1), order + 2)
        return _power_series(g.rescale(2, var="z").shift(-2).scale(Fraction(1, 2)), order)
    if kind == "euler-nu2":
        f0 = formal_F("euler-nu0", order + 2)
        return _power_series((f0 - 1).shift(-2), order)
    raise DomainError(f"unknown kind {kind!r}; known: {', '.join(FORMAL_KINDS)}")
