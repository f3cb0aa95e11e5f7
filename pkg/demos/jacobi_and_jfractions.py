"""From moments to recurrence coefficients, J-fractions and their contractions.

Run with ``python3 demos/jacobi_and_jfractions.py``.
"""
from __future__ import annotations

from fractions import Fraction

from hankelcf.cfrac import (CFSpec, cf_approximant, cf_even_contraction, jfraction_series,
                            moment_series)
from hankelcf.orthopoly import jacobi_from_moments, orth_poly_det, verify_orthogonality

seq = "euler-nu-half(1)"
params = jacobi_from_moments(seq, 6)
print(f"Recurrence coefficients recovered from the moments of {seq}:")
for n in range(4):
    print(f"  s_{n} = {params.s_at(n).pretty()}")
for n in range(1, 5):
    print(f"  t_{n} = {params.t_at(n).pretty()}")

p3 = orth_poly_det(seq, 3)
print(f"\nP_3(y) = {p3.pretty()}")
print("  <y^r P_3> for r = 0..3:", [verify_orthogonality(seq, 3, r, p3).pretty() for r in range(4)])

order = 8
series = jfraction_series(params, order)
print(f"\nThe J-fraction reproduces the moment series through z^{order}:",
      series.agrees_with(moment_series(seq, order), order))

# 1 + 1/(1 + 1/(1 + ...)) converges to the golden ratio; the even part skips every other approximant
one = Fraction(1)
cf = CFSpec.from_lists(one, [one] * 12, [one] * 12)
even = cf_even_contraction(cf, 6)
print("\nGolden-ratio fraction and its even contraction:")
for k in range(1, 6):
    a, b = cf_approximant(cf, 2 * k).value(), cf_approximant(even, k).value()
    print(f"  approximant {2 * k:2d} = {a}   even part {k} = {b}")
