"""Hankel determinants of Bernoulli and Euler moments, from numbers to polynomials.

Run with ``python3 demos/bernoulli_hankel_tour.py``.
"""
from __future__ import annotations

from hankelcf.hankel import closed_bernoulli_odd, closed_euler, hankel_det
from hankelcf.render import factor_even_linear
from hankelcf.sequences import make_sequence, shifted

print("Bernoulli numbers: H_n is a rational with small prime factors")
for n in range(7):
    print(f"  H_{n} = {hankel_det('bernoulli-num', n).pretty()}")

print("\nEuler numbers against their product formula")
for n in range(5):
    det = hankel_det("euler-num", n)
    print(f"  H_{n} = {det.pretty():>12}   closed form agrees: {det == closed_euler('numbers', n)}")

print("\nB_(2k+1)((x+1)/2): every determinant splits into factors x^2 - l^2")
for n in range(5):
    det = hankel_det("bernoulli-odd-half", n)
    assert det == closed_bernoulli_odd(n)
    print(f"  H_{n} = {factor_even_linear(det).plain()}")

print("\nThe even-index companion does not factor")
for n in range(3):
    print(f"  H_{n} = {hankel_det('bernoulli-even-half', n).pretty()}")

print("\nShifting the odd sequence by one keeps the factor pattern")
seq = shifted(make_sequence("bernoulli-odd-half"), 1)
for n in range(3):
    print(f"  H_{n} = {factor_even_linear(hankel_det(seq, n)).plain()}")
