from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp
from hypothesis import strategies as st

from hankelcf.exact import Poly, YPoly

GOLDEN = Path(__file__).parent / "golden"
SX = sp.Symbol("x")
SY = sp.Symbol("y")


def to_sympy(p: Poly, var=SX):
    return sum(sp.Rational(c.numerator, c.denominator) * var**k for k, c in enumerate(p.coeffs))


def ypoly_to_sympy(p: YPoly):
    return sum(to_sympy(c) * SY**k for k, c in enumerate(p.ycoeffs))


def from_sympy(expr, var=SX) -> Poly:
    poly = sp.Poly(sp.expand(expr), var)
    coeffs = poly.all_coeffs()[::-1]
    return Poly([Fraction(int(sp.numer(c)), int(sp.denom(c))) for c in coeffs])


fractions_st = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_fractions_st = fractions_st.filter(bool)
polys_st = st.lists(fractions_st, min_size=0, max_size=5).map(Poly)
nonzero_polys_st = polys_st.filter(bool)


@pytest.fixture
def golden():
    return lambda name: (GOLDEN / name).read_text(encoding="utf-8")
