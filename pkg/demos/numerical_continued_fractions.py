"""Floating-point check of the polygamma continued fractions.

Run with ``python3 demos/numerical_continued_fractions.py``.
"""
from __future__ import annotations

from hankelcf.numerics import validate_identity

cases = [
    ("ramanujan-48", {"s": 10, "b": 0.5}),
    ("lange-518", {"s": 10, "a": 0.5, "b": 1}),
    ("lange-520", {"s": 12, "a": 1}),
]
for which, params in cases:
    print(which, params)
    for depth in (5, 10, 20, 30):
        report = validate_identity(which, params, depth)
        print(f"  depth {depth:2d}: cf = {report.rhs:.17g}  error = {report.abs_err:.2e}")
    print(f"  polygamma side: {report.lhs:.17g}")
