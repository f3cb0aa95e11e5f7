"""Hankel matrices, exact determinants over Q[x], and the closed product formulas.

Indexing follows the usual convention: ``H_n`` is the determinant of the
(n+1) x (n+1) matrix ``(c_{i+j})_{0 <= i, j <= n}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import DomainError
from .exact import Poly, X
from .sequences import MomentSeq, make_sequence

__all__ = [
    "HankelMatrix",
    "bareiss_det",
    "closed_bernoulli_numbers",
    "closed_bernoulli_odd",
    "closed_chen",
    "closed_euler",
    "det_by_expansion",
    "hankel_det",
    "hankel_dets",
    "hankel_matrix",
    "hankel_sign",
]


@dataclass(frozen=True)
class HankelMatrix:
    n: int
    entries: tuple[tuple[Poly, ...], ...]
    source: str

    @property
    def size(self) -> int:
        return self.n + 1

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[Poly]]:
        return [list(r) for r in self.entries]

    def to_text(self) -> list[list[list[str]]]:
        return [[p.to_text() for p in row] for row in self.entries]


def hankel_matrix(seq: MomentSeq | str, n: int) -> HankelMatrix:
    seq = make_sequence(seq)
    if n < 0:
        raise DomainError("n must be >= 0")
    c = [seq.gen(k) for k in range(2 * n + 1)]
    entries = tuple(tuple(c[i + j] for j in range(n + 1)) for i in range(n + 1))
    return HankelMatrix(n, entries, seq.name)


def bareiss_det(rows: Sequence[Sequence]) -> Poly:
    """Determinant of a square matrix over Q[x] by fraction-free elimination.

    Every division is exact (Sylvester's identity), so a remainder would mean
    a bug and raises ``ExactDivisionError``. A zero pivot is replaced by a
    lower row with a sign flip; a pivot column that is zero below the
    diagonal makes the determinant zero.
    """
    m = [[Poly.coerce(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return Poly.const(1)
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - mik * row_k[j]
                row_i[j] = num.divide_exact(prev) if prev != 1 else num
            row_i[k] = Poly()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def det_by_expansion(rows: Sequence[Sequence]) -> Poly:
    """Laplace expansion along the first row; exponential cost, small sizes only."""
    m = [[Poly.coerce(v) for v in row] for row in rows]
    n = len(m)
    if n == 0:
        return Poly.const(1)
    if n == 1:
        return m[0][0]
    total = Poly()
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_by_expansion(minor)
        total = total - term if j % 2 else total + term
    return total


def hankel_det(seq: MomentSeq | str, n: int) -> Poly:
    """H_n of the sequence; ``H_{-1} = 1`` and ``H_{-2} = 0`` by convention."""
    if n == -1:
        return Poly.const(1)
    if n < -1:
        return Poly()
    seq = make_sequence(seq)
    return seq.remember(("hankel_det", n), lambda: bareiss_det(hankel_matrix(seq, n).entries))


def hankel_dets(seq: MomentSeq | str, n_max: int) -> list[Poly]:
    """[H_0, ..., H_{n_max}]."""
    return [hankel_det(seq, n) for n in range(n_max + 1)]


def hankel_sign(n: int) -> int:
    """(-1)^C(n+1, 2) by exponent parity."""
    return -1 if comb(n + 1, 2) % 2 else 1


def closed_bernoulli_numbers(n: int) -> Fraction:
    """H_n(B_k) = (-1)^C(n+1,2) prod_{l=1..n} [l^4 / (4(2l+1)(2l-1))]^(n+1-l)."""
    out = Fraction(hankel_sign(n))
    for l in range(1, n + 1):
        out *= Fraction(l**4, 4 * (2 * l + 1) * (2 * l - 1)) ** (n + 1 - l)
    return out


def closed_bernoulli_odd(n: int) -> Poly:
    """H_n(B_{2k+1}((x+1)/2)), expanded.

    (-1)^C(n+1,2) (x/2)^(n+1) prod_{l=1..n} [l^4 (x^2 - l^2) / (4(2l+1)(2l-1))]^(n+1-l)
    """
    out = (X / 2) ** (n + 1) * hankel_sign(n)
    for l in range(1, n + 1):
        factor = Poly((-(l**2), 0, 1)) * Fraction(l**4, 4 * (2 * l + 1) * (2 * l - 1))
        out = out * factor ** (n + 1 - l)
    return out


def _euler_tau(nu: int, l: int) -> Poly:
    # (l^2/4) (x^2 - (2l + nu - 1)^2)
    return Poly((-((2 * l + nu - 1) ** 2), 0, 1)) * Fraction(l**2, 4)


def closed_euler(kind, n: int) -> Poly:
    """Closed Hankel determinants for the Euler families.

    ``kind``: ``"numbers"`` (E_k), ``"polys"`` (E_k(x)), or ``nu`` in {0, 1, 2}
    for c_k = E_{2k+nu}((x+1)/2).
    """
    sign = hankel_sign(n)
    if kind == "numbers":
        out = Fraction(sign)
        for l in range(1, n + 1):
            out *= factorial(l) ** 2
        return Poly.const(out)
    if kind == "polys":
        out = Fraction(-1, 4) ** comb(n + 1, 2)
        for l in range(1, n + 1):
            out *= factorial(l) ** 2
        return Poly.const(out)
    nu = int(kind)
    if nu not in (0, 1, 2):
        raise DomainError("closed Euler forms exist for nu in {0, 1, 2} only")
    lead = {0: Poly.const(1), 1: X / 2, 2: (X * X - 1) / 4}[nu]
    out = lead ** (n + 1) * sign
    for l in range(1, n + 1):
        out = out * _euler_tau(nu, l) ** (n + 1 - l)
    return out


def closed_chen(n: int) -> Fraction:
    """H_n(B_{2k}(1/2)) = prod_{l=1..n} [l^4 (2l-1)^4 / ((4l-3)(4l-1)^2(4l+1))]^(n-l+1)."""
    out = Fraction(1)
    for l in range(1, n + 1):
        out *= Fraction(l**4 * (2 * l - 1) ** 4, (4 * l - 3) * (4 * l - 1) ** 2 * (4 * l + 1)) ** (n - l + 1)
    return out
