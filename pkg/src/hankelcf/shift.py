"""Shifted sequences: the tridiagonal Jacobi band matrix, its leading minors
d_n, and Hankel determinants of k -> c_{k+1}, c_{k+2} from unshifted data."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArityError, DegenerateMomentsError
from .exact import Poly
from .hankel import bareiss_det, hankel_det
from .sequences import MomentSeq, make_sequence, shifted

__all__ = [
    "BandMatrix",
    "dn0_closed",
    "dn_via_determinant",
    "dn_via_recurrence",
    "s_from_shifted",
    "shifted_hankel_prop62",
    "table3_rows",
]


@dataclass(frozen=True)
class BandMatrix:
    """Leading (n+1) x (n+1) block of the band matrix with diagonal -s_i,
    superdiagonal 1 and subdiagonal t_{i+1}."""

    s: tuple[Poly, ...]
    t: tuple[Poly, ...]  # t[0] is t_1
    n: int

    def __post_init__(self):
        if len(self.s) < self.n + 1 or len(self.t) < self.n:
            raise ArityError(f"band matrix of index {self.n} needs {self.n + 1} s and {self.n} t values")

    def rows(self) -> list[list[Poly]]:
        size = self.n + 1
        m = [[Poly() for _ in range(size)] for _ in range(size)]
        for i in range(size):
            m[i][i] = -Poly.coerce(self.s[i])
            if i + 1 < size:
                m[i][i + 1] = Poly.const(1)
                m[i + 1][i] = Poly.coerce(self.t[i])
        return m


def dn_via_recurrence(s: Sequence, t: Sequence, n: int) -> Poly:
    """d_n from d_{m+1} = -s_{m+1} d_m - t_{m+1} d_{m-1}, d_{-1} = 1, d_0 = -s_0.

    ``t[0]`` holds t_1. In the +tau convention (t = -tau) this is
    d_{m+1} = -sigma_{m+1} d_m + tau_{m+1} d_{m-1}.
    """
    if n == -1:
        return Poly.const(1)
    if len(s) < n + 1 or len(t) < n:
        raise ArityError(f"d_{n} needs s_0..s_{n} and t_1..t_{n}")
    prev, cur = Poly.const(1), -Poly.coerce(s[0])
    for m in range(n):
        prev, cur = cur, -Poly.coerce(s[m + 1]) * cur - Poly.coerce(t[m]) * prev
    return cur


def dn_via_determinant(m: BandMatrix) -> Poly:
    return bareiss_det(m.rows())


def dn0_closed(n: int) -> Poly:
    """prod_{l=0..n} (x^2 - (2l+1)^2)/4."""
    out = Poly.const(1)
    for l in range(n + 1):
        out = out * Poly((-((2 * l + 1) ** 2), 0, 1)) / 4
    return out


def s_from_shifted(seq: MomentSeq | str, n: int) -> Poly:
    """Recurrence coefficient s_n from Hankel determinants of a and of k -> a_{k+1}:

    s_n = -(H_{n-1}(a)^2 H_n(a') + H_n(a)^2 H_{n-2}(a')) / (H_{n-1}(a') H_n(a) H_{n-1}(a))
    """
    seq = make_sequence(seq)
    nxt = shifted(seq, 1)
    h_n, h_n1 = hankel_det(seq, n), hankel_det(seq, n - 1)
    g_n, g_n1, g_n2 = hankel_det(nxt, n), hankel_det(nxt, n - 1), hankel_det(nxt, n - 2)
    den = g_n1 * h_n * h_n1
    if not den:
        raise DegenerateMomentsError(f"s_{n} of {seq.name}: a Hankel determinant in the denominator vanishes")
    return -(h_n1 * h_n1 * g_n + h_n * h_n * g_n2).divide_exact(den)


def shifted_hankel_prop62(seq: MomentSeq | str, n: int, shift: int) -> Poly:
    """H_n(a_{k+shift}) for shift 1 or 2, computed from H_n(a) and the Jacobi data of a.

    shift 1: H_n(a) d_n
    shift 2: H_n(a) sum_{l=-1..n} d_l^2 prod_{j=l+2..n+1} t_j
    (the second is the product-times-sum form with the divisions cleared).
    """
    from .orthopoly import jacobi_from_moments

    seq = make_sequence(seq)
    if shift not in (1, 2):
        raise ValueError("shift must be 1 or 2")
    params = jacobi_from_moments(seq, n + 1)
    h = hankel_det(seq, n)
    d = [dn_via_recurrence(params.s, params.t, l) for l in range(-1, n + 1)]  # d[l+1] = d_l
    if shift == 1:
        return h * d[n + 1]
    total = Poly()
    for l in range(-1, n + 1):
        prod = Poly.const(1)
        for j in range(l + 2, n + 2):
            prod = prod * params.t[j - 1]
        total = total + d[l + 1] * d[l + 1] * prod
    return h * total


def table3_rows(n_max: int = 3) -> list[tuple[int, Poly]]:
    """d_n for the nu = 1 Euler family, n = 0..n_max, from the recurrence."""
    from .orthopoly import family_params

    p = family_params("euler-nu(1)", n_max + 1)
    return [(n, dn_via_recurrence(p.s, p.t, n)) for n in range(n_max + 1)]

