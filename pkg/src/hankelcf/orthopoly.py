"""Moment functional, monic orthogonal polynomials and Jacobi parameters.

Recurrence convention throughout::

    P_0 = 1,  P_1 = y + s_0,  P_{n+1} = (y + s_n) P_n - t_n P_{n-1}

Families published with a ``+ tau_n P_{n-1}`` term are stored with
``t_n = -tau_n``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ArityError, DegenerateMomentsError, DomainError
from .exact import Poly, X, Y, YPoly
from .hankel import bareiss_det, hankel_det
from .sequences import HALF_SHIFT, MomentSeq, euler_poly, make_sequence
from .shift import s_from_shifted

__all__ = [
    "FAMILIES",
    "JacobiParams",
    "apply_functional",
    "family_params",
    "family_sequence",
    "jacobi_from_moments",
    "named_family",
    "orth_poly_det",
    "orth_poly_rec",
    "verify_orthogonality",
]


@dataclass(frozen=True)
class JacobiParams:
    """J-fraction data: ``c0`` and the recurrence coefficients.

    ``s`` holds s_0, s_1, ...; ``t`` holds t_1, t_2, ... (so ``t[0]`` is t_1).
    """

    c0: Poly
    s: tuple[Poly, ...]
    t: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "c0", Poly.coerce(self.c0))
        object.__setattr__(self, "s", tuple(Poly.coerce(v) for v in self.s))
        object.__setattr__(self, "t", tuple(Poly.coerce(v) for v in self.t))

    def s_at(self, n: int) -> Poly:
        return self.s[n]

    def t_at(self, n: int) -> Poly:
        """t_n for n >= 1."""
        return self.t[n - 1]

    def perturbed(self, which: str, index: int, delta) -> "JacobiParams":
        """Copy with one parameter shifted by ``delta`` (used as a negative control)."""
        s, t = list(self.s), list(self.t)
        if which == "s":
            s[index] = s[index] + delta
        elif which == "t":
            t[index - 1] = t[index - 1] + delta
        else:
            raise ValueError("which must be 's' or 't'")
        return JacobiParams(self.c0, tuple(s), tuple(t))

    def to_json(self) -> dict:
        return {
            "c0": self.c0.to_text(),
            "s": [p.to_text() for p in self.s],
            "t": [p.to_text() for p in self.t],
        }

    @classmethod
    def from_json(cls, data: dict) -> "JacobiParams":
        return cls(Poly.from_text(data["c0"]),
                   tuple(Poly.from_text(v) for v in data["s"]),
                   tuple(Poly.from_text(v) for v in data["t"]))


def apply_functional(seq: MomentSeq | str, p: YPoly | Poly) -> Poly:
    """Replace y^k by c_k (the constant term goes to c_0)."""
    seq = make_sequence(seq)
    if not isinstance(p, YPoly):
        p = YPoly.const(p)
    out = Poly()
    for k, c in enumerate(p.ycoeffs):
        if c:
            out = out + c * seq.gen(k)
    return out


def orth_poly_det(seq: MomentSeq | str, n: int) -> YPoly:
    """Monic P_n as the bordered determinant (last row 1, y, ..., y^n) over H_{n-1}.

    Expanded along the last row; each cofactor is an n x n determinant in Q[x].
    """
    seq = make_sequence(seq)
    if n == 0:
        return YPoly.const(1)
    h = hankel_det(seq, n - 1)
    if not h:
        raise DegenerateMomentsError(f"H_{n - 1} of {seq.name} vanishes")
    c = [seq.gen(k) for k in range(2 * n)]
    top = [[c[i + j] for j in range(n + 1)] for i in range(n)]
    coeffs = []
    for j in range(n + 1):
        minor = [row[:j] + row[j + 1:] for row in top]
        cof = bareiss_det(minor)
        if (n + j) % 2:
            cof = -cof
        coeffs.append(cof.divide_exact(h))
    return YPoly(coeffs)


def orth_poly_rec(params: JacobiParams, n: int) -> YPoly:
    if n < 0:
        raise DomainError("n must be >= 0")
    if len(params.s) < n or len(params.t) < max(n - 1, 0):
        raise ArityError(f"P_{n} needs s_0..s_{n - 1} and t_1..t_{n - 1}")
    prev, cur = YPoly(), YPoly.const(1)
    for m in range(n):
        nxt = (Y + params.s[m]) * cur
        if m >= 1:
            nxt = nxt - prev * params.t[m - 1]
        prev, cur = cur, nxt
    return cur


def jacobi_from_moments(seq: MomentSeq | str, depth: int) -> JacobiParams:
    """Recover s_0..s_{depth-1} and t_1..t_depth from the moments.

    t_n = H_n H_{n-2} / H_{n-1}^2 with H_{-1} = 1. s_n comes from the shifted
    Hankel determinants; where one of those vanishes (E_1 = 0 for the Euler
    numbers, say) it falls back to s_n = -L(y P_n^2) H_{n-1} / H_n.
    """
    seq = make_sequence(seq)
    if depth < 0:
        raise DomainError("depth must be >= 0")
    h = {-1: Poly.const(1)}
    for n in range(depth + 1):
        h[n] = hankel_det(seq, n)
        if n < depth and not h[n]:
            raise DegenerateMomentsError(f"H_{n} of {seq.name} vanishes")
    t = tuple((h[n] * h[n - 2]).divide_exact(h[n - 1] * h[n - 1]) if n >= 2
              else h[1].divide_exact(h[0] * h[0])
              for n in range(1, depth + 1))
    s: list[Poly] = []
    polys = [YPoly.const(1)]
    for n in range(depth):
        try:
            s_n = s_from_shifted(seq, n)
        except DegenerateMomentsError:
            p = polys[n]
            s_n = -(apply_functional(seq, Y * p * p) * h[n - 1]).divide_exact(h[n])
        s.append(s_n)
        nxt = (Y + s_n) * polys[n]
        if n >= 1:
            nxt = nxt - polys[n - 1] * t[n - 1]
        polys.append(nxt)
    return JacobiParams(seq.gen(0), tuple(s), t)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

FAMILIES = ("touchard", "alsalam-carlitz", "bernoulli-odd", "euler-nu(0)", "euler-nu(1)", "euler-nu(2)")

_QUARTER = (X * X - 1) / 4  # (x^2 - 1)/4


def _canonical_family(family: str) -> tuple[str, int | None]:
    family = family.replace(" ", "").lower()
    if family in ("bernoulli-odd(w)", "w", "bernoulli-odd"):
        return "bernoulli-odd", None
    m = re.fullmatch(r"euler-nu\((\d+)\)", family)
    if m:
        nu = int(m.group(1))
        if nu not in (0, 1, 2):
            raise DomainError("euler-nu families are known in closed form for nu in {0, 1, 2} only")
        return "euler-nu", nu
    if family in ("touchard", "alsalam-carlitz"):
        return family, None
    raise DomainError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")


def family_params(family: str, depth: int) -> JacobiParams:
    """Published recurrence data as s_0..s_{depth-1}, t_1..t_depth.

    touchard:        s_n = 1/2,  t_n = -n^4 / (4(2n+1)(2n-1))
    alsalam-carlitz: s_n = 0,    t_n = -n^2
    bernoulli-odd:   s_n = C(n+1, 2) - (x^2-1)/4,
                     t_n = -n^4 (x^2 - n^2) / (4(2n+1)(2n-1))
    euler-nu(v):     s_n = (2n+1)(n + v/2) - (x^2-1)/4,
                     t_n = -(n^2/4)(x^2 - (2n+v-1)^2)
    """
    name, nu = _canonical_family(family)
    ns = range(depth)
    nt = range(1, depth + 1)
    if name == "touchard":
        return JacobiParams(Poly.const(1), tuple(Poly.const(Fraction(1, 2)) for _ in ns),
                            tuple(Poly.const(Fraction(-(n**4), 4 * (2 * n + 1) * (2 * n - 1))) for n in nt))
    if name == "alsalam-carlitz":
        return JacobiParams(Poly.const(1), tuple(Poly() for _ in ns), tuple(Poly.const(-(n**2)) for n in nt))
    if name == "bernoulli-odd":
        s = tuple(comb(n + 1, 2) - _QUARTER for n in ns)
        t = tuple(Poly((n**2, 0, -1)) * Fraction(n**4, 4 * (2 * n + 1) * (2 * n - 1)) for n in nt)
        return JacobiParams(X / 2, s, t)
    s = tuple((2 * n + 1) * (n + Fraction(nu, 2)) - _QUARTER for n in ns)
    t = tuple(Poly(((2 * n + nu - 1) ** 2, 0, -1)) * Fraction(n**2, 4) for n in nt)
    return JacobiParams(euler_poly(nu).compose(HALF_SHIFT), s, t)


def family_sequence(family: str) -> MomentSeq:
    """The moment sequence a family is orthogonal for."""
    name, nu = _canonical_family(family)
    return make_sequence({
        "touchard": "bernoulli-num",
        "alsalam-carlitz": "euler-num",
        "bernoulli-odd": "bernoulli-odd-half",
        "euler-nu": f"euler-nu-half({nu})",
    }[name])


def named_family(family: str, n: int) -> YPoly:
    return orth_poly_rec(family_params(family, n), n)


def verify_orthogonality(seq: MomentSeq | str, n: int, r: int, poly: YPoly | None = None) -> Poly:
    """L(y^r P_n): zero for r < n and H_n / H_{n-1} for r = n."""
    if not 0 <= r <= n:
        raise DomainError("need 0 <= r <= n")
    p = orth_poly_det(seq, n) if poly is None else poly
    return apply_functional(seq, p.mul_y(r))
