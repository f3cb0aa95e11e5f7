"""Continued fractions ``b0 + K(a_m / b_m)`` over any commutative ring.

Partial quantities may be Fractions, ``Poly``, ``YPoly``, ``LaurentPoly``,
floats or sympy expressions; only ``+``, ``*`` and (for contractions) an
exact ``/`` are used. Approximants are compared by cross-multiplication, so
equality checks never need a field.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Any, Callable, Sequence

from .errors import ArityError, ContractionError, EquivalenceError
from .exact import TruncSeries, series_divide
from .orthopoly import JacobiParams
from .sequences import MomentSeq, make_sequence

__all__ = [
    "Approximant",
    "CFSpec",
    "cf_approximant",
    "cf_equivalence",
    "cf_even_contraction",
    "cf_odd_contraction",
    "determinant_identity_holds",
    "jfraction_series",
    "moment_series",
    "verify_jfraction_vs_moments",
]


def _is_zero(v) -> bool:
    try:
        return bool(v == 0)
    except TypeError:
        return False


def _div(a, b):
    if _is_zero(b):
        raise ContractionError("division by a zero partial denominator")
    if b == 1:
        return a
    return a / b


@dataclass(frozen=True)
class CFSpec:
    """``b0 + a_1/(b_1 + a_2/(b_2 + ...))`` with the partial quantities given as functions of m >= 1."""

    b0: Any
    partial_num: Callable[[int], Any]
    partial_den: Callable[[int], Any]
    depth_hint: int = 0

    def num(self, m: int):
        return self.partial_num(m)

    def den(self, m: int):
        return self.partial_den(m)

    @classmethod
    def from_lists(cls, b0, nums: Sequence, dens: Sequence) -> "CFSpec":
        """Finite CF; ``nums[0]`` is a_1 and ``dens[0]`` is b_1."""
        nums, dens = list(nums), list(dens)
        if len(nums) != len(dens):
            raise ArityError("need as many partial numerators as denominators")

        def lookup(values):
            def get(m: int):
                if not 1 <= m <= len(values):
                    raise ArityError(f"partial quantity {m} not given (have {len(values)})")
                return values[m - 1]
            return get

        return cls(b0, lookup(nums), lookup(dens), len(nums))

    def to_lists(self, depth: int | None = None) -> tuple[Any, list, list]:
        depth = self.depth_hint if depth is None else depth
        return (self.b0, [self.num(m) for m in range(1, depth + 1)],
                [self.den(m) for m in range(1, depth + 1)])


@dataclass(frozen=True)
class Approximant:
    A: Any
    B: Any
    n: int
    terminated: bool = False

    def value(self):
        return self.A / self.B

    def same_value(self, other: "Approximant") -> bool:
        return _is_zero(self.A * other.B - other.A * self.B)


def cf_approximant(cf: CFSpec, n: int) -> Approximant:
    """A_n/B_n by A_m = b_m A_{m-1} + a_m A_{m-2} (same for B), A_{-1} = 1, B_{-1} = 0.

    A vanishing a_m ends the fraction: the result is the (m-1)th approximant,
    flagged ``terminated``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    a_prev, a_cur = 1, cf.b0
    b_prev, b_cur = 0, 1
    for m in range(1, n + 1):
        a_m = cf.num(m)
        if _is_zero(a_m):
            return Approximant(a_cur, b_cur, m - 1, terminated=True)
        b_m = cf.den(m)
        a_prev, a_cur = a_cur, b_m * a_cur + a_m * a_prev
        b_prev, b_cur = b_cur, b_m * b_cur + a_m * b_prev
    return Approximant(a_cur, b_cur, n)


def determinant_identity_holds(cf: CFSpec, n: int) -> bool:
    """A_m B_{m-1} - A_{m-1} B_m = (-1)^(m-1) a_1 ... a_m for 1 <= m <= n."""
    a_prev, a_cur, b_prev, b_cur = 1, cf.b0, 0, 1
    prod = 1
    for m in range(1, n + 1):
        a_m, b_m = cf.num(m), cf.den(m)
        a_prev, a_cur = a_cur, b_m * a_cur + a_m * a_prev
        b_prev, b_cur = b_cur, b_m * b_cur + a_m * b_prev
        prod = prod * a_m
        lhs = a_cur * b_prev - a_prev * b_cur
        rhs = prod if m % 2 else -prod
        if not _is_zero(lhs - rhs):
            return False
    return True


def cf_equivalence(cf: CFSpec, r: Callable[[int], Any], depth: int) -> CFSpec:
    """Equivalence transform: d_m = r_m b_m, c_m = r_m r_{m-1} a_m, with r_0 = 1."""
    if not r(0) == 1:
        raise EquivalenceError("r_0 must be 1")
    for m in range(1, depth + 1):
        if _is_zero(r(m)):
            raise EquivalenceError(f"r_{m} vanishes")
    return CFSpec(cf.b0,
                  lambda m: r(m) * r(m - 1) * cf.num(m),
                  lambda m: r(m) * cf.den(m),
                  depth)


def cf_even_contraction(cf: CFSpec, depth: int) -> CFSpec:
    """CF whose kth approximant is the (2k)th of ``cf``, for k <= depth.

    d_0 = b_0, c_1 = a_1 b_2, d_1 = a_2 + b_1 b_2, and for k >= 1
    c_{k+1} = -a_{2k} a_{2k+1} b_{2k+2} / b_{2k},
    d_{k+1} = a_{2k+2} + b_{2k+1} b_{2k+2} + a_{2k+1} b_{2k+2} / b_{2k}.
    """
    a, b = cf.num, cf.den
    for k in range(1, depth + 1):
        if _is_zero(b(2 * k)):
            raise ContractionError(f"even contraction needs b_{2 * k} != 0")
    nums, dens = [], []
    if depth >= 1:
        nums.append(a(1) * b(2))
        dens.append(a(2) + b(1) * b(2))
    for k in range(1, depth):
        ratio = _div(b(2 * k + 2), b(2 * k))
        nums.append(-(a(2 * k) * a(2 * k + 1)) * ratio)
        dens.append(a(2 * k + 2) + b(2 * k + 1) * b(2 * k + 2) + a(2 * k + 1) * ratio)
    return CFSpec.from_lists(cf.b0, nums, dens)


def cf_odd_contraction(cf: CFSpec, depth: int) -> CFSpec:
    """CF with C_0/D_0 = A_1/B_1 (D_0 = 1) and C_k = A_{2k+1}, D_k = B_{2k+1} for 1 <= k <= depth.

    d_0 = (b_0 b_1 + a_1) / b_1
    c_1 = -a_1 a_2 b_3 / b_1,        d_1 = b_3 (b_1 b_2 + a_2) + a_3 b_1
    c_2 = -b_1 a_3 a_4 b_5 / b_3,    and for n >= 3
    c_n = -a_{2n-1} a_{2n} b_{2n+1} / b_{2n-1},
    d_n = a_{2n+1} + b_{2n} b_{2n+1} + a_{2n} b_{2n+1} / b_{2n-1}   (n >= 2).
    """
    a, b = cf.num, cf.den
    for k in range(0, depth + 1):
        if _is_zero(b(2 * k + 1)):
            raise ContractionError(f"odd contraction needs b_{2 * k + 1} != 0")
    d0 = _div(cf.b0 * b(1) + a(1), b(1))
    nums, dens = [], []
    for n in range(1, depth + 1):
        if n == 1:
            nums.append(-_div(a(1) * a(2) * b(3), b(1)))
            dens.append(b(3) * (b(1) * b(2) + a(2)) + a(3) * b(1))
            continue
        ratio = _div(b(2 * n + 1), b(2 * n - 1))
        c = -(a(2 * n - 1) * a(2 * n)) * ratio
        nums.append(c * b(1) if n == 2 else c)
        dens.append(a(2 * n + 1) + b(2 * n) * b(2 * n + 1) + a(2 * n) * ratio)
    return CFSpec.from_lists(d0, nums, dens)


# ---------------------------------------------------------------------------
# J-fractions as power series
# ---------------------------------------------------------------------------


def _jfraction_t_series(params: JacobiParams, t_order: int, depth: int) -> TruncSeries:
    if len(params.s) < depth or len(params.t) < depth - 1:
        raise ArityError(f"J-fraction of depth {depth} needs s_0..s_{depth - 1} and t_1..t_{depth - 1}")
    tail = TruncSeries("t", {0: 1, 1: params.s[depth - 1]}, t_order, min_exp=0)
    for m in range(depth - 2, -1, -1):
        quad = TruncSeries("t", {2: params.t[m]}, t_order, min_exp=0)
        tail = TruncSeries("t", {0: 1, 1: params.s[m]}, t_order, min_exp=0) - series_divide(quad, tail)
    c0 = TruncSeries("t", {0: params.c0}, t_order, min_exp=0)
    return series_divide(c0, tail).truncate(t_order)


def jfraction_series(params: JacobiParams, order: int) -> TruncSeries:
    """Expansion of c0/(1 + s_0 t - t_1 t^2/(1 + s_1 t - ...)) with t = z^2, through z^order.

    Uses ceil(order/2) + 1 levels, and when the parameters allow, checks that
    one more level does not change any coefficient through ``order``.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    t_order = order // 2
    depth = ceil(order / 2) + 1
    series = _jfraction_t_series(params, t_order, depth)
    if len(params.s) >= depth + 1 and len(params.t) >= depth:
        deeper = _jfraction_t_series(params, t_order, depth + 1)
        if not series.agrees_with(deeper, t_order):
            raise AssertionError("J-fraction expansion changed with one more level")
    return TruncSeries("z", {2 * e: series.coeff(e) for e in range(t_order + 1)}, order, min_exp=0)


def moment_series(seq: MomentSeq | str, order: int) -> TruncSeries:
    """sum_k c_k z^(2k) through z^order."""
    seq = make_sequence(seq)
    return TruncSeries("z", {2 * k: seq.gen(k) for k in range(order // 2 + 1)}, order, min_exp=0)


def verify_jfraction_vs_moments(seq: MomentSeq | str, params: JacobiParams, order: int) -> bool:
    return jfraction_series(params, order).agrees_with(moment_series(seq, order), order)

