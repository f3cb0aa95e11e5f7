"""Double-precision digamma, trigamma and continued-fraction evaluation.

Only used to check the analytic continued fractions numerically; nothing in
the exact core consumes floats.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from typing import Callable

from .errors import DomainError
from .sequences import bernoulli_number

__all__ = [
    "IDENTITIES",
    "ConvergenceWarning",
    "FloatCF",
    "ValidationReport",
    "cf_eval_float",
    "digamma",
    "identity_cf",
    "identity_lhs",
    "trigamma",
    "validate_identity",
]

_RAISE_TO = 10.0
# B_2, B_4, ..., B_18
_B2K = [float(bernoulli_number(2 * k)) for k in range(1, 10)]


class ConvergenceWarning(RuntimeWarning):
    pass


def _check_positive(v: float) -> float:
    v = float(v)
    if not v > 0 or math.isinf(v):
        raise DomainError(f"argument must be a positive finite real, got {v!r}")
    return v


def digamma(v: float) -> float:
    """psi(v) for v > 0: raise the argument past 10, then the asymptotic series
    log v - 1/(2v) - sum_{k=1..9} B_2k / (2k v^2k)."""
    v = _check_positive(v)
    acc = 0.0
    while v < _RAISE_TO:
        acc -= 1.0 / v
        v += 1.0
    inv2 = 1.0 / (v * v)
    tail = 0.0
    for k in range(len(_B2K), 0, -1):
        tail = tail * inv2 + _B2K[k - 1] / (2 * k)
    return acc + math.log(v) - 0.5 / v - tail * inv2


def trigamma(v: float) -> float:
    """psi'(v) for v > 0: psi'(v) = psi'(v+1) + 1/v^2, then
    1/v + 1/(2v^2) + sum_{k=1..9} B_2k / v^(2k+1)."""
    v = _check_positive(v)
    acc = 0.0
    while v < _RAISE_TO:
        acc += 1.0 / (v * v)
        v += 1.0
    inv2 = 1.0 / (v * v)
    tail = 0.0
    for k in range(len(_B2K), 0, -1):
        tail = tail * inv2 + _B2K[k - 1]
    return acc + 1.0 / v + 0.5 * inv2 + tail * inv2 / v


@dataclass(frozen=True)
class FloatCF:
    """b0 + a_1/(b_1 + a_2/(b_2 + ...)) truncated at ``depth``."""

    b0: float
    num: Callable[[int], float]
    den: Callable[[int], float]
    depth: int


def cf_eval_float(cf: FloatCF, *, tiny: float = 1e-300) -> float:
    """A_depth / B_depth by the forward recurrences, rescaled to avoid overflow.

    A zero partial numerator ends the fraction early (the value is then exact
    up to rounding). A near-zero B_depth emits ``ConvergenceWarning`` and
    returns the best available estimate.
    """
    if cf.depth < 1:
        raise DomainError("depth must be >= 1")
    a_prev, a_cur = 1.0, float(cf.b0)
    b_prev, b_cur = 0.0, 1.0
    last_good = a_cur
    for m in range(1, cf.depth + 1):
        a_m = float(cf.num(m))
        if a_m == 0.0:
            break
        b_m = float(cf.den(m))
        a_prev, a_cur = a_cur, b_m * a_cur + a_m * a_prev
        b_prev, b_cur = b_cur, b_m * b_cur + a_m * b_prev
        scale = max(abs(a_cur), abs(b_cur))
        if scale > 1e100 or 0 < scale < 1e-100:
            a_prev, a_cur, b_prev, b_cur = a_prev / scale, a_cur / scale, b_prev / scale, b_cur / scale
        if abs(b_cur) > tiny * max(abs(a_cur), 1.0):
            last_good = a_cur / b_cur
    if abs(b_cur) <= tiny * max(abs(a_cur), 1.0):
        warnings.warn(f"denominator vanishes at depth {cf.depth}", ConvergenceWarning, stacklevel=2)
        return last_good
    return a_cur / b_cur


# ---------------------------------------------------------------------------
# Analytic identities
# ---------------------------------------------------------------------------

IDENTITIES = ("ramanujan-48", "lange-518", "lange-520")

_PARAM_NAMES = {
    "ramanujan-48": ("s", "b"),
    "lange-518": ("s", "a", "b"),
    "lange-520": ("s", "a"),
}


def _params(which: str, params: dict) -> tuple[float, ...]:
    if which not in _PARAM_NAMES:
        raise DomainError(f"unknown identity {which!r}; known: {', '.join(IDENTITIES)}")
    names = _PARAM_NAMES[which]
    missing = [n for n in names if n not in params]
    if missing:
        raise DomainError(f"{which} needs parameters {', '.join(names)}; missing {', '.join(missing)}")
    return tuple(float(params[n]) for n in names)


def identity_lhs(which: str, params: dict) -> float:
    """Polygamma side of the identity."""
    if which == "ramanujan-48":
        s, b = _params(which, params)
        # sum_k 1/(s-b+2k+1)^2 - 1/(s+b+2k+1)^2 = (psi'((s-b+1)/2) - psi'((s+b+1)/2)) / 4
        return (trigamma((s - b + 1) / 2) - trigamma((s + b + 1) / 2)) / 4
    if which == "lange-518":
        s, a, b = _params(which, params)
        q = 4 * b
        return (digamma((s - a + 3 * b) / q) - digamma((s - a + b) / q)
                + digamma((s + a + 3 * b) / q) - digamma((s + a + b) / q)) / q
    s, a = _params(which, params)
    return (digamma((s - a + 3) / 4) - digamma((s + a + 3) / 4)
            + digamma((s + a + 1) / 4) - digamma((s - a + 1) / 4)) / 4


def identity_cf(which: str, params: dict, depth: int) -> FloatCF:
    """Continued-fraction side of the identity, truncated at ``depth``."""
    if which == "ramanujan-48":
        s, b = _params(which, params)
        return FloatCF(
            0.0,
            lambda m: b if m == 1 else -4 * ((m - 1) ** 2 - b * b) * (m - 1) ** 4,
            lambda m: (2 * m - 1) * (s * s - b * b + 2 * m * (m - 1) + 1),
            depth,
        )
    if which == "lange-518":
        s, a, b = _params(which, params)

        def num(m: int) -> float:
            if m == 1:
                return 1.0
            k = m - 1
            if k % 2:
                return (k * k) * b * b - a * a
            return (k * k) * b * b

        return FloatCF(0.0, num, lambda m: s, depth)
    s, a = _params(which, params)
    d = s * s - 1

    def num520(m: int) -> float:
        if m == 1:
            return a / d
        if m % 2 == 0:
            return (m * m - a * a) / d
        n = (m - 1) // 2
        return 4 * n * n / d

    return FloatCF(0.0, num520, lambda m: 1.0, depth)


@dataclass(frozen=True)
class ValidationReport:
    identity: str
    params: dict
    depth: int
    lhs: float
    rhs: float
    abs_err: float

    def passed(self, tol: float) -> bool:
        return self.abs_err < tol

    def to_json(self) -> dict:
        return asdict(self)


def validate_identity(which: str, params: dict, depth: int = 30) -> ValidationReport:
    """Compare both sides of an analytic CF identity in double precision.

    All digamma/trigamma arguments must be positive; a violation raises
    ``DomainError``.
    """
    lhs = identity_lhs(which, params)
    rhs = cf_eval_float(identity_cf(which, params, depth))
    return ValidationReport(which, dict(params), depth, lhs, rhs, abs(lhs - rhs))
