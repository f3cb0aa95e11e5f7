"""Bernoulli and Euler numbers/polynomials and the moment sequences built from them."""
from __future__ import annotations

import re
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .errors import DomainError
from .exact import Poly, X

__all__ = [
    "HALF_SHIFT",
    "MomentSeq",
    "SEQUENCE_NAMES",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly",
    "binomial_transform",
    "euler_number",
    "euler_numbers",
    "euler_poly",
    "from_terms",
    "make_sequence",
    "scaled",
    "shifted",
    "verify_euler_from_bernoulli",
    "verify_reflection",
]

# (x + 1)/2, the substitution under which the odd Bernoulli and Euler
# Hankel determinants factor into linear pieces.
HALF_SHIFT = Poly((Fraction(1, 2), Fraction(1, 2)))

_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]
_euler_even: list[Fraction] = [Fraction(1)]


def bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0..B_n from sum_{j<=m} C(m+1, j) B_j = 0, with B_1 = -1/2."""
    if n < 0:
        raise DomainError("n must be >= 0")
    with _lock:
        for m in range(len(_bern), n + 1):
            s = sum((comb(m + 1, j) * _bern[j] for j in range(m)), Fraction(0))
            _bern.append(-s / (m + 1))
        return _bern[: n + 1]


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


def euler_numbers(n: int) -> list[Fraction]:
    """E_0..E_n from sum_j C(2m, 2j) E_{2j} = 0 (m >= 1); odd-index values vanish."""
    if n < 0:
        raise DomainError("n must be >= 0")
    with _lock:
        for m in range(len(_euler_even), n // 2 + 1):
            s = sum((comb(2 * m, 2 * j) * _euler_even[j] for j in range(m)), Fraction(0))
            _euler_even.append(-s)
        even = _euler_even[: n // 2 + 1]
    return [even[k // 2] if k % 2 == 0 else Fraction(0) for k in range(n + 1)]


def euler_number(n: int) -> Fraction:
    return euler_numbers(n)[n]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    b = bernoulli_numbers(n)
    return Poly(comb(n, j) * b[j] for j in range(n, -1, -1))


@lru_cache(maxsize=None)
def euler_poly(n: int) -> Poly:
    """E_n(x) = sum_j C(n, j) (E_j / 2^j) (x - 1/2)^(n-j)."""
    e = euler_numbers(n)
    shift = X - Fraction(1, 2)
    out = Poly()
    power = Poly.const(1)
    for k in range(n + 1):  # k = n - j
        j = n - k
        if e[j]:
            out = out + power * (comb(n, j) * e[j] / Fraction(2) ** j)
        power = power * shift
    return out


def verify_reflection(n: int) -> bool:
    """Check B_n(1-x) = (-1)^n B_n(x) and the same for E_n."""
    flip = Poly((1, -1))
    sign = -1 if n % 2 else 1
    return (bernoulli_poly(n).compose(flip) == bernoulli_poly(n) * sign
            and euler_poly(n).compose(flip) == euler_poly(n) * sign)


def verify_euler_from_bernoulli(n: int) -> bool:
    """Check E_{n-1}(x) = 2^n/n (B_n((x+1)/2) - B_n(x/2)).

    Also checks the quarter-shifted form
    E_{n-1}((x+1)/2) = 2^n/n (B_n((x+3)/4) - B_n((x+1)/4)).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    b = bernoulli_poly(n)
    f = Fraction(2**n, n)
    direct = (b.compose(HALF_SHIFT) - b.compose(X / 2)) * f
    if direct != euler_poly(n - 1):
        return False
    quarter = (b.compose(Poly((Fraction(3, 4), Fraction(1, 4)))) - b.compose(Poly((Fraction(1, 4), Fraction(1, 4))))) * f
    return quarter == euler_poly(n - 1).compose(HALF_SHIFT)


# ---------------------------------------------------------------------------
# Moment sequences
# ---------------------------------------------------------------------------


class MomentSeq:
    """Lazily evaluated sequence ``k -> Poly`` with a thread-safe memo.

    ``gen`` must be pure; the cache only saves recomputation.
    """

    def __init__(self, name: str, gen: Callable[[int], Poly], length: int | None = None):
        self.name = name
        self._gen = gen
        self._cache: dict[int, Poly] = {}
        self._lock = threading.Lock()
        self.length = length
        # derived quantities (Hankel determinants) keyed by the consumer
        self.memo: dict = {}

    def gen(self, k: int) -> Poly:
        if k < 0:
            raise DomainError("moment index must be >= 0")
        if self.length is not None and k >= self.length:
            raise IndexError(f"{self.name} has only {self.length} terms")
        try:
            return self._cache[k]
        except KeyError:
            pass
        value = Poly.coerce(self._gen(k))
        with self._lock:
            return self._cache.setdefault(k, value)

    __getitem__ = gen

    def remember(self, key, compute: Callable[[], object]):
        try:
            return self.memo[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self.memo.setdefault(key, value)

    def __call__(self, k: int) -> Poly:
        return self.gen(k)

    def terms(self, count: int) -> list[Poly]:
        return [self.gen(k) for k in range(count)]

    def to_json(self, count: int) -> dict:
        return {"sequence": self.name, "terms": [p.to_text() for p in self.terms(count)]}

    def __repr__(self):
        return f"MomentSeq({self.name!r})"


def shifted(base: MomentSeq, m: int) -> MomentSeq:
    """k -> base(k + m)."""
    if m < 0:
        raise DomainError("shift must be >= 0")
    if m == 0:
        return base
    length = None if base.length is None else max(base.length - m, 0)
    return base.remember(("shifted", m),
                         lambda: MomentSeq(f"shifted({base.name},{m})", lambda k: base.gen(k + m), length))


def scaled(base: MomentSeq, factor) -> MomentSeq:
    """k -> factor**k * base(k)."""
    factor = Poly.coerce(factor)
    return MomentSeq(f"scaled({base.name},{_poly_token(factor)})",
                     lambda k: factor**k * base.gen(k), base.length)


def binomial_transform(base: MomentSeq, shift=X) -> MomentSeq:
    """k -> sum_j C(k, j) base(j) shift^(k-j)."""
    shift = Poly.coerce(shift)

    def gen(k: int) -> Poly:
        out = Poly()
        power = Poly.const(1)
        for j in range(k, -1, -1):
            out = out + comb(k, j) * base.gen(j) * power
            power = power * shift
        return out

    name = f"binomial-transform({base.name})" if shift == X else f"binomial-transform({base.name},{_poly_token(shift)})"
    return MomentSeq(name, gen, base.length)


def from_terms(terms: Sequence, name: str = "custom") -> MomentSeq:
    values = [Poly.coerce(t) for t in terms]
    return MomentSeq(name, values.__getitem__, len(values))


def _poly_token(p: Poly) -> str:
    return "[" + ",".join(p.to_text()) + "]"


def _bernoulli_at_half_shift(k: int) -> Poly:
    return bernoulli_poly(k).compose(HALF_SHIFT)


def _euler_at_half_shift(k: int) -> Poly:
    return euler_poly(k).compose(HALF_SHIFT)


_SIMPLE: dict[str, Callable[[int], Poly]] = {
    "bernoulli-num": lambda k: Poly.const(bernoulli_number(k)),
    "euler-num": lambda k: Poly.const(euler_number(k)),
    "bernoulli-poly": bernoulli_poly,
    "euler-poly": euler_poly,
    # b_k = B_{2k+1}((x+1)/2)
    "bernoulli-odd-half": lambda k: _bernoulli_at_half_shift(2 * k + 1),
    # B_{2k}((x+1)/2): the even-index companion whose determinants do not factor
    "bernoulli-even-half": lambda k: _bernoulli_at_half_shift(2 * k),
    # B_{2k}(1/2), constants
    "bernoulli-even-at-half": lambda k: Poly.const(bernoulli_poly(2 * k)(Fraction(1, 2))),
}

SEQUENCE_NAMES = tuple(_SIMPLE) + ("euler-nu-half(nu)", "shifted(base,m)", "scaled(base,poly)",
                                   "binomial-transform(base[,poly])")


def euler_nu_half(nu: int) -> MomentSeq:
    """c_k = E_{2k+nu}((x+1)/2)."""
    if nu < 0:
        raise DomainError("nu must be >= 0")
    return make_sequence(f"euler-nu-half({nu})")


@lru_cache(maxsize=None)
def _make(spec: str) -> MomentSeq:
    head, args = _split_call(spec)
    if args is None:
        if head not in _SIMPLE:
            raise DomainError(f"unknown sequence {spec!r}; known: {', '.join(SEQUENCE_NAMES)}")
        return MomentSeq(head, _SIMPLE[head])
    if head == "euler-nu-half":
        if len(args) != 1 or not re.fullmatch(r"\d+", args[0]):
            raise DomainError("euler-nu-half takes one nonnegative integer")
        nu = int(args[0])
        return MomentSeq(f"euler-nu-half({nu})", lambda k: _euler_at_half_shift(2 * k + nu))
    if head == "shifted":
        if len(args) != 2 or not re.fullmatch(r"\d+", args[1]):
            raise DomainError("shifted takes (base, m) with integer m >= 0")
        return shifted(_make(args[0]), int(args[1]))
    if head == "scaled":
        if len(args) != 2:
            raise DomainError("scaled takes (base, poly)")
        return scaled(_make(args[0]), _parse_poly_arg(args[1]))
    if head == "binomial-transform":
        if len(args) not in (1, 2):
            raise DomainError("binomial-transform takes (base[, poly])")
        shift = _parse_poly_arg(args[1]) if len(args) == 2 else X
        return binomial_transform(_make(args[0]), shift)
    raise DomainError(f"unknown sequence constructor {head!r}; known: {', '.join(SEQUENCE_NAMES)}")


def make_sequence(spec: str | MomentSeq) -> MomentSeq:
    """Build (or fetch the shared memoized instance of) a named moment sequence.

    Grammar: ``name`` | ``name(arg, ...)`` where an arg is a nested spec, an
    integer, a polynomial literal ``[c0,c1,...]`` or the letter ``x``.

    >>> make_sequence("euler-nu-half(2)").gen(0)
    Poly(['-1/4', '0', '1/4'])
    """
    if isinstance(spec, MomentSeq):
        return spec
    return _make(re.sub(r"\s+", "", spec))


def _split_call(spec: str) -> tuple[str, list[str] | None]:
    if "(" not in spec:
        return spec, None
    if not spec.endswith(")"):
        raise DomainError(f"malformed sequence spec {spec!r}")
    head, body = spec[: spec.index("(")], spec[spec.index("(") + 1: -1]
    args, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise DomainError(f"unbalanced brackets in {spec!r}")
        elif ch == "," and depth == 0:
            args.append(body[start:i])
            start = i + 1
    if depth:
        raise DomainError(f"unbalanced brackets in {spec!r}")
    args.append(body[start:])
    return head, args


def _parse_poly_arg(text: str) -> Poly:
    if text == "x":
        return X
    if text.startswith("[") and text.endswith("]"):
        items = [s.strip().strip('"') for s in text[1:-1].split(",") if s.strip()]
        return Poly.from_text(items)
    try:
        return Poly.const(Fraction(text))
    except ValueError as exc:
        raise DomainError(f"cannot parse polynomial argument {text!r}") from exc
