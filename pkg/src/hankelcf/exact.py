"""Exact arithmetic: rationals, dense polynomials over Q, and truncated series.

Rationals are :class:`fractions.Fraction`, which is canonical on construction
(reduced, positive denominator), so structural equality is value equality.

``Poly`` is a polynomial in ``x`` with rational coefficients, ``YPoly`` a
polynomial in a second indeterminate ``y`` whose coefficients are ``Poly``,
``LaurentPoly`` a finite Laurent polynomial in ``z`` with ``Poly`` coefficients
and ``TruncSeries`` a truncated Laurent series with ``Poly`` coefficients that
may carry one symbolic ``log`` term.
"""
from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import DomainError, ExactDivisionError, FormalCancellationError, SeriesDivisionError

Scalar = Union[int, Fraction]

__all__ = [
    "LaurentPoly",
    "Poly",
    "TruncSeries",
    "X",
    "YPoly",
    "Y",
    "format_rational",
    "parse_rational",
    "poly_arith",
    "poly_compose",
    "poly_divide_exact",
    "rational_arith",
    "series_divide",
    "to_fraction",
]


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical text form ``"p/q"`` or ``"p"``."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    return str(to_fraction(value))


_RATIONAL_OPS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rational_arith(a: Scalar, b: Scalar, op: str) -> Fraction:
    a, b = to_fraction(a), to_fraction(b)
    if op not in _RATIONAL_OPS:
        raise DomainError(f"unknown operator {op!r}")
    if _RATIONAL_OPS[op] is operator.truediv and b == 0:
        raise DomainError("division by zero")
    return _RATIONAL_OPS[op](a, b)


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over Q, coefficients stored lowest degree first.

    The zero polynomial has no coefficients and degree ``-inf``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "Poly":
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p._c = tuple(coeffs)
        return p

    @classmethod
    def const(cls, value) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly":
        return cls([0] * degree + [coeff])

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return cls((to_fraction(value),))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-to_fraction(r), 1))
        return p

    # -- inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> float:
        return len(self._c) - 1 if self._c else -math.inf

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_const(self) -> bool:
        return len(self._c) <= 1

    def const_value(self) -> Fraction:
        if len(self._c) > 1:
            raise DomainError(f"{self} is not a constant")
        return self.coeff(0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _other(value):
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Poly._raw([Fraction(value)])
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-v for v in self._c])

    def __pos__(self) -> "Poly":
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return Poly._raw([])
        if len(b) == 1:
            s = b[0]
            return Poly._raw([v * s for v in a])
        if len(a) == 1:
            s = a[0]
            return Poly._raw([v * s for v in b])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise DomainError("polynomial powers need a nonnegative integer exponent")
        result = Poly._raw([Fraction(1)])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        o = Poly.coerce(other)
        if not o:
            raise DomainError("polynomial division by zero")
        rem = list(self._c)
        dq = len(o._c) - 1
        lead = o._c[-1]
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                f = c / lead
                quot[k - dq] = f
                for j, v in enumerate(o._c):
                    rem[k - dq + j] -= f * v
        return Poly._raw(quot), Poly._raw(rem[:dq])

    def divide_exact(self, other) -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ExactDivisionError(f"({self}) is not divisible by ({Poly.coerce(other)})")
        return q

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise DomainError("division by zero")
            inv = 1 / Fraction(other)
            return Poly._raw([v * inv for v in self._c])
        if isinstance(other, Poly):
            if other.is_const():
                return self / other.const_value()
            return self.divide_exact(other)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    # -- evaluation ---------------------------------------------------------
    def __call__(self, value):
        """Horner evaluation; ``value`` may be a number, a ``Poly`` (composition) or any ring element."""
        if not self._c:
            return value * 0 if not isinstance(value, (int, Fraction)) else Fraction(0)
        acc = self._c[-1]
        if isinstance(value, (int, Fraction)):
            for c in reversed(self._c[:-1]):
                acc = acc * value + c
            return acc
        result = value * 0 + acc
        for c in reversed(self._c[:-1]):
            result = result * value + c
        return result

    def compose(self, inner) -> "Poly":
        return Poly.coerce(self(Poly.coerce(inner)))

    def derivative(self) -> "Poly":
        return Poly._raw([k * c for k, c in enumerate(self._c)][1:])

    def scale_var(self, factor) -> "Poly":
        """Return p(factor * x)."""
        f = to_fraction(factor)
        return Poly._raw([c * f**k for k, c in enumerate(self._c)])

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self.coeff(0))
        return hash(("Poly", self._c))

    # -- text ---------------------------------------------------------------
    def to_text(self) -> list[str]:
        """Canonical JSON-ready form: lowest-degree-first list of rational strings."""
        return [str(c) for c in self._c]

    @classmethod
    def from_text(cls, items: Sequence[str]) -> "Poly":
        return cls(parse_rational(str(s)) for s in items)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}{mono}"
                else:
                    body = f"({mag}){mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = Poly((0, 1))


def poly_arith(p, q, op: str) -> Poly:
    p, q = Poly.coerce(p), Poly.coerce(q)
    if op == "+":
        return p + q
    if op in ("-", "−"):
        return p - q
    if op in ("*", "×"):
        return p * q
    raise DomainError(f"unknown polynomial operator {op!r}")


def poly_divide_exact(p, q) -> Poly:
    return Poly.coerce(p).divide_exact(q)


def poly_compose(p, inner) -> Poly:
    return Poly.coerce(p).compose(inner)


# ---------------------------------------------------------------------------
# YPoly
# ---------------------------------------------------------------------------


class YPoly:
    """Polynomial in ``y`` with ``Poly`` coefficients, lowest y-degree first."""

    __slots__ = ("_c",)

    def __init__(self, ycoeffs: Iterable = ()):
        c = [Poly.coerce(v) for v in ycoeffs]
        while c and not c[-1]:
            c.pop()
        self._c: tuple[Poly, ...] = tuple(c)

    @classmethod
    def const(cls, value) -> "YPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "YPoly":
        return cls([Poly()] * degree + [Poly.coerce(coeff)])

    @property
    def ycoeffs(self) -> tuple[Poly, ...]:
        return self._c

    @property
    def degree(self) -> float:
        return len(self._c) - 1 if self._c else -math.inf

    @property
    def leading(self) -> Poly:
        return self._c[-1] if self._c else Poly()

    def coeff(self, k: int) -> Poly:
        return self._c[k] if 0 <= k < len(self._c) else Poly()

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    @staticmethod
    def _other(value):
        if isinstance(value, YPoly):
            return value
        if isinstance(value, Poly) or (isinstance(value, (int, Fraction)) and not isinstance(value, bool)):
            return YPoly((value,))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        return YPoly(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "YPoly":
        return YPoly(-c for c in self._c)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return YPoly()
        out = [Poly()] * (len(self._c) + len(o._c) - 1)
        for i, u in enumerate(self._c):
            if u:
                for j, v in enumerate(o._c):
                    if v:
                        out[i + j] = out[i + j] + u * v
        return YPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "YPoly":
        result = YPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, YPoly):
            if len(other._c) > 1:
                raise ExactDivisionError("division by a non-constant YPoly is not supported")
            other = other.coeff(0)
        if isinstance(other, (Poly, int, Fraction)):
            return YPoly(c / other for c in self._c)
        return NotImplemented

    def mul_y(self, k: int = 1) -> "YPoly":
        return YPoly([Poly()] * k + list(self._c)) if self._c else self

    def __call__(self, value):
        if not self._c:
            return Poly()
        acc = value * 0 + self._c[-1]
        for c in reversed(self._c[:-1]):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self.coeff(0))
        return hash(("YPoly", self._c))

    def to_text(self) -> list[list[str]]:
        return [c.to_text() for c in self._c]

    @classmethod
    def from_text(cls, items) -> "YPoly":
        return cls(Poly.from_text(c) for c in items)

    def __repr__(self) -> str:
        return f"YPoly({self.to_text()})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "y") -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if k == 0:
                terms.append(f"({c})" if len(c) > 1 else str(c))
            elif c == 1:
                terms.append(mono)
            elif c.is_const():
                terms.append(f"{c}{mono}" if c.const_value().denominator == 1 else f"({c}){mono}")
            else:
                terms.append(f"({c}){mono}")
        return " + ".join(terms)


Y = YPoly((0, 1))


# ---------------------------------------------------------------------------
# LaurentPoly
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite Laurent polynomial in ``z`` with ``Poly`` coefficients.

    Used as the ring of partial quantities when a continued fraction carries
    both ``z`` and ``1/z``.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        t = {}
        for e, c in (terms or {}).items():
            c = Poly.coerce(c)
            if c:
                t[int(e)] = c
        self._t: dict[int, Poly] = t

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, Poly]:
        return dict(self._t)

    def coeff(self, e: int) -> Poly:
        return self._t.get(e, Poly())

    @staticmethod
    def _other(value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, Poly) or (isinstance(value, (int, Fraction)) and not isinstance(value, bool)):
            return LaurentPoly({0: value})
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = dict(self._t)
        for e, c in o._t.items():
            out[e] = out.get(e, Poly()) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out: dict[int, Poly] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in o._t.items():
                out[e1 + e2] = out.get(e1 + e2, Poly()) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = LaurentPoly({0: 1})
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if len(o._t) != 1:
            raise ExactDivisionError("only division by a Laurent monomial is supported")
        (e, c), = o._t.items()
        return LaurentPoly({k - e: v / c for k, v in self._t.items()})

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        body = ", ".join(f"{e}: {c.to_text()}" for e, c in sorted(self._t.items()))
        return f"LaurentPoly({{{body}}})"


# ---------------------------------------------------------------------------
# TruncSeries
# ---------------------------------------------------------------------------


class TruncSeries:
    """Truncated Laurent series ``log_coeff*log(var) + sum c_e var^e`` for ``min_exp <= e <= order``.

    Coefficients above ``order`` are unknown; nothing reads them. The log slot
    is additive only: sums and scalar multiples are fine, products with a
    nonzero log term raise :class:`FormalCancellationError`.
    """

    __slots__ = ("var", "min_exp", "order", "_coeffs", "log_coeff")

    def __init__(self, var: str, coeffs: Mapping[int, object], order: int,
                 min_exp: int | None = None, log_coeff=0):
        self.var = var
        self.order = int(order)
        cs = {int(e): Poly.coerce(c) for e, c in coeffs.items()}
        if min_exp is None:
            nz = [e for e, c in cs.items() if c]
            min_exp = min(nz) if nz else 0
            min_exp = min(min_exp, self.order) if nz else min(0, self.order)
        self.min_exp = int(min_exp)
        for e, c in cs.items():
            if c and not (self.min_exp <= e):
                raise DomainError(f"exponent {e} below declared minimum {self.min_exp}")
        self._coeffs = {e: c for e, c in cs.items() if c and e <= self.order}
        self.log_coeff = Poly.coerce(log_coeff)

    # -- construction -------------------------------------------------------
    @classmethod
    def from_list(cls, var: str, coeffs: Sequence, min_exp: int = 0, log_coeff=0) -> "TruncSeries":
        """Series whose coefficients from ``min_exp`` on are listed; order = last listed exponent."""
        return cls(var, {min_exp + i: c for i, c in enumerate(coeffs)},
                   order=min_exp + len(coeffs) - 1, min_exp=min_exp, log_coeff=log_coeff)

    @classmethod
    def exp(cls, var: str, order: int, rate=1) -> "TruncSeries":
        """``exp(rate * var)`` truncated at ``var^order``; ``rate`` may be a Poly."""
        rate = Poly.coerce(rate)
        coeffs = {}
        term = Poly.const(1)
        for n in range(order + 1):
            coeffs[n] = term
            term = term * rate / (n + 1)
        return cls(var, coeffs, order, min_exp=0)

    # -- inspection ---------------------------------------------------------
    def coeff(self, e: int) -> Poly:
        if e > self.order:
            raise DomainError(f"coefficient of {self.var}^{e} is beyond the truncation order {self.order}")
        return self._coeffs.get(e, Poly())

    def coefficients(self, lo: int | None = None, hi: int | None = None) -> list[Poly]:
        lo = self.min_exp if lo is None else lo
        hi = self.order if hi is None else hi
        return [self.coeff(e) for e in range(lo, hi + 1)]

    @property
    def valuation(self) -> float:
        return min(self._coeffs) if self._coeffs else math.inf

    def has_log(self) -> bool:
        return bool(self.log_coeff)

    def _same_var(self, other: "TruncSeries"):
        if self.var != other.var:
            raise DomainError(f"series in different variables: {self.var} vs {other.var}")

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(value, like: "TruncSeries") -> "TruncSeries":
        if isinstance(value, TruncSeries):
            return value
        # exact constants are known to every order
        return TruncSeries(like.var, {0: Poly.coerce(value)}, order=max(like.order, 0), min_exp=min(0, like.min_exp))

    def __add__(self, other):
        if not isinstance(other, (TruncSeries, Poly, int, Fraction)):
            return NotImplemented
        o = self._lift(other, self)
        self._same_var(o)
        order = min(self.order, o.order)
        coeffs = dict(self._coeffs)
        for e, c in o._coeffs.items():
            coeffs[e] = coeffs.get(e, Poly()) + c
        return TruncSeries(self.var, coeffs, order, min_exp=min(self.min_exp, o.min_exp),
                           log_coeff=self.log_coeff + o.log_coeff)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, (TruncSeries, Poly, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other, self))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> "TruncSeries":
        f = Poly.coerce(factor)
        return TruncSeries(self.var, {e: c * f for e, c in self._coeffs.items()}, self.order,
                           min_exp=self.min_exp, log_coeff=self.log_coeff * f)

    def __mul__(self, other):
        if isinstance(other, (Poly, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._same_var(other)
        if self.has_log() or other.has_log():
            raise FormalCancellationError("product of series carrying a log term is not representable")
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        out: dict[int, Poly] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                if e <= order:
                    out[e] = out.get(e, Poly()) + c1 * c2
        return TruncSeries(self.var, out, order, min_exp=self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Poly, int, Fraction)) and not isinstance(other, bool):
            o = Poly.coerce(other)
            if not o.is_const():
                return series_divide(self, self._lift(o, self))
            return self.scale(Fraction(1) / o.const_value()) if o else _raise_zero()
        if isinstance(other, TruncSeries):
            return series_divide(self, other)
        return NotImplemented

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``var**k`` (pure exponent map)."""
        if self.has_log():
            raise FormalCancellationError("cannot shift a series carrying a log term")
        return TruncSeries(self.var, {e + k: c for e, c in self._coeffs.items()}, self.order + k,
                           min_exp=self.min_exp + k)

    def rescale(self, factor, var: str | None = None) -> "TruncSeries":
        """Substitute ``var -> factor * var``: coefficient of exponent e picks up ``factor**e``."""
        if self.has_log():
            raise FormalCancellationError("cannot rescale a series carrying a log term")
        f = to_fraction(factor)
        return TruncSeries(var or self.var, {e: c * f**e for e, c in self._coeffs.items()}, self.order,
                           min_exp=self.min_exp)

    def relabel(self, var: str) -> "TruncSeries":
        return TruncSeries(var, self._coeffs, self.order, min_exp=self.min_exp, log_coeff=self.log_coeff)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise DomainError("cannot extend a series beyond its truncation order")
        return TruncSeries(self.var, self._coeffs, order, min_exp=min(self.min_exp, order),
                           log_coeff=self.log_coeff)

    def map_coeffs(self, fn: Callable[[int, Poly], Poly]) -> "TruncSeries":
        return TruncSeries(self.var, {e: fn(e, c) for e, c in self._coeffs.items()}, self.order,
                           min_exp=self.min_exp, log_coeff=self.log_coeff)

    def agrees_with(self, other: "TruncSeries", through: int | None = None) -> bool:
        self._same_var(other)
        hi = min(self.order, other.order) if through is None else through
        if hi > min(self.order, other.order):
            return False
        lo = min(self.min_exp, other.min_exp)
        return self.log_coeff == other.log_coeff and all(
            self.coeff(e) == other.coeff(e) for e in range(lo, hi + 1))

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.var == other.var and self.order == other.order
                and self._coeffs == other._coeffs and self.log_coeff == other.log_coeff)

    __hash__ = None

    def to_dict(self) -> dict:
        return {
            "var": self.var,
            "min_exp": self.min_exp,
            "order": self.order,
            "coeffs": {str(e): c.to_text() for e, c in sorted(self._coeffs.items())},
            "log": self.log_coeff.to_text(),
        }

    def __repr__(self):
        terms = " + ".join(f"({c}){self.var}^{e}" for e, c in sorted(self._coeffs.items()))
        log = f"({self.log_coeff})log({self.var}) + " if self.has_log() else ""
        return f"TruncSeries[{self.var}, order={self.order}]({log}{terms or '0'})"


def _raise_zero():
    raise SeriesDivisionError("division by the zero series")


def series_divide(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    """Quotient ``num / den`` as a truncated Laurent series.

    The lowest nonzero coefficient of ``den`` is the pivot; each step divides by it
    exactly in Q[x], so a pivot that is not a unit only works when every step
    happens to divide.
    """
    num._same_var(den)
    if num.has_log() or den.has_log():
        raise FormalCancellationError("series division with a log term")
    if not den._coeffs:
        raise SeriesDivisionError("denominator series is zero to its truncation order")
    dv = min(den._coeffs)
    pivot = den._coeffs[dv]
    nv = num.min_exp
    qv = nv - dv
    order = min(num.order - dv, den.order - dv + qv)
    q: dict[int, Poly] = {}
    for e in range(qv, order + 1):
        acc = num.coeff(e + dv) if e + dv <= num.order else Poly()
        for j, qc in q.items():
            d = den._coeffs.get(e + dv - j)
            if d is not None and e + dv - j != dv:
                acc = acc - qc * d
        try:
            q[e] = acc / pivot
        except ExactDivisionError as exc:
            raise SeriesDivisionError(f"pivot {pivot} does not divide coefficient at {num.var}^{e}") from exc
    return TruncSeries(num.var, q, order, min_exp=qv)
