"""Text renderings: polynomials in plain and LaTeX form, factored Hankel
determinants, and the three reference tables regenerated from scratch."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .exact import Poly, X, format_rational
from .hankel import hankel_det
from .sequences import bernoulli_number, bernoulli_poly, euler_number, euler_poly
from .shift import table3_rows

__all__ = [
    "FactoredPoly",
    "TABLE_FORMATS",
    "dump_json",
    "factor_even_linear",
    "group_digits",
    "poly_latex",
    "render_table",
    "table_rows",
]

TABLE_FORMATS = ("plain", "json", "latex", "csv")


def group_digits(n: int) -> str:
    r"""123456 -> '123\,456' (thin-space thousands separators)."""
    s = str(abs(n))
    groups = []
    while len(s) > 3:
        groups.insert(0, s[-3:])
        s = s[:-3]
    groups.insert(0, s)
    return ("-" if n < 0 else "") + r"\,".join(groups)


def dump_json(obj, indent: int = 2, _level: int = 0) -> str:
    """Indented JSON that keeps flat lists (polynomial coefficient arrays) on one line."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dump_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return json.dumps(list(obj))
        items = [inner + dump_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def _latex_frac(q: Fraction, cmd: str = "frac", grouped: bool = False) -> str:
    num, den = abs(q.numerator), q.denominator
    fmt = group_digits if grouped else str
    if den == 1:
        return fmt(num)
    return f"\\{cmd}{{{fmt(num)}}}{{{fmt(den)}}}"


def poly_latex(p: Poly, *, frac: str = "tfrac", braces: bool = False, var: str = "x") -> str:
    """Descending-degree LaTeX, e.g. ``x^3-\\tfrac{3}{2}x^2+\\tfrac{1}{4}``."""
    if not p:
        return "0"
    out = ""
    for k in range(int(p.degree), -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = abs(c)
        if k == 0:
            body = _latex_frac(mag, frac)
        else:
            mono = var if k == 1 else (f"{var}^{{{k}}}" if braces else f"{var}^{k}")
            body = mono if mag == 1 else _latex_frac(mag, frac) + mono
        out += sign + body
    return out


@dataclass(frozen=True)
class FactoredPoly:
    """``const * x^x_power * prod (x^2 - l^2)^e * rest``."""

    const: Fraction
    x_power: int
    factors: tuple[tuple[int, int], ...] = field(default=())
    rest: Poly = field(default_factory=lambda: Poly.const(1))

    def expand(self) -> Poly:
        out = Poly.const(self.const) * X**self.x_power * self.rest
        for l, e in self.factors:
            out = out * Poly((-(l * l), 0, 1)) ** e
        return out

    def _pieces(self, latex: bool) -> list[str]:
        pieces = []
        if self.x_power:
            pieces.append("x" if self.x_power == 1 else f"x^{self.x_power}")
        for l, e in self.factors:
            if latex:
                inner = "x^2-1" if l == 1 else f"x^2-{l}^2"
            else:
                inner = f"x^2-{l * l}"
            pieces.append(f"({inner})" + ("" if e == 1 else f"^{e}"))
        if self.rest != 1:
            pieces.append(f"({poly_latex(self.rest) if latex else self.rest.pretty()})")
        return pieces

    def latex(self) -> str:
        sign = "-" if self.const < 0 else ""
        mag = abs(self.const)
        head = "" if mag == 1 and (self.x_power or self.factors) else _latex_frac(mag, "frac", grouped=True)
        return sign + head + "".join(self._pieces(True))

    def plain(self) -> str:
        sign = "-" if self.const < 0 else ""
        mag = abs(self.const)
        head = "" if mag == 1 and (self.x_power or self.factors) else f"({format_rational(mag)})"
        return sign + head + "".join(self._pieces(False))


def factor_even_linear(p: Poly, max_l: int | None = None) -> FactoredPoly:
    """Pull out x and (x^2 - l^2) factors by repeated exact trial division.

    Anything left over stays in ``rest`` (monic). No general factorization.
    """
    if not p:
        raise DomainError("cannot factor the zero polynomial")
    const = p.leading
    q = p / const
    x_power = 0
    while q.coeff(0) == 0 and q.degree > 0:
        q = q.divide_exact(X)
        x_power += 1
    factors = []
    limit = max_l if max_l is not None else max(1, int(q.degree))
    for l in range(1, limit + 1):
        f = Poly((-(l * l), 0, 1))
        e = 0
        while q.degree >= 2:
            quo, rem = q.divmod(f)
            if rem:
                break
            q, e = quo, e + 1
        if e:
            factors.append((l, e))
    return FactoredPoly(const, x_power, tuple(factors), q)


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


def _table1(n_max: int) -> list[dict]:
    rows = []
    for n in range(n_max + 1):
        det = hankel_det("bernoulli-odd-half", n)
        fac = factor_even_linear(det)
        rows.append({"n": n, "det": det, "factored": fac})
    return rows


def _table2(n_max: int) -> list[dict]:
    return [{"n": n, "B": bernoulli_number(n), "E": euler_number(n),
             "Bx": bernoulli_poly(n), "Ex": euler_poly(n)} for n in range(n_max + 1)]


def _table3(n_max: int) -> list[dict]:
    rows = []
    for n, d in table3_rows(n_max):
        lead = d.leading
        rows.append({"n": n, "d": d, "lead": lead, "primitive": d / lead})
    return rows


_DEFAULT_ROWS = {1: 4, 2: 6, 3: 3}


def table_rows(which: int, n_max: int | None = None) -> list[dict]:
    if which not in _DEFAULT_ROWS:
        raise DomainError("tables are numbered 1, 2 and 3")
    n_max = _DEFAULT_ROWS[which] if n_max is None else n_max
    return {1: _table1, 2: _table2, 3: _table3}[which](n_max)


def _latex_scalar(q: Fraction) -> str:
    if q.denominator == 1 and q >= 0:
        return str(q)
    return f"${format_rational(q)}$"


def _latex_poly_cell(p: Poly) -> str:
    if p.is_const() and p.const_value() >= 0 and p.const_value().denominator == 1:
        return str(p.const_value())
    return f"${poly_latex(p)}$"


def _latex_rows(which: int, rows: list[dict]) -> list[str]:
    if which == 1:
        return [f"{r['n']} & ${r['factored'].latex()}$ \\\\" for r in rows]
    if which == 2:
        return [f"{r['n']} & {_latex_scalar(r['B'])} & {_latex_scalar(r['E'])} & "
                f"{_latex_poly_cell(r['Bx'])} & {_latex_poly_cell(r['Ex'])} \\\\" for r in rows]
    return [f"{r['n']} & ${_latex_frac(r['lead'])}({poly_latex(r['primitive'], braces=True)})$ \\\\"
            for r in rows]


_HEADERS = {
    1: ("n", "H_n(B_{2k+1}((x+1)/2))"),
    2: ("n", "B_n", "E_n", "B_n(x)", "E_n(x)"),
    3: ("n", "d_n^(1)"),
}
_LATEX_HEAD = {
    1: ("|c||l|", r"$n$ & $H_n(B_{2k+1}(\frac{x+1}{2}))$ \\"),
    2: ("|r||r|r|l|l|", r"$n$ & $B_n$ & $E_n$ & $B_n(x)$ & $E_n(x)$\\"),
    3: ("|c||l|", r"$n$ & $d_n^{(1)}$ \\"),
}


def _plain_cells(which: int, r: dict) -> list[str]:
    if which == 1:
        return [str(r["n"]), r["factored"].plain()]
    if which == 2:
        return [str(r["n"]), format_rational(r["B"]), format_rational(r["E"]),
                r["Bx"].pretty(), r["Ex"].pretty()]
    return [str(r["n"]), f"({format_rational(r['lead'])})({r['primitive'].pretty()})"]


def _json_row(which: int, r: dict) -> dict:
    if which == 1:
        return {"n": r["n"], "det": r["det"].to_text(), "factored": r["factored"].plain()}
    if which == 2:
        return {"n": r["n"], "B": format_rational(r["B"]), "E": format_rational(r["E"]),
                "Bx": r["Bx"].to_text(), "Ex": r["Ex"].to_text()}
    return {"n": r["n"], "d": r["d"].to_text()}


def render_table(which: int, fmt: str = "plain", n_max: int | None = None) -> str:
    """Regenerate table ``which`` (1, 2 or 3) and render it."""
    if fmt not in TABLE_FORMATS:
        raise DomainError(f"unknown format {fmt!r}; known: {', '.join(TABLE_FORMATS)}")
    rows = table_rows(which, n_max)
    if fmt == "json":
        return dump_json({"table": which, "rows": [_json_row(which, r) for r in rows]})
    if fmt == "latex":
        cols, head = _LATEX_HEAD[which]
        lines = [f"\\begin{{tabular}}{{{cols}}}", r"\hline", head, r"\hline",
                 *_latex_rows(which, rows), r"\hline", r"\end{tabular}"]
        return "\n".join(lines)
    cells = [_plain_cells(which, r) for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_HEADERS[which])
        writer.writerows(cells)
        return buf.getvalue().rstrip("\n")
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(_HEADERS[which])]
    lines = ["  ".join(h.ljust(w) for h, w in zip(_HEADERS[which], widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)
