"""Sparse Laurent polynomials over Z with half-integer exponents.

Exponents are stored doubled, so the key ``k`` means ``t**(k/2)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "LaurentPoly",
    "MultiLaurentPoly",
    "NotDivisibleError",
    "poly_arith",
    "substitute_neg",
    "is_symmetric",
    "is_monic",
    "evaluate",
    "equate_variables",
    "divide_exact",
    "half_binomial",
]

Scalar = int


class NotDivisibleError(ArithmeticError):
    """Raised by divide_exact; ``remainder`` is a nonzero witness."""

    def __init__(self, dividend: "LaurentPoly", divisor: "LaurentPoly", remainder: "LaurentPoly"):
        super().__init__(f"{dividend} is not divisible by {divisor} (remainder {remainder})")
        self.remainder = remainder


def _format_exponent(doubled: int) -> str:
    if doubled % 2 == 0:
        return str(doubled // 2)
    return f"{doubled}/2"


def _parse_exponent(text: str) -> int:
    frac = Fraction(text)
    doubled = frac * 2
    if doubled.denominator != 1:
        raise ValueError(f"exponent {text} is not a multiple of 1/2")
    return int(doubled)


class LaurentPoly:
    """Immutable one-variable Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        self._terms: dict[int, int] = {int(k): int(v) for k, v in (terms or {}).items() if v}
        self.var = var

    # constructors

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: Union[int, Fraction, str], coeff: int = 1, var: str = "t") -> "LaurentPoly":
        return cls({_parse_exponent(str(exponent)): coeff}, var)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], low: int = 0, var: str = "t") -> "LaurentPoly":
        """Integer-exponent polynomial with ``coeffs[i]`` at exponent ``low + i``."""
        return cls({2 * (low + i): c for i, c in enumerate(coeffs)}, var)

    # accessors

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: Union[int, Fraction]) -> int:
        return self._terms.get(_parse_exponent(str(exponent)), 0)

    def max_exponent(self) -> Fraction:
        return Fraction(max(self._terms), 2)

    def min_exponent(self) -> Fraction:
        return Fraction(min(self._terms), 2)

    def span(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self.max_exponent() - self.min_exponent()

    def leading_coefficient(self) -> int:
        return self._terms[max(self._terms)] if self._terms else 0

    def has_half_integer_exponents(self) -> bool:
        return any(k % 2 for k in self._terms)

    def rename(self, var: str) -> "LaurentPoly":
        return LaurentPoly(self._terms, var)

    def shift(self, doubled: int) -> "LaurentPoly":
        """Multiply by t**(doubled/2)."""
        return LaurentPoly({k + doubled: v for k, v in self._terms.items()}, self.var)

    # ring structure

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self._terms.items()}, self.var)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[int, int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((k, v),) = self._terms.items()
            if abs(v) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({k * n: v if n % 2 else 1}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._terms.items())))

    def __call__(self, u) -> Fraction:
        return evaluate(self, u)

    # serialization

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = self.var if k == 2 else f"{self.var}^{_format_exponent(k)}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "LaurentPoly":
        """Inverse of ``str``: e.g. ``"t^4 - 5*t^3 + 25 - t^-1/2"``."""
        s = text.replace(" ", "").replace("**", "^").replace("−", "-")
        if s in ("", "0"):
            return cls({}, var)
        if s[0] not in "+-":
            s = "+" + s
        term_re = re.compile(
            rf"([+-])(\d+)?(?:\*?({re.escape(var)})(?:\^\(?(-?\d+(?:/2)?)\)?)?)?"
        )
        pos = 0
        out: dict[int, int] = {}
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m or m.end() == pos + 1:
                raise ValueError(f"cannot parse Laurent polynomial near {s[pos:]!r}")
            sign, digits, has_var, exp = m.groups()
            coeff = int(digits) if digits else 1
            if not has_var and not digits:
                raise ValueError(f"dangling sign in {text!r}")
            doubled = 0 if not has_var else (_parse_exponent(exp) if exp else 2)
            out[doubled] = out.get(doubled, 0) + (-coeff if sign == "-" else coeff)
            pos = m.end()
        return cls(out, var)

    def to_json(self) -> list[list]:
        return [[k, str(self._terms[k])] for k in sorted(self._terms, reverse=True)]

    @classmethod
    def from_json(cls, data: Iterable[Sequence], var: str = "t") -> "LaurentPoly":
        return cls({int(k): int(c) for k, c in data}, var)


def half_binomial(var: str = "t") -> LaurentPoly:
    """t^(1/2) - t^(-1/2)."""
    return LaurentPoly({1: 1, -1: -1}, var)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if a.var != b.var:
        raise ValueError(f"variable mismatch: {a.var} vs {b.var}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def substitute_neg(f: LaurentPoly) -> LaurentPoly:
    """f(-t); only defined for integer exponents."""
    if f.has_half_integer_exponents():
        raise ValueError("f(-t) is undefined with half-integer exponents")
    return LaurentPoly({k: -v if (k // 2) % 2 else v for k, v in f.terms.items()}, f.var)


def is_symmetric(f: LaurentPoly) -> bool:
    terms = f.terms
    return all(terms.get(-k) == v for k, v in terms.items())


def is_monic(f: LaurentPoly) -> bool:
    return abs(f.leading_coefficient()) == 1


def _rational_sqrt(u: Fraction) -> Fraction:
    import math

    if u < 0:
        raise ValueError(f"{u} has no real square root")
    rn, rd = math.isqrt(u.numerator), math.isqrt(u.denominator)
    if rn * rn != u.numerator or rd * rd != u.denominator:
        raise ValueError(f"{u} is not the square of a rational")
    return Fraction(rn, rd)


def evaluate(f: LaurentPoly, u) -> Fraction:
    """Exact value of f at a nonzero rational u."""
    u = Fraction(u)
    if u == 0:
        raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
    if f.has_half_integer_exponents():
        base, terms = _rational_sqrt(u), f.terms
    else:
        base, terms = u, {k // 2: v for k, v in f.terms.items()}
    return sum((Fraction(v) * base**k for k, v in terms.items()), Fraction(0))


def divide_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """h with f = g*h exactly over Z[t^(1/2), t^(-1/2)].

    Long division on the doubled-exponent representation, from the top term
    down; the leading coefficient of g must divide at every step.
    """
    if f.var != g.var:
        raise ValueError(f"variable mismatch: {f.var} vs {g.var}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    gt = g.terms
    g_hi, g_lo = max(gt), min(gt)
    g_lead = gt[g_hi]
    rem = f.terms
    lowest_shift = min(rem) - g_lo if rem else 0
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top - g_hi < lowest_shift:
            break
        c, r = divmod(rem[top], g_lead)
        if r:
            break
        shift = top - g_hi
        quot[shift] = c
        for k, v in gt.items():
            key = k + shift
            nv = rem.get(key, 0) - c * v
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
    if rem:
        raise NotDivisibleError(f, g, LaurentPoly(rem, f.var))
    return LaurentPoly(quot, f.var)


class MultiLaurentPoly:
    """Sparse multivariable Laurent polynomial; exponent vectors are doubled."""

    __slots__ = ("_terms", "vars")

    def __init__(self, terms: Mapping[Sequence[int], int] | None, variables: Sequence[str]):
        self.vars = tuple(variables)
        n = len(self.vars)
        self._terms: dict[tuple[int, ...], int] = {}
        for key, v in (terms or {}).items():
            key = tuple(int(k) for k in key)
            if len(key) != n:
                raise ValueError(f"exponent vector {key} has wrong length for {self.vars}")
            if v:
                self._terms[key] = self._terms.get(key, 0) + int(v)
        self._terms = {k: v for k, v in self._terms.items() if v}

    @classmethod
    def constant(cls, c: int, variables: Sequence[str]) -> "MultiLaurentPoly":
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def promote(cls, f: LaurentPoly, variables: Sequence[str]) -> "MultiLaurentPoly":
        """Embed a one-variable polynomial in ``f.var`` into the ring on ``variables``."""
        variables = tuple(variables)
        if f.var not in variables:
            raise ValueError(f"{f.var} is not among {variables}")
        i = variables.index(f.var)
        out = {}
        for k, v in f.terms.items():
            key = [0] * len(variables)
            key[i] = k
            out[tuple(key)] = v
        return cls(out, variables)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def _coerce(self, other) -> "MultiLaurentPoly":
        if isinstance(other, MultiLaurentPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return MultiLaurentPoly.constant(other, self.vars)
        if isinstance(other, LaurentPoly):
            return MultiLaurentPoly.promote(other, self.vars)
        raise TypeError(f"cannot combine MultiLaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiLaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return MultiLaurentPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "MultiLaurentPoly":
        return MultiLaurentPoly({k: -v for k, v in self._terms.items()}, self.vars)

    def __sub__(self, other) -> "MultiLaurentPoly":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "MultiLaurentPoly":
        other = self._coerce(other)
        out: dict[tuple[int, ...], int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + v1 * v2
        return MultiLaurentPoly(out, self.vars)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiLaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self._terms.items())))

    def __len__(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms, reverse=True):
            c = self._terms[key]
            monos = [
                v if k == 2 else f"{v}^{_format_exponent(k)}"
                for v, k in zip(self.vars, key)
                if k
            ]
            body = "*".join(monos)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append(("-" + body if sign == "-" else body) if not parts else f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiLaurentPoly({str(self)!r}, vars={self.vars!r})"


def equate_variables(F: Union[MultiLaurentPoly, LaurentPoly], var: str = "t") -> LaurentPoly:
    """Set every variable of F equal to a single variable ``var``."""
    if isinstance(F, LaurentPoly):
        return F.rename(var)
    out: dict[int, int] = {}
    for key, v in F.terms.items():
        s = sum(key)
        out[s] = out.get(s, 0) + v
    return LaurentPoly(out, var)
