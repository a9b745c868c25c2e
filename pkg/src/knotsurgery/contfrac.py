"""Signed even continued fractions of two-bridge fractions p/q.

The code b = (b_1, ..., b_n) of p/q (q even) is defined by

    p/q = a_1 + 1/(a_2 + 1/(a_3 + ...)),   a_i = (-1)**(i+1) * 2 * b_i.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

__all__ = [
    "TwoBridgeFraction",
    "even_rep",
    "even_cf",
    "cf_value",
    "partial_quotients",
    "format_bvector",
    "parse_bvector",
]


class TwoBridgeFraction:
    """A fraction p/q with p odd >= 3 and gcd(p, q) = 1, normalized to 0 < q < p."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int):
        p, q = int(p), int(q)
        if p < 3 or p % 2 == 0:
            raise ValueError(f"p must be odd and >= 3, got {p}")
        if math.gcd(p, q) != 1:
            raise ValueError(f"gcd({p}, {q}) != 1")
        self.p = p
        self.q = q % p

    def __repr__(self) -> str:
        return f"TwoBridgeFraction({self.p}, {self.q})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoBridgeFraction):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q)

    def __hash__(self) -> int:
        return hash((self.p, self.q))


def even_rep(f: TwoBridgeFraction) -> tuple[int, int]:
    """Replace q by q - p when q is odd, using L(p, q) = L(p, q - p)."""
    if f.q % 2 == 0:
        return f.p, f.q
    return f.p, f.q - f.p


def _nearest_even(x: Fraction) -> int:
    lo = math.floor(x)
    if lo % 2:
        lo -= 1
    # lo <= x < lo + 2, both even candidates
    d_lo = x - lo
    d_hi = lo + 2 - x
    if d_lo < d_hi:
        return lo
    if d_hi < d_lo:
        return lo + 2
    # x is an odd integer; unreachable from odd/even input (see even_cf)
    return lo + 2 if x > 0 else lo


def even_cf(p: int, q_even: int) -> tuple[int, ...]:
    """Signed even continued-fraction code of p/q_even.

    Each step takes the even integer nearest to the current value. Starting
    from odd/even, the iterates alternate between odd/even and even/odd
    fractions, so the value is never an odd integer and no tie arises; the
    expansion stops at an even integer after an even number of steps.
    """
    p, q_even = int(p), int(q_even)
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    if q_even % 2:
        raise ValueError(f"q must be even, got {q_even}")
    if math.gcd(p, q_even) != 1:
        raise ValueError(f"gcd({p}, {q_even}) != 1")
    if not 0 < abs(q_even) < p:
        raise ValueError(f"need 0 < |q| < p, got q = {q_even}")

    x = Fraction(p, q_even)
    b: list[int] = []
    while True:
        a = _nearest_even(x)
        if a == 0:
            raise ArithmeticError(f"zero partial quotient while expanding {p}/{q_even}")
        i = len(b) + 1
        b.append(a // 2 if i % 2 else -a // 2)
        rest = x - a
        if rest == 0:
            break
        x = 1 / rest
    return tuple(b)


def partial_quotients(b: Sequence[int]) -> list[int]:
    return [2 * bi if i % 2 == 0 else -2 * bi for i, bi in enumerate(b)]


def cf_value(b: Sequence[int]) -> tuple[int, int]:
    """Evaluate a b-vector back to a reduced fraction (p, q) with p > 0."""
    if not b or any(int(bi) == 0 for bi in b):
        raise ValueError("b-vector must be non-empty with nonzero entries")
    h2, h1 = 0, 1  # h_{-2}, h_{-1}
    k2, k1 = 1, 0
    for a in partial_quotients(b):
        h2, h1 = h1, a * h1 + h2
        k2, k1 = k1, a * k1 + k2
    if k1 == 0:
        raise ZeroDivisionError(f"degenerate continued fraction {tuple(b)}")
    g = math.gcd(h1, k1)
    num, den = h1 // g, k1 // g
    if num < 0:
        num, den = -num, -den
    return num, den


def format_bvector(b: Sequence[int]) -> str:
    return "(" + ",".join(str(int(x)) for x in b) + ")"


def parse_bvector(text: str) -> tuple[int, ...]:
    body = text.strip().removeprefix("(").removesuffix(")")
    return tuple(int(x) for x in body.split(",") if x.strip())
