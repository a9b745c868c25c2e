"""Invariants of two-bridge knots K(p/q) from their even continued fraction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .contfrac import TwoBridgeFraction, even_cf, even_rep
from .exact import det_tridiagonal
from .laurent import LaurentPoly, evaluate, is_monic, is_symmetric

__all__ = [
    "seifert_matrix",
    "alexander_matrix",
    "KnotInvariants",
    "alexander",
    "alexander_polynomial",
    "is_fibered",
    "equivalent",
    "is_mirror_pair",
    "enumerate_knots",
]


def seifert_matrix(b) -> list[list[int]]:
    """Seifert matrix V(p/q) read off the b-vector.

    Odd rows (1-indexed) carry only the diagonal entry b_i; even rows carry
    1, b_i, 1 on the sub-, main and super-diagonal (the last even row has
    no super-diagonal entry).
    """
    n = len(b)
    v = [[0] * n for _ in range(n)]
    for i in range(n):
        v[i][i] = int(b[i])
        if i % 2 == 1:
            v[i][i - 1] = 1
            if i + 1 < n:
                v[i][i + 1] = 1
    return v


def _interpolate(x0: int, ys: list[int], degree: int) -> list[int]:
    """Coefficients (low to high) of the integer polynomial of the given degree
    taking the values ``ys`` at x0, x0+1, ...

    Newton forward differences; for a polynomial with integer coefficients the
    k-th difference is divisible by k!, and differences above ``degree`` vanish.
    """
    diffs = []
    row = list(ys)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    if any(diffs[degree + 1 :]):
        raise ArithmeticError("sample values are not those of a low-degree polynomial")
    coeffs = [0] * (degree + 1)
    basis = [1]  # prod_{j<k} (x - x0 - j), low to high
    for k in range(degree + 1):
        c, r = divmod(diffs[k], math.factorial(k))
        if r:
            raise ArithmeticError("interpolated determinant has non-integer coefficients")
        for i, bc in enumerate(basis):
            coeffs[i] += c * bc
        root = x0 + k
        basis = [0] + basis
        for i in range(len(basis) - 1):
            basis[i] -= root * basis[i + 1]
    return coeffs


def alexander_matrix(b, t: int) -> list[list[int]]:
    """t V - V^T evaluated at an integer t."""
    v = seifert_matrix(b)
    n = len(v)
    return [[t * v[i][j] - v[j][i] for j in range(n)] for i in range(n)]


def _raw_alexander(b) -> list[int]:
    """Coefficients of det(t V - V^T) as an ordinary polynomial in t.

    The matrix is tridiagonal, so each sample at t = -n..n is a continuant.
    """
    v = seifert_matrix(b)
    n = len(v)
    ys = []
    for x in range(-n, n + 1):
        ys.append(
            det_tridiagonal(
                [x * v[i][i] - v[i][i] for i in range(n)],
                [x * v[i][i + 1] - v[i + 1][i] for i in range(n - 1)],
                [x * v[i + 1][i] - v[i][i + 1] for i in range(n - 1)],
            )
        )
    return _interpolate(-n, ys, n)


@dataclass(frozen=True)
class KnotInvariants:
    p: int
    q: int
    bvector: tuple[int, ...]
    alexander: LaurentPoly
    fibered: bool
    genus: int
    determinant: int


@lru_cache(maxsize=4096)
def alexander(p: int, q: int) -> KnotInvariants:
    """Alexander polynomial and derived invariants of K(p/q).

    The polynomial is normalized to be symmetric with value 1 at t = 1.
    """
    f = TwoBridgeFraction(p, q)
    b = even_cf(*even_rep(f))
    raw = _raw_alexander(b)
    nz = [i for i, c in enumerate(raw) if c]
    lo, hi = nz[0], nz[-1]
    if (hi - lo) % 2:
        raise ArithmeticError(f"odd-span Alexander polynomial for {p}/{q}: {raw}")
    centre = (lo + hi) // 2
    delta = LaurentPoly.from_coefficients(raw[lo : hi + 1], low=lo - centre)
    at_one = evaluate(delta, 1)
    if abs(at_one) != 1:
        raise ArithmeticError(f"Delta(1) = {at_one} for {p}/{q}; not a knot")
    if at_one < 0:
        delta = -delta
    assert is_symmetric(delta)
    return KnotInvariants(
        p=f.p,
        q=f.q,
        bvector=b,
        alexander=delta,
        fibered=is_monic(delta),
        genus=int(delta.span()) // 2,
        determinant=abs(int(evaluate(delta, -1))),
    )


def alexander_polynomial(p: int, q: int) -> LaurentPoly:
    return alexander(p, q).alexander


def is_fibered(p: int, q: int) -> bool:
    # two-bridge knots are alternating, so fibered <=> monic
    return alexander(p, q).fibered


def equivalent(p: int, q1: int, q2: int) -> bool:
    """K(p/q1) = K(p/q2) as oriented knots: q2 = q1^{+-1} mod p."""
    for q in (q1, q2):
        TwoBridgeFraction(p, q)
    return (q1 - q2) % p == 0 or (q1 * q2 - 1) % p == 0


def is_mirror_pair(p: int, q1: int, q2: int) -> bool:
    """K(p/q2) is the mirror image of K(p/q1)."""
    return equivalent(p, q1, -q2 % p)


def enumerate_knots(p: int) -> list[int]:
    """Smallest representative of each class {q, q^-1 mod p}; mirrors kept apart."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    reps = set()
    for q in range(1, p):
        if math.gcd(p, q) == 1:
            reps.add(min(q, pow(q, -1, p)))
    return sorted(reps)
