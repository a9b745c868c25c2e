"""Exact integer linear algebra and integer factorization.

Python ints are arbitrary precision, so the big-integer carrier is just
``int``; this module adds a fraction-free determinant and a bounded-effort
factorizer whose output is always correct or an explicit failure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

__all__ = [
    "det_exact",
    "det_tridiagonal",
    "is_probable_prime",
    "Factorization",
    "FactorizationError",
    "factorize",
    "TRIAL_DIVISION_BOUND",
]

TRIAL_DIVISION_BOUND = 10**7
RHO_MAX_ITERATIONS = 2_000_000
RHO_MAX_RESTARTS = 32

# Miller-Rabin with these bases is deterministic below 3.4e14.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17)
_DETERMINISTIC_LIMIT = 341_550_071_728_321
_EXTRA_BASES = (19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Every division in the elimination is exact, so the computation never
    leaves the integers.
    """
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("det_exact needs a non-empty square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_tridiagonal(diag: Sequence[int], upper: Sequence[int], lower: Sequence[int]) -> int:
    """Determinant of a tridiagonal integer matrix by the continuant recurrence.

    ``upper[k]`` is entry (k, k+1) and ``lower[k]`` is entry (k+1, k).
    """
    if not diag or len(upper) != len(diag) - 1 or len(lower) != len(diag) - 1:
        raise ValueError("band lengths do not describe a square tridiagonal matrix")
    prev, cur = 1, int(diag[0])
    for k in range(1, len(diag)):
        prev, cur = cur, int(diag[k]) * cur - int(upper[k - 1]) * int(lower[k - 1]) * prev
    return cur


def _miller_rabin(n: int, bases: Sequence[int]) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Primality test: deterministic below 3.4e14, strong probable prime above."""
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    if n < _DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _DETERMINISTIC_BASES)
    return _miller_rabin(n, _DETERMINISTIC_BASES + _EXTRA_BASES)


@lru_cache(maxsize=None)
def _primes_below(bound: int) -> tuple[int, ...]:
    sieve = np.ones(bound, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


class FactorizationError(ArithmeticError):
    """Raised when a composite cofactor survives the configured effort bound."""

    def __init__(self, n: int, cofactor: int):
        super().__init__(f"could not split composite cofactor {cofactor} of {n}")
        self.n = n
        self.cofactor = cofactor


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition of ``|n|``, primes strictly increasing."""

    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" for p, e in self.factors)

    @classmethod
    def parse(cls, text: str) -> "Factorization":
        text = text.strip()
        if text == "1":
            return cls(())
        pairs = []
        for term in text.split("*"):
            base, _, exp = term.strip().partition("^")
            pairs.append((int(base), int(exp) if exp else 1))
        return cls(tuple(pairs))

    def to_json(self) -> list[list[int]]:
        return [[p, e] for p, e in self.factors]


def _brent_rho(n: int, rng: random.Random) -> int | None:
    """One run of Brent's variant of Pollard rho; returns a proper factor or None."""
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > RHO_MAX_ITERATIONS:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _integer_root(n: int, k: int) -> int | None:
    """The exact k-th root of n if n is a perfect k-th power."""
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**k
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def _split_large(n: int, original: int, rng: random.Random) -> dict[int, int]:
    if is_probable_prime(n):
        return {n: 1}
    for k in range(n.bit_length(), 1, -1):
        root = _integer_root(n, k)
        if root is not None:
            return {p: e * k for p, e in _split_large(root, original, rng).items()}
    for _ in range(RHO_MAX_RESTARTS):
        d = _brent_rho(n, rng)
        if d is not None:
            out: dict[int, int] = {}
            for part in (d, n // d):
                for p, e in _split_large(part, original, rng).items():
                    out[p] = out.get(p, 0) + e
            return out
    raise FactorizationError(original, n)


def factorize(n: int, trial_bound: int = TRIAL_DIVISION_BOUND) -> Factorization:
    """Complete factorization of ``|n|``.

    Trial division up to ``trial_bound`` strips small primes; any remaining
    composite cofactor goes through perfect-power detection and Brent's rho.
    """
    n = int(n)
    if n == 0:
        raise ValueError("cannot factorize 0")
    original = n
    n = abs(n)
    found: dict[int, int] = {}
    if n > 1 and not is_probable_prime(n):
        for p in _primes_below(trial_bound):
            if p * p > n:
                break
            if n % p:
                continue
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
            if is_probable_prime(n):
                break
    if n > 1:
        # Deterministic seed so the same input always takes the same path.
        rng = random.Random(n)
        for p, e in _split_large(n, original, rng).items():
            found[p] = found.get(p, 0) + e
    fact = Factorization(tuple(sorted(found.items())))
    assert fact.value() == abs(original)
    return fact
