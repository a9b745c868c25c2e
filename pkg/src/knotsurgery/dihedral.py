"""Linking data of the dihedral covering link of K(p/q).

The p branch circles of the 2p-fold dihedral cover are modelled as the great
circles

    C_k = {(cos(th) e^{i pi k/p}, sin(th) e^{i pi k q/p})}  in  S^3 in C^2,

and component j of the covering link is C_{2j}. Two such circles lie in
transverse 2-planes, so they link +-1 with the sign of the 4x4 determinant
of the two planes; for components i, j that sign depends only on d = j - i
through sign(sin(2 pi d/p)) * sign(sin(2 pi d q/p)), which is the floor
formula in :func:`linking_numbers`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numba
import numpy as np

from .contfrac import TwoBridgeFraction
from .exact import Factorization, det_exact, factorize

__all__ = [
    "ORIENTATION_SIGN",
    "LENS_PARAMETER",
    "LinkingData",
    "HosokawaValue",
    "OracleError",
    "linking_numbers",
    "linking_matrix",
    "minor",
    "hosokawa_at_one",
    "gauss_linking_oracle",
    "measure_linking",
    "gauss_linking_integral",
    "great_circle",
]

# Frozen conventions. The lens parameter entering the floor formula is q
# itself (not q^-1 mod p or p - q). ORIENTATION_SIGN is the sign relating the
# floor formula to the Gauss linking number of the oriented circles C_{2i},
# C_{2j} in S^3 oriented as the boundary of the unit 4-ball; it is pinned by
# the numerical oracle (tests/test_dihedral.py).
LENS_PARAMETER = "q"
ORIENTATION_SIGN = -1


@dataclass(frozen=True)
class LinkingData:
    p: int
    q: int
    epsilon: tuple[int, ...]  # epsilon[j-1] = lk(component 0, component j)
    sigma: int

    def eps(self, j: int) -> int:
        """Linking number of components differing by j (mod p), j != 0."""
        j %= self.p
        if j == 0:
            raise ValueError("a component has no linking number with itself")
        return self.epsilon[j - 1]


@dataclass(frozen=True)
class HosokawaValue:
    p: int
    q: int
    value: int
    value_over_p: int
    factorization: Factorization


def _floor_sign(p: int, q: int, j: int) -> int:
    return -1 if ((2 * j) // p + (2 * j * q) // p) % 2 else 1


def linking_numbers(p: int, q: int) -> LinkingData:
    """Pairwise linking numbers of the dihedral covering link of K(p/q)."""
    f = TwoBridgeFraction(p, q)
    eps = tuple(ORIENTATION_SIGN * _floor_sign(f.p, f.q, j) for j in range(1, f.p))
    return LinkingData(p=f.p, q=f.q, epsilon=eps, sigma=-sum(eps))


def linking_matrix(p: int, q: int) -> list[list[int]]:
    """Circulant linking matrix with diagonal -sum(epsilon), so rows sum to zero."""
    data = linking_numbers(p, q)
    row = (data.sigma,) + data.epsilon
    n = data.p
    return [[row[(j - i) % n] for j in range(n)] for i in range(n)]


def minor(matrix: list[list[int]], k: int) -> list[list[int]]:
    """Delete row k and column k."""
    return [[x for j, x in enumerate(row) if j != k] for i, row in enumerate(matrix) if i != k]


@lru_cache(maxsize=1024)
def hosokawa_at_one(p: int, q: int, deleted: int | None = None) -> HosokawaValue:
    """|det| of a (p-1)-minor of the linking matrix, i.e. the Hosokawa value at 1.

    The last row and column are deleted unless ``deleted`` says otherwise.
    """
    lam = linking_matrix(p, q)
    n = len(lam)
    k = n - 1 if deleted is None else deleted
    value = abs(det_exact(minor(lam, k)))
    if value % n:
        raise ArithmeticError(f"minor determinant {value} of {p}/{q} not divisible by p")
    over = value // n
    return HosokawaValue(p=n, q=q % n, value=value, value_over_p=over, factorization=factorize(over))


# Numerical oracle


class OracleError(RuntimeError):
    pass


def great_circle(p: int, q: int, k: int, samples: int) -> tuple[np.ndarray, np.ndarray]:
    """Points of C_k in R^4 and their velocity times the parameter step."""
    th = np.arange(samples) * (2 * np.pi / samples)
    a = np.pi * k / p
    b = np.pi * k * q / p
    c, s = np.cos(th), np.sin(th)
    x = np.stack([c * np.cos(a), c * np.sin(a), s * np.cos(b), s * np.sin(b)], axis=1)
    dx = np.stack([-s * np.cos(a), -s * np.sin(a), c * np.cos(b), c * np.sin(b)], axis=1)
    return x, dx * (2 * np.pi / samples)


def _tangent_frame(pole: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Orthonormal e1, e2, e3 spanning pole^perp with det[pole, e1, e2, e3] = -1.

    With that sign, stereographic projection from ``pole`` preserves the
    orientation of S^3 as the boundary of the unit ball.
    """
    qmat, _ = np.linalg.qr(np.column_stack([pole, rng.normal(size=(4, 3))]))
    if qmat[:, 0] @ pole < 0:
        qmat[:, 0] *= -1
    if np.linalg.det(qmat) > 0:
        qmat[:, 3] *= -1
    return qmat[:, 1:].T


def _project(x: np.ndarray, dx: np.ndarray, pole: np.ndarray, frame: np.ndarray):
    den = 1.0 - x @ pole
    px, pdx = x @ frame.T, dx @ frame.T
    y = px / den[:, None]
    dy = (pdx * den[:, None] + px * (dx @ pole)[:, None]) / den[:, None] ** 2
    return y, dy


@numba.njit(cache=True)
def gauss_linking_integral(r1, d1, r2, d2) -> float:
    """Discretized Gauss integral of two closed curves in R^3.

    ``d1``, ``d2`` are velocity times step, so the double sum is the
    trapezoid rule, spectrally accurate for smooth periodic curves.
    """
    total = 0.0
    for i in range(r1.shape[0]):
        ax, ay, az = r1[i, 0], r1[i, 1], r1[i, 2]
        ux, uy, uz = d1[i, 0], d1[i, 1], d1[i, 2]
        for j in range(r2.shape[0]):
            dx, dy, dz = ax - r2[j, 0], ay - r2[j, 1], az - r2[j, 2]
            vx, vy, vz = d2[j, 0], d2[j, 1], d2[j, 2]
            cx = uy * vz - uz * vy
            cy = uz * vx - ux * vz
            cz = ux * vy - uy * vx
            dist2 = dx * dx + dy * dy + dz * dz
            total += (dx * cx + dy * cy + dz * cz) / (dist2 * np.sqrt(dist2))
    return total / (4 * np.pi)


def measure_linking(
    p: int,
    q: int,
    i: int,
    j: int,
    samples: int = 2048,
    seed: int = 20240611,
    max_attempts: int = 8,
) -> float:
    """Raw Gauss integral for components i < j, within 0.05 of an integer.

    Projection points come from a generator seeded by (seed, p, q, i, j); a
    point closer than 0.1 to either circle, or an integral that misses an
    integer by 0.05 or more, triggers a retry with a fresh point.
    """
    if not 0 <= i < j < p:
        raise ValueError(f"need 0 <= i < j < p, got i={i}, j={j}, p={p}")
    if samples < 2048:
        raise ValueError("at least 2048 samples per circle are required")
    rng = np.random.default_rng([seed, p, q % p, i, j])
    c1 = great_circle(p, q, 2 * i % (2 * p), samples)
    c2 = great_circle(p, q, 2 * j % (2 * p), samples)
    last = None
    for _ in range(max_attempts):
        pole = rng.normal(size=4)
        pole /= np.linalg.norm(pole)
        clearance = min(np.linalg.norm(c[0] - pole, axis=1).min() for c in (c1, c2))
        if clearance < 0.1:
            last = f"projection point within {clearance:.3f} of a circle"
            continue
        frame = _tangent_frame(pole, rng)
        r1, d1 = _project(*c1, pole, frame)
        r2, d2 = _project(*c2, pole, frame)
        value = gauss_linking_integral(r1, d1, r2, d2)
        residual = abs(value - round(value))
        if residual >= 0.05:
            last = f"residual {residual:.3g} for integral {value:.6f}"
            continue
        return value
    raise OracleError(f"linking oracle failed for {p}/{q} components ({i}, {j}): {last}")


def gauss_linking_oracle(p: int, q: int, i: int, j: int, **kwargs) -> int:
    """Linking number of components i and j measured by numerical integration."""
    return int(round(measure_linking(p, q, i, j, **kwargs)))
