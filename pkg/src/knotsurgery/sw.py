"""Seiberg-Witten invariants of knot- and link-surgery manifolds as Laurent polynomials.

A basic class is recorded as a multiple of a reference torus class: the
exponent of the class variable. Only the combinatorics of the product
formulas is modelled; the invariants of the seed manifolds are inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dihedral import hosokawa_at_one
from .laurent import (
    LaurentPoly,
    MultiLaurentPoly,
    half_binomial,
    is_symmetric,
    substitute_neg,
)

__all__ = [
    "ManifoldInvariants",
    "K3",
    "SWPolynomial",
    "BasicClass",
    "SymmetryError",
    "sw_k3",
    "sw_e1_fibersum_k3",
    "knot_surgery_sw",
    "fibered_surgery_sw",
    "link_surgery_sw",
    "CoveringReduction",
    "covering_sw_reduced",
    "basic_classes",
]


@dataclass(frozen=True)
class ManifoldInvariants:
    euler: int
    signature: int
    b_plus: int
    description: str = ""

    def __post_init__(self):
        if (self.euler + self.signature) % 4:
            raise ValueError(f"e + sign = {self.euler + self.signature} is not divisible by 4")

    @property
    def symmetry_sign(self) -> int:
        """(-1)^((e + sign)/4)."""
        return -1 if ((self.euler + self.signature) // 4) % 2 else 1


K3 = ManifoldInvariants(euler=24, signature=-16, b_plus=3, description="K3 surface")


class SymmetryError(ValueError):
    """SW(-k) != (-1)^((e+sign)/4) SW(k) for some class k."""


@dataclass(frozen=True)
class SWPolynomial:
    poly: LaurentPoly
    ambient: ManifoldInvariants

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class BasicClass:
    multiple: Fraction  # of the reference class
    value: int


def sw_k3(var: str = "t") -> SWPolynomial:
    return SWPolynomial(LaurentPoly.constant(1, var), K3)


def sw_e1_fibersum_k3(var: str = "t") -> LaurentPoly:
    """SW of E(1) fiber-summed with K3 along a fiber: t^(1/2) - t^(-1/2)."""
    return half_binomial(var)


def knot_surgery_sw(sw_x: SWPolynomial, alexander: LaurentPoly) -> SWPolynomial:
    """SW of X_K: multiply by the symmetrized Alexander polynomial in the same variable."""
    if not is_symmetric(alexander):
        raise ValueError(f"Alexander polynomial {alexander} is not symmetric")
    return SWPolynomial(sw_x.poly * alexander.rename(sw_x.poly.var), sw_x.ambient)


def fibered_surgery_sw(
    alexander: LaurentPoly, ambient: ManifoldInvariants = K3, var: str = "tau"
) -> SWPolynomial:
    """SW of the surgery manifold built from the double cover of M_K: Delta(tau) Delta(-tau)."""
    if alexander.has_half_integer_exponents():
        raise ValueError("Alexander polynomial must have integer exponents")
    if not is_symmetric(alexander):
        raise ValueError(f"Alexander polynomial {alexander} is not symmetric")
    d = alexander.rename(var)
    return SWPolynomial(d * substitute_neg(d), ambient)


def link_surgery_sw(alexander: MultiLaurentPoly, factors: Sequence[LaurentPoly]) -> MultiLaurentPoly:
    """Multivariable Alexander polynomial times one SW factor per component.

    ``factors[j]`` is written in some variable and gets renamed to the j-th
    variable of ``alexander``.
    """
    if len(factors) != len(alexander.vars):
        raise ValueError(f"{len(factors)} factors for {len(alexander.vars)} variables")
    out = alexander
    for var, f in zip(alexander.vars, factors):
        out = out * MultiLaurentPoly.promote(f.rename(var), alexander.vars)
    return out


@dataclass(frozen=True)
class CoveringReduction:
    """P(t) = nabla(t) * Q(t) with nabla known only through nabla(1)."""

    p: int
    q: int
    nabla_at_one: int
    Q: LaurentPoly


def covering_sw_reduced(p: int, q: int, var: str = "t") -> CoveringReduction:
    h = hosokawa_at_one(p, q)
    return CoveringReduction(p=h.p, q=h.q, nabla_at_one=h.value, Q=half_binomial(var) ** (2 * h.p - 2))


def basic_classes(sw: SWPolynomial) -> list[BasicClass]:
    """Nonzero terms of sw, sorted by class, after checking the conjugation symmetry."""
    terms = sw.poly.terms
    eps = sw.ambient.symmetry_sign
    for k, v in terms.items():
        if terms.get(-k, 0) != eps * v:
            raise SymmetryError(
                f"SW({Fraction(-k, 2)}) = {terms.get(-k, 0)} but expected {eps} * SW({Fraction(k, 2)}) = {eps * v}"
            )
    return [BasicClass(Fraction(k, 2), terms[k]) for k in sorted(terms)]
