"""Certified comparison of knot-surgery manifolds built from two-bridge knot pairs."""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .dihedral import HosokawaValue, hosokawa_at_one
from .laurent import LaurentPoly
from .sw import SWPolynomial, basic_classes, fibered_surgery_sw
from .twobridge import alexander, enumerate_knots, equivalent, is_mirror_pair

__all__ = ["Verdict", "Certificate", "derive_verdict", "distinguish", "search", "search_block"]

ASSUMPTIONS = (
    "the two surgery manifolds are homeomorphic (classification result, not computed)",
    "SW(K3) = 1 and SW(E(1) # K3 along a fiber) = t^(1/2) - t^(-1/2) are taken as inputs",
)


class Verdict(str, enum.Enum):
    DISTINGUISHED = "DISTINGUISHED"
    INCONCLUSIVE = "INCONCLUSIVE"
    EQUIVALENT_KNOTS = "EQUIVALENT_KNOTS"
    NOT_APPLICABLE = "NOT_APPLICABLE"

    @property
    def exit_code(self) -> int:
        return {"DISTINGUISHED": 0, "INCONCLUSIVE": 2}.get(self.value, 3)


def derive_verdict(
    knots_inequivalent: bool,
    both_fibered: bool,
    alexander_equal: bool,
    hosokawa_1: HosokawaValue | None,
    hosokawa_2: HosokawaValue | None,
) -> Verdict:
    if not knots_inequivalent:
        return Verdict.EQUIVALENT_KNOTS
    if not (both_fibered and alexander_equal):
        return Verdict.NOT_APPLICABLE
    if hosokawa_1 is None or hosokawa_2 is None:
        raise ValueError("Hosokawa values are required once the knots qualify")
    if hosokawa_1.value != hosokawa_2.value:
        return Verdict.DISTINGUISHED
    return Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class Certificate:
    p: int
    q1: int
    q2: int
    knots_inequivalent: bool
    both_fibered: bool
    alexander_equal: bool
    alexander: LaurentPoly
    sw: SWPolynomial | None
    hosokawa_1: HosokawaValue | None
    hosokawa_2: HosokawaValue | None
    verdict: Verdict
    assumptions: tuple[str, ...] = field(default=ASSUMPTIONS)

    def check(self) -> bool:
        """The recorded verdict follows from the recorded fields."""
        return self.verdict == derive_verdict(
            self.knots_inequivalent,
            self.both_fibered,
            self.alexander_equal,
            self.hosokawa_1,
            self.hosokawa_2,
        )

    def to_json(self) -> dict:
        hos = []
        for h in (self.hosokawa_1, self.hosokawa_2):
            if h is not None:
                hos.append(
                    {
                        "q": h.q,
                        "det": str(h.value),
                        "det_over_p": str(h.value_over_p),
                        "factors": h.factorization.to_json(),
                    }
                )
        return {
            "p": self.p,
            "q1": self.q1,
            "q2": self.q2,
            "knots_inequivalent": self.knots_inequivalent,
            "both_fibered": self.both_fibered,
            "alexander_equal": self.alexander_equal,
            "alexander": str(self.alexander),
            "sw": str(self.sw) if self.sw is not None else None,
            "hosokawa": hos,
            "verdict": self.verdict.value,
            "assumptions": list(self.assumptions),
        }


def distinguish(p: int, q1: int, q2: int) -> Certificate:
    """Run the universal-cover argument on K(p/q1), K(p/q2).

    Equal Alexander polynomials give equal SW invariants for the two
    surgery manifolds; different Hosokawa values at 1 of the covering links
    then force different SW invariants of the universal covers.
    """
    k1, k2 = alexander(p, q1), alexander(p, q2)
    inequivalent = not equivalent(p, q1, q2)
    both_fibered = k1.fibered and k2.fibered
    alexander_equal = k1.alexander == k2.alexander
    sw = h1 = h2 = None
    if inequivalent and both_fibered and alexander_equal:
        sw = fibered_surgery_sw(k1.alexander)
        basic_classes(sw)  # raises on a symmetry violation
        h1, h2 = hosokawa_at_one(p, q1), hosokawa_at_one(p, q2)
    verdict = derive_verdict(inequivalent, both_fibered, alexander_equal, h1, h2)
    return Certificate(
        p=k1.p,
        q1=k1.q,
        q2=k2.q,
        knots_inequivalent=inequivalent,
        both_fibered=both_fibered,
        alexander_equal=alexander_equal,
        alexander=k1.alexander,
        sw=sw,
        hosokawa_1=h1,
        hosokawa_2=h2,
        verdict=verdict,
    )


def search_block(p: int, require_fibered: bool = True) -> list[Certificate]:
    """Certificates for all same-Alexander pairs at one p.

    Mirror pairs are skipped: they always share both the Alexander
    polynomial and the Hosokawa value, so they can never be separated.
    """
    groups: dict[str, list[int]] = {}
    for q in enumerate_knots(p):
        inv = alexander(p, q)
        if require_fibered and not inv.fibered:
            continue
        groups.setdefault(str(inv.alexander), []).append(q)
    pairs = []
    for qs in groups.values():
        for q1, q2 in itertools.combinations(sorted(qs), 2):
            if not is_mirror_pair(p, q1, q2):
                pairs.append((q1, q2))
    return [distinguish(p, q1, q2) for q1, q2 in sorted(pairs)]


def _block(args: tuple[int, bool]) -> list[Certificate]:
    return search_block(*args)


def search(
    p_max: int, p_min: int = 3, require_fibered: bool = True, jobs: int = 1
) -> Iterator[Certificate]:
    """Certificates for p_min <= p <= p_max (odd), p ascending, then (q1, q2)."""
    if p_min < 3 or p_max < p_min or p_min % 2 == 0 or p_max % 2 == 0:
        raise ValueError(f"need odd bounds 3 <= p_min <= p_max, got {p_min}, {p_max}")
    tasks = [(p, require_fibered) for p in range(p_min, p_max + 1, 2)]
    if jobs <= 1:
        for t in tasks:
            yield from _block(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, which keeps the output deterministic
        for block in pool.map(_block, tasks, chunksize=1):
            yield from block
