"""Alcove regions of GL3 weights, the socle map of tilting modules, and the
good-pair and bad-pair tables."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from gl3ext.weights import (
    ROOTS_AND_ZERO,
    Root,
    Weight,
    WeightTuple,
    is_p_restricted,
    is_restricted_tuple,
    reflect,
    same_up_to_twist,
    shift_slot,
)


class Region(enum.Enum):
    C1 = "C(1)"
    C1_2 = "C(1|2)"
    C2 = "C(2)"
    C2_3 = "C(2|3)"
    C3 = "C(3)"
    C3p = "C(3')"
    Cp = "C(p)"
    OTHER_DOMINANT = "other-dominant"
    NON_DOMINANT = "non-dominant"

    def __str__(self) -> str:
        return self.value

    @property
    def restricted(self) -> bool:
        return self in RESTRICTED_REGIONS


RESTRICTED_REGIONS = frozenset({Region.C1, Region.C1_2, Region.C2, Region.C2_3})
TILTING_DOMAIN = RESTRICTED_REGIONS | {Region.C3, Region.C3p, Region.Cp}

GOOD_REGION_PAIRS = frozenset(
    {
        (Region.C1, Region.C1),
        (Region.C1_2, Region.C1_2),
        (Region.C2_3, Region.C2_3),
        (Region.C2, Region.C2),
        (Region.C1, Region.C1_2),
        (Region.C1_2, Region.C1),
        (Region.C1_2, Region.C2_3),
        (Region.C2_3, Region.C1_2),
        (Region.C2_3, Region.C2),
        (Region.C2, Region.C2_3),
    }
)


def classify_alcove(lam: Sequence[int], p: int) -> Region:
    w = Weight(*lam)
    if not w.is_dominant:
        return Region.NON_DOMINANT
    x, y = w.sl3
    h = x + y
    if x <= p - 1 and y <= p - 1:
        if h <= p - 3:
            return Region.C1
        if h == p - 2:
            return Region.C1_2
        if x == p - 1 or y == p - 1:
            return Region.C2_3
        return Region.C2
    if x in (p, p + 1) and h <= 2 * p - 2:
        return Region.C3
    if y in (p, p + 1) and h <= 2 * p - 2:
        return Region.C3p
    if (x, y) in ((p, p - 1), (p - 1, p), (p, p)):
        return Region.Cp
    return Region.OTHER_DOMINANT


def lambda_prime(lam: Sequence[int], p: int) -> Weight:
    """Highest weight of the G-socle of the tilting module ``T(lam)``."""
    w = Weight(*lam)
    region = classify_alcove(w, p)
    if region in (Region.C1, Region.C1_2, Region.C2_3):
        return w
    if region is Region.C2:
        return reflect("s2", w, p)
    if region is Region.C3:
        return reflect("s3", w, p)
    if region is Region.C3p:
        return reflect("s3'", w, p)
    if region is Region.Cp:
        a13 = Root.A13.vector
        return w - 2 * a13 if w.sl3 == (p, p) else w - a13
    raise ValueError(f"{w} lies in {region}, outside X_1 u C(3) u C(3') u C(p)")


def in_C_alpha_plus(lam: Sequence[int], alpha: Root, p: int) -> bool:
    """Membership in ``C(alpha)^+`` for ``alpha`` a positive root or zero."""
    w = Weight(*lam)
    if not is_p_restricted(w, p):
        return False
    x, y = w.sl3
    h = x + y
    if alpha is Root.ZERO:
        return True
    if alpha is Root.A13:
        window = 0 <= h <= p - 4 or p - 1 <= h <= 2 * p - 4
        return (x <= p - 2 and y <= p - 2 and window) or (x, y) in ((p - 2, 0), (0, p - 2))
    window = 1 <= h <= p - 3 or p - 1 <= h <= 2 * p - 4
    if alpha is Root.A12:
        return (x <= p - 3 and 1 <= y <= p - 1 and window) or (x, y) == (p - 3, 1)
    if alpha is Root.A23:
        return (1 <= x <= p - 1 and y <= p - 3 and window) or (x, y) == (1, p - 3)
    raise ValueError(f"C(alpha)^+ is only defined for positive roots and 0, not {alpha}")


def good_pair(lam: Sequence[int], mu: Sequence[int], p: int) -> bool:
    if not (is_p_restricted(lam, p) and is_p_restricted(mu, p)):
        return False
    return (classify_alcove(lam, p), classify_alcove(mu, p)) in GOOD_REGION_PAIRS


def in_C_alpha_j0(lam: WeightTuple, alpha: Root, j0: int, p: int) -> bool:
    """Membership in ``C(alpha, j0)``; the f = 1 and f >= 2 definitions differ."""
    f = len(lam)
    if not is_restricted_tuple(lam, p):
        return False
    if f == 1:
        w = lam[0]
        x, y = w.sl3
        if alpha is Root.ZERO:
            return x <= p - 3 and y <= p - 3 and x + y != p - 2
        if not in_C_alpha_plus(w, alpha, p):
            return False
        if alpha is Root.A13:
            return min(x, y) <= p - 4
        if alpha is Root.A12:
            return x <= p - 4
        return y <= p - 4

    j0 %= f
    cur, prev = lam[j0], lam[(j0 - 1) % f]
    px, py = prev.sl3
    if alpha is Root.ZERO:
        return all(a <= p - 2 and b <= p - 2 for a, b in (w.sl3 for w in lam))
    if not in_C_alpha_plus(cur, alpha, p):
        return False
    if alpha is Root.A13:
        return px + py <= 2 * p - 3
    others_wide = all(lam[j].height >= p - 1 for j in range(f) if j != j0)
    if alpha is Root.A12:
        return px <= p - 2 and not (cur.sl3 == (p - 3, 1) and others_wide)
    if alpha is Root.A23:
        return py <= p - 2 and not (cur.sl3 == (1, p - 3) and others_wide)
    raise ValueError(f"C(alpha, j0) is only defined for positive roots and 0, not {alpha}")


# bad pairs

BAD_CASES = {Root.A13: "i", Root.A12: "ii", Root.A23: "iii", Root.ZERO: "iv"}


def shape_matches(
    lam: WeightTuple, lam2: WeightTuple, j0: int, alpha: Root, p: int, up_to_twist: bool = True
) -> bool:
    """Does ``lam2`` equal ``lam + alpha_{j0}``, literally or up to twist?"""
    target = shift_slot(lam, j0, alpha)
    if up_to_twist:
        return same_up_to_twist(lam2, target, p)
    return tuple(lam2) == target


def _bad_condition(lam: WeightTuple, alpha: Root, j0: int, p: int) -> bool:
    f = len(lam)
    if f == 1:
        a, b = lam[0].sl3
        if alpha is Root.A13:
            return a in (p - 2, p - 3) and b in (p - 2, p - 3)
        if alpha is Root.A12:
            return a == p - 3 and 1 <= b <= p - 1
        if alpha is Root.A23:
            return b == p - 3 and 1 <= a <= p - 1
        return bool({a, b} & {p - 2, p - 1}) or a + b == p - 2

    cur, prev = lam[j0 % f], lam[(j0 - 1) % f]
    px, py = prev.sl3
    others_wide = all(lam[j].height >= p - 1 for j in range(f) if j != j0 % f)
    if alpha is Root.A13:
        return (px, py) == (p - 1, p - 1)
    if alpha is Root.A12:
        return px == p - 1 or (cur.sl3 == (p - 3, 1) and others_wide)
    if alpha is Root.A23:
        return py == p - 1 or (cur.sl3 == (1, p - 3) and others_wide)
    return any(p - 1 in w.sl3 for w in lam)


def bad_pair_witnesses(
    lam: WeightTuple, lam2: WeightTuple, p: int, up_to_twist: bool = True
) -> list[tuple[int, Root, str]]:
    """All ``(j0, alpha, case)`` making ``(lam, lam2)`` a bad pair.

    For case (iv) (``lam2 = lam``) the slot is irrelevant and ``j0`` is
    reported as 0.
    """
    f = len(lam)
    out = []
    for alpha in (Root.A13, Root.A12, Root.A23):
        for j0 in range(f):
            if shape_matches(lam, lam2, j0, alpha, p, up_to_twist) and _bad_condition(
                lam, alpha, j0, p
            ):
                out.append((j0, alpha, BAD_CASES[alpha]))
    if shape_matches(lam, lam2, 0, Root.ZERO, p, up_to_twist) and _bad_condition(
        lam, Root.ZERO, 0, p
    ):
        out.append((0, Root.ZERO, BAD_CASES[Root.ZERO]))
    return out


def bad_pair(lam: WeightTuple, lam2: WeightTuple, p: int, up_to_twist: bool = True) -> bool:
    return bool(bad_pair_witnesses(lam, lam2, p, up_to_twist))


@dataclass(frozen=True)
class PairVerdict:
    good: bool
    bad_forward: bool
    bad_backward: bool
    matched_shape: tuple[int, Root] | None

    def to_json(self) -> dict:
        shape = None
        if self.matched_shape is not None:
            shape = {"j0": self.matched_shape[0], "alpha": self.matched_shape[1].tag}
        return {
            "good": self.good,
            "bad_forward": self.bad_forward,
            "bad_backward": self.bad_backward,
            "matched_shape": shape,
        }


def pair_verdict(lam: WeightTuple, lam2: WeightTuple, p: int, up_to_twist: bool = True) -> PairVerdict:
    """Good/bad status of an ordered pair of restricted weight tuples.

    ``matched_shape`` is the first ``(j0, alpha)`` with ``alpha`` in
    ``Phi u {0}`` such that ``lam2 = lam + alpha_{j0}``.  ``good`` is the
    good-pair status of the matched slot; for f = 1 without a match it is the
    region-table status of ``(lam, lam2)``.
    """
    shape = None
    for alpha in ROOTS_AND_ZERO:
        for j0 in range(len(lam)):
            if shape_matches(lam, lam2, j0, alpha, p, up_to_twist):
                shape = (j0, alpha)
                break
        if shape:
            break
    if shape is not None:
        j0, alpha = shape
        good = good_pair(lam[j0], lam[j0] + alpha.vector, p)
    elif len(lam) == 1:
        good = good_pair(lam[0], lam2[0], p)
    else:
        good = False
    return PairVerdict(
        good=good,
        bad_forward=bad_pair(lam, lam2, p, up_to_twist),
        bad_backward=bad_pair(lam2, lam, p, up_to_twist),
        matched_shape=shape,
    )
