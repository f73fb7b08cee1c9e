"""Decomposition of ``L(lam) x L(a13)`` and socles of the resulting
GL3(F_q)-representations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from gl3ext.alcoves import Region, classify_alcove, good_pair, lambda_prime
from gl3ext.chars import Character, summand_char
from gl3ext.weights import (
    NEGATIVE_ROOTS,
    POSITIVE_ROOTS,
    ROOTS_AND_ZERO,
    Root,
    Weight,
    WeightTuple,
    format_tuple,
    is_p_restricted,
    is_restricted_tuple,
    replace_slot,
    shift_slot,
    summed,
)


class Summand(NamedTuple):
    kind: str  # "L" (simple) or "T" (tilting)
    weight: Weight
    mult: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "weight": str(self.weight), "mult": self.mult}


def _lt(lam: Weight, mu: Weight, p: int) -> str:
    return "L" if good_pair(lam, mu, p) else "T"


def _delta(cond: bool) -> int:
    return 1 if cond else 0


def _wall_c23(x: int, y: int, a12: Weight, a23: Weight, a13: Weight) -> list[Weight]:
    """Root shifts giving the tilting summands when exactly one of ``x, y``
    is ``p - 1``.  ``L(lam) = T(lam)`` there, so every summand is tilting."""
    if y > x:
        a = x
        near, far = a12, a23
    else:
        a = y
        near, far = a23, a12
    low = {0: -far, 1: -a13}.get(a, -near)
    return [a13, far, low]


def tensor_simple_alpha13(lam: Sequence[int], p: int, literal: bool = False) -> list[Summand]:
    """Indecomposable summands of ``L(lam) x L(a13)`` for restricted ``lam``.

    Parameters
    ----------
    lam : restricted weight.
    p : the prime.
    literal : on ``C(2|3)`` away from ``(p-1, p-1)``, use the positive-root
        ``LT`` rule verbatim.  That rule does not reproduce the character of
        the tensor product there, so by default the tilting decomposition
        ``T(lam+a13) + T(lam+far) + T(lam+low) + L(lam)^delta`` is used, where
        ``far`` is the positive simple root moving the ``p-1`` coordinate up
        and ``low`` is ``-far``, ``-a13`` or ``-near`` as the other coordinate
        is 0, 1 or at least 2.
    """
    lam = Weight(*lam)
    region = classify_alcove(lam, p)
    if not region.restricted:
        raise ValueError(f"{lam} is not {p}-restricted")
    x, y = lam.sl3
    h = x + y
    a12, a23, a13 = Root.A12.vector, Root.A23.vector, Root.A13.vector
    raw: list[tuple[str, Weight, int]] = []

    if region is Region.C2:
        raw.append(("L", lam + a13, 1))
        raw.append((_lt(lam, lam + a12, p), lam + a12, 1))
        raw.append((_lt(lam, lam + a23, p), lam + a23, 1))
        raw.append(("L", lam - a13, _delta(h >= p + 1)))
        raw.append(("L", lam - a12, _delta(h >= p)))
        raw.append(("L", lam - a23, _delta(h >= p)))
        raw.append(("L", lam, _delta(x <= p - 3) + _delta(y <= p - 3) - _delta(h == p - 1)))
    elif (x, y) == (p - 1, p - 1):
        raw.append(("T", lam + a13, 1))
        raw.append(("L", lam, 2))
    elif region is Region.C2_3 and not literal:
        for v in _wall_c23(x, y, a12, a23, a13):
            raw.append(("T", lam + v, 1))
        delta = _delta(x >= 1) + _delta(y >= 1) - _delta(h == 2 * p - 3)
        raw.append(("L", lam, delta))
    else:
        for r in POSITIVE_ROOTS:
            mu = lam + r.vector
            raw.append((_lt(lam, mu, p), mu, 1))
        for r in NEGATIVE_ROOTS:
            raw.append(("L", lam + r.vector, _delta(h <= p - 3)))
        delta = _delta(x >= 1) + _delta(y >= 1) - _delta(h == p - 3) - _delta(h == 2 * p - 3)
        raw.append(("L", lam, delta))

    out = []
    for kind, mu, m in raw:
        assert m >= 0, f"negative multiplicity for {kind}({mu}) in L({lam}) x L(a13)"
        if m == 0 or not mu.is_dominant:
            continue
        out.append(Summand(kind, mu, m))
    return out


def summands_char(summands: Sequence[Summand], p: int) -> Character:
    out = Character()
    for s in summands:
        out = out + s.mult * summand_char(s.kind, s.weight, p)
    return out


# socles over GL3(F_q)


def canonical_tuple(lam: WeightTuple, p: int) -> WeightTuple:
    """Canonical restricted representative of the Serre weight ``F(lam)``.

    The representative has the same summed weight modulo ``(q-1) X_0(T)``;
    its slot third coordinates are the base-p digits of the summed third
    coordinate reduced mod ``q-1``.  Raises ``ValueError`` when the summed
    weight is not ``q``-restricted.
    """
    f = len(lam)
    q = p**f
    s = summed(lam, p)
    x, y = s.sl3
    if not (0 <= x <= q - 1 and 0 <= y <= q - 1):
        raise ValueError(f"{lam} does not define a Serre weight")
    r = s.c % (q - 1)
    out = []
    for _ in range(f):
        xd, yd, cd = x % p, y % p, r % p
        out.append(Weight(cd + xd + yd, cd + yd, cd))
        x, y, r = x // p, y // p, r // p
    return tuple(out)


def tilting_socle_tuple(lam: WeightTuple, j0: int, p: int) -> WeightTuple:
    """Socle of ``T(lam_{j0})^{[j0]} x (x_{j != j0} L(lam_j)^{[j]})`` over GL3(F_q)."""
    f = len(lam)
    j0 %= f
    for j, w in enumerate(lam):
        if j != j0 and not is_p_restricted(w, p):
            raise ValueError(f"slot {j} = {w} is not {p}-restricted")
    return replace_slot(lam, j0, lambda_prime(lam[j0], p))


@dataclass(frozen=True)
class SocleReport:
    constituents: frozenset[WeightTuple]
    exact: bool
    shifts: tuple[Root, ...] = ()

    def to_json(self) -> dict:
        return {
            "constituents": sorted(format_tuple(t) for t in self.constituents),
            "exact": self.exact,
            "shifts": [r.tag for r in self.shifts],
        }


def socle_tensor(lam: WeightTuple, j0: int, p: int) -> SocleReport:
    """Jordan-Hoelder constituents (up to multiplicity) bounding the socle of
    ``F(lam) x F(a13)^{[j0]}``; an equality when ``lam_{j0}`` is not a power
    of the determinant."""
    if not is_restricted_tuple(lam, p):
        raise ValueError("weight tuple is not p-restricted")
    j0 %= len(lam)
    cur = lam[j0]
    shifts = tuple(r for r in ROOTS_AND_ZERO if good_pair(cur, cur + r.vector, p))
    constituents = frozenset(canonical_tuple(shift_slot(lam, j0, r), p) for r in shifts)
    exact = cur.sl3 != (0, 0)
    return SocleReport(constituents, exact, shifts)


def socle_from_summands(lam: WeightTuple, j0: int, p: int) -> frozenset[WeightTuple]:
    """The socle computed summand by summand from the tensor decomposition of
    slot ``j0``: tilting summands contribute their socle weight, simple
    summands their own weight."""
    j0 %= len(lam)
    out = set()
    for s in tensor_simple_alpha13(lam[j0], p):
        base = replace_slot(lam, j0, s.weight)
        t = tilting_socle_tuple(base, j0, p) if s.kind == "T" else base
        out.add(canonical_tuple(t, p))
    return frozenset(out)
