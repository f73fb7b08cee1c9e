"""Comparison of Ext^1 between Serre weights over ``GL3(O_L)/Z_1`` and over
``GL3(F_q)``.

The engine does not compute Ext groups.  It reports one of three verdicts:

* ``EqualByVanishing``: ``tau`` is not in the socle of ``sigma x F(a13)^[j]``
  for any ``j``, so the comparison map is an isomorphism for trivial reasons;
* ``EqualByTheorem``: neither ordered pair is bad, so the comparison theorem
  applies;
* ``NotCovered``: no guarantee either way.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from gl3ext.alcoves import bad_pair_witnesses, good_pair
from gl3ext.chars import simple_char
from gl3ext.fq import serre_equiv
from gl3ext.tensor import canonical_tuple
from gl3ext.weights import (
    ROOTS_AND_ZERO,
    Root,
    Weight,
    WeightTuple,
    dualize,
    format_tuple,
    is_restricted_tuple,
    shift_slot,
)


class Status(str, enum.Enum):
    EQUAL_BY_VANISHING = "EqualByVanishing"
    EQUAL_BY_THEOREM = "EqualByTheorem"
    NOT_COVERED = "NotCovered"

    def __str__(self) -> str:
        return self.value


class Match(NamedTuple):
    j0: int
    alpha: Root
    good: bool

    def to_json(self) -> dict:
        return {"j0": self.j0, "alpha": self.alpha.tag, "good": self.good}


Witness = tuple[int, Root, str]


def _witness_json(ws: Iterable[Witness]) -> list[dict]:
    return [{"j0": j, "alpha": a.tag, "case": c} for j, a, c in ws]


@dataclass(frozen=True)
class ExtVerdict:
    status: Status
    matches: tuple[Match, ...]
    bad_forward: bool
    bad_backward: bool
    h1_dim: int
    forward_witnesses: tuple[Witness, ...] = ()
    backward_witnesses: tuple[Witness, ...] = ()
    x0_gate: bool = False
    twist_normalized: bool = True

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "matches": [m.to_json() for m in self.matches],
            "bad_forward": self.bad_forward,
            "bad_backward": self.bad_backward,
            "h1_dim": self.h1_dim,
            "bad_forward_cases": _witness_json(self.forward_witnesses),
            "bad_backward_cases": _witness_json(self.backward_witnesses),
            "x0_gate": self.x0_gate,
            "twist_normalized": self.twist_normalized,
        }


def h1_dimension(f: int, p: int) -> int:
    """``dim H^1(K_1/Z_1, F) = f dim F(a13)``, the latter recomputed each call."""
    return f * simple_char((1, 0, -1), p).dim


def _check(lam: WeightTuple, lam2: WeightTuple, p: int) -> None:
    if len(lam) != len(lam2):
        raise ValueError("weight tuples of different length")
    if not (is_restricted_tuple(lam, p) and is_restricted_tuple(lam2, p)):
        raise ValueError("weight tuples must be p-restricted")


def hom_obstruction(lam: WeightTuple, lam2: WeightTuple, p: int) -> list[Match]:
    """Every ``(j0, alpha)`` with ``F(lam2) = F(lam + alpha_{j0})``, tagged by
    whether ``(lam_{j0}, lam_{j0} + alpha)`` is a good pair."""
    _check(lam, lam2, p)
    out = []
    for j0 in range(len(lam)):
        for alpha in ROOTS_AND_ZERO:
            if serre_equiv(lam2, shift_slot(lam, j0, alpha), p):
                out.append(Match(j0, alpha, good_pair(lam[j0], lam[j0] + alpha.vector, p)))
    return out


def _x0_match(lam: WeightTuple, matches: Iterable[Match]) -> bool:
    # the socle bound is only an inclusion when lam_{j0} is a determinant power
    return any(lam[m.j0].sl3 == (0, 0) for m in matches)


def _x0_match_dual(lam: WeightTuple, lam2: WeightTuple, p: int) -> bool:
    """The same test for the dual pair, so that verdicts commute with duality."""
    d, d2 = dualize(lam2), dualize(lam)
    return _x0_match(d, hom_obstruction(d, d2, p))


def ext_compare(lam: WeightTuple, lam2: WeightTuple, p: int) -> ExtVerdict:
    """Verdict for ``tau = F(lam2)`` and ``sigma = F(lam)``."""
    lam = tuple(Weight(*w) for w in lam)
    lam2 = tuple(Weight(*w) for w in lam2)
    matches = tuple(hom_obstruction(lam, lam2, p))
    fwd = tuple(bad_pair_witnesses(lam, lam2, p))
    bwd = tuple(bad_pair_witnesses(lam2, lam, p))
    any_good = any(m.good for m in matches)
    x0_gate = not any_good and (_x0_match(lam, matches) or _x0_match_dual(lam, lam2, p))
    if not any_good and not x0_gate:
        status = Status.EQUAL_BY_VANISHING
    elif fwd or bwd:
        status = Status.NOT_COVERED
    else:
        status = Status.EQUAL_BY_THEOREM
    return ExtVerdict(
        status=status,
        matches=matches,
        bad_forward=bool(fwd),
        bad_backward=bool(bwd),
        h1_dim=h1_dimension(len(lam), p),
        forward_witnesses=fwd,
        backward_witnesses=bwd,
        x0_gate=x0_gate,
    )


# scans

MODES = ("shift", "exhaustive", "sample")


def restricted_tuples(p: int, f: int) -> Iterator[WeightTuple]:
    """Twist-normalized restricted tuples (last entry of each slot 0), in
    lexicographic order of the ``SL3`` coordinates."""
    slots = [Weight(x + y, y, 0) for x in range(p) for y in range(p)]
    return itertools.product(slots, repeat=f)


def shift_pairs(p: int, f: int) -> list[tuple[WeightTuple, WeightTuple]]:
    """Pairs ``(lam, F(lam + alpha_{j0}))`` with ``lam`` normalized and the
    shifted weight again a Serre weight; the second entry is canonical."""
    out = set()
    for lam in restricted_tuples(p, f):
        for j0 in range(f):
            for alpha in ROOTS_AND_ZERO:
                try:
                    out.add((lam, canonical_tuple(shift_slot(lam, j0, alpha), p)))
                except ValueError:
                    continue
    return sorted(out)


@dataclass
class ScanConfig:
    p: int
    f: int
    mode: str = "shift"
    seed: int = 0
    samples: int = 1000
    max_pairs: int = 500_000
    jobs: int = 1


@dataclass
class ScanResult:
    config: ScanConfig
    records: list[dict] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Status}
        for r in self.records:
            out[r["status"]] += 1
        return out

    def to_json(self) -> dict:
        c = self.config
        return {
            "p": c.p,
            "f": c.f,
            "mode": c.mode,
            "seed": c.seed,
            "total": len(self.records),
            "counts": self.counts,
            "pairs": self.records,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)


def _pairs(cfg: ScanConfig) -> list[tuple[WeightTuple, WeightTuple]]:
    n = cfg.p ** (2 * cfg.f)
    if cfg.mode == "shift":
        if n * 7 * cfg.f > cfg.max_pairs:
            raise ValueError(f"scan of about {n * 7 * cfg.f} pairs exceeds max_pairs={cfg.max_pairs}")
        return shift_pairs(cfg.p, cfg.f)
    if cfg.mode == "exhaustive":
        if n * n > cfg.max_pairs:
            raise ValueError(f"exhaustive scan of {n * n} pairs exceeds max_pairs={cfg.max_pairs}")
        tuples = list(restricted_tuples(cfg.p, cfg.f))
        return [(a, b) for a in tuples for b in tuples]
    if cfg.mode == "sample":
        if cfg.samples > cfg.max_pairs:
            raise ValueError(f"{cfg.samples} samples exceed max_pairs={cfg.max_pairs}")
        rng = random.Random(cfg.seed)
        tuples = list(restricted_tuples(cfg.p, cfg.f))
        return [(rng.choice(tuples), rng.choice(tuples)) for _ in range(cfg.samples)]
    raise ValueError(f"unknown scan mode {cfg.mode!r}")


def _record(args) -> dict:
    lam, lam2, p = args
    v = ext_compare(lam, lam2, p)
    rec = {"lambda": format_tuple(lam), "lambda_prime": format_tuple(lam2)}
    rec.update(v.to_json())
    return rec


def scan(cfg: ScanConfig) -> ScanResult:
    """Evaluate ``ext_compare`` over a family of pairs.

    Records come back in the order of the (deterministic) pair list, so the
    output does not depend on ``jobs``.
    """
    pairs = _pairs(cfg)
    work = [(a, b, cfg.p) for a, b in pairs]
    if cfg.jobs > 1 and len(work) > 1:
        chunk = max(1, len(work) // (cfg.jobs * 8))
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            records = list(ex.map(_record, work, chunksize=chunk))
    else:
        records = [_record(w) for w in work]
    return ScanResult(cfg, records)
