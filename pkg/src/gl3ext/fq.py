"""Serre weights over F_q and eigencharacters of the diagonal torus.

A weight tuple ``mu`` defines the character ``chi_mu`` of the diagonal torus
of GL3(F_q).  Two tuples define the same character iff their difference lies
in ``(p - pi) X``, where ``pi`` shifts slots (``(pi c)_j = c_{j-1}``).
"""

from __future__ import annotations

import itertools
import math
from typing import NamedTuple, Sequence

from gl3ext.chars import simple_char, weight_box
from gl3ext.weights import (
    Weight,
    WeightTuple,
    format_tuple,
    is_restricted_tuple,
    same_up_to_twist,
    summed,
)


def serre_equiv(lam: WeightTuple, lam2: WeightTuple, p: int) -> bool:
    """``F(lam) = F(lam2)`` for restricted tuples."""
    return same_up_to_twist(lam, lam2, p)


def eigen_residues(mu: WeightTuple, p: int) -> tuple[int, int, int]:
    """Canonical form of ``chi_mu``: ``sum_j p^j mu_j`` reduced mod ``q-1``."""
    q = p ** len(mu)
    return tuple(x % (q - 1) for x in summed(mu, p))


def solve_p_minus_pi(d: Sequence[Sequence[int]], p: int) -> tuple[Weight, ...] | None:
    """Solve ``(p - pi) c = d`` over the integers, or return ``None``.

    ``c_j = sum_i p^{f-1-i} d_{j-i} / (q-1)`` componentwise.
    """
    f = len(d)
    q = p**f
    out = []
    for j in range(f):
        comps = []
        for k in range(3):
            num = sum(p ** (f - 1 - i) * d[(j - i) % f][k] for i in range(f))
            if num % (q - 1):
                return None
            comps.append(num // (q - 1))
        out.append(Weight(*comps))
    return tuple(out)


def apply_p_minus_pi(c: Sequence[Sequence[int]], p: int) -> WeightTuple:
    f = len(c)
    return tuple(p * Weight(*c[j]) - Weight(*c[(j - 1) % f]) for j in range(f))


def chi_equal(mu: WeightTuple, nu: WeightTuple, p: int) -> bool:
    """``chi_mu = chi_nu``, by comparing residues of summed weights."""
    if len(mu) != len(nu):
        raise ValueError("weight tuples of different length")
    return eigen_residues(mu, p) == eigen_residues(nu, p)


def chi_equal_lattice(mu: WeightTuple, nu: WeightTuple, p: int) -> bool:
    """``chi_mu = chi_nu``, by solving ``mu - nu = (p - pi) c`` for ``c``."""
    if len(mu) != len(nu):
        raise ValueError("weight tuples of different length")
    d = tuple(Weight(*a) - Weight(*b) for a, b in zip(mu, nu))
    c = solve_p_minus_pi(d, p)
    return c is not None and apply_p_minus_pi(c, p) == d


class SupportEntry(NamedTuple):
    nu: WeightTuple
    dims: tuple[int, ...]
    total: int

    def to_json(self) -> dict:
        return {"nu": format_tuple(self.nu), "dims": list(self.dims), "total": self.total}


def _c_bounds(lo: Sequence[int], hi: Sequence[int], p: int) -> list[range]:
    """Integer ranges for ``c`` given ``lo_j <= (p c - pi c)_j <= hi_j``.

    The inverse of ``p - pi`` has non-negative entries, so the bounds pass
    through it monotonically.
    """
    f = len(lo)
    q = p**f
    out = []
    for j in range(f):
        a = sum(p ** (f - 1 - i) * lo[(j - i) % f] for i in range(f))
        b = sum(p ** (f - 1 - i) * hi[(j - i) % f] for i in range(f))
        out.append(range(-((-a) // (q - 1)), b // (q - 1) + 1))
    return out


def _slot_dims(nu: WeightTuple, chars) -> tuple[int, ...]:
    return tuple(ch.mult(n) for ch, n in zip(chars, nu))


def eigenspace_support(
    lam: WeightTuple, mu: WeightTuple, p: int, c_range: range | None = None
) -> list[SupportEntry]:
    """All ``nu`` with ``chi_nu = chi_mu`` and ``L(lam)_nu != 0``.

    Candidates are ``nu = mu' - sum_j (d1_j a12 + d2_j a23)`` in slot ``j``
    with ``d = (p - pi) c``; ``mu'`` is ``mu`` moved by ``(p - pi)`` of a
    multiple of ``e_1`` so that its slot sums agree with those of ``lam``.
    By default each ``c_{k,j}`` runs over the exact range forced by the
    weight box of ``lam_j``; ``c_range`` imposes one fixed range instead.
    """
    lam = tuple(Weight(*w) for w in lam)
    mu = tuple(Weight(*w) for w in mu)
    f = len(lam)
    if len(mu) != f:
        raise ValueError("weight tuples of different length")
    if not is_restricted_tuple(lam, p):
        raise ValueError("lambda is not p-restricted")
    ds = tuple((sum(a) - sum(b), 0, 0) for a, b in zip(lam, mu))
    e = solve_p_minus_pi(ds, p)
    if e is None:
        return []
    base = tuple(m + s for m, s in zip(mu, apply_p_minus_pi(e, p)))
    chars = [simple_char(w, p) for w in lam]

    if c_range is None:
        lo1 = [base[j].a - lam[j].a for j in range(f)]
        hi1 = [base[j].a - lam[j].c for j in range(f)]
        lo2 = [lam[j].c - base[j].c for j in range(f)]
        hi2 = [lam[j].a - base[j].c for j in range(f)]
        r1, r2 = _c_bounds(lo1, hi1, p), _c_bounds(lo2, hi2, p)
    else:
        r1 = r2 = [c_range] * f

    out = []
    for c1 in itertools.product(*r1):
        d1 = [p * c1[j] - c1[(j - 1) % f] for j in range(f)]
        for c2 in itertools.product(*r2):
            d2 = [p * c2[j] - c2[(j - 1) % f] for j in range(f)]
            nu = tuple(
                Weight(b.a - d1[j], b.b + d1[j] - d2[j], b.c + d2[j]) for j, b in enumerate(base)
            )
            dims = _slot_dims(nu, chars)
            if all(dims):
                out.append(SupportEntry(nu, dims, math.prod(dims)))
    out.sort()
    return out


def eigenspace_support_bruteforce(lam: WeightTuple, mu: WeightTuple, p: int) -> list[SupportEntry]:
    """Oracle: filter the full product of per-slot supports by ``chi_equal``."""
    lam = tuple(Weight(*w) for w in lam)
    chars = [simple_char(w, p) for w in lam]
    supports = [[nu for nu in weight_box(w) if ch.mult(nu)] for w, ch in zip(lam, chars)]
    out = []
    target = eigen_residues(mu, p)
    for nu in itertools.product(*supports):
        if eigen_residues(nu, p) == target:
            dims = _slot_dims(nu, chars)
            out.append(SupportEntry(tuple(nu), dims, math.prod(dims)))
    out.sort()
    return out
