"""Formal characters of GL3-modules.

Weyl characters come from Kostant's multiplicity formula.  Simple and tilting
characters of restricted (and slightly larger) weights are short integer
combinations of Weyl characters.  Semistandard tableaux give an independent
count of Weyl weight multiplicities.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from functools import lru_cache
from typing import Iterable, Sequence

from gl3ext.alcoves import TILTING_DOMAIN, Region, classify_alcove
from gl3ext.weights import RHO, ROOTS, S3, Root, Weight, reflect


class Character(Mapping):
    """An element of the character ring: a finitely supported map
    ``Weight -> int``.  Zero multiplicities are never stored."""

    __slots__ = ("_d", "_hash")

    def __init__(self, data: Mapping | Iterable | None = None):
        d: dict[Weight, int] = {}
        if data is not None:
            items = data.items() if isinstance(data, Mapping) else data
            for w, m in items:
                w = Weight(*w)
                d[w] = d.get(w, 0) + m
        self._d = {w: m for w, m in d.items() if m}
        self._hash = None

    def __getitem__(self, w) -> int:
        return self._d[w]

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def mult(self, w: Sequence[int]) -> int:
        return self._d.get(Weight(*w), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Character):
            return self._d == other._d
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __add__(self, other: Character) -> Character:
        d = dict(self._d)
        for w, m in other._d.items():
            d[w] = d.get(w, 0) + m
        return Character(d)

    def __neg__(self) -> Character:
        return Character({w: -m for w, m in self._d.items()})

    def __sub__(self, other: Character) -> Character:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Character({w: other * m for w, m in self._d.items()})
        if isinstance(other, Character):
            return char_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def translate(self, v: Sequence[int]) -> Character:
        return Character({w + v: m for w, m in self._d.items()})

    @property
    def dim(self) -> int:
        return sum(self._d.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._d.values())

    def is_weyl_symmetric(self) -> bool:
        return all(self.mult(s.act(w)) == m for w, m in self._d.items() for s in S3)

    def to_json(self) -> list[dict]:
        return [{"weight": str(w), "mult": m} for w, m in sorted(self._d.items())]

    def __repr__(self) -> str:
        inner = ", ".join(f"({w}): {m}" for w, m in sorted(self._d.items()))
        return f"Character({{{inner}}})"


ZERO_CHAR = Character()


def kostant_partition(mu: Sequence[int]) -> int:
    """Number of ways to write ``mu`` as a sum of positive roots."""
    a, b, c = mu
    if a + b + c != 0:
        return 0
    n1, n2 = a, -c
    if n1 < 0 or n2 < 0:
        return 0
    return min(n1, n2) + 1


def weyl_mult(lam: Sequence[int], nu: Sequence[int]) -> int:
    """``dim V(lam)_nu`` by Kostant's alternating sum over S3."""
    lam = Weight(*lam)
    if not lam.is_dominant:
        return 0
    shifted = lam + RHO
    target = Weight(*nu) + RHO
    return sum(w.sign * kostant_partition(w.act(shifted) - target) for w in S3)


def weyl_dim(lam: Sequence[int]) -> int:
    lam = Weight(*lam)
    if not lam.is_dominant:
        return 0
    x, y = lam.sl3
    return (x + 1) * (y + 1) * (x + y + 2) // 2


def weight_box(lam: Sequence[int]) -> Iterator[Weight]:
    """Weights with the coordinate sum of ``lam`` and entries in ``[lam_3, lam_1]``."""
    a, b, c = lam
    s = a + b + c
    for x in range(c, a + 1):
        for y in range(c, a + 1):
            z = s - x - y
            if c <= z <= a:
                yield Weight(x, y, z)


@lru_cache(maxsize=None)
def _weyl_char_normalized(x: int, y: int) -> Character:
    lam = Weight(x + y, y, 0)
    return Character((nu, weyl_mult(lam, nu)) for nu in weight_box(lam))


def weyl_char(lam: Sequence[int]) -> Character:
    lam = Weight(*lam)
    if not lam.is_dominant:
        return ZERO_CHAR
    x, y = lam.sl3
    base = _weyl_char_normalized(x, y)
    if lam.c == 0:
        return base
    return base.translate((lam.c, lam.c, lam.c))


def simple_char(lam: Sequence[int], p: int) -> Character:
    """Character of ``L(lam)`` for restricted ``lam`` (zero if non-dominant)."""
    lam = Weight(*lam)
    if not lam.is_dominant:
        return ZERO_CHAR
    region = classify_alcove(lam, p)
    if not region.restricted:
        raise ValueError(f"{lam} is not {p}-restricted")
    if region is Region.C2:
        return weyl_char(lam) - weyl_char(reflect("s2", lam, p))
    return weyl_char(lam)


def tilting_weyl_factors(lam: Sequence[int], p: int) -> list[Weight]:
    """Highest weights of a Weyl filtration of ``T(lam)`` (non-dominant ones
    are kept; their Weyl characters vanish)."""
    lam = Weight(*lam)
    region = classify_alcove(lam, p)
    if region not in TILTING_DOMAIN:
        raise ValueError(f"{lam} lies in {region}, outside the tilting domain")
    a12, a23, a13 = Root.A12.vector, Root.A23.vector, Root.A13.vector
    if region in (Region.C1, Region.C1_2, Region.C2_3):
        return [lam]
    if region is Region.C2:
        return [lam, reflect("s2", lam, p)]
    if region is Region.C3:
        return [lam, reflect("s3", lam, p)]
    if region is Region.C3p:
        return [lam, reflect("s3'", lam, p)]
    sl3 = lam.sl3
    if sl3 == (p, p - 1):
        return [lam, lam - a12, lam - a13]
    if sl3 == (p - 1, p):
        return [lam, lam - a23, lam - a13]
    # (p, p): the six-term row
    return [lam - a13 + r.vector for r in ROOTS]


def tilting_char(lam: Sequence[int], p: int) -> Character:
    lam = Weight(*lam)
    if not lam.is_dominant:
        return ZERO_CHAR
    out = ZERO_CHAR
    for w in tilting_weyl_factors(lam, p):
        out = out + weyl_char(w)
    return out


def char_mul(a: Character, b: Character) -> Character:
    d: dict[Weight, int] = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = w1 + w2
            d[w] = d.get(w, 0) + m1 * m2
    return Character(d)


def _peel_key(w: Weight) -> tuple:
    return (w.height, w)


def decompose_weyl(c: Character) -> list[tuple[Weight, int]]:
    """Write ``c`` as an integer combination of Weyl characters.

    Highest weights are peeled in decreasing order of ``(height, weight)``;
    the result is listed in that order.
    """
    out = []
    rest = c
    while rest:
        top = max(rest, key=_peel_key)
        if not top.is_dominant:
            raise ValueError(f"not a character-ring element: top weight {top} is not dominant")
        m = rest[top]
        out.append((top, m))
        rest = rest - m * weyl_char(top)
    return out


# semistandard tableaux


def iter_ssyt(shape: Sequence[int], content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux with at most three rows and entries in {1, 2, 3}.

    A tableau is built from the chain of shapes occupied by entries ``<= 1``
    and ``<= 2``; each step must add a horizontal strip.
    """
    r1, r2, r3 = shape
    c1, c2, c3 = content
    if r1 + r2 + r3 != c1 + c2 + c3 or min(c1, c2, c3, r3) < 0 or not r1 >= r2 >= r3:
        return
    # entries equal to 1 form the first c1 cells of row 1
    k = c1
    if k > r1:
        return
    # shape (m1, m2) of entries <= 2: horizontal strip over (k) and under (r1, r2, r3)
    for m2 in range(max(r3, 0), min(r2, k) + 1):
        m1 = c1 + c2 - m2
        if not (max(r2, k) <= m1 <= r1):
            continue
        rows = (
            (1,) * k + (2,) * (m1 - k) + (3,) * (r1 - m1),
            (2,) * m2 + (3,) * (r2 - m2),
            (3,) * r3,
        )
        if _is_semistandard(rows):
            yield rows


def _is_semistandard(rows) -> bool:
    for row in rows:
        if any(x > y for x, y in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(x >= y for x, y in zip(upper, lower)):
            return False
    return True


def ssyt_count(lam: Sequence[int], nu: Sequence[int]) -> int:
    """Kostka number ``K_{lam, nu}`` after a common shift making both
    non-negative."""
    lam, nu = Weight(*lam), Weight(*nu)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    if sum(lam) != sum(nu):
        return 0
    shift = -min(lam.c, *nu)
    shift = max(shift, 0)
    return sum(1 for _ in iter_ssyt(lam + (shift,) * 3, nu + (shift,) * 3))


def summand_char(kind: str, w: Sequence[int], p: int) -> Character:
    if kind == "L":
        return simple_char(w, p)
    if kind == "T":
        return tilting_char(w, p)
    if kind == "V":
        return weyl_char(w)
    raise ValueError(f"unknown module kind {kind!r}")

