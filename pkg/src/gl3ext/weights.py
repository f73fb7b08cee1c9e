"""Weight lattice and root system of GL3 and of its restriction of scalars.

A weight is an integer triple.  A weight tuple (an element of the character
lattice of the f-fold product torus) is a plain ``tuple`` of weights indexed
by ``0, ..., f-1``; indices are taken mod f.  The prime p is passed
explicitly to every operation that needs it, and f is always the length of
the tuple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

WeightTuple = tuple["Weight", ...]


class Weight(NamedTuple):
    """A character ``(a, b, c)`` of the diagonal torus of GL3.

    Arithmetic is componentwise; ``+`` does *not* concatenate.
    """

    a: int
    b: int
    c: int

    def __add__(self, other):  # type: ignore[override]
        return Weight(self.a + other[0], self.b + other[1], self.c + other[2])

    def __sub__(self, other):
        return Weight(self.a - other[0], self.b - other[1], self.c - other[2])

    def __neg__(self):
        return Weight(-self.a, -self.b, -self.c)

    def __mul__(self, k):  # type: ignore[override]
        return Weight(k * self.a, k * self.b, k * self.c)

    __rmul__ = __mul__

    @property
    def sl3(self) -> tuple[int, int]:
        return (self.a - self.b, self.b - self.c)

    @property
    def height(self) -> int:
        """``lambda_1 - lambda_3``; strictly increases along positive roots."""
        return self.a - self.c

    @property
    def is_dominant(self) -> bool:
        return self.a >= self.b >= self.c

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"


ZERO = Weight(0, 0, 0)
DET = Weight(1, 1, 1)


class Root(enum.Enum):
    """Roots ``e_i - e_j`` of GL3, plus the zero weight as ``Root.ZERO``.

    ``Root.ZERO`` is not a root; it is included because most statements
    range over ``Phi u {0}``.
    """

    A12 = ("a12", 0, 1)
    A23 = ("a23", 1, 2)
    A13 = ("a13", 0, 2)
    A21 = ("-a12", 1, 0)
    A32 = ("-a23", 2, 1)
    A31 = ("-a13", 2, 0)
    ZERO = ("0", None, None)

    def __init__(self, tag: str, i: int | None, j: int | None):
        self.tag = tag
        v = [0, 0, 0]
        if i is not None:
            v[i] += 1
            v[j] -= 1
        self.vector = Weight(*v)

    @property
    def is_positive(self) -> bool:
        return self in POSITIVE_ROOTS

    @property
    def is_negative(self) -> bool:
        return self in NEGATIVE_ROOTS

    def __neg__(self) -> Root:
        return _BY_VECTOR[-self.vector]

    @classmethod
    def from_tag(cls, tag: str) -> Root:
        tag = tag.replace("−", "-")
        for r in cls:
            if r.tag == tag:
                return r
        raise ValueError(f"unknown root tag {tag!r}")

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> Root:
        return _BY_VECTOR[Weight(*v)]

    def __str__(self) -> str:
        return self.tag


POSITIVE_ROOTS = (Root.A13, Root.A12, Root.A23)
NEGATIVE_ROOTS = (Root.A31, Root.A21, Root.A32)
ROOTS = POSITIVE_ROOTS + NEGATIVE_ROOTS
ROOTS_AND_ZERO = ROOTS + (Root.ZERO,)
POSITIVE_AND_ZERO = POSITIVE_ROOTS + (Root.ZERO,)
_BY_VECTOR = {r.vector: r for r in Root}

RHO = Root.A13.vector


@dataclass(frozen=True)
class WeylElement:
    """A permutation of the three coordinates.

    ``perm[i]`` is the image of position ``i``; the element moves the
    ``i``-th coordinate of a weight to position ``perm[i]``.
    """

    name: str
    perm: tuple[int, int, int]

    @property
    def sign(self) -> int:
        inversions = sum(
            1 for i in range(3) for j in range(i + 1, 3) if self.perm[i] > self.perm[j]
        )
        return -1 if inversions % 2 else 1

    def act(self, w: Sequence[int]) -> Weight:
        out = [0, 0, 0]
        for i, x in enumerate(w):
            out[self.perm[i]] = x
        return Weight(*out)

    def __mul__(self, other: WeylElement) -> WeylElement:
        perm = tuple(self.perm[other.perm[i]] for i in range(3))
        return _BY_PERM[perm]

    def act_on_root(self, r: Root) -> Root:
        return Root.from_vector(self.act(r.vector))


S3 = (
    WeylElement("id", (0, 1, 2)),
    WeylElement("(12)", (1, 0, 2)),
    WeylElement("(23)", (0, 2, 1)),
    WeylElement("(123)", (1, 2, 0)),
    WeylElement("(132)", (2, 0, 1)),
    WeylElement("(13)", (2, 1, 0)),
)
_BY_PERM = {w.perm: w for w in S3}
W0 = S3[5]


def pairing(lam: Sequence[int], alpha: Root) -> int:
    """``<lam, alpha^vee>``, i.e. ``lam_i - lam_j`` for ``alpha = e_i - e_j``."""
    if alpha is Root.ZERO:
        raise ValueError("pairing is only defined for roots")
    v = alpha.vector
    return sum(x * y for x, y in zip(lam, v))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu - lam`` is a non-negative combination of a12 and a23."""
    d = Weight(*mu) - Weight(*lam)
    return d.a + d.b + d.c == 0 and d.a >= 0 and d.a + d.b >= 0


def is_p_restricted(lam: Sequence[int], p: int, n: int = 1) -> bool:
    x, y = Weight(*lam).sl3
    bound = p**n - 1
    return 0 <= x <= bound and 0 <= y <= bound


def reflect(kind: str, lam: Sequence[int], p: int) -> Weight:
    """The affine reflections ``s2``, ``s3`` and ``s3'``."""
    a, b, c = lam
    if kind == "s2":
        return Weight(c + p - 2, b, a - p + 2)
    if kind == "s3":
        return Weight(b + p - 1, a - p + 1, c)
    if kind in ("s3'", "s3p"):
        return Weight(a, c + p - 1, b - p + 1)
    raise ValueError(f"unknown reflection {kind!r}")


def weyl_act(w: WeylElement, lam: Sequence[int]) -> Weight:
    return w.act(lam)


def sl3_restrict(lam: Sequence[int]) -> tuple[int, int]:
    return Weight(*lam).sl3


def normalize(lam: Sequence[int]) -> Weight:
    """Twist ``lam`` by a power of the determinant so that its last entry is 0."""
    w = Weight(*lam)
    return w - w.c * DET


def dual(lam: Sequence[int]) -> Weight:
    """``-w0 lam``."""
    a, b, c = lam
    return Weight(-c, -b, -a)


def dualize(lam: Sequence[Sequence[int]]) -> WeightTuple:
    return tuple(dual(x) for x in lam)


# weight tuples


def as_tuple(lam) -> WeightTuple:
    """Coerce a single weight or an iterable of weights to a weight tuple."""
    if isinstance(lam, Weight):
        return (lam,)
    items = list(lam)
    if items and isinstance(items[0], int):
        return (Weight(*items),)
    return tuple(Weight(*x) for x in items)


def shift_slot(lam: WeightTuple, j: int, alpha: Root | Sequence[int]) -> WeightTuple:
    """``lam + alpha_j``: add ``alpha`` in slot ``j`` (mod f)."""
    v = alpha.vector if isinstance(alpha, Root) else Weight(*alpha)
    j %= len(lam)
    return lam[:j] + (lam[j] + v,) + lam[j + 1 :]


def replace_slot(lam: WeightTuple, j: int, w: Sequence[int]) -> WeightTuple:
    j %= len(lam)
    return lam[:j] + (Weight(*w),) + lam[j + 1 :]


def summed(lam: WeightTuple, p: int) -> Weight:
    """``sum_j p^j lam_j``."""
    out = ZERO
    for j, w in enumerate(lam):
        out = out + (p**j) * w
    return out


def is_restricted_tuple(lam: WeightTuple, p: int) -> bool:
    return all(is_p_restricted(w, p) for w in lam)


def parse_weight(text: str) -> Weight:
    parts = [s.strip() for s in text.replace("−", "-").split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected a weight 'a,b,c', got {text!r}")
    try:
        return Weight(*(int(s) for s in parts))
    except ValueError:
        raise ValueError(f"non-integer entry in weight {text!r}") from None


def parse_tuple(text: str) -> WeightTuple:
    return tuple(parse_weight(s) for s in text.split(";"))


def format_tuple(lam: WeightTuple) -> str:
    return ";".join(str(w) for w in lam)


def same_up_to_twist(lam: WeightTuple, mu: WeightTuple, p: int) -> bool:
    """True iff ``sum_j p^j (lam_j - mu_j)`` lies in ``(q-1) X_0(T)``.

    For p-restricted tuples this is exactly ``F(lam) = F(mu)``.  The test is
    applied to unrestricted tuples as well, where it compares the summed
    weights modulo twist by powers of the determinant.
    """
    if len(lam) != len(mu):
        raise ValueError("weight tuples of different length")
    d = summed(lam, p) - summed(mu, p)
    q = p ** len(lam)
    return d.a == d.b == d.c and d.a % (q - 1) == 0
