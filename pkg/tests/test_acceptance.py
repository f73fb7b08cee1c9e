"""Acceptance suite.  Each test carries ``@pytest.mark.criterion(n)``; the
conftest prints one PASS/FAIL line per criterion at the end of the run.

Run just this file with ``pytest tests/test_acceptance.py``.
"""

import itertools

import pytest

from gl3ext.alcoves import Region, classify_alcove, good_pair, in_C_alpha_j0, in_C_alpha_plus
from gl3ext.chars import (
    kostant_partition,
    simple_char,
    ssyt_count,
    weight_box,
    weyl_dim,
    weyl_mult,
)
from gl3ext.extcmp import ScanConfig, Status, ext_compare, h1_dimension, scan
from gl3ext.fq import eigenspace_support, eigenspace_support_bruteforce
from gl3ext.tensor import socle_from_summands, socle_tensor, summands_char, tensor_simple_alpha13
from gl3ext.weights import (
    POSITIVE_AND_ZERO,
    POSITIVE_ROOTS,
    RHO,
    S3,
    Root,
    Weight,
    dualize,
    reflect,
    shift_slot,
)


def restricted(p):
    return [Weight(x + y, y, 0) for x in range(p) for y in range(p)]


def dominant_up_to(bound):
    return [Weight(a, b, 0) for a in range(bound + 1) for b in range(a + 1)]


# 1, 2: Weyl multiplicities


@pytest.mark.criterion(1)
@pytest.mark.parametrize("p", [5, 7])
def test_kostant_equals_kostka(p):
    bad = [
        (lam, nu)
        for lam in dominant_up_to(3 * p)
        for nu in weight_box(lam)
        if weyl_mult(lam, nu) != ssyt_count(lam, nu)
    ]
    assert not bad, bad[:5]


@pytest.mark.criterion(2)
@pytest.mark.parametrize("p", [5, 7])
def test_weyl_dimension_sum(p):
    bad = [
        lam
        for lam in dominant_up_to(3 * p)
        if weyl_dim(lam) != sum(weyl_mult(lam, nu) for nu in weight_box(lam))
    ]
    assert not bad, bad[:5]


# 3: tensor identity


@pytest.mark.criterion(3)
@pytest.mark.parametrize("p", [5, 7, 11])
def test_tensor_character_identity(p):
    adj = simple_char((1, 0, -1), p)
    bad = [
        lam
        for lam in restricted(p)
        if summands_char(tensor_simple_alpha13(lam, p), p) != simple_char(lam, p) * adj
    ]
    assert not bad, bad[:5]


# 4: good pairs


@pytest.mark.criterion(4)
@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_good_pair_iff_C_alpha_plus(p):
    bad = []
    for lam in restricted(p):
        for alpha in POSITIVE_AND_ZERO:
            mu = lam + alpha.vector
            fwd, bwd = good_pair(lam, mu, p), good_pair(mu, lam, p)
            if not fwd == bwd == in_C_alpha_plus(lam, alpha, p):
                bad.append((lam, alpha))
    assert not bad, bad[:5]


# 5: Y isomorphism


def _y_qualifies(lam, alpha, p):
    x, y = lam.sl3
    if not in_C_alpha_plus(lam, alpha, p):
        return False
    if alpha is not Root.A13 and x + y == p - 2:
        return False
    if alpha is Root.ZERO and not (x <= p - 2 and y <= p - 2):
        return False
    return True


@pytest.mark.criterion(5)
@pytest.mark.parametrize("p", [5, 7, 11])
def test_y_isomorphism_dimensions(p):
    bad, n = [], 0
    for lam in restricted(p):
        ch = simple_char(lam, p)
        for alpha in POSITIVE_AND_ZERO:
            if _y_qualifies(lam, alpha, p):
                nu = lam + alpha.vector - (p - 1) * RHO
                n += 1
                if ch.mult(nu) != ch.mult(nu + RHO):
                    bad.append((lam, alpha))
    assert n > 0 and not bad, bad[:5]


def _table_row(top, nu):
    return tuple(
        kostant_partition(w.act(top + RHO) - (nu + RHO))
        - kostant_partition(w.act(top + RHO) - (nu + 2 * RHO))
        for w in S3
    )


@pytest.mark.criterion(5)
@pytest.mark.parametrize("p", [5, 7, 11])
def test_partition_difference_table(p):
    rows = 0
    for lam in restricted(p):
        x, y = lam.sl3
        if not (in_C_alpha_plus(lam, Root.A12, p) and x + y >= p - 1):
            continue
        nu = lam + Root.A12.vector - (p - 1) * RHO
        expected = (1, 1, int(y <= p - 2), 0, 0, 0)
        assert _table_row(lam, nu) == expected, lam
        # second row: s2(lam) against nu (see the decisions ledger on w0)
        assert _table_row(reflect("s2", lam, p), nu) == expected, lam
        rows += 1
    assert rows > 0


# 6: socles


@pytest.mark.criterion(6)
@pytest.mark.parametrize("p,f", [(5, 1), (7, 1), (5, 2), (7, 2)])
def test_socle_cross_check(p, f):
    bad = []
    for lam in itertools.product(restricted(p), repeat=f):
        for j0 in range(f):
            if lam[j0].sl3 == (0, 0):
                continue
            rep = socle_tensor(lam, j0, p)
            if not rep.exact or socle_from_summands(lam, j0, p) != rep.constituents:
                bad.append((lam, j0))
    assert not bad, bad[:5]


# 7: eigenspace supports


@pytest.mark.criterion(7)
@pytest.mark.parametrize("f", [1, 2])
def test_character_weight_same(f):
    p = 5
    bad, n = [], 0
    for lam in itertools.product(restricted(p), repeat=f):
        for j0 in range(f):
            for alpha in POSITIVE_AND_ZERO:
                if not in_C_alpha_j0(lam, alpha, j0, p):
                    continue
                for beta in POSITIVE_ROOTS:
                    mu = shift_slot(shift_slot(lam, j0, alpha), j0, beta)
                    pred = tuple(w - (p - 1) * RHO for w in mu)
                    n += 1
                    if any(e.nu != pred for e in eigenspace_support(lam, mu, p)):
                        bad.append((lam, j0, alpha, beta))
    assert n > 0 and not bad, bad[:5]


@pytest.mark.criterion(7)
def test_character_weight_different():
    p, f = 5, 2
    bad, n = [], 0
    for lam in itertools.product(restricted(p), repeat=f):
        for j0, j1 in ((0, 1), (1, 0)):
            for alpha in POSITIVE_ROOTS:
                if not in_C_alpha_j0(lam, alpha, j0, p):
                    continue
                pinned = lam[j0] + alpha.vector - (p - 1) * RHO
                for beta in POSITIVE_ROOTS:
                    mu = shift_slot(shift_slot(lam, j0, alpha), j1, beta)
                    n += 1
                    if any(e.nu[j0] != pinned for e in eigenspace_support(lam, mu, p)):
                        bad.append((lam, j0, alpha, beta))
    assert n > 0 and not bad, bad[:5]


@pytest.mark.criterion(7)
@pytest.mark.parametrize("p", [5, 7])
def test_c_bound_completeness(p):
    bad = []
    for lam in restricted(p):
        lo, hi = lam.c - p, lam.a + p
        for m1, m2 in itertools.product(range(lo, hi + 1), repeat=2):
            for t in (0, 1):
                mu = (Weight(m1, m2, sum(lam) - m1 - m2 + t),)
                if eigenspace_support((lam,), mu, p) != eigenspace_support_bruteforce((lam,), mu, p):
                    bad.append((lam, mu))
    assert not bad, bad[:5]


@pytest.mark.criterion(7)
@pytest.mark.parametrize("p", [5, 7])
def test_fixed_c_range_complete_near_lambda(p):
    """The fixed range c in [-3, 3] suffices for mu = lam + alpha + beta."""
    shifts = [r.vector for r in POSITIVE_AND_ZERO]
    bad = []
    for lam in restricted(p):
        for a, b in itertools.product(shifts, repeat=2):
            mu = (lam + a + b,)
            if eigenspace_support((lam,), mu, p, range(-3, 4)) != eigenspace_support_bruteforce(
                (lam,), mu, p
            ):
                bad.append((lam, mu))
    assert not bad, bad[:5]


# 8: H^1


@pytest.mark.criterion(8)
@pytest.mark.parametrize("p", [5, 7, 11])
def test_h1_dimension(p):
    assert simple_char((1, 0, -1), p).dim == 8
    for f in range(1, 5):
        assert h1_dimension(f, p) == 8 * f
        lam = tuple(Weight(1, 0, 0) for _ in range(f))
        assert ext_compare(lam, lam, p).h1_dim == 8 * f


# 9: verdict engine


def _all_weights_mod_twist(p):
    return [Weight(x + y + c, y + c, c) for x in range(p) for y in range(p) for c in range(p - 1)]


@pytest.mark.criterion(9)
def test_duality_invariance_exhaustive_f1():
    p = 5
    ws = _all_weights_mod_twist(p)
    bad = []
    for a in ws:
        for b in ws:
            lam, lam2 = (a,), (b,)
            if ext_compare(lam, lam2, p).status != ext_compare(dualize(lam2), dualize(lam), p).status:
                bad.append((a, b))
    assert not bad, bad[:5]


@pytest.mark.criterion(9)
@pytest.mark.parametrize("f", [1, 2])
def test_x0_gate_never_claims_vanishing(f):
    p = 5
    res = scan(ScanConfig(p=p, f=f, mode="shift"))
    assert res.records
    for rec in res.records:
        if rec["status"] != Status.EQUAL_BY_VANISHING.value:
            continue
        lam = [tuple(map(int, s.split(","))) for s in rec["lambda"].split(";")]
        for m in rec["matches"]:
            assert Weight(*lam[m["j0"]]).sl3 != (0, 0), rec


@pytest.mark.criterion(9)
@pytest.mark.parametrize("mode,f", [("shift", 1), ("shift", 2), ("sample", 2)])
def test_scan_deterministic_across_jobs(mode, f):
    outs = {
        jobs: scan(ScanConfig(p=5, f=f, mode=mode, seed=7, samples=300, jobs=jobs)).dumps()
        for jobs in (1, 3)
    }
    assert outs[1] == outs[3]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
