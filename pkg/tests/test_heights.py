import math

import pytest

from edsf import (
    RationalPoint,
    canonical_height_doubling,
    canonical_height_eds,
    degree_ratio,
    make_curve,
    naive_height,
    scalar_mul,
)
from edsf.errors import IdentityHasNoHeight, TorsionPoint
from edsf.heights import _canonical_height_numerator, log_int

IDS = ["E1p", "E1", "E2p", "E2", "ex3", "E3"]


def test_log_int():
    assert log_int(1) == 0.0
    big = 3 ** 100000
    assert log_int(big) == pytest.approx(100000 * math.log(3), rel=1e-14)
    with pytest.raises(ValueError):
        log_int(0)


def test_naive_height_examples(ex3):
    c, p = ex3
    assert naive_height(c, p) == pytest.approx(math.log(2))
    assert naive_height(c, scalar_mul(c, 3, p)) == pytest.approx(math.log(9))
    c2 = make_curve(0, 0, 0, -9, 9)
    assert naive_height(c2, RationalPoint(1, 1)) == 0.0
    with pytest.raises(IdentityHasNoHeight):
        naive_height(c, RationalPoint())


def test_torsion_rejected():
    c = make_curve(0, 0, 0, -1, 0)
    with pytest.raises(TorsionPoint):
        canonical_height_doubling(c, RationalPoint(0, 0))
    with pytest.raises(TorsionPoint):
        canonical_height_eds(c, RationalPoint(0, 0))


def test_doubling_shape(ex3):
    c, p = ex3
    h = canonical_height_doubling(c, p)
    assert h.value > 0
    assert h.value == h.approximants[-1][1]
    levels = [k for k, _ in h.approximants]
    assert levels == list(range(len(levels)))
    assert h.error_bound < 1e-4


def test_no_accidental_early_stop(registry):
    # h(P) = h([2]P) = 0 here; stopping on a zero difference would report 0
    rec = registry.get("E2p")
    h = canonical_height_doubling(rec.curve, rec.point)
    assert h.approximants[0][1] == h.approximants[1][1] == 0.0
    assert h.value > 0.16


def test_eds_estimator_examples(ex3):
    c, p = ex3
    h = canonical_height_eds(c, p, m=3, k_max=2)
    assert h.approximants[0] == (0, 0.0)
    assert h.approximants[2][1] == pytest.approx(math.log(10593 ** 2) / 81)


@pytest.mark.parametrize("rid", IDS)
def test_cross_estimator_agreement(registry, rid):
    rec = registry.get(rid)
    a = canonical_height_doubling(rec.curve, rec.point)
    for m, k in ((2, 8), (3, 5)):
        b = canonical_height_eds(rec.curve, rec.point, m, k)
        assert abs(a.value - b.value) <= a.error_bound + b.error_bound
    c = _canonical_height_numerator(rec.curve, rec.point, 2, 8)
    assert abs(a.value - c.value) <= a.error_bound + c.error_bound


@pytest.mark.parametrize("rid", IDS)
def test_quadraticity(registry, rid):
    rec = registry.get(rid)
    h = canonical_height_doubling(rec.curve, rec.point)
    for n in (2, 3, 5):
        hn = canonical_height_doubling(rec.curve, scalar_mul(rec.curve, n, rec.point))
        assert abs(hn.value - n * n * h.value) <= hn.error_bound + n * n * h.error_bound


@pytest.mark.parametrize("rid", IDS)
def test_error_bound_decreasing(registry, rid):
    rec = registry.get(rid)
    bounds = [canonical_height_doubling(rec.curve, rec.point, k_max=k, tol=0).error_bound for k in range(2, 10)]
    assert all(b < a for a, b in zip(bounds, bounds[1:]))


def test_long_runs_agree(ex3):
    c, p = ex3
    full = canonical_height_doubling(c, p, k_max=11, tol=0)
    eds = canonical_height_eds(c, p, 2, 10)
    assert abs(full.value - eds.value) < 1e-5


@pytest.mark.parametrize("src,tgt,deg", [("E1p", "E1", 3), ("E2p", "E2", 7), ("E3p", "E3", 2)])
def test_degree_ratio(registry, src, tgt, deg):
    a, b = registry.get(src), registry.get(tgt)
    r = degree_ratio(a.curve, a.point, b.curve, b.point)
    assert abs(r - deg) / deg < 0.02
