"""Root-finding and closed-form approximations, and the r selection rules."""

import math
import random

import pytest

from kkbounds import (
    FaceVector,
    best_r,
    binom_real,
    binomial,
    bound_report,
    cascade_decompose,
    colorapprox_bound,
    flag_r,
    lovasz_bound,
    lovasz_x,
    noreasy_bound,
    shadow_bound,
    symmetric_chain,
    withoutr_bound,
)
from kkbounds.selftest import narrow_window_margin, shifted_root_margin

SLACK = 1e-9


def test_lovasz_x_integer_coincidences():
    assert lovasz_x(binomial(50, 10), 10) == 50.0
    assert lovasz_x(10, 3) == 5.0
    assert lovasz_x(1, 7) == 7.0


def test_lovasz_x_residual():
    x = lovasz_x(11, 3)
    assert 5.0 < x < 5.2
    assert abs(binom_real(x, 3) - 11) <= 11 * 1e-12


def test_lovasz_x_residual_sampled():
    rng = random.Random(987)
    for _ in range(300):
        k = rng.randint(1, 20)
        m = max(1, int(math.exp(rng.uniform(0.0, math.log(1e12)))))
        x = lovasz_x(m, k)
        assert x >= k - 1
        assert abs(binom_real(x, k) - m) <= max(1, m) * 1e-12


def test_lovasz_bound_values():
    assert lovasz_bound(10, 3, 2) == 10.0
    assert 10.5 < lovasz_bound(11, 3, 2) < 10.6  # below the exact bound of 12
    assert lovasz_bound(binomial(50, 10), 10, 7) == float(binomial(50, 7))


def test_withoutr_values():
    expected = math.sqrt(90) + 0.5
    assert abs(withoutr_bound(45, 2, 1) - expected) <= expected * 1e-12
    # direct evaluation; stays below lovasz_bound(10, 3, 2) = 10
    value = withoutr_bound(10, 3, 2)
    assert abs(value - 9.74552814451996) < 1e-9
    assert value < lovasz_bound(10, 3, 2)


def test_withoutr_at_m_one():
    for k in range(2, 8):
        for p in range(1, k):
            factk = math.factorial(k)
            expected = (
                factk ** (p / k)
                / math.factorial(p)
                * (1 + (k - p) / (2 * factk ** (1 / k))) ** p
            )
            assert abs(withoutr_bound(1, k, p) - expected) <= expected * 1e-12


def test_noreasy_values():
    assert abs(noreasy_bound(45, 2, 1) - math.sqrt(90)) <= math.sqrt(90) * 1e-12
    assert noreasy_bound(0, 5, 2) == 0.0
    m = binomial(50, 10)
    value = noreasy_bound(m, 10, 7)
    expected = math.factorial(10) ** 0.7 / math.factorial(7) * m**0.7
    assert abs(value - expected) <= expected * 1e-12
    assert value < lovasz_bound(m, 10, 7)


def test_bound_ranges_rejected():
    with pytest.raises(ValueError):
        lovasz_bound(10, 3, 3)
    with pytest.raises(ValueError):
        withoutr_bound(0, 3, 2)
    with pytest.raises(ValueError):
        withoutr_bound(10, 3, 0)
    with pytest.raises(ValueError):
        noreasy_bound(-1, 3, 2)
    with pytest.raises(ValueError):
        colorapprox_bound(10, 4, 2, 3)  # k > r


def test_symmetric_chain_values():
    chain = symmetric_chain(FaceVector((1, 10, 45, 120)))
    expected = (10.0, math.sqrt(90), 720 ** (1 / 3))
    for got, want in zip(chain.values, expected):
        assert abs(got - want) <= want * 1e-12
    assert chain.strictly_decreasing
    single = symmetric_chain(FaceVector((1, 7)))
    assert single.values == (7.0,)
    assert single.strictly_decreasing


def test_colorapprox_values():
    assert colorapprox_bound(9, 2, 1, 2) == 6.0
    assert colorapprox_bound(binomial(10, 2), 2, 1, 10) == 10.0
    assert abs(colorapprox_bound(12, 2, 1, 3) - 6.0) <= 6.0 * 1e-12
    assert colorapprox_bound(0, 3, 2, 5) == 0.0


def test_best_r_values():
    assert best_r(45, 2) == 10
    assert binomial(9, 2) + binomial(8, 1) == 44 < 45  # r = 9 just misses
    assert best_r(11, 3) == 5
    boundary = binomial(50, 10) + binomial(49, 9)
    assert best_r(boundary, 10) == 50
    assert best_r(boundary + 1, 10) == 51


def test_best_r_minimality_bruteforce():
    for k in range(1, 5):
        for m in range(1, 400):
            r = best_r(m, k)
            assert r >= k
            assert m <= binomial(r, k) + binomial(r - 1, k - 1)
            if r > k:
                assert m > binomial(r - 1, k) + binomial(r - 2, k - 1)


def test_best_r_is_near_leading_cascade_index():
    for k in range(2, 7):
        for m in range(1, 5001):
            n_k = cascade_decompose(m, k).terms[0][0]
            assert best_r(m, k) in (n_k, n_k + 1)


def test_flag_r_values():
    assert flag_r(50, 3) == 7
    assert flag_r(binomial(51, 10) - 1, 10) == 50
    for k in (1, 2, 6):
        assert flag_r(1, k) == k


def test_flag_r_minimality_bruteforce():
    for k in range(1, 5):
        for m in range(1, 400):
            r = flag_r(m, k)
            assert r >= k
            assert m < binomial(r + 1, k)
            if r > k:
                assert m >= binomial(r, k)


def test_ordering_chain_sampled():
    rng = random.Random(55)
    for _ in range(300):
        k = rng.randint(2, 12)
        p = rng.randint(1, k - 1)
        m = max(1, int(math.exp(rng.uniform(0.0, math.log(1e8)))))
        nr = noreasy_bound(m, k, p)
        wr = withoutr_bound(m, k, p)
        lv = lovasz_bound(m, k, p)
        kk = shadow_bound(m, k, p)
        assert nr < wr * (1 + SLACK)
        assert wr < lv * (1 + SLACK)
        assert lv <= kk * (1 + SLACK)


def test_colorapprox_dominates_lovasz_when_best_r_applies():
    # the colored bound beats the root bound whenever r = n_k works,
    # with exact coincidence at full levels m = C(r, k)
    for r, k in ((6, 3), (9, 4), (12, 5), (10, 2)):
        base = binomial(r, k)
        top = base + binomial(r - 1, k - 1)
        for m in (base, base + 1, (base + top) // 2, top):
            if best_r(m, k) != r:
                continue
            for p in range(1, k):
                cb = colorapprox_bound(m, k, p, r)
                lv = lovasz_bound(m, k, p)
                assert cb >= lv * (1 - SLACK)
                if m == base:
                    assert cb == lv


def test_window_inequality_spot():
    # k=3, p=1, x=3: (3*2*1)^(1/3) < 3 - 1
    assert narrow_window_margin(3.0, 3, 1) > 0
    assert abs(narrow_window_margin(3.0, 3, 1) - (2 - 6 ** (1 / 3))) < 1e-12


def test_shift_inequality_spot():
    # p=2, x=2, c=1: sqrt(3*2) > sqrt(2*1) + 1
    assert shifted_root_margin(2.0, 2, 1.0) > 0
    assert abs(shifted_root_margin(2.0, 2, 1.0) - (math.sqrt(6) - math.sqrt(2) - 1)) < 1e-12


def test_shift_inequality_is_equality_at_p_one():
    # single factor: both sides are x + c, so strictness needs p >= 2
    assert shifted_root_margin(5.0, 1, 2.0) == pytest.approx(0.0, abs=1e-12)


def test_bound_report_fields():
    report = bound_report(11, 3, 2)
    assert report.kk_exact == 12
    assert report.withr_r == 5 and report.flag_r == 5
    assert report.noreasy < report.withoutr < report.lovasz <= report.kk_exact
    fixed = bound_report(11, 3, 2, r=7)
    assert fixed.withr_r == 7
    assert fixed.flag_r == 5
    with pytest.raises(ValueError):
        bound_report(11, 3, 2, r=2)
    with pytest.raises(ValueError):
        bound_report(0, 3, 2)
