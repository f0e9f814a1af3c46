import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import landaulab as ll
from landaulab.logintegral import DEFAULT_CONFIG, LiConfig, _to_mpf


def mp_li(x: float) -> float:
    with mpmath.workdps(40):
        return float(mpmath.li(x))


def test_li_at_2():
    assert ll.li(2.0) == pytest.approx(1.0451637801174927, abs=1e-12)


def test_li_vanishes_at_soldner_point():
    assert abs(ll.li(ll.SOLDNER_MU)) < 1e-12


def test_li_monotone():
    assert ll.li(10.0) > ll.li(5.0)


def test_li_against_quadrature_oracle_grid():
    # 100 log-spaced points in [2, 1e6], absolute agreement at abs_tol.
    # The comparison runs in mpmath precision: rounding the oracle to
    # float64 alone would cost ~4e-12 at the top of the range.
    xs = np.logspace(math.log10(2.0), 6, 100)
    with mpmath.workdps(40):
        for x in xs:
            err = abs(_to_mpf(ll.li(float(x))) - mpmath.li(mpmath.mpf(float(x))))
            assert float(err) <= 1e-12


def test_li_domain_error():
    with pytest.raises(ll.LiDomainError):
        ll.li(1.0)
    with pytest.raises(ll.LiDomainError):
        ll.li(0.5)


def test_li_against_direct_quadrature():
    # li(b) - li(a) = int_a^b dt/log t has no singularity for a > 1, so it
    # can be checked by straight quadrature with no shared code at all.
    with mpmath.workdps(40):
        for a, b in [(2.0, 10.0), (10.0, 1e3), (1e3, 1e6)]:
            ref = float(mpmath.quad(lambda t: 1 / mpmath.log(t), [a, b]))
            assert float(ll.li(b) - ll.li(a)) == pytest.approx(ref, abs=1e-12)


def test_li_asymptotic_branch_agrees():
    # Truncating the divergent expansion at its smallest term leaves a
    # relative error ~ sqrt(2 pi u) e^-u, so exercise the branch only
    # where u = log x makes that error negligible (u >= ~35).
    cfg = LiConfig(series_crossover=30.0)
    for x in (1e16, 1e18, 1e22):
        assert ll.li(x, cfg) == pytest.approx(mp_li(x), rel=1e-12)


def test_Li_offset():
    assert ll.Li(2.0) == 0.0
    assert ll.Li(10.0) == pytest.approx(ll.li(10.0) - ll.li(2.0), abs=1e-14)
    xs = np.linspace(2.0, 100.0, 20)
    vals = [ll.Li(float(x)) for x in xs]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    with pytest.raises(ll.LiDomainError):
        ll.Li(1.5)


def test_li_inverse_examples():
    assert ll.li_inverse(0.0) == pytest.approx(ll.SOLDNER_MU, abs=1e-9)
    assert ll.li_inverse(ll.li(10.0)) == pytest.approx(10.0, abs=1e-7)
    with pytest.raises(ll.LiDomainError):
        ll.li_inverse(-1.0)


def test_li_inverse_small_y_below_li2():
    # Root lies in (mu, 2); requires the downward bracket widening.
    x = ll.li_inverse(0.5)
    assert ll.SOLDNER_MU < x < 2.0
    assert abs(ll.li(x) - 0.5) <= DEFAULT_CONFIG.inv_tol


def test_li_inverse_exceeds_n_log_n_from_41():
    for n in range(41, 2001, 7):
        assert ll.li_inverse(float(n)) > n * math.log(n)


def test_li_inverse_crude_upper_bound():
    for n in range(3, 10_001, 97):
        assert ll.li_inverse(float(n)) < 2 * n * math.log(n)


def test_li_inverse_strictly_increasing():
    ys = [0.0, 0.5, 2.0, 10.0, 100.0, 1e4, 1e6]
    xs = [ll.li_inverse(y) for y in ys]
    assert all(b > a for a, b in zip(xs, xs[1:]))


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.0, max_value=1e9))
def test_li_inverse_round_trip(y):
    x = ll.li_inverse(y)
    assert x >= ll.SOLDNER_MU - 1e-12
    if y > 0:
        assert abs(ll.li(x) - y) <= DEFAULT_CONFIG.inv_tol


def test_round_trip_log_sweep():
    for y in np.logspace(0, 9, 30):
        x = ll.li_inverse(float(y))
        assert abs(ll.li(x) - float(y)) <= DEFAULT_CONFIG.inv_tol


def test_batch_matches_scalar():
    xs = np.array([2.0, 10.0, 123.4, 1e4, 1e6])
    batch = ll.li_batch(xs)
    for x, b in zip(xs, batch):
        assert b == pytest.approx(ll.li(float(x)), rel=1e-13, abs=1e-9)


def test_inverse_batch_matches_scalar():
    ys = np.array([2.0, 5.0, 41.0, 1e3, 1e6])
    batch = ll.li_inverse_batch(ys)
    for y, b in zip(ys, batch):
        assert b == pytest.approx(ll.li_inverse(float(y)), rel=1e-9)


def test_config_validation():
    with pytest.raises(ValueError):
        LiConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        LiConfig(max_iter=0)
