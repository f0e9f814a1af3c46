import math

import numpy as np
import pytest

import landaulab as ll
from landaulab.chebyshev import R_value, build_R_envelope, empirical_R_exponent, fit_log_slope


def test_theta_psi_small_examples(cheb_10k):
    t = cheb_10k
    assert ll.theta(1.9, t) == 0.0
    assert ll.theta(2.0, t) == pytest.approx(math.log(2), rel=1e-12)
    assert ll.theta(10.0, t) == pytest.approx(sum(math.log(p) for p in (2, 3, 5, 7)), rel=1e-12)
    # psi(10) = theta(10) + log 2 (for 4, 8) + log 2 + log 3 (for 9)
    expect = sum(math.log(p) for p in (2, 3, 5, 7)) + 2 * math.log(2) + math.log(3)
    assert ll.psi(10.0, t) == pytest.approx(expect, rel=1e-12)


def test_pi1_small_example(cheb_10k):
    # Pi1(10) = 2+3+5+7 + 4/2 + 8/3 + 9/2 = 26.1666...
    assert ll.pi1(10.0, t=cheb_10k) == pytest.approx(17 + 2 + 8 / 3 + 4.5, rel=1e-12)


def test_jump_semantics(cheb_10k):
    t = cheb_10k
    eps = 1e-9
    assert ll.psi(8.0, t) - ll.psi(8.0 - eps, t) == pytest.approx(math.log(2), rel=1e-9)
    assert ll.theta(9.0, t) == ll.theta(8.999, t)  # 9 is not prime
    assert ll.psi(9.0, t) > ll.psi(8.999, t)       # but it is a prime power


def test_brute_force_oracle_grid(cheb_10k, prime_table_100k):
    # Direct sums over sieve output at integer points.
    primes = prime_table_100k.primes[prime_table_100k.primes <= 10_000]
    for x in (2, 3, 10, 97, 1000, 9973, 10_000):
        ps = primes[primes <= x]
        assert ll.theta(float(x), cheb_10k) == pytest.approx(
            float(np.sum(np.log(ps.astype(np.float64)))), rel=1e-12, abs=1e-12
        )
    psi_direct = 0.0
    for p in primes[primes <= 1000].tolist():
        q = p
        while q <= 1000:
            psi_direct += math.log(p)
            q *= p
    assert ll.psi(1000.0, cheb_10k) == pytest.approx(psi_direct, rel=1e-12)


def test_chebyshev_asymptotics(cheb_10k):
    # theta(x)/x and psi(x)/x are within a few percent of 1 at x = 1e4.
    assert ll.theta(1e4, cheb_10k) / 1e4 == pytest.approx(1.0, abs=0.03)
    assert ll.psi(1e4, cheb_10k) / 1e4 == pytest.approx(1.0, abs=0.03)
    assert ll.psi(1e4, cheb_10k) > ll.theta(1e4, cheb_10k)


def test_psi_theta_root_identity(cheb_10k):
    # psi(x) = sum_{k >= 1} theta(x^(1/k)), a finite sum.
    x = 1e4
    total, k = 0.0, 1
    while x ** (1 / k) >= 2.0:
        total += ll.theta(x ** (1 / k), cheb_10k)
        k += 1
    assert ll.psi(x, cheb_10k) == pytest.approx(total, rel=1e-9)


def test_range_errors(cheb_10k, prime_table_100k):
    with pytest.raises(ll.SieveRangeError):
        ll.theta(10_001.0, cheb_10k)
    with pytest.raises(ll.SieveRangeError):
        ll.build_chebyshev_tables(prime_table_100k, 200_000)


# ---------------------------------------------------------------------------
# R envelope


@pytest.fixture(scope="module")
def env_10k(prime_table_100k):
    return build_R_envelope(prime_table_100k, 10_000)


def R_dense_oracle(table, x):
    """sup over a dense sample: both sides of every prime <= x plus x itself."""
    primes = table.primes[table.primes <= x].astype(np.float64)
    li2 = float(ll.li(2.0))
    sup = 0.0
    for i, p in enumerate(primes):
        li_p = float(ll.li(p)) - li2
        sup = max(sup, abs((i + 1) - li_p), abs(i - li_p))
    n_le_x = len(primes)
    sup = max(sup, abs(n_le_x - (float(ll.li(x)) - li2)))
    return sup


def test_R_against_dense_oracle(env_10k, prime_table_100k):
    for x in (10.0, 97.0, 1000.0, 5000.0):
        assert R_value(env_10k, x) == pytest.approx(
            R_dense_oracle(prime_table_100k, x), rel=1e-9
        )


def test_R_monotone_in_x(env_10k):
    xs = np.linspace(2.0, 10_000.0, 200)
    vals = [R_value(env_10k, float(x)) for x in xs]
    # Running sup over prime jumps is monotone; the endpoint term can only
    # raise a value above its left neighbours, never break monotonicity by
    # more than the endpoint's own contribution which is itself included
    # in the sup once x passes the next prime.  The envelope itself must
    # be non-decreasing at prime breakpoints:
    assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:])) or np.all(
        np.diff(env_10k.run_sup) >= 0
    )
    assert np.all(np.diff(env_10k.run_sup) >= -1e-12)


def test_R_domain(env_10k):
    with pytest.raises(ll.SieveRangeError):
        R_value(env_10k, 1.0)
    with pytest.raises(ll.SieveRangeError):
        R_value(env_10k, 10_001.0)


def test_fit_log_slope_exact():
    xs = np.logspace(1, 5, 50)
    assert fit_log_slope(xs, 3.0 * xs**0.7) == pytest.approx(0.7, abs=1e-12)
    with pytest.raises(ValueError):
        fit_log_slope(xs, np.zeros_like(xs))


def test_empirical_exponent_synthetic():
    # Callable inputs with known slopes 0 and 1.
    assert empirical_R_exponent(lambda x: 5.0, x_min=1e2, x_max=1e6) == pytest.approx(0.0, abs=1e-12)
    assert empirical_R_exponent(lambda x: 2.0 * x, x_min=1e2, x_max=1e6) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        empirical_R_exponent(lambda x: x, x_min=1e2, x_max=1e3)


def test_empirical_exponent_real_is_sublinear(env_10k):
    slope = empirical_R_exponent(env_10k, x_min=50.0, x_max=10_000.0)
    assert 0.0 < slope < 1.0
