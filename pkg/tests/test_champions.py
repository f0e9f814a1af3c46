import math

import pytest

import landaulab as ll
from landaulab.champions import (
    ChampionRangeError,
    champion_exponent,
    champion_for_n,
    champion_sequence,
    prime_entry_threshold,
    witness_W,
    x1_of_rho,
)


def test_champion_exponent_examples():
    # alpha_2(10): steps cost (2-1)/log2=1.44, (4-2)/log2=2.89, (8-4)/log2=5.77,
    # (16-8)/log2=11.54 > 10 -> k = 3.
    assert champion_exponent(2, 10.0) == 3
    assert champion_exponent(3, 10.0) == 2
    assert champion_exponent(5, 10.0) == 1
    assert champion_exponent(13, 10.0) == 1
    assert champion_exponent(37, 10.0) == 1  # 36 <= 10 log 37 = 36.1
    assert champion_exponent(41, 10.0) == 0  # 40 > 10 log 41 = 37.1
    with pytest.raises(ValueError):
        champion_exponent(2, 0.0)


def test_champion_exponent_breakpoint_is_closed():
    # At exactly rho = (p^k - p^(k-1))/log p the larger exponent is taken.
    rho = (4 - 2) / math.log(2)
    assert champion_exponent(2, rho) == 2
    rho = (13 - 1) / math.log(13)
    assert champion_exponent(13, rho) == 1


def test_champion_exponent_monotone_in_rho():
    prev = 0
    for rho in [0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 200.0]:
        k = champion_exponent(2, rho)
        assert k >= prev
        prev = k


def test_x1_examples():
    # x/log x = rho at rho = 10: x1 ~ 35.77.
    x = x1_of_rho(10.0)
    assert 30.0 < x < 40.0
    assert x / math.log(x) == pytest.approx(10.0, rel=1e-12)
    assert x1_of_rho(math.e) == pytest.approx(math.e, rel=1e-12)
    with pytest.raises(ChampionRangeError):
        x1_of_rho(2.0)


def test_x1_defining_equation_sweep():
    for rho in (3.0, 7.7, 25.0, 1e3, 1e6):
        x = x1_of_rho(rho)
        assert x / math.log(x) == pytest.approx(rho, rel=1e-12)
        assert x >= math.e


def test_sequence_structure():
    seq = champion_sequence(50.0)
    assert len(seq) > 10
    # rho ascending, ell strictly increasing, log_N strictly increasing.
    assert all(b.rho >= a.rho for a, b in zip(seq, seq[1:]))
    assert all(b.ell > a.ell for a, b in zip(seq, seq[1:]))
    assert all(b.log_N > a.log_N for a, b in zip(seq, seq[1:]))
    for ch in seq:
        # Internal consistency of the incremental bookkeeping.
        assert ch.ell == sum(p**a for p, a in ch.exponents.items())
        assert ch.log_N == pytest.approx(
            math.fsum(a * math.log(p) for p, a in ch.exponents.items()), rel=1e-12
        )
        # Exponents match the closed-form rule at this rho.
        for p, a in ch.exponents.items():
            assert champion_exponent(p, ch.rho) == a


def test_first_champions():
    seq = champion_sequence(6.0)
    # Breakpoints in rho order: 1/log2 = 1.44 (buy 2), 2/log3 = 1.82 (3),
    # 4/log5 = 2.49 (5), 2/log2 = 2.89 (4), 6/log7 = 3.08 (7),
    # 10/log11 = 4.17 (11).
    ns = [ch.N() for ch in seq[:6]]
    assert ns == [2, 6, 30, 60, 420, 4620]
    ells = [ch.ell for ch in seq[:6]]
    assert ells == [2, 5, 10, 12, 19, 30]


def test_champions_lie_in_g_image(landau_2000):
    # N_rho = g(ell): each champion value is attained by Landau's function
    # exactly at its cost ell.
    for ch in champion_sequence(40.0):
        if ch.ell > 2000:
            break
        assert ll.landau_exact(ch.ell, landau_2000) == ch.N()


def test_champion_for_n(landau_2000):
    seq = champion_sequence(60.0)
    for n in (10, 100, 777, 2000):
        ch = champion_for_n(n, seq, landau_2000)
        assert ch.log_N <= float(landau_2000.log_g[n]) + 1e-12
        nxt = next((c for c in seq if c.log_N > ch.log_N + 1e-12), None)
        if nxt is not None:
            assert nxt.log_N > float(landau_2000.log_g[n]) + 1e-12
    with pytest.raises(ChampionRangeError):
        champion_for_n(5000, seq, landau_2000)


def test_champion_for_n_too_short(landau_2000):
    short = champion_sequence(3.0)
    with pytest.raises(ChampionRangeError, match="too short"):
        champion_for_n(2000, short, landau_2000)


def test_sequence_range_guards():
    with pytest.raises(ChampionRangeError):
        champion_sequence(1.0)


def test_prime_entry_threshold():
    # (x - 1)/log x = rho; at a first-step breakpoint the root is the prime.
    for p in (3, 7, 13, 101):
        rho = (p - 1) / math.log(p)
        assert prime_entry_threshold(rho) == pytest.approx(p, rel=1e-11)
    with pytest.raises(ChampionRangeError):
        prime_entry_threshold(0.5)


def test_theta_psi_sandwich(cheb_10k):
    # theta(x1) <= log N_rho: every prime p <= x1 has (p-1)/log p <
    # x1/log x1 = rho, so it carries exponent >= 1.  log N_rho <=
    # psi(xbar) with xbar the prime-entry threshold: step (p, k) is
    # bought only if p**k <= xbar**k's budget (see prime_entry_threshold).
    # The 1e-9 nudge takes the closed (right) side of step breakpoints.
    for ch in champion_sequence(300.0):
        xbar = prime_entry_threshold(ch.rho) * (1.0 + 1e-9)
        if xbar > 10_000:
            continue
        assert ch.log_N <= ll.psi(xbar, cheb_10k) + 1e-9
        if ch.rho >= math.e and ch.x1 >= 2.0:
            assert ch.log_N >= ll.theta(ch.x1, cheb_10k) - 1e-9


def test_witness_W_matches_direct_formula(cheb_10k):
    for x1 in (10.0, 97.3, 1234.5, 9999.0):
        lx = math.log(x1)
        direct = (
            float(ll.Li(x1 * x1))
            - ll.pi1(x1, cheb_10k)
            + (x1 / lx) * (ll.psi(x1, cheb_10k) - x1)
        )
        assert witness_W(x1, cheb_10k) == pytest.approx(direct, rel=1e-12)


def test_witness_W_domain(cheb_10k):
    with pytest.raises(ChampionRangeError):
        witness_W(2.5, cheb_10k)
    with pytest.raises(ChampionRangeError):
        witness_W(10_001.0, cheb_10k)
