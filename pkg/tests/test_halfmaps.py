import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nodecycles import halfmaps as hm
from nodecycles import oracle
from nodecycles.errors import ConvergenceFailure, DomainError, OutOfDomain
from nodecycles.model import Side, SystemParams

from _draws import assumption1

P = SystemParams(2.0, -3.0, 3.0, -1.4, 0.0)


def rel(a, b):
    return abs(a - b) / max(1e-300, abs(b))


# ---------------------------------------------------------------- samples


def test_left_sample_tends_to_origin():
    s = hm.left_sample(P, 1e-9)
    assert abs(s.y0) < 1e-8 and abs(s.y1) < 1e-8
    assert s.y0 > 0 > s.y1


def test_left_sample_monotone():
    ts = np.linspace(0.05, 5.0, 100)
    smp = [hm.left_sample(P, float(t)) for t in ts]
    assert all(a.y0 < b.y0 and a.y1 > b.y1 for a, b in zip(smp, smp[1:]))


def test_left_sample_matches_crossing():
    # [DERIVED] event-located crossing on the exact flow
    s = hm.left_sample(P, math.log(2.0))
    ev = oracle.cross_time(P.left, s.y0)
    assert rel(ev.state.y, s.y1) <= 1e-9
    assert rel(ev.time, math.log(2.0)) <= 1e-9


def test_right_sample_tends_to_b():
    q = P.with_b(0.1)
    s = hm.right_sample(q, -1e-9)
    assert abs(s.y0 - 0.1) < 1e-8 and abs(s.y1 - 0.1) < 1e-8


def test_right_sample_monotone():
    ss = np.linspace(-5.0, -0.01, 100)
    smp = [hm.right_sample(P, float(s)) for s in ss]
    # |s| shrinks along ss, so y0 falls and y1 rises
    assert all(a.y0 > b.y0 and a.y1 < b.y1 for a, b in zip(smp, smp[1:]))


def test_right_sample_matches_crossing():
    q = SystemParams(2.0, -3.0, 1.0, -1.4, 0.1)
    s = hm.right_sample(q, -1.0)
    ev = oracle.cross_time(q.right, s.y1)
    assert rel(ev.state.y, s.y0) <= 1e-9
    assert rel(ev.time, 1.0) <= 1e-9


def test_sample_time_sign_enforced():
    with pytest.raises(DomainError):
        hm.left_sample(P, 0.0)
    with pytest.raises(DomainError):
        hm.right_sample(P, 0.5)


@given(st.integers(0, 10**6), st.floats(0.01, 5.0))
def test_samples_agree_with_oracle(seed, tau):
    p = assumption1(random.Random(seed))
    left = hm.left_sample(p, tau)
    ev = oracle.cross_time(p.left, left.y0)
    assert rel(ev.state.y, left.y1) <= 1e-9
    right = hm.right_sample(p, -tau)
    ev = oracle.cross_time(p.right, right.y1)
    assert abs(ev.state.y - right.y0) <= 1e-9 * max(abs(right.y0), abs(right.y0 - p.b))


# ---------------------------------------------------------------- inversion


def test_left_map_at_zero():
    assert hm.left_map(P, 0.0) == (0.0, 0.0)


def test_left_map_near_asymptote():
    y0 = 0.999 * P.alpha_l / (P.gamma_l + 1.0)
    y1, t = hm.left_map(P, y0)
    assert t > 3.0 and y1 < -10.0 * y0


@pytest.mark.parametrize("t", [0.1, 1.0, 3.0])
def test_left_round_trip(t):
    s = hm.left_sample(P, t)
    y1, t_back = hm.left_map(P, s.y0)
    assert abs(t_back - t) <= 1e-9
    assert rel(y1, s.y1) <= 1e-9


def test_right_inverse_at_b():
    q = P.with_b(0.2)
    assert hm.right_inverse_map(q, 0.2) == (0.2, 0.0)


@pytest.mark.parametrize("s", [-0.1, -1.0, -3.0])
def test_right_round_trip(s):
    smp = hm.right_sample(P, s)
    y1, s_back = hm.right_inverse_map(P, smp.y0)
    assert abs(s_back - s) <= 1e-9
    assert abs(y1 - smp.y1) <= 1e-9 * max(1.0, abs(smp.y1))


def test_right_domain_upper_end():
    q = SystemParams(2.0, -3.0, 1.0, -1.4, 0.0)
    assert hm.right_upper(q) == pytest.approx(0.35, abs=1e-15)
    with pytest.raises(OutOfDomain):
        hm.right_inverse_map(q, 0.36)


def test_left_out_of_domain():
    with pytest.raises(OutOfDomain):
        hm.left_map(P, -0.1)
    with pytest.raises(OutOfDomain):
        hm.left_map(P, P.alpha_l / (P.gamma_l + 1.0))


def test_cap_reached_near_asymptote():
    lim = P.alpha_l / (P.gamma_l + 1.0)
    with pytest.raises((ConvergenceFailure, OutOfDomain)):
        hm.left_map(P, lim * (1.0 - 1e-15))


# ---------------------------------------------------------------- domain


def test_domain_both_positive():
    dom = hm.domain(SystemParams(2.0, 3.0, 1.0, -1.0, 0.0))
    assert dom.y0_max == pytest.approx(1.0 / 3.0)
    assert dom.active_upper_branch is hm.UpperBranch.LEFT_ASYMPTOTE


def test_domain_mixed():
    dom = hm.domain(SystemParams(2.0, -3.0, 1.0, -1.4, 0.1))
    assert dom.y0_min == 0.1
    assert dom.y0_max == pytest.approx(1.0 / 3.0)


def test_domain_unbounded():
    dom = hm.domain(SystemParams(-2.0, 3.0, 1.0, -1.0, 0.0))
    assert math.isinf(dom.y0_max)
    assert dom.active_upper_branch is hm.UpperBranch.INFINITE


def test_domain_empty_is_a_value():
    dom = hm.domain(SystemParams(2.0, -3.0, 1.0, -1.4, 0.5))
    assert dom.empty


def test_domain_endpoints_open():
    dom = hm.domain(SystemParams(2.0, -3.0, 1.0, -1.4, 0.1))
    assert not dom.contains(0.1)
    assert not dom.contains(0.1 + 1e-13)
    assert not dom.contains(dom.y0_max)
    assert dom.contains(0.2)


# ---------------------------------------------------------------- origin data


def test_origin_series_values():
    s = hm.origin_series(P, Side.LEFT)
    assert s.d1 == -1.0
    assert s.d2 == pytest.approx(-16.0 / 9.0)
    assert s.d3 == pytest.approx(-32.0 * 4.0 / 27.0)


def _fd(f, h):
    d1 = (f(h) - f(-h)) / (2 * h)
    d2 = (f(h) + f(-h)) / h**2
    d3 = (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (2 * h**3)
    d4 = (f(2 * h) - 4 * f(h) - 4 * f(-h) + f(-2 * h)) / h**4
    return np.array([d1, d2, d3, d4])


def richardson_derivatives(gamma, alpha, h):
    """Central differences of the continued map at 0, one Richardson step."""
    f = lambda y: hm.extended_map(gamma, alpha, y)
    return (4 * _fd(f, h / 2) - _fd(f, h)) / 3


@pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
def test_origin_series_against_differences(side):
    # [DERIVED] Richardson-extrapolated central differences
    rng = random.Random(11)
    for _ in range(5):
        p = assumption1(rng)
        sub = p.subsystem(side)
        h = 0.005 * abs(sub.alpha) / (abs(sub.gamma) + 1.0)
        got = richardson_derivatives(sub.gamma, sub.alpha, h)
        s = hm.origin_series(p, side)
        want = np.array([s.d1, s.d2, s.d3, s.d4])
        assert np.all(np.abs(got - want) <= 1e-3 * np.abs(want))


def test_left_map_fd_near_origin():
    # one-sided check on the map itself, away from the continuation
    y = 1e-3 * P.alpha_l / (P.gamma_l + 1.0)
    h = y / 4
    fd = (hm.left_map(P, y + h)[0] - hm.left_map(P, y - h)[0]) / (2 * h)
    s = hm.origin_series(P, Side.LEFT)
    assert fd == pytest.approx(s.d1 + s.d2 * y + s.d3 * y * y / 2, rel=1e-6)


# ---------------------------------------------------------------- shape


def test_left_concavity_sign():
    for g, expect in ((2.0, -1), (-2.0, 1)):
        p = SystemParams(g, -3.0, 1.0, -1.0, 0.0)
        hi = min(hm.left_upper(p), 5.0)
        ys = np.linspace(0.02 * hi, 0.9 * hi, 60)
        vals = np.array([hm.left_map(p, float(y))[0] for y in ys])
        second = vals[2:] - 2 * vals[1:-1] + vals[:-2]
        assert np.all(expect * second >= -1e-12)


def test_right_concavity_sign():
    for g, expect in ((3.0, 1), (-3.0, -1)):
        p = SystemParams(2.0, g, 1.0, -1.0, 0.0)
        hi = min(hm.right_upper(p), 5.0)
        ys = np.linspace(0.02 * hi, 0.9 * hi, 60)
        vals = np.array([hm.right_inverse_map(p, float(y))[0] for y in ys])
        second = vals[2:] - 2 * vals[1:-1] + vals[:-2]
        assert np.all(expect * second >= -1e-12)


def test_left_asymptote():
    s = hm.left_sample(P, 50.0)
    lim = P.alpha_l / (P.gamma_l + 1.0)
    assert rel(s.y0, lim) <= 1e-6


def test_vector_inversion_matches_scalar():
    rng = np.random.default_rng(3)
    for g in (2.0, -3.0, 1.2, -1.1):
        lim = min(abs(hm.g_limit(g, 1.0)), 20.0)
        w = lim * rng.uniform(0.001, 0.99, 100)
        tv = hm.invert_g_vec(g, w)
        for wi, ti in zip(w, tv):
            assert hm.g_scalar(g, float(ti)) == pytest.approx(wi, rel=1e-12)
