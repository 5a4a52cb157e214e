import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from nodecycles.algebra import GridSpec, verify_sign_claims
from nodecycles.algebra.signs import TermTable, check_claim, f_d, f_n, h11, h21_numerator
from nodecycles.errors import SignViolation


def at(poly, v, g):
    """Plain float evaluation at u = v**g, term by term."""
    return math.fsum(float(c) * (v**g) ** a * v**b * g**k for c, a, b, k in TermTable(poly).exact)


def test_f_d_vanishes_at_v_one():
    for g in (1.5, 3.0, -2.0):
        assert at(f_d(), 1.0, g) == 0.0


def test_h11_vanishes_at_v_one():
    for g in (1.5, 2.0, 7.0):
        assert abs(at(h11(), 1.0, g)) < 1e-9
        # the display with the u**5 slips leaves 32(1 - γ)
        assert at(h11(as_printed=True), 1.0, g) == pytest.approx(32 * (1 - g), rel=1e-9)


@pytest.mark.parametrize("g", [1.5, 2.0, 5.0])
def test_h11_leading_behaviour(g):
    # [PAPER] H11 ~ 4 g (g^2 - 1)^3 (v - 1)^7 as v -> 1+, within a factor of 2 at v - 1 = 1e-2
    terms = TermTable(h11()).exact
    with mpmath.workdps(80):
        for e, tol in (("1e-2", 2.0), ("1e-4", 1.01)):
            v, gm = 1 + mpmath.mpf(e), mpmath.mpf(g)
            val = mpmath.fsum(c * (v**gm) ** a * v**b * gm**k for c, a, b, k in terms)
            ratio = float(val / (4 * gm * (gm * gm - 1) ** 3 * (v - 1) ** 7))
            assert 1 / tol < ratio < tol


def test_interface_alias():
    from nodecycles.algebra import verify_section42_signs, verify_sign_claims

    assert verify_section42_signs is verify_sign_claims


def test_printed_h11_fails_the_sign_claim():
    vs = 1.0 + np.logspace(-2, 2, 30)
    bad = check_claim("printed", h11(as_printed=True), ">0", vs, vs)
    good = check_claim("derived", h11(), ">0", vs, vs)
    assert not bad.passed and good.passed


@given(st.floats(1.05, 30), st.floats(1.05, 30))
def test_scaled_evaluation_matches_direct(v, g):
    p = f_n()
    val, mag = TermTable(p).scaled(np.array([v]), np.array([g]))
    direct = at(p, v, g)
    terms = [abs(float(c)) * v ** (a * g + b) * g**k for c, a, b, k in TermTable(p).exact]
    scale = max(terms)
    assert val[0] * scale == pytest.approx(direct, rel=1e-9, abs=1e-12 * sum(terms))
    assert mag[0] * scale == pytest.approx(sum(terms), rel=1e-12)


def test_h21_positive_sample():
    assert at(h21_numerator(), 2.0, 3.0) > 0


def test_small_grid_passes():
    rep = verify_sign_claims(GridSpec(n=12))
    assert rep.passed and len(rep.claims) == 8


def test_raise_on_fail(monkeypatch):
    import nodecycles.algebra.signs as sg

    monkeypatch.setattr(sg, "h11", lambda: h11(as_printed=True))
    with pytest.raises(SignViolation):
        sg.verify_sign_claims(GridSpec(n=12), raise_on_fail=True)
