from fractions import Fraction

import pytest

from nodecycles.algebra import GAMMA, build_appendix, check_specializations, published, specialized
from nodecycles.algebra.appendix import NAMES, SPECIALIZATIONS


def test_fifteen_displays():
    assert len(SPECIALIZATIONS) == 15


@pytest.mark.parametrize("key", sorted(SPECIALIZATIONS))
def test_display_matches_general_polynomial(key):
    assert published(key) == specialized(key)


def test_all_in_one_call():
    res = check_specializations()
    assert len(res) == 15 and all(res.values())


def test_perturbed_display_is_caught():
    key = "R1(u,v=1)"
    pub = published(key)
    bumped = pub + 1
    assert bumped != specialized(key)


@pytest.mark.parametrize("name", NAMES)
def test_general_polynomials_nonzero(name):
    p = build_appendix(name)
    assert not p.is_zero() and set(p.variables) <= {"u", "v", GAMMA}


def test_h31_is_two_variable():
    assert set(build_appendix("H31").normalized().variables) == {"u", "v"}


def test_r1_diagonal_display_value():
    # [TRIVIAL] R1(u, u) evaluated at u = 2 agrees with the display
    assert build_appendix("R1").evaluate({"u": 2, "v": 2}) == published("R1(u,v=u)").evaluate({"u": 2})


def test_h3_at_gamma_one_vanishes_on_diagonal():
    h = build_appendix("H3").subs(**{GAMMA: 1})
    assert h.evaluate({"u": Fraction(7, 3), "v": Fraction(7, 3)}) == 0
