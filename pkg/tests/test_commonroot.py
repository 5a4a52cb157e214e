from fractions import Fraction

import pytest

from nodecycles.algebra import CandidateFound, NoCommonRoot, common_root_check, variables

u, v = variables("u", "v")
BOX = {"u": (1, 10), "v": (1, 10)}


def test_circle_and_line_meet():
    # u^2 + v^2 = 25 and u = v + 1 meet at (4, 3)
    res = common_root_check(u**2 + v**2 - 25, u - v - 1, BOX)
    assert isinstance(res, CandidateFound)
    ub, vb = res.witness["u"], res.witness["v"]
    assert ub[0] <= 4 <= ub[1] and vb[0] <= 3 <= vb[1]


def test_disjoint_curves():
    res = common_root_check(u**2 + v**2 - 25, u * v - 20, BOX)
    assert isinstance(res, NoCommonRoot)


def test_root_outside_box_is_ignored():
    res = common_root_check(u - 20, v - 2, BOX)
    assert not res.found


def test_ordering_constraint():
    # the only common root (2, 3) has v > u, so it is excluded by v < u
    p, q = u - 2, v**2 - 9
    assert common_root_check(p + 0 * v, q + 0 * u, BOX).found
    assert not common_root_check(p + 0 * v, q + 0 * u, BOX, below=("v", "u")).found


def test_irrational_common_root_found():
    res = common_root_check(u**2 - 2 * v, v - Fraction(3, 2) + 0 * u, {"u": (1, 3), "v": (1, 3)})
    assert res.found


def test_univariate_pairs():
    x = variables("x")[0]
    assert common_root_check((x - 2) * (x - 5), (x - 5) * (x + 1), {"x": (0, 10)}).found
    assert not common_root_check((x - 2) * (x - 5), (x - 5) * (x + 1), {"x": (0, 4)}).found


def test_unbounded_range_rejected():
    with pytest.raises(ValueError):
        common_root_check(u - v, u + v - 3, {"u": (1, None), "v": (1, 5)})
