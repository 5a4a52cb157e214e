import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from nodecycles.algebra import ExactPoly, isolate_roots, resultant, sturm_count
from nodecycles.algebra.resultant import univariate_resultant
from nodecycles.algebra.univariate import as_coeffs, sign_at
from nodecycles.errors import DegreeZero, ZeroPolynomial

x, y = ExactPoly.var("x"), ExactPoly.var("y")


def from_roots(roots, lead=1):
    p = ExactPoly.const(lead)
    for r in roots:
        p = p * (x - r)
    return p


def test_sturm_small_examples():
    assert sturm_count(x**2 - 2, (0, 2)) == 1
    assert sturm_count(x**2 - 2) == 2
    assert sturm_count(x**2 + 1) == 0
    # half-open (a, b]: a root at the right end counts
    assert sturm_count(x - 1, (0, 1)) == 1 and sturm_count(x - 1, (1, 2)) == 0


def test_sturm_counts_distinct_roots():
    assert sturm_count((x - 1) ** 3 * (x + 2)) == 2


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        sturm_count(ExactPoly.const(0, ("x",)))


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=7, unique=True),
       st.integers(-40, 40), st.integers(1, 40))
def test_sturm_matches_root_list(roots, a, width):
    # [DERIVED] count of known integer roots inside (a, a + width]
    b = a + width
    p = from_roots(roots, lead=-3)
    assert sturm_count(p, (a, b)) == sum(a < r <= b for r in roots)


@given(st.lists(st.fractions(-10, 10, max_denominator=7), min_size=1, max_size=6, unique=True))
def test_isolation_sound(roots):
    p = from_roots(roots)
    iso = isolate_roots(p, max_width=Fraction(1, 64))
    assert len(iso) == len(roots)
    q = as_coeffs(p)
    for (lo, hi), r in zip(iso.intervals, sorted(roots)):
        assert lo <= r <= hi and hi - lo <= Fraction(1, 64)
        if lo < hi:
            assert sign_at(q, lo) * sign_at(q, hi) < 0


def test_isolation_against_numpy():
    p = x**5 - 7 * x**3 + 3 * x - 1
    want = sorted(r.real for r in np.roots([1, 0, -7, 0, 3, -1]) if abs(r.imag) < 1e-12)
    got = isolate_roots(p, max_width=Fraction(1, 10**9)).midpoints()
    assert got == pytest.approx(want, abs=1e-8)


def test_isolation_interval_restriction():
    iso = isolate_roots(x**2 - 2, (0, math.inf))
    assert len(iso) == 1 and iso.midpoints()[0] == pytest.approx(math.sqrt(2), abs=1e-3)


def test_resultant_of_linear_factors():
    for a, b in ((1, 4), (-3, 2), (0, 0)):
        assert resultant(x - a, x - b, "x").constant_value() == a - b


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4),
       st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_resultant_product_formula(ra, rb):
    # [DERIVED] Res(prod(x - a_i), prod(x - b_j)) = prod(a_i - b_j)
    want = 1
    for a in ra:
        for b in rb:
            want *= a - b
    assert resultant(from_roots(ra), from_roots(rb), "x").constant_value() == want


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_resultant_multiplicative(ra, rb, rc):
    p, q, r = from_roots(ra), from_roots(rb, lead=2), from_roots(rc)
    lhs = resultant(p * q, r, "x").constant_value()
    assert lhs == resultant(p, r, "x").constant_value() * resultant(q, r, "x").constant_value()


def test_resultant_eliminates_variable():
    # circle and line: the eliminant vanishes exactly at the intersection abscissae
    res = resultant(x**2 + y**2 - 1, y - x, "y")
    iso = isolate_roots(res, max_width=Fraction(1, 10**6))
    assert iso.midpoints() == pytest.approx([-math.sqrt(0.5), math.sqrt(0.5)], abs=1e-6)


def test_resultant_degree_zero():
    with pytest.raises(DegreeZero):
        resultant(ExactPoly.const(3, ("x",)) + 0 * x, x - 1, "x")


def test_univariate_resultant_lists():
    assert univariate_resultant([-2, 1], [-5, 1]) == -3
