from fractions import Fraction

import pytest

from nodecycles.algebra import ExactPoly, NoCommonRoot, build_appendix, common_root_check, verify_lemma
from nodecycles.algebra.lemmas import enclosing_interval
from nodecycles.algebra.univariate import isolate_roots
from nodecycles.errors import VerificationFailure


@pytest.mark.parametrize("name", ["R1", "r2", "H3"])
def test_lemma_reports_pass(name):
    rep = verify_lemma(name, common_root=False)
    assert rep.passed, [c.name for c in rep.failures()]


def test_r1_root_location():
    rep = verify_lemma("R1", common_root=False)
    det = rep.get("R1(u,1): root near 75.5, width < 0.5").detail
    lo, hi = (Fraction(x) for x in det["interval"])
    assert lo < Fraction(151, 2) < hi and hi - lo < Fraction(1, 2)
    # [PAPER] u* is about 75.5
    assert det["root"] == pytest.approx(75.5, abs=0.25)


def test_h3_gamma_roots():
    rep = verify_lemma("H3")
    for key, centre in (("H3(76,3,γ): unique root near 36", 36), ("H3(76,4,γ): unique root near 26", 26)):
        det = rep.get(key).detail
        lo, hi = (Fraction(x) for x in det["interval"])
        assert lo < centre < hi and hi - lo < 1


def test_enclosing_interval_refuses_far_claim():
    x = ExactPoly.var("x")
    p = x**2 - 2
    (iv,) = isolate_roots(p, (0, 10)).intervals
    assert enclosing_interval(p, iv, Fraction(3, 2), Fraction(1, 2)) is not None
    assert enclosing_interval(p, iv, 3, Fraction(1, 2)) is None


def test_unknown_lemma():
    with pytest.raises(ValueError):
        verify_lemma("R7")


def test_raise_on_fail_path(monkeypatch):
    import nodecycles.algebra.lemmas as lm

    monkeypatch.setattr(lm, "H3_SAMPLES", ((Fraction(2), Fraction(3)),))
    with pytest.raises(VerificationFailure):
        verify_lemma("H3", raise_on_fail=True)


def test_r2_common_root_excluded():
    rep = verify_lemma("R2", common_root=True)
    assert rep.get("R2, dR2/dv: no common root").passed


def test_h31_common_root_excluded():
    p = build_appendix("H31")
    res = common_root_check(p, p.diff("v"), {"u": (1, 200), "v": (1, 200)}, below=("v", "u"))
    assert isinstance(res, NoCommonRoot)


@pytest.mark.slow
def test_r1_common_root_excluded():
    rep = verify_lemma("R1", common_root=True)
    assert rep.get("R1, dR1/dv: no common root").passed
    assert any("unverified" in n for n in rep.notes)
