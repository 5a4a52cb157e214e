import random

from nodecycles.algebra import ExactPoly, build_appendix, verify_resultant_identities
from nodecycles.algebra.appendix import GAMMA
from nodecycles.algebra.identities import Identity, check_identity, identities, v_total_derivative


def test_total_derivative_of_power():
    # p = u = v**γ  ->  v dp/dv = γ u
    u = ExactPoly.var("u")
    assert v_total_derivative(u + 0 * ExactPoly.var("v") + 0 * ExactPoly.var(GAMMA)) == ExactPoly.var(GAMMA) * u


def test_identities_hold_on_a_few_lines():
    for rep in verify_resultant_identities(seed=3, lines=2):
        assert rep.passed and rep.lines == 4
        for var in ("u", "v"):
            assert rep.points_per_line[var] > rep.degree_bounds[var]


def test_wrong_right_hand_side_detected():
    ident = identities()[1]
    broken = Identity(ident.name, ident.p, ident.q, ident.rhs * 3)
    rep = check_identity(broken, random.Random(0), lines=1)
    assert not rep.passed and rep.failure is not None


def test_seeded_runs_repeat():
    a = [r.as_dict() for r in verify_resultant_identities(seed=5, lines=1)]
    b = [r.as_dict() for r in verify_resultant_identities(seed=5, lines=1)]
    for x, y in zip(a, b):
        x.pop("seconds"), y.pop("seconds")
    assert a == b


def test_h3_degree_in_gamma():
    assert build_appendix("H3").degree(GAMMA) >= 2
