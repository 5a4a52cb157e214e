"""Computational skeletons of the three polynomial lemmas (R1, R2, H3)."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import VerificationFailure
from .appendix import GAMMA, build_appendix, specialized
from .commonroot import common_root_check
from .poly import ExactPoly
from .univariate import as_coeffs, isolate_roots, sign_at, sturm_count

INF = math.inf


@dataclass
class SubCheck:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": self.seconds}


@dataclass
class LemmaReport:
    lemma: str
    checks: list[SubCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[SubCheck]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> SubCheck:
        return next(c for c in self.checks if c.name == name)

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
            "notes": list(self.notes),
        }


def _iv(pair) -> list[str]:
    return [str(pair[0]), str(pair[1])]


def enclosing_interval(p, root_iv, claimed, max_width) -> tuple[Fraction, Fraction] | None:
    """Interval of width < max_width holding both ``claimed`` and the isolated root.

    Returns None when impossible; otherwise the interval is certified by a
    Sturm count of exactly one root and nonzero values at both ends.
    """
    claimed, max_width = Fraction(claimed), Fraction(max_width)
    lo0, hi0 = min(claimed, root_iv[0]), max(claimed, root_iv[1])
    span = hi0 - lo0
    if span >= max_width:
        return None
    margin = (max_width - span) / 4
    lo, hi = lo0 - margin, hi0 + margin
    q = as_coeffs(p)
    if sign_at(q, lo) == 0 or sign_at(q, hi) == 0 or sturm_count(q, (lo, hi)) != 1:
        return None
    return lo, hi


class _Runner:
    def __init__(self, lemma: str):
        self.report = LemmaReport(lemma)

    def run(self, name, fn):
        t0 = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crashing sub-check is a failed sub-check
            passed, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        self.report.checks.append(SubCheck(name, bool(passed), detail, time.perf_counter() - t0))


def _rootless(key, interval, expect_sign, probe):
    def fn():
        p = specialized(key)
        n = sturm_count(p, interval)
        s = sign_at(as_coeffs(p), probe)
        # as_coeffs keeps the sign of the leading coefficient, so signs are faithful
        return n == 0 and s == expect_sign, {"roots": n, "sign_at": str(probe), "sign": s}
    return fn


def _unique_root(key, interval):
    def fn():
        p = specialized(key)
        n = sturm_count(p, interval)
        iso = isolate_roots(p, interval)
        return n == 1 and len(iso) == 1, {
            "roots": n,
            "interval": _iv(iso.intervals[0]) if iso.intervals else None,
            "approx": iso.midpoints()[0] if iso.intervals else None,
        }
    return fn


def _near(key, interval, claimed, max_width):
    def fn():
        p = specialized(key)
        iso = isolate_roots(p, interval)
        if len(iso) != 1:
            return False, {"roots": len(iso)}
        enc = enclosing_interval(p, iso.intervals[0], claimed, max_width)
        detail = {"claimed": str(claimed), "max_width": str(max_width), "root": iso.midpoints()[0]}
        if enc is None:
            return False, detail
        detail["interval"] = _iv(enc)
        detail["width"] = float(enc[1] - enc[0])
        return True, detail
    return fn


def _no_common_root(name, box_max):
    def fn():
        p = build_appendix(name)
        res = common_root_check(p, p.diff("v"), {"u": (1, box_max), "v": (1, box_max)}, below=("v", "u"))
        detail = {"box": f"1 < v < u < {box_max}", "result": type(res).__name__}
        if res.found:
            detail["witness"] = {k: _iv(v) for k, v in res.witness.items()}
            detail["reason"] = res.reason
        else:
            detail.update(resultant_degree=res.resultant_degree, u_roots=res.outer_roots, boxes=res.boxes)
        return not res.found, detail
    return fn


def _verify_r1(run: _Runner, common_root: bool, box_max):
    run.run("R1(u,1): one root on (1,inf)", _unique_root("R1(u,v=1)", (1, INF)))
    run.run("R1(u,1): root near 75.5, width < 0.5", _near("R1(u,v=1)", (1, INF), Fraction(151, 2), Fraction(1, 2)))

    def sign_pattern():
        p = as_coeffs(specialized("R1(u,v=1)"))
        (lo, hi), = isolate_roots(p, (1, INF)).intervals
        return sign_at(p, lo) < 0 < sign_at(p, hi), {"below": sign_at(p, lo), "above": sign_at(p, hi)}

    run.run("R1(u,1): negative below u*, positive above", sign_pattern)
    run.run("R1(u,u): no root on (1,1e6), negative", _rootless("R1(u,v=u)", (1, 10**6), -1, 2))
    run.run("R1(74,v): no root on (1,74), negative", _rootless("R1(u=74,v)", (1, 74), -1, 2))
    run.run("R1(76,v): one root on (1,76)", _unique_root("R1(u=76,v)", (1, 76)))
    run.run("R1(v^2,v): no root for v > 1, negative", _rootless("R1(u=v^2,v)", (1, INF), -1, 2))
    if common_root:
        run.run("R1, dR1/dv: no common root", _no_common_root("R1", box_max))
        run.report.notes.append(f"common-root exclusion covers u < {box_max} only; the unbounded tail is unverified")


def _verify_r2(run: _Runner, common_root: bool, box_max):
    def r2_tail():
        p = as_coeffs(specialized("R2(u,v=1)"))
        n = sturm_count(p, (60, INF))
        s60, s76 = sign_at(p, 60), sign_at(p, 76)
        return n == 0 and s60 > 0 and s76 > 0, {"roots_in_(60,inf)": n, "sign_at_60": s60, "sign_at_76": s76}

    run.run("R2(u,1): no root on [60,inf), positive", r2_tail)
    run.run("R2(u,u): no root on (1,inf), negative", _rootless("R2(u,v=u)", (1, INF), -1, 2))
    run.run("R2(76,v): one root on (1,76)", _unique_root("R2(u=76,v)", (1, 76)))
    if common_root:
        run.run("R2, dR2/dv: no common root", _no_common_root("R2", box_max))
        run.report.notes.append(f"common-root exclusion covers u < {box_max} only; the unbounded tail is unverified")


# sample (u, v) points with 1 < v < u and u beyond u* for the H3 uniqueness check
H3_SAMPLES = tuple(
    (Fraction(u), Fraction(v))
    for u in (76, 80, 100, 150, 200, 500, 1000)
    for v in (Fraction(11, 10), 2, 3, 4, 6, 10, Fraction(u, 2), u - 1)
)


def _verify_h3(run: _Runner):
    h3 = build_appendix("H3")
    r2 = build_appendix("R2")
    u, v = ExactPoly.var("u"), ExactPoly.var("v")

    def at_one():
        lhs = h3.subs(**{GAMMA: 1})
        rhs = -32 * v * (u**3 * v**5 + 2 * u**2 * v**4 + 2 * u * v + 1) * (u - v) ** 5
        return lhs == rhs, {"identity": "H3(u,v,1) = -32v(u^3v^5+2u^2v^4+2uv+1)(u-v)^5"}

    run.run("H3(u,v,1) closed form", at_one)

    def probes():
        r_a = r2.evaluate({"u": 76, "v": 3})
        r_b = r2.evaluate({"u": 76, "v": 4})
        return r_a > 0 > r_b, {"R2(76,3)": str(r_a), "R2(76,4)": str(r_b)}

    run.run("(76,3) in Q1, (76,4) in Q2", probes)
    run.run("H3(76,3,γ): unique root near 36", _near("H3(u=76,v=3,γ)", (1, INF), 36, 1))
    run.run("H3(76,4,γ): unique root near 26", _near("H3(u=76,v=4,γ)", (1, INF), 26, 1))

    def sampled():
        counts = {"Q1": 0, "Q2": 0, "curve": 0}
        bad = []
        for uu, vv in H3_SAMPLES:
            region = r2.evaluate({"u": uu, "v": vv})
            tag = "Q1" if region > 0 else "Q2" if region < 0 else "curve"
            counts[tag] += 1
            n = sturm_count(h3.subs(u=uu, v=vv), (1, INF))
            if n != 1:
                bad.append({"u": str(uu), "v": str(vv), "roots": n})
        ok = not bad and counts["Q1"] > 0 and counts["Q2"] > 0
        return ok, {"samples": len(H3_SAMPLES), "regions": counts, "failures": bad}

    run.run("H3: unique γ-root > 1 at sampled (u,v) in Q1 and Q2", sampled)

    def gamma_bar():
        h31 = build_appendix("H31")
        cs = h3.coefficients_in(GAMMA)
        lhs = ExactPoly.const(0)
        for k, c in enumerate(cs):
            lhs = lhs + c * (u + v - 2) ** k * (2 * (v - 1)) ** (len(cs) - 1 - k)
        return lhs == -((u - v) ** 5) * (v - 1) ** 5 * h31, {
            "identity": "H3(u,v,(u+v-2)/(2(v-1))) = -(u-v)^5/32 H31(u,v)"}

    run.run("H3 at γ̄2 reduces to H31", gamma_bar)
    run.run("H31(u,1): no root on (1,inf), positive", _rootless("H31(u,v=1)", (1, INF), 1, 2))
    run.run("H31(u,u): no root on (1,inf), positive", _rootless("H31(u,v=u)", (1, INF), 1, 2))
    run.run("H31(76,v): no root on (1,76), positive", _rootless("H31(u=76,v)", (1, 76), 1, 2))
    run.run("H31, dH31/dv: no common root", _no_common_root("H31", 200))
    run.run("H3(v,2): no root for v > 1, negative", _rootless("H3(v,γ=2)", (1, INF), -1, 2))


def verify_lemma(name: str, common_root: bool = True, box_max=200, raise_on_fail: bool = False) -> LemmaReport:
    """Run the computational steps behind one lemma; see ``LemmaReport``."""
    key = name.upper()
    run = _Runner(key)
    if key == "R1":
        _verify_r1(run, common_root, box_max)
    elif key == "R2":
        _verify_r2(run, common_root, box_max)
    elif key == "H3":
        _verify_h3(run)
    else:
        raise ValueError(f"unknown lemma {name!r}; expected R1, R2 or H3")
    if raise_on_fail and not run.report.passed:
        first = run.report.failures()[0]
        raise VerificationFailure(first.name, str(first.detail))
    return run.report
