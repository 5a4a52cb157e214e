"""Exact line-restricted checks of the two resultant factorizations in gamma.

Along a line with one of u, v frozen at a random rational, both sides are
univariate polynomials of bounded degree; agreement at more points than that
bound proves equality on the line.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .appendix import GAMMA, build_appendix
from .poly import ExactPoly
from .univariate import bareiss_det, sylvester


@dataclass(frozen=True)
class Identity:
    name: str
    p: ExactPoly
    q: ExactPoly
    rhs: ExactPoly


@dataclass
class IdentityReport:
    name: str
    passed: bool
    lines: int = 0
    points: int = 0
    points_per_line: dict = field(default_factory=dict)
    degree_bounds: dict = field(default_factory=dict)
    failure: dict | None = None
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "lines": self.lines,
            "points": self.points,
            "points_per_line": self.points_per_line,
            "degree_bounds": self.degree_bounds,
            "failure": self.failure,
            "seconds": self.seconds,
        }


def v_total_derivative(p: ExactPoly) -> ExactPoly:
    """``v * d/dv p(v**γ, v, γ)`` written back as a polynomial in (u, v, γ)."""
    u, v, g = ExactPoly.var("u"), ExactPoly.var("v"), ExactPoly.var(GAMMA)
    return v * p.diff("v") + g * u * p.diff("u")


def identities() -> list[Identity]:
    u, v = ExactPoly.var("u"), ExactPoly.var("v")
    h3 = build_appendix("H3")
    r1 = build_appendix("R1")
    r2 = build_appendix("R2")
    rhs_v = (33554432 * u**11 * v**6 * (v**2 - 1) ** 25 * (u * v - 1) ** 25 * (u - v) ** 25
             * (u**2 - 1) * r1)
    rhs_g = (-4096 * (v**2 - 1) ** 25 * u**11 * v**2 * (2 * u**2 * v + u * v**2 + u + 2 * v)
             * (u * v - 1) ** 20 * (u - v) ** 20 * r2)
    return [
        Identity("Res(H3, v*dH3/dv, γ)", h3, v_total_derivative(h3), rhs_v),
        Identity("Res(H3, dH3/dγ, γ)", h3, h3.diff(GAMMA), rhs_g),
    ]


def degree_bound(ident: Identity, var: str) -> int:
    m, n = ident.p.degree(GAMMA), ident.q.degree(GAMMA)
    lhs = ident.p.degree(var) * n + ident.q.degree(var) * m
    return max(lhs, ident.rhs.degree(var))


def _line_tables(ident: Identity, frozen: str, value, free: str):
    def table(poly):
        spec = poly.substitute({frozen: value})
        return [c.univariate_coeffs(free) if c.terms else [] for c in spec.coefficients_in(GAMMA)]

    m, n = ident.p.degree(GAMMA), ident.q.degree(GAMMA)
    pt, qt = table(ident.p), table(ident.q)
    pt += [[]] * (m + 1 - len(pt))
    qt += [[]] * (n + 1 - len(qt))
    rhs = ident.rhs.substitute({frozen: value})
    rc = rhs.univariate_coeffs(free) if rhs.terms else []
    return pt, qt, rc


def _integerize(tables: list[list]) -> tuple[list[list[int]], int]:
    """Scale a family of coefficient lists by one positive integer to clear denominators."""
    den = 1
    for t in tables:
        for c in t:
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
    return [[int(c * den) for c in t] for t in tables], den


def _hom(coeffs: list[int], n: int, d: int, deg: int) -> int:
    """``d**deg * sum c_k (n/d)**k`` as an exact integer."""
    acc = 0
    dpow = d ** (deg - len(coeffs) + 1) if coeffs else 0
    for c in reversed(coeffs):
        acc = acc * n + c * dpow
        dpow *= d
    return acc


def _random_rational(rng: random.Random, lo: int, hi: int, den: int = 97) -> Fraction:
    return Fraction(rng.randint(lo * den + 1, hi * den - 1), den)


def check_identity(ident: Identity, rng: random.Random, lines: int = 20) -> IdentityReport:
    t0 = time.perf_counter()
    bounds = {"u": degree_bound(ident, "u"), "v": degree_bound(ident, "v")}
    rep = IdentityReport(ident.name, True, degree_bounds=bounds)
    for free, frozen in (("u", "v"), ("v", "u")):
        need = bounds[free] + 1
        rep.points_per_line[free] = need
        for _ in range(lines):
            # points with 1 < v < u; the identity itself is polynomial so any line works
            if frozen == "v":
                value = _random_rational(rng, 1, 6)
                xs = {value + 1 + Fraction(k, 3) + Fraction(rng.randint(1, 9), 101) for k in range(need)}
            else:
                value = _random_rational(rng, 60, 200)
                xs = set()
                while len(xs) < need:
                    xs.add(1 + (value - 1) * Fraction(rng.randint(1, 10**6 - 1), 10**6))
            pt, qt, rc = _line_tables(ident, frozen, value, free)
            (pi, sp), (qi, sq), (ri, sr) = _integerize(pt), _integerize(qt), _integerize([rc])
            dp = max(len(c) for c in pi) - 1
            dq = max(len(c) for c in qi) - 1
            dr = len(ri[0]) - 1
            m, n = len(pi) - 1, len(qi) - 1
            for x in sorted(xs):
                xn, xd = x.numerator, x.denominator
                res = bareiss_det(sylvester([_hom(c, xn, xd, dp) for c in pi], [_hom(c, xn, xd, dq) for c in qi]))
                # res = Res(p, q) * (sp * xd**dp)**n * (sq * xd**dq)**m ; rhs = value * sr * xd**dr
                lhs_scaled = res * sr * xd**dr
                rhs_scaled = _hom(ri[0], xn, xd, dr) * (sp * xd**dp) ** n * (sq * xd**dq) ** m
                rep.points += 1
                if lhs_scaled != rhs_scaled:
                    rep.passed = False
                    rep.failure = {frozen: str(value), free: str(x)}
                    rep.seconds = time.perf_counter() - t0
                    return rep
            rep.lines += 1
    rep.seconds = time.perf_counter() - t0
    return rep


def verify_resultant_identities(seed: int = 0, lines: int = 20) -> list[IdentityReport]:
    rng = random.Random(seed)
    return [check_identity(ident, rng, lines) for ident in identities()]
