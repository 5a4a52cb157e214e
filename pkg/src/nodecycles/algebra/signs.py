"""Grid checks of the sign claims used in the double-root argument.

Every quantity is written as a polynomial in (u, v, γ) and evaluated with
u = v**γ. Terms are summed in the log domain, scaled by the largest one, so
no overflow occurs; points where cancellation makes the double-precision sum
untrustworthy are recomputed with mpmath at increasing precision. H31 is a
plain polynomial in (u, v) and is evaluated exactly at rational points.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from ..errors import SignViolation
from .appendix import GAMMA, build_appendix
from .poly import ExactPoly

# |sum| must exceed this multiple of sum|terms| for the float sign to be trusted
SCREEN = 1e-9
MP_LEVELS = (60, 150, 400)
U_STAR_FLOOR = Fraction(7555, 100)  # just above the isolated root of R1(u,1)


def _vars():
    return ExactPoly.var("u"), ExactPoly.var("v"), ExactPoly.var(GAMMA)


def f_d() -> ExactPoly:
    u, v, g = _vars()
    return g * v**2 - 2 * u * v + v**2 - g + 1


def f_n() -> ExactPoly:
    u, v, g = _vars()
    return g * u * v**2 - u**2 * v - g * u + v


def f_1() -> ExactPoly:
    u, v, g = _vars()
    return ((g - 1) * v**2 - g - 1) * u**2 + (g + 1) * v**2 - g + 1


def f_2() -> ExactPoly:
    return f_d()


def h11(as_printed: bool = False) -> ExactPoly:
    """H11 with u = v**γ left symbolic.

    The printed display carries two sign slips in the u**5 coefficient (it
    breaks the symmetry coef_(6-i)(v) = -v**10 coef_i(1/v) and gives
    H11(1, γ) = 32(1 - γ) instead of 0); the default is the form re-derived
    from H1 = u (F_v G_u - F_u G_v). ``as_printed=True`` returns the display.
    """
    u, v, g = _vars()
    if as_printed:
        u5 = -((g + 15) * (g + 1) * v**6 - (g - 1) * (g - 15) * v**4 + (g**2 - 1) * v**2)
    else:
        u5 = -((g + 15) * (g + 1) * v**6 + (g - 1) * (g - 15) * v**4 - (g**2 - 1) * v**2)
    return (
        8 * u**6 * v**5
        + (g**2 - 1) * u**5 * v**8
        + u5 * u**5
        + (-4 * g * (g - 1) * v**9 + 12 * (g + 1) ** 2 * v**7 - 16 * (g**2 - 1) * v**5
           + 12 * (g - 1) ** 2 * v**3 - 4 * g * (g + 1) * v) * u**4
        + (g * (g**2 - 1) * v**10 - g * (5 * g**2 + 27) * v**8 + 10 * g * (g**2 - 1) * v**6
           - 10 * g * (g**2 - 1) * v**4 + g * (5 * g**2 + 27) * v**2 - g * (g**2 - 1)) * u**3
        + (4 * g * (g + 1) * v**9 - 12 * (g - 1) ** 2 * v**7 + 16 * (g**2 - 1) * v**5
           - 12 * (g + 1) ** 2 * v**3 + 4 * g * (g - 1) * v) * u**2
        + (-(g**2 - 1) * v**8 + (g - 1) * (g - 15) * v**6 + (g + 15) * (g + 1) * v**4
           - (g**2 - 1) * v**2) * u
        - 8 * v**5
    )


def h21_numerator() -> ExactPoly:
    """``v (u^2 - 1) H21``; same sign as H21 whenever u > 1."""
    u, v, g = _vars()
    a = (u * v**2 + u - 2 * v) * (2 * u * v - v**2 - 1)
    b = v * (v**2 - 1) * (u**2 - 1)
    return u * (b * g - a) ** 2 + a * (u * v - 1) ** 2 * (u - v) ** 2


def h3() -> ExactPoly:
    return build_appendix("H3")


def h31() -> ExactPoly:
    return build_appendix("H31")


# -- evaluation


class TermTable:
    """Flat term arrays of a polynomial in (u, v, γ) for vectorised evaluation."""

    def __init__(self, p: ExactPoly):
        names = p.variables
        idx = {n: names.index(n) if n in names else None for n in ("u", "v", GAMMA)}
        self.poly = p
        rows = []
        for e, c in p.terms.items():
            a = e[idx["u"]] if idx["u"] is not None else 0
            b = e[idx["v"]] if idx["v"] is not None else 0
            k = e[idx[GAMMA]] if idx[GAMMA] is not None else 0
            rows.append((float(abs(c)), 1.0 if c > 0 else -1.0, a, b, k, c))
        self.logc = np.log(np.array([r[0] for r in rows]))
        self.sign = np.array([r[1] for r in rows])
        self.a = np.array([r[2] for r in rows], dtype=float)
        self.b = np.array([r[3] for r in rows], dtype=float)
        self.k = np.array([r[4] for r in rows], dtype=float)
        self.kint = np.array([r[4] for r in rows], dtype=int)
        self.exact = [(r[5], r[2], r[3], r[4]) for r in rows]

    def scaled(self, v: np.ndarray, g: np.ndarray):
        """(value, sum|terms|), both divided by the largest |term|, at u = v**g."""
        lv = np.log(v)[:, None]
        gg = g[:, None]
        logt = self.logc[None, :] + (self.a[None, :] * gg + self.b[None, :]) * lv \
            + self.k[None, :] * np.log(np.abs(gg))
        sgn = self.sign[None, :] * np.where((self.kint[None, :] % 2 == 1) & (gg < 0), -1.0, 1.0)
        top = logt.max(axis=1, keepdims=True)
        mag = np.exp(logt - top)
        return (sgn * mag).sum(axis=1), mag.sum(axis=1)

    def mp_sign(self, v: float, g: float) -> tuple[int, float]:
        """Sign and relative size at high precision; falls back through MP_LEVELS."""
        for dps in MP_LEVELS:
            with mpmath.workdps(dps):
                vm, gm = mpmath.mpf(v), mpmath.mpf(g)
                um = vm**gm
                total = mpmath.mpf(0)
                absum = mpmath.mpf(0)
                for c, a, b, k in self.exact:
                    t = mpmath.mpf(c) * um**a * vm**b * gm**k
                    total += t
                    absum += abs(t)
                rel = abs(total) / absum if absum else mpmath.mpf(0)
                if rel > mpmath.mpf(10) ** (-(dps - 15)):
                    return (1 if total > 0 else -1), float(rel)
        return 0, 0.0


@dataclass
class ClaimResult:
    name: str
    expect: str
    points: int = 0
    fallbacks: int = 0
    zeros: int = 0
    violations: int = 0
    witness: dict | None = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "expect": self.expect,
            "passed": self.passed,
            "points": self.points,
            "mp_fallbacks": self.fallbacks,
            "zeros": self.zeros,
            "violations": self.violations,
            "witness": self.witness,
            "seconds": self.seconds,
        }


@dataclass
class SignReport:
    grid: "GridSpec"
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def as_dict(self) -> dict:
        return {"passed": self.passed, "grid": self.grid.as_dict(), "claims": [c.as_dict() for c in self.claims]}


@dataclass(frozen=True)
class GridSpec:
    """Log-spaced sampling; offsets from the boundary run over [lo, hi] decades."""

    n: int = 200
    lo: float = -2.0
    hi: float = 2.0

    def offsets(self) -> np.ndarray:
        return np.logspace(self.lo, self.hi, self.n)

    def as_dict(self) -> dict:
        return {"n": self.n, "log10_offset_range": [self.lo, self.hi]}


def _ok(sign: int, expect: str) -> bool:
    return {"<0": sign < 0, ">0": sign > 0, "<=0": sign <= 0}[expect]


def check_claim(name: str, poly: ExactPoly, expect: str, vs: np.ndarray, gs: np.ndarray) -> ClaimResult:
    """Sign claim over the tensor grid vs x gs (u = v**γ)."""
    t0 = time.perf_counter()
    table = TermTable(poly)
    res = ClaimResult(name, expect)
    V, G = np.meshgrid(vs, gs, indexing="ij")
    V, G = V.ravel(), G.ravel()
    chunk = max(1, 2_000_000 // max(1, len(table.exact)))
    for s in range(0, len(V), chunk):
        vv, gg = V[s:s + chunk], G[s:s + chunk]
        val, mag = table.scaled(vv, gg)
        trusted = np.abs(val) > SCREEN * mag
        signs = np.sign(val).astype(int)
        for i in np.nonzero(~trusted)[0]:
            res.fallbacks += 1
            signs[i], _ = table.mp_sign(float(vv[i]), float(gg[i]))
        res.points += len(vv)
        res.zeros += int((signs == 0).sum())
        bad = np.nonzero([not _ok(int(x), expect) for x in signs])[0]
        if len(bad):
            res.violations += len(bad)
            if res.witness is None:
                i = bad[0]
                res.witness = {"v": float(vv[i]), GAMMA: float(gg[i]), "sign": int(signs[i])}
    res.seconds = time.perf_counter() - t0
    return res


def check_h31(grid: GridSpec) -> ClaimResult:
    """H31(u, v) > 0 exactly at rational points with 1 < v < u, u > u*."""
    t0 = time.perf_counter()
    res = ClaimResult("H31 > 0 (so H3(u,v,γ̄2) < 0), 1<v<u, u>u*", ">0")
    p = h31()
    cu = p.coefficients_in("u")
    dense = [c.univariate_coeffs("v") if c.terms else [] for c in cu]
    us = [U_STAR_FLOOR + Fraction(x).limit_denominator(10**6) for x in grid.offsets()]
    fr = np.logspace(-3, math.log10(1 - 1e-3), grid.n)
    for u in us:
        for f in fr:
            v = 1 + (u - 1) * Fraction(float(f)).limit_denominator(10**6)
            coeffs = [sum(c * v**j for j, c in enumerate(cv)) for cv in dense]
            val = sum(c * u**i for i, c in enumerate(coeffs))
            res.points += 1
            if not val > 0:
                res.violations += 1
                if res.witness is None:
                    res.witness = {"u": str(u), "v": str(v), "value": str(val)}
    res.seconds = time.perf_counter() - t0
    return res


def verify_sign_claims(grid: GridSpec | None = None, raise_on_fail: bool = False) -> SignReport:
    grid = grid or GridSpec()
    off = grid.offsets()
    pos = 1.0 + off                       # v > 1 and γ > 1
    vin = 1.0 - np.logspace(-2, math.log10(0.999), grid.n)   # 0 < v < 1
    neg = -1.0 - off                      # γ < -1
    report = SignReport(grid)
    report.claims.append(check_claim("F_d < 0 (v, γ > 1)", f_d(), "<0", pos, pos))
    report.claims.append(check_claim("F_n < 0 (v, γ > 1)", f_n(), "<0", pos, pos))
    report.claims.append(check_claim("F_1 > 0 (0 < v < 1, γ < -1)", f_1(), ">0", vin, neg))
    report.claims.append(check_claim("F_2 < 0 (0 < v < 1, γ < -1)", f_2(), "<0", vin, neg))
    report.claims.append(check_claim("H_21 > 0 (v, γ > 1)", h21_numerator(), ">0", pos, pos))
    report.claims.append(check_claim("H_11 > 0 (v, γ > 1), so H_1 < 0", h11(), ">0", pos, pos))
    report.claims.append(check_claim("H_3 <= 0 (v, γ > 1)", h3(), "<=0", pos, pos))
    report.claims.append(check_h31(grid))
    if raise_on_fail and not report.passed:
        bad = next(c for c in report.claims if not c.passed)
        raise SignViolation(bad.name, bad.witness or {})
    return report


# name used by the published interface
verify_section42_signs = verify_sign_claims
