"""Successor function ``d(y0; b) = P_R^{-1}(y0; b) - P_L(y0)`` and its zeros.

Zeros of ``d`` on the open domain are crossing limit cycles.  ``d' < 0`` means
stable, ``d' > 0`` unstable; at a double zero the sign of ``d''`` tells which
side attracts.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import halfmaps as hm
from .errors import (
    ConvergenceFailure,
    NoSmallCycle,
    NotADoubleRoot,
    OutOfDomain,
    RequiresRefracting,
    ResidualTooLarge,
)
from .model import SystemParams, validate_for_cycles

GRID_POINTS = 2048
FAR_TRANSIT = 30.0
# on an unbounded domain the scan stops this many alpha/b scales above the lower end
FAR_SCALE = 1e4
ROOT_XTOL = 1e-12
DOUBLE_D_TOL = 1e-9
DOUBLE_DP_TOL = 1e-7
SYMMETRY_TOL = 1e-12
# grid values of d below this multiple of eps * (|y0| + |b|) carry no sign information
NOISE_ULPS = 256.0


class Stability(str, enum.Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"
    SEMI_INNER_STABLE = "semi_inner_stable"
    SEMI_INNER_UNSTABLE = "semi_inner_unstable"


@dataclass(frozen=True)
class Discriminants:
    delta1: float
    delta2: float
    delta3: float


@dataclass(frozen=True)
class CycleRoot:
    y0_star: float
    multiplicity: int
    stability: Stability
    d_residual: float
    dprime: float
    dsecond: float | None = None

    def as_dict(self) -> dict:
        return {
            "y0": self.y0_star,
            "multiplicity": self.multiplicity,
            "stability": self.stability.value,
            "d_residual": self.d_residual,
            "dprime": self.dprime,
            "dsecond": self.dsecond,
        }


@dataclass(frozen=True)
class SectionCoords:
    v_l: float
    v_r: float
    u_l: float
    u_r: float
    m_l: float
    m_r: float


@dataclass(frozen=True)
class RegimePrediction:
    """Theorem-level prediction; ``exact`` is False when only an upper bound is known."""

    count: int
    exact: bool
    tag: str
    stability: Stability | None = None


@dataclass
class Regime:
    b_from: float
    b_to: float
    count: int
    signature: tuple[str, ...]


@dataclass
class BifurcationReport:
    b_m: float
    b_bar: float
    b_M: float
    b_tilde: float | None
    regimes: list[Regime] = field(default_factory=list)
    rows: list[tuple[float, list[CycleRoot] | None, str | None]] = field(default_factory=list)
    collisions: list[float] = field(default_factory=list)
    b_tilde_y0: float | None = None
    b_tilde_residuals: tuple[float, float] | None = None


# ---------------------------------------------------------------- discriminants


def discriminants(p: SystemParams) -> Discriminants:
    gl, gr, al, ar = p.gamma_l, p.gamma_r, p.alpha_l, p.alpha_r
    return Discriminants(
        gl / al - gr / ar,
        ar / (gr - 1.0) - al / (gl + 1.0),
        ar / (gr + 1.0) - al / (gl - 1.0),
    )


def taylor_d0(p: SystemParams) -> tuple[float, float, float]:
    """Coefficients of y0**2, y0**3, y0**4 in d(y0; 0) about the origin."""
    if p.b != 0.0:
        raise RequiresRefracting("Taylor data of d is given for b = 0 only")
    gl, gr, al, ar = p.gamma_l, p.gamma_r, p.alpha_l, p.alpha_r
    c2 = 4.0 / 3.0 * (gl / al - gr / ar)
    c3 = 16.0 / 9.0 * (gl**2 / al**2 - gr**2 / ar**2)
    # fourth derivatives of the two half-maps differ, divided by 4!
    c4 = 4.0 / 135.0 * (gl * (79 * gl**2 + 9) / al**3 - gr * (79 * gr**2 + 9) / ar**3)
    return c2, c3, c4


# ---------------------------------------------------------------- d and its slopes


def d(p: SystemParams, y0: float) -> float:
    if not hm.domain(p).contains(y0):
        raise OutOfDomain(f"y0 = {y0!r} outside the successor domain")
    return hm.right_inverse_map(p, y0)[0] - hm.left_map(p, y0)[0]


def d_vec(p: SystemParams, y0) -> np.ndarray:
    """Vectorised ``d`` with no domain checks; failures come back as nan."""
    return d_and_prime_vec(p, y0)[0]


def _slope_vec(y0: np.ndarray, y1: np.ndarray, gamma: float, tau: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        mag = np.exp(np.log(np.abs(y0)) - np.log(np.abs(y1)) + 2.0 * gamma * tau)
        return np.where((y0 > 0) != (y1 > 0), -mag, mag)


def d_and_prime_vec(p: SystemParams, y0) -> tuple[np.ndarray, np.ndarray]:
    """``(d, d')`` on an array of ordinates; nan wherever a map is undefined."""
    y0 = np.asarray(y0, dtype=float)
    yl, t = hm.left_map_vec(p, y0)
    yr, s = hm.right_inverse_map_vec(p, y0)
    dp = _slope_vec(y0 - p.b, yr - p.b, p.gamma_r, s) - _slope_vec(y0, yl, p.gamma_l, t)
    return yr - yl, dp


def _slope(y0: float, y1: float, gamma: float, tau: float) -> float:
    # orbit-derivative form: dy1/dy0 = (y0 / y1) * exp(trace * tau)
    if y0 == 0.0:
        return -1.0
    if y1 == 0.0 or math.isinf(y1):
        return 0.0 if math.isinf(y1) else -math.inf
    sign = -1.0 if (y0 > 0) != (y1 > 0) else 1.0
    return sign * math.exp(math.log(abs(y0)) - math.log(abs(y1)) + 2.0 * gamma * tau)


def half_map_slopes(p: SystemParams, y0: float) -> tuple[float, float]:
    """Derivatives ``(P_L'(y0), (P_R^{-1})'(y0))``."""
    yl, t = hm.left_map(p, y0)
    yr, s = hm.right_inverse_map(p, y0)
    return _slope(y0, yl, p.gamma_l, t), _slope(y0 - p.b, yr - p.b, p.gamma_r, s)


def d_prime(p: SystemParams, y0: float) -> float:
    if not hm.domain(p).contains(y0):
        raise OutOfDomain(f"y0 = {y0!r} outside the successor domain")
    sl, sr = half_map_slopes(p, y0)
    return sr - sl


# section-coordinate functions of v = e^tau, u = v**gamma


def psi(v: float, gamma: float) -> float:
    return (gamma - 1.0) * v ** (gamma + 1.0) - (gamma + 1.0) * v ** (gamma - 1.0) + 2.0


def m_func(alpha: float, v: float, gamma: float) -> float:
    """``y1 - y0`` along a half-map, in section coordinates."""
    u = v**gamma
    return 2.0 * alpha * (u * v - 1.0) * (u - v) / (u * (gamma * gamma - 1.0) * (1.0 - v * v))


def f_func(v: float, gamma: float) -> float:
    """``dM/dy0``, i.e. the half-map slope minus one."""
    u = v**gamma
    num = (gamma - 1.0) * (u * u * v * v + 1.0) - gamma * (u * u + v * v) + 4.0 * u * v - u * u - v * v
    return num / (gamma * v * v - 2.0 * u * v + v * v - gamma + 1.0)


def g_func(v: float, gamma: float) -> float:
    """``M * dF/dy0``; divides by ``M`` to give the half-map curvature."""
    u = v**gamma
    fd = gamma * v * v - 2.0 * u * v + v * v - gamma + 1.0
    return (
        2.0 * u * (v * v - 1.0) ** 2 * (gamma * gamma - 1.0)
        * (gamma * u * v * v - u * u * v - gamma * u + v) * (u * v - 1.0) * (u - v)
        / (v * fd**3)
    )


def _times(p: SystemParams, y0: float) -> tuple[float, float]:
    _, t = hm.left_map(p, y0)
    _, s = hm.right_inverse_map(p, y0)
    return t, s


def d_second(p: SystemParams, y0: float) -> float:
    """``d''(y0)`` as a difference of half-map curvatures ``G/M``."""
    t, s = _times(p, y0)
    vl, vr = math.exp(t), math.exp(s)
    try:
        return (g_func(vr, p.gamma_r) / m_func(p.alpha_r, vr, p.gamma_r)
                - g_func(vl, p.gamma_l) / m_func(p.alpha_l, vl, p.gamma_l))
    except (OverflowError, ZeroDivisionError) as exc:
        raise ConvergenceFailure(f"curvature not representable at y0 = {y0!r}") from exc


def d_second_at_root(p: SystemParams, root: CycleRoot | float) -> float:
    y0 = root.y0_star if isinstance(root, CycleRoot) else float(root)
    dv, dp = d(p, y0), d_prime(p, y0)
    if abs(dv) > DOUBLE_D_TOL or abs(dp) > DOUBLE_DP_TOL:
        raise NotADoubleRoot(f"|d| = {abs(dv):.3g}, |d'| = {abs(dp):.3g} at y0 = {y0!r}")
    t, s = _times(p, y0)
    vl, vr = math.exp(t), math.exp(s)
    m = m_func(p.alpha_l, vl, p.gamma_l)
    return (g_func(vr, p.gamma_r) - g_func(vl, p.gamma_l)) / m


def section_coords(p: SystemParams, root: CycleRoot | float, tol: float = 1e-8) -> SectionCoords:
    y0 = root.y0_star if isinstance(root, CycleRoot) else float(root)
    t, s = _times(p, y0)
    vl, vr = math.exp(t), math.exp(s)
    ml = m_func(p.alpha_l, vl, p.gamma_l)
    mr = m_func(p.alpha_r, vr, p.gamma_r)
    if abs(ml - mr) > tol * max(1.0, abs(ml)):
        raise ResidualTooLarge(f"|M_L - M_R| = {abs(ml - mr):.3g} at y0 = {y0!r}")
    if not (psi(vl, p.gamma_l) > 0 and psi(vr, p.gamma_r) > 0):
        raise ResidualTooLarge("psi must be positive at both crossings")
    return SectionCoords(vl, vr, vl**p.gamma_l, vr**p.gamma_r, ml, mr)


# ---------------------------------------------------------------- root isolation


def _far_cap(p: SystemParams, lo: float) -> float:
    # past transit time FAR_TRANSIT a bounded half-map sits on its asymptote to ~1e-26;
    # an unbounded one grows like e**(|gamma| tau), so also cap in y, where d is
    # already linear in y0 with the alpha terms negligible
    yl = p.alpha_l * hm.g_scalar(p.gamma_l, FAR_TRANSIT)
    yr = p.alpha_r * hm.g_scalar(p.gamma_r, -FAR_TRANSIT) + p.b
    y_scale = max(abs(p.alpha_l), abs(p.alpha_r), abs(p.b))
    cap = min(yl, yr, lo + FAR_SCALE * y_scale)
    return cap if cap > lo else lo + 1.0


def scan_grid(p: SystemParams, n: int = GRID_POINTS) -> np.ndarray:
    """Points of the open domain, log-clustered toward both ends."""
    dom = hm.domain(p)
    lo, hi = dom.y0_min, dom.y0_max
    if math.isinf(hi):
        hi = _far_cap(p, lo)
        scale = max(1.0, abs(lo), abs(hi))
    else:
        scale = max(1.0, abs(lo), abs(hi))
    width = hi - lo
    gap = 4.0 * hm.ENDPOINT_GUARD * scale
    if width <= 4.0 * gap:
        return np.empty(0)
    half = n // 2
    w = np.geomspace(gap, 0.5 * width, half)
    pts = np.concatenate([lo + w, hi - w[::-1]])
    return np.unique(pts[(pts > lo + gap / 2) & (pts < hi - gap / 2)])


def _classify(p: SystemParams, y0: float, mult: int, dprime: float, dsecond: float | None) -> Stability:
    if mult == 2:
        return Stability.SEMI_INNER_STABLE if (dsecond or 0.0) > 0 else Stability.SEMI_INNER_UNSTABLE
    return Stability.STABLE if dprime < 0 else Stability.UNSTABLE


def _simple_root(p: SystemParams, a: float, b: float) -> CycleRoot:
    f = lambda y: d(p, y)
    y = brentq(f, a, b, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)
    dv, dp = d(p, y), d_prime(p, y)
    return CycleRoot(y, 1, _classify(p, y, 1, dp, None), dv, dp)


def is_center(p: SystemParams) -> bool:
    if p.b != 0.0:
        return False
    dl = discriminants(p)
    if p.gamma_l > 0 > p.gamma_r:
        return abs(dl.delta1) <= SYMMETRY_TOL and abs(dl.delta2) <= SYMMETRY_TOL
    if p.gamma_l < 0 < p.gamma_r:
        return abs(dl.delta1) <= SYMMETRY_TOL and abs(dl.delta3) <= SYMMETRY_TOL
    return False


def find_cycles(p: SystemParams, n: int = GRID_POINTS) -> list[CycleRoot]:
    """All zeros of ``d`` on the open domain, with multiplicity (<= 2) and stability.

    Sign changes on the grid bracket simple roots; local minima of ``|d|`` without
    a sign change are probed for double roots or a close pair of simple roots.
    """
    if not validate_for_cycles(p).ok or hm.domain(p).empty or is_center(p):
        return []
    ys = scan_grid(p, n)
    if ys.size < 3:
        return []
    with np.errstate(all="ignore"):
        ds, dps = d_and_prime_vec(p, ys)
    floor = NOISE_ULPS * np.finfo(float).eps * (np.abs(ys) + abs(p.b))
    keep = np.isfinite(ds) & (np.abs(ds) > floor)
    ys, ds, dps = ys[keep], ds[keep], dps[keep]
    if ys.size < 2:
        return []
    dom = hm.domain(p)
    roots: list[CycleRoot] = []

    def safe(y):
        return dom.contains(y)

    sgn = np.sign(ds)
    for i in range(len(ys) - 1):
        if sgn[i] == 0 and safe(ys[i]):
            dp = d_prime(p, ys[i])
            roots.append(CycleRoot(ys[i], 1, _classify(p, ys[i], 1, dp, None), 0.0, dp))
        elif sgn[i] * sgn[i + 1] < 0:
            try:
                roots.append(_simple_root(p, ys[i], ys[i + 1]))
            except (ValueError, ArithmeticError):
                continue

    ad = np.abs(ds)
    for i in range(1, len(ys) - 1):
        if not (ad[i] <= ad[i - 1] and ad[i] <= ad[i + 1]):
            continue
        if sgn[i - 1] != sgn[i] or sgn[i] != sgn[i + 1] or sgn[i] == 0:
            continue
        # a tangency needs d' to change sign across the minimum
        if np.isfinite(dps[i - 1]) and np.isfinite(dps[i + 1]) and dps[i - 1] * dps[i + 1] > 0:
            continue
        roots.extend(_probe_minimum(p, ys[i - 1], ys[i], ys[i + 1]))

    roots.sort(key=lambda r: r.y0_star)
    out: list[CycleRoot] = []
    for r in roots:
        if out and abs(r.y0_star - out[-1].y0_star) <= 1e-10 * max(1.0, abs(r.y0_star)):
            continue
        out.append(r)
    return out


def _probe_minimum(p: SystemParams, ya: float, ym: float, yb: float) -> list[CycleRoot]:
    try:
        da, db = d_prime(p, ya), d_prime(p, yb)
    except (ValueError, ArithmeticError):
        return []
    if da * db > 0:
        return []
    try:
        ye = brentq(lambda y: d_prime(p, y), ya, yb, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    except (ValueError, ArithmeticError):
        return []
    de = d(p, ye)
    side = d(p, ya)
    if de != 0.0 and np.sign(de) != np.sign(side):
        found = []
        for a, b in ((ya, ye), (ye, yb)):
            try:
                found.append(_simple_root(p, a, b))
            except (ValueError, ArithmeticError):
                pass
        return found
    dpe = d_prime(p, ye)
    if abs(de) <= DOUBLE_D_TOL and abs(dpe) <= DOUBLE_DP_TOL:
        try:
            dse = d_second(p, ye)
        except ConvergenceFailure:
            dse = None
        if dse is None or dse == 0.0 or np.sign(dse) != np.sign(side):
            return []
        return [CycleRoot(ye, 2, _classify(p, ye, 2, dpe, dse), de, dpe, dse)]
    return []


# ---------------------------------------------------------------- theorem predictions


def classify_regime(p: SystemParams) -> RegimePrediction:
    if not validate_for_cycles(p).ok:
        return RegimePrediction(0, True, "alar")
    if hm.domain(p).empty:
        return RegimePrediction(0, True, "empty-domain")
    dl = discriminants(p)
    gl, gr, b = p.gamma_l, p.gamma_r, p.b
    if b == 0.0:
        if gl * gr > 0:
            return RegimePrediction(0, True, "beq0lc(i)")
        if is_center(p):
            return RegimePrediction(0, True, "beq0lc(ii)")
        other, tag = (dl.delta2, "iii") if gl > 0 else (dl.delta3, "iv")
        if dl.delta1 * other < 0:
            stab = Stability.STABLE if other < 0 else Stability.UNSTABLE
            return RegimePrediction(1, True, f"beq0lc({tag})(b)", stab)
        return RegimePrediction(0, True, f"beq0lc({tag})(a)")
    if gl * gr > 0:
        if b * gr > 0:
            return RegimePrediction(0, True, "rlrrg0(i)")
        stab = Stability.STABLE if b > 0 else Stability.UNSTABLE
        return RegimePrediction(1, True, "rlrrg0(ii)", stab)
    if abs(gl + gr) <= SYMMETRY_TOL:
        stab = Stability.STABLE if b > 0 else Stability.UNSTABLE
        return RegimePrediction(1, False, "rl+rr=0", stab)
    return RegimePrediction(2, False, "at-most-two")


# ---------------------------------------------------------------- pseudo-Hopf


def pseudo_hopf_amplitude(family: SystemParams, b: float) -> float | None:
    """Upper ordinate of the small cycle born at the origin for this ``b``."""
    if not family.gamma_l > 0 > family.gamma_r:
        raise ValueError("pseudo-Hopf analysis assumes gamma_l > 0 > gamma_r")
    c2, _, c4 = taylor_d0(family.with_b(0.0))
    dl = discriminants(family)
    lead = c2 if dl.delta1 != 0.0 else c4
    if b == 0.0 or b * lead >= 0:
        raise NoSmallCycle(f"b * Delta1 = {b * dl.delta1!r} does not allow a small cycle")
    roots = find_cycles(family.with_b(b))
    return roots[0].y0_star if roots else None


# ---------------------------------------------------------------- scan over b


def thresholds(p: SystemParams) -> tuple[float, float, float]:
    """``(b_m, b_bar, b_M)``: domain-empty edge, upper-branch switch, domain-empty edge."""
    b_m = p.alpha_r / (1.0 - p.gamma_r)
    b_M = p.alpha_l / (p.gamma_l + 1.0)
    b_bar = p.alpha_l / (p.gamma_l + 1.0) - p.alpha_r / (p.gamma_r - 1.0)
    return b_m, b_bar, b_M


def _signature(roots: list[CycleRoot]) -> tuple[str, ...]:
    return tuple(r.stability.value for r in roots)


def locate_fold(p: SystemParams, y0: float, b: float, tol: float = 1e-10,
                max_iter: int = 60) -> tuple[float, float]:
    """Solve ``d = d' = 0`` in ``(y0, b)`` by damped Newton from a nearby guess."""
    q = p.with_b(b)
    for _ in range(max_iter):
        q = p.with_b(b)
        dv, dp = d(q, y0), d_prime(q, y0)
        sl, sr = half_map_slopes(q, y0)
        dd = d_second(q, y0)
        t, s = _times(q, y0)
        vr = math.exp(s)
        r_curv = g_func(vr, q.gamma_r) / m_func(q.alpha_r, vr, q.gamma_r)
        jac = np.array([[dp, 1.0 - sr], [dd, -r_curv]])
        try:
            step = np.linalg.solve(jac, [-dv, -dp])
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure("singular fold Jacobian") from exc
        lam = 1.0
        while lam > 1e-6:
            y_new, b_new = y0 + lam * step[0], b + lam * step[1]
            q_new = p.with_b(b_new)
            dom = hm.domain(q_new)
            if not dom.empty and dom.contains(y_new):
                try:
                    r_new = math.hypot(d(q_new, y_new), d_prime(q_new, y_new))
                except (ValueError, ArithmeticError):
                    r_new = math.inf
                if r_new < math.hypot(dv, dp) or lam < 1e-3:
                    break
            lam *= 0.5
        else:
            raise ConvergenceFailure("fold Newton could not make progress")
        y0, b = y_new, b_new
        if abs(step[1]) * lam <= tol and abs(step[0]) * lam <= tol * max(1.0, abs(y0)):
            q = p.with_b(b)
            return y0, b
    raise ConvergenceFailure("fold Newton did not converge")


def _interior_fold(q: SystemParams, y0: float, margin: float = 1e-6) -> bool:
    # the pseudo-Hopf point (y0, b) = (0, 0) also solves d = d' = 0 in the limit
    dom = hm.domain(q)
    return abs(q.b) > 1e-9 and not dom.empty and dom.contains(y0, guard=margin)


def scan_b(family: SystemParams, b_grid) -> BifurcationReport:
    b_m, b_bar, b_M = thresholds(family)
    report = BifurcationReport(b_m, b_bar, b_M, None)
    prev = None
    for b in b_grid:
        b = float(b)
        try:
            roots = find_cycles(family.with_b(b))
            err = None
        except Exception as exc:  # per-point failures are recorded, not fatal
            roots, err = None, f"{type(exc).__name__}: {exc}"
        report.rows.append((b, roots, err))
        if roots is None:
            continue
        count, sig = sum(r.multiplicity for r in roots), _signature(roots)
        if report.regimes and report.regimes[-1].count == count and report.regimes[-1].signature == sig:
            report.regimes[-1].b_to = b
        else:
            report.regimes.append(Regime(b, b, count, sig))
        if prev is not None and {prev[1], count} == {0, 2} and prev[0] * b >= 0:
            two = prev if prev[1] == 2 else (b, count, roots)
            ys = [r.y0_star for r in two[2]]
            guess = (0.5 * (ys[0] + ys[-1]), two[0])
            try:
                y_f, b_f = locate_fold(family, *guess)
                q = family.with_b(b_f)
                if not _interior_fold(q, y_f):
                    raise ConvergenceFailure("fold Newton collapsed onto the domain edge")
                report.collisions.append(b_f)
                report.b_tilde_y0 = y_f
                report.b_tilde_residuals = (float(d(q, y_f)), float(d_prime(q, y_f)))
            except (ValueError, ArithmeticError):
                pass
        prev = (b, count, roots)
    if report.collisions:
        report.b_tilde = report.collisions[0]
    return report
