"""Poincaré half-maps of the two subsystems.

Both half-maps come from one parametric curve.  Writing ``a = (gamma-1)*tau``
and ``c = (gamma+1)*tau``, the ordinate reached after transit time ``tau`` is
``alpha * g(tau)`` with::

    g(tau) = ((gamma+1) e^a - (gamma-1) e^c - 2) / ((gamma**2-1) (e^a - e^c))

The left map is ``(y0, y1) = (alpha_l g(t), alpha_l g(-t))`` for ``t > 0``; the
inverse right map is the same with ``s < 0`` and a ``+b`` shift.  ``g`` is
strictly increasing on the whole real line with ``g(0) = 0`` and ``g'(0) = 1/2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, DomainError, OutOfDomain
from .model import Side, SystemParams

TAU_CAP = 700.0
ENDPOINT_GUARD = 1e-12
_SMALL_TAU = 0.5
_BISECT_ITERS = 80
_VEC_BISECT_ITERS = 32

# Taylor coefficients of phi2(z) = (e^z - 1 - z) / z**2
_PHI2 = [1.0 / math.factorial(k + 2) for k in range(14)]


class UpperBranch(str, enum.Enum):
    LEFT_ASYMPTOTE = "left_asymptote"
    RIGHT_ASYMPTOTE = "right_asymptote"
    INFINITE = "infinite"


@dataclass(frozen=True)
class HalfMapSample:
    tau: float
    y0: float
    y1: float


@dataclass(frozen=True)
class SuccessorDomain:
    y0_min: float
    y0_max: float
    active_upper_branch: UpperBranch

    @property
    def empty(self) -> bool:
        return not self.y0_min < self.y0_max

    def contains(self, y0: float, guard: float = ENDPOINT_GUARD) -> bool:
        lo = self.y0_min + guard * max(1.0, abs(self.y0_min))
        if not y0 > lo:
            return False
        if math.isinf(self.y0_max):
            return math.isfinite(y0)
        return y0 < self.y0_max - guard * max(1.0, abs(self.y0_max))


@dataclass(frozen=True)
class OriginSeries:
    d1: float
    d2: float
    d3: float
    d4: float


# ---------------------------------------------------------------- g(tau)


def _phi2(z: float) -> float:
    if abs(z) < 0.2:
        acc = 0.0
        for c in reversed(_PHI2):
            acc = acc * z + c
        return acc
    return (math.expm1(z) - z) / (z * z)


def g_scalar(gamma: float, tau: float) -> float:
    """Normalised half-map ordinate ``y / alpha`` after transit time ``tau``."""
    if tau == 0.0:
        return 0.0
    a = (gamma - 1.0) * tau
    c = (gamma + 1.0) * tau
    if abs(tau) < _SMALL_TAU:
        # first-order terms cancel analytically
        num = tau * tau * ((gamma - 1.0) * _phi2(a) - (gamma + 1.0) * _phi2(c))
        den = -math.exp(a) * math.expm1(2.0 * tau)
        return num / den
    m = max(a, c)
    ea = math.exp(a - m)
    ec = math.exp(c - m)
    try:
        em = math.exp(-m)
    except OverflowError:
        return math.copysign(math.inf, tau)
    num = (gamma + 1.0) * ea - (gamma - 1.0) * ec - 2.0 * em
    return num / ((gamma * gamma - 1.0) * (ea - ec))


def _phi2_vec(z: np.ndarray) -> np.ndarray:
    small = np.abs(z) < 0.2
    out = np.empty_like(z)
    zs = z[small]
    acc = np.zeros_like(zs)
    for c in reversed(_PHI2):
        acc = acc * zs + c
    out[small] = acc
    zl = z[~small]
    out[~small] = (np.expm1(zl) - zl) / (zl * zl)
    return out


def g_vec(gamma: float, tau) -> np.ndarray:
    """Vectorised :func:`g_scalar`."""
    tau = np.asarray(tau, dtype=float)
    out = np.zeros_like(tau)
    a = (gamma - 1.0) * tau
    c = (gamma + 1.0) * tau
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        small = (np.abs(tau) < _SMALL_TAU) & (tau != 0.0)
        ts, as_, cs = tau[small], a[small], c[small]
        num = ts * ts * ((gamma - 1.0) * _phi2_vec(as_) - (gamma + 1.0) * _phi2_vec(cs))
        out[small] = num / (-np.exp(as_) * np.expm1(2.0 * ts))
        big = np.abs(tau) >= _SMALL_TAU
        ab, cb = a[big], c[big]
        m = np.maximum(ab, cb)
        ea = np.exp(ab - m)
        ec = np.exp(cb - m)
        em = np.exp(-m)
        num = (gamma + 1.0) * ea - (gamma - 1.0) * ec - 2.0 * em
        vals = num / ((gamma * gamma - 1.0) * (ea - ec))
        vals = np.where(np.isnan(vals), np.copysign(np.inf, tau[big]), vals)
        out[big] = vals
    return out


def g_limit(gamma: float, sign: float) -> float:
    """Limit of ``g`` as ``tau -> sign * inf``; ``inf`` when unbounded."""
    if sign > 0:
        return 1.0 / (gamma + 1.0) if gamma > 0 else math.inf
    return 1.0 / (gamma - 1.0) if gamma < 0 else -math.inf


def invert_g(gamma: float, w: float) -> float:
    """Transit time ``tau`` with ``g(tau) = w``; ``tau`` has the sign of ``w``."""
    if w == 0.0:
        return 0.0
    sgn = 1.0 if w > 0 else -1.0
    lim = g_limit(gamma, sgn)
    if not abs(w) < abs(lim):
        raise OutOfDomain(f"target {w!r} beyond half-map asymptote {lim!r}")
    target = abs(w)

    def h(t):
        return sgn * g_scalar(gamma, sgn * t)

    lo, hi = target, 4.0 * target
    while h(lo) > target:
        lo *= 0.25
        if lo == 0.0:
            return 0.0
    while h(hi) < target:
        lo = hi
        hi *= 2.0
        if hi > TAU_CAP:
            if h(TAU_CAP) < target:
                raise ConvergenceFailure("transit time exceeds the 700 cap near an asymptote")
            hi = TAU_CAP
    for _ in range(_BISECT_ITERS):
        mid = math.sqrt(lo * hi) if hi > 2.0 * lo else 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if h(mid) < target:
            lo = mid
        else:
            hi = mid
    tau = lo if abs(h(lo) - target) <= abs(h(hi) - target) else hi
    return sgn * tau


def invert_g_vec(gamma: float, w) -> np.ndarray:
    """Vectorised :func:`invert_g`; entries with no solution come back as nan."""
    w = np.asarray(w, dtype=float)
    sgn = np.where(w >= 0, 1.0, -1.0)
    target = np.abs(w)
    lim_pos, lim_neg = abs(g_limit(gamma, 1.0)), abs(g_limit(gamma, -1.0))
    lim = np.where(sgn > 0, lim_pos, lim_neg)
    ok = (target < lim) & (target > 0)
    tgt = np.where(ok, target, 1.0)

    def h(t):
        return sgn * g_vec(gamma, sgn * t)

    lo = tgt.copy()
    hi = 4.0 * tgt
    for _ in range(1100):
        bad = h(lo) > tgt
        if not bad.any():
            break
        lo = np.where(bad, lo * 0.25, lo)
    for _ in range(64):
        bad = (h(hi) < tgt) & (hi < TAU_CAP)
        if not bad.any():
            break
        lo = np.where(bad, hi, lo)
        hi = np.where(bad, np.minimum(2.0 * hi, TAU_CAP), hi)
    ok &= h(hi) >= tgt
    for _ in range(_VEC_BISECT_ITERS):
        mid = np.where(hi > 2.0 * lo, np.sqrt(lo * hi), 0.5 * (lo + hi))
        below = h(mid) < tgt
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    hlo, hhi = h(lo), h(hi)
    with np.errstate(all="ignore"):
        for _ in range(2):
            # secant inside the (already tight) bracket, clipped so it never leaves it
            frac = np.clip((tgt - hlo) / (hhi - hlo), 0.0, 1.0)
            mid = np.where(np.isfinite(frac), lo + frac * (hi - lo), 0.5 * (lo + hi))
            hm_ = h(mid)
            below = hm_ < tgt
            lo, hlo = np.where(below, mid, lo), np.where(below, hm_, hlo)
            hi, hhi = np.where(below, hi, mid), np.where(below, hhi, hm_)
    tau = np.where(np.abs(hlo - tgt) <= np.abs(hhi - tgt), lo, hi)
    out = sgn * tau
    out = np.where(target == 0, 0.0, out)
    return np.where(ok | (target == 0), out, np.nan)


# ---------------------------------------------------------------- samples


def left_sample(p: SystemParams, t: float) -> HalfMapSample:
    if not t > 0:
        raise DomainError(f"left transit time must be positive, got {t!r}")
    a = p.alpha_l
    return HalfMapSample(t, a * g_scalar(p.gamma_l, t), a * g_scalar(p.gamma_l, -t))


def right_sample(p: SystemParams, s: float) -> HalfMapSample:
    if not s < 0:
        raise DomainError(f"right transit time must be negative, got {s!r}")
    a = p.alpha_r
    return HalfMapSample(s, a * g_scalar(p.gamma_r, s) + p.b, a * g_scalar(p.gamma_r, -s) + p.b)


# ---------------------------------------------------------------- domains


def left_upper(p: SystemParams) -> float:
    """Upper end of the left half-map domain (``inf`` for gamma_l < 0)."""
    return p.alpha_l / (p.gamma_l + 1.0) if p.gamma_l > 0 else math.inf


def right_upper(p: SystemParams) -> float:
    """Upper end of the right inverse half-map domain (``inf`` for gamma_r > 0)."""
    return p.alpha_r / (p.gamma_r - 1.0) + p.b if p.gamma_r < 0 else math.inf


def _reject_outside(y0: float, lo: float, hi: float, what: str) -> None:
    guard_lo = lo + ENDPOINT_GUARD * max(1.0, abs(lo))
    guard_hi = hi - ENDPOINT_GUARD * max(1.0, abs(hi)) if math.isfinite(hi) else math.inf
    if not (guard_lo < y0 < guard_hi):
        raise OutOfDomain(f"y0 = {y0!r} outside the {what} domain ({lo!r}, {hi!r})")


def left_map(p: SystemParams, y0: float) -> tuple[float, float]:
    """``(P_L(y0), t)``; ``y0 = 0`` maps to ``(0, 0)`` by continuity."""
    if y0 == 0.0:
        return 0.0, 0.0
    if p.alpha_l <= 0:
        raise OutOfDomain("left half-map needs alpha_l > 0")
    _reject_outside(y0, 0.0, left_upper(p), "left half-map")
    t = invert_g(p.gamma_l, y0 / p.alpha_l)
    return p.alpha_l * g_scalar(p.gamma_l, -t), t


def right_inverse_map(p: SystemParams, y0: float) -> tuple[float, float]:
    """``(P_R^{-1}(y0), s)``; ``y0 = b`` maps to ``(b, 0)`` by continuity."""
    if y0 == p.b:
        return p.b, 0.0
    if p.alpha_r >= 0:
        raise OutOfDomain("right half-map needs alpha_r < 0")
    _reject_outside(y0, p.b, right_upper(p), "right half-map")
    s = invert_g(p.gamma_r, (y0 - p.b) / p.alpha_r)
    return p.alpha_r * g_scalar(p.gamma_r, -s) + p.b, s


def left_map_vec(p: SystemParams, y0) -> tuple[np.ndarray, np.ndarray]:
    t = invert_g_vec(p.gamma_l, np.asarray(y0, dtype=float) / p.alpha_l)
    return p.alpha_l * g_vec(p.gamma_l, -t), t


def right_inverse_map_vec(p: SystemParams, y0) -> tuple[np.ndarray, np.ndarray]:
    s = invert_g_vec(p.gamma_r, (np.asarray(y0, dtype=float) - p.b) / p.alpha_r)
    return p.alpha_r * g_vec(p.gamma_r, -s) + p.b, s


def extended_map(gamma: float, alpha: float, y: float) -> float:
    """Analytic continuation of a half-map through its fixed endpoint.

    For ``y`` on the far side of the endpoint this is the inverse half-map,
    which is what the single parametric curve gives for negative times.
    Offsets (``b``) are the caller's business.
    """
    if y == 0.0:
        return 0.0
    tau = invert_g(gamma, y / alpha)
    return alpha * g_scalar(gamma, -tau)


def domain(p: SystemParams) -> SuccessorDomain:
    """Open interval of upper ordinates on which both half-maps are defined."""
    lo = max(0.0, p.b)
    lu, ru = left_upper(p), right_upper(p)
    if math.isinf(lu) and math.isinf(ru):
        return SuccessorDomain(lo, math.inf, UpperBranch.INFINITE)
    if lu <= ru:
        return SuccessorDomain(lo, lu, UpperBranch.LEFT_ASYMPTOTE)
    return SuccessorDomain(lo, ru, UpperBranch.RIGHT_ASYMPTOTE)


def origin_series(p: SystemParams, side: Side) -> OriginSeries:
    """First four derivatives of a half-map at its fixed endpoint.

    The fourth comes from inverting the parametric series directly; the
    often-quoted ``-32 g (23 g^2 + 9) / (9 a^3)`` disagrees with finite
    differences by roughly a third.
    """
    sub = p.subsystem(side)
    g, a = sub.gamma, sub.alpha
    return OriginSeries(
        -1.0,
        -8.0 * g / (3.0 * a),
        -32.0 * g * g / (3.0 * a * a),
        -32.0 * g * (79.0 * g * g + 9.0) / (45.0 * a**3),
    )
