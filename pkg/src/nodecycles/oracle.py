"""Independent check path: crossings located on the exact flow, full return map.

Nothing here touches the half-map parametrisation; crossings are found by
bracketing the sign change of ``x(tau)`` along :func:`nodecycles.model.flow`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NoReturn
from .model import PlanarState, Side, Subsystem, SystemParams, flow

TIME_CAP = 700.0


@dataclass(frozen=True)
class CrossingEvent:
    time: float
    state: PlanarState
    side_entered: Side


class Verdict(str, enum.Enum):
    ATTRACTING = "attracting"
    REPELLING = "repelling"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class IterationResult:
    verdict: Verdict
    inner: str
    outer: str


def cross_time(sub: Subsystem, y_start: float) -> CrossingEvent:
    """First return to ``x = 0`` of the orbit through ``(0, y_start)``."""
    entry = -y_start + sub.b
    if Side(sub.side) is Side.LEFT:
        if not entry < 0:
            raise ValueError(f"(0, {y_start!r}) does not enter x < 0")
        inside = -1.0
    else:
        if not entry > 0:
            raise ValueError(f"(0, {y_start!r}) does not enter x > 0")
        inside = 1.0
    start = PlanarState(0.0, y_start)

    def x_at(tau):
        try:
            return flow(sub, start, tau).x
        except OverflowError:
            return math.nan

    hi = 1e-3
    while True:
        xh = x_at(hi)
        if math.isnan(xh):
            raise NoReturn("flow overflowed before returning to x = 0")
        if xh * inside <= 0:
            break
        hi *= 2.0
        if hi > TIME_CAP:
            raise NoReturn(f"no return to x = 0 before tau = {TIME_CAP}")
    lo = 0.0
    while hi - lo > 1e-13 * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if x_at(mid) * inside > 0:
            lo = mid
        else:
            hi = mid
    tau = 0.5 * (lo + hi)
    st = flow(sub, start, tau)
    return CrossingEvent(tau, st, Side(sub.side))


def poincare_map(p: SystemParams, y0: float) -> float:
    """Full return map ``P_R(P_L(y0))`` on the switching line."""
    y1 = cross_time(p.left, y0).state.y
    if not y1 < p.b:
        raise NoReturn(f"left excursion lands at y = {y1!r}, not below b")
    return cross_time(p.right, y1).state.y


def orbit_samples(p: SystemParams, y0: float, turns: int, per_leg: int = 64):
    """``(t, x, y)`` rows along ``turns`` full revolutions starting at ``(0, y0)``."""
    rows = [(0.0, 0.0, y0)]
    t_total, y = 0.0, y0
    for _ in range(turns):
        for sub in (p.left, p.right):
            ev = cross_time(sub, y)
            start = PlanarState(0.0, y)
            for k in range(1, per_leg + 1):
                tau = ev.time * k / per_leg
                st = flow(sub, start, tau) if k < per_leg else PlanarState(0.0, ev.state.y)
                rows.append((t_total + tau, st.x, st.y))
            t_total += ev.time
            y = ev.state.y
            if sub.side is Side.LEFT and not y < p.b:
                raise NoReturn("orbit does not return through the right half-plane")
    return rows


def _side_trend(p: SystemParams, y_star: float, y_start: float, steps: int) -> str:
    e0 = abs(y_start - y_star)
    y = y_start
    for _ in range(steps):
        try:
            y = poincare_map(p, y)
        except (NoReturn, ValueError, ArithmeticError):
            return "escape"
        ratio = abs(y - y_star) / e0
        crossed = (y - y_star) * (y_start - y_star) < 0
        if ratio > 1.01 and not crossed:
            return "escape"
        if ratio < 0.99:
            return "approach"
    return "undecided"


def iterate_stability(p: SystemParams, y0_star: float, rel: float = 1e-3, steps: int = 200) -> IterationResult:
    inner = _side_trend(p, y0_star, y0_star * (1.0 - rel), steps)
    outer = _side_trend(p, y0_star, y0_star * (1.0 + rel), steps)
    if inner == outer == "approach":
        verdict = Verdict.ATTRACTING
    elif inner == outer == "escape":
        verdict = Verdict.REPELLING
    else:
        verdict = Verdict.INCONCLUSIVE
    return IterationResult(verdict, inner, outer)
