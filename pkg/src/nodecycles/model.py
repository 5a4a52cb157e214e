"""Canonical two-node system, closed-form subsystem flow and its invariant geometry.

The system lives on the plane split by the switching line ``x = 0``::

    x<0:  x' = 2*gl*x - y,        y' = (gl**2 - 1)*x - al
    x>0:  x' = 2*gr*x - y + b,    y' = (gr**2 - 1)*x - ar

Each half is a linear node with eigenvalues ``gamma - 1`` and ``gamma + 1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NonNodeParams

NODE_MARGIN = 1e-12


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def _check_node(gamma: float) -> None:
    if not math.isfinite(gamma) or abs(gamma) <= 1.0 + NODE_MARGIN:
        raise NonNodeParams(f"node condition |gamma| > 1 violated: gamma = {gamma!r}")


@dataclass(frozen=True)
class PlanarState:
    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Subsystem:
    """One linear half of the system; ``b`` is 0 for the left half."""

    gamma: float
    alpha: float
    b: float = 0.0
    side: Side = Side.LEFT

    def __post_init__(self):
        _check_node(self.gamma)


@dataclass(frozen=True)
class SystemParams:
    gamma_l: float
    gamma_r: float
    alpha_l: float
    alpha_r: float
    b: float = 0.0

    def __post_init__(self):
        _check_node(self.gamma_l)
        _check_node(self.gamma_r)
        for name in ("alpha_l", "alpha_r", "b"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def left(self) -> Subsystem:
        return Subsystem(self.gamma_l, self.alpha_l, 0.0, Side.LEFT)

    @property
    def right(self) -> Subsystem:
        return Subsystem(self.gamma_r, self.alpha_r, self.b, Side.RIGHT)

    def subsystem(self, side: Side) -> Subsystem:
        return self.left if Side(side) is Side.LEFT else self.right

    def with_b(self, b: float) -> "SystemParams":
        return SystemParams(self.gamma_l, self.gamma_r, self.alpha_l, self.alpha_r, b)

    def as_dict(self) -> dict:
        return {
            "gamma_l": self.gamma_l,
            "gamma_r": self.gamma_r,
            "alpha_l": self.alpha_l,
            "alpha_r": self.alpha_r,
            "b": self.b,
        }


@dataclass(frozen=True)
class InvariantLine:
    """``y = slope * x + intercept``; label is one of L-, L+, R-, R+."""

    slope: float
    intercept: float
    label: str

    def residual(self, p: PlanarState) -> float:
        return p.y - (self.slope * p.x + self.intercept)


@dataclass(frozen=True)
class CycleCheck:
    ok: bool
    reason: str | None = None


def equilibrium(sub: Subsystem) -> PlanarState:
    _check_node(sub.gamma)
    g, a = sub.gamma, sub.alpha
    xbar = a / (g * g - 1.0)
    return PlanarState(xbar, 2.0 * g * xbar + sub.b)


def invariant_lines(sub: Subsystem) -> tuple[InvariantLine, InvariantLine]:
    """The two eigen-lines through the equilibrium, slopes ``gamma -+ 1``."""
    _check_node(sub.gamma)
    g, a = sub.gamma, sub.alpha
    tag = "L" if Side(sub.side) is Side.LEFT else "R"
    return (
        InvariantLine(g - 1.0, a / (g - 1.0) + sub.b, tag + "-"),
        InvariantLine(g + 1.0, a / (g + 1.0) + sub.b, tag + "+"),
    )


def vector_field(sub: Subsystem, p: PlanarState) -> tuple[float, float]:
    g = sub.gamma
    return (2.0 * g * p.x - p.y + sub.b, (g * g - 1.0) * p.x - sub.alpha)


def flow(sub: Subsystem, x0: PlanarState, t: float) -> PlanarState:
    """Exact solution of the linear subsystem after time ``t`` (any sign).

    Deviation ``z`` from the equilibrium splits along eigenvectors
    ``(1, gamma + 1)`` (rate ``gamma - 1``) and ``(1, gamma - 1)`` (rate ``gamma + 1``).
    """
    _check_node(sub.gamma)
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    if t == 0.0:
        return x0
    g = sub.gamma
    eq = equilibrium(sub)
    zx, zy = x0.x - eq.x, x0.y - eq.y
    c1 = 0.5 * (zy - (g - 1.0) * zx)
    c2 = 0.5 * ((g + 1.0) * zx - zy)
    e1 = math.exp((g - 1.0) * t)
    e2 = math.exp((g + 1.0) * t)
    return PlanarState(
        eq.x + c1 * e1 + c2 * e2,
        eq.y + c1 * (g + 1.0) * e1 + c2 * (g - 1.0) * e2,
    )


def boundary_field(p: SystemParams, y: float) -> tuple[float, float]:
    """x-components of the left and right fields on the switching line."""
    return (-y, -y + p.b)


def validate_for_cycles(p: SystemParams) -> CycleCheck:
    """Crossing periodic orbits need alpha_l > 0 > alpha_r."""
    if not p.alpha_l > 0.0:
        return CycleCheck(False, f"alpha_l > 0 violated (alpha_l = {p.alpha_l!r})")
    if not p.alpha_r < 0.0:
        return CycleCheck(False, f"alpha_r < 0 violated (alpha_r = {p.alpha_r!r})")
    return CycleCheck(True)


def rk4(sub: Subsystem, x0: PlanarState, t: float, h: float = 1e-5) -> PlanarState:
    """Classical Runge-Kutta integration; only used to cross-check ``flow``."""
    n = max(1, int(math.ceil(abs(t) / h)))
    dt = t / n
    x, y = x0.x, x0.y
    g, a, b = sub.gamma, sub.alpha, sub.b
    gg = g * g - 1.0

    def f(x, y):
        return 2.0 * g * x - y + b, gg * x - a

    for _ in range(n):
        k1 = f(x, y)
        k2 = f(x + 0.5 * dt * k1[0], y + 0.5 * dt * k1[1])
        k3 = f(x + 0.5 * dt * k2[0], y + 0.5 * dt * k2[1])
        k4 = f(x + dt * k3[0], y + dt * k3[1])
        x += dt / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        y += dt / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
    return PlanarState(x, y)
