"""Crossing limit cycles of planar piecewise-linear systems with two nodes.

The numeric side (``model``, ``halfmaps``, ``successor``, ``oracle``) works in
binary64; the exact side (``nodecycles.algebra``) works over the rationals.
"""

from .errors import (
    ConvergenceFailure,
    DomainError,
    NoReturn,
    NoSmallCycle,
    NodeCyclesError,
    NonNodeParams,
    NotADoubleRoot,
    OutOfDomain,
    RequiresRefracting,
    ResidualTooLarge,
)
from .model import Side, SystemParams, Subsystem, PlanarState

__version__ = "0.1.0"

__all__ = [
    "ConvergenceFailure",
    "DomainError",
    "NoReturn",
    "NoSmallCycle",
    "NodeCyclesError",
    "NonNodeParams",
    "NotADoubleRoot",
    "OutOfDomain",
    "PlanarState",
    "RequiresRefracting",
    "ResidualTooLarge",
    "Side",
    "Subsystem",
    "SystemParams",
]
