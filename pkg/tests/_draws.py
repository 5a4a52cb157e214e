"""Random parameter draws shared by the numeric tests."""

import random

from nodecycles.model import SystemParams


def node_gamma(rng: random.Random, lo: float = 1.05, hi: float = 5.0) -> float:
    return rng.choice((-1.0, 1.0)) * rng.uniform(lo, hi)


def assumption1(rng: random.Random, b_range: float = 0.5) -> SystemParams:
    """Node parameters with alpha_l > 0 > alpha_r."""
    return SystemParams(
        node_gamma(rng),
        node_gamma(rng),
        rng.uniform(0.1, 3.0),
        -rng.uniform(0.1, 3.0),
        rng.uniform(-b_range, b_range),
    )


def with_domain(rng: random.Random, b_range: float = 0.5) -> SystemParams:
    """Like :func:`assumption1` but retried until the successor domain is nonempty."""
    from nodecycles.halfmaps import domain

    while True:
        p = assumption1(rng, b_range)
        if not domain(p).empty:
            return p
