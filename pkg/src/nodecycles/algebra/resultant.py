"""Sylvester resultants of ExactPoly values.

Numeric Sylvester matrices go through fraction-free elimination. When other
variables remain, the resultant is rebuilt by evaluation at integer points
and Newton interpolation, one variable at a time, always at the formal
degrees of the inputs so that specialization commutes with the determinant.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegreeZero
from .poly import ExactPoly
from .univariate import bareiss_det, sylvester


def _scalar_coeffs(coeffs: list[ExactPoly]) -> list:
    return [c.constant_value() for c in coeffs]


def _live(coeffs: list[ExactPoly]) -> list[str]:
    names: list[str] = []
    for c in coeffs:
        for n in c.normalized().variables:
            if n not in names:
                names.append(n)
    return names


def _interpolate(xs: list[int], ys: list[ExactPoly], name: str) -> ExactPoly:
    """Newton interpolation through (xs[k], ys[k]); values may be polynomials."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    w = ExactPoly.var(name)
    out = coef[-1]
    for k in range(n - 2, -1, -1):
        out = out * (w - xs[k]) + coef[k]
    return out


def _horner(coeffs: list, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _newton_to_dense(xs: list[int], ys: list) -> list:
    """Monomial coefficients (low to high) of the interpolant through scalar values."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[-1]]
    for k in range(n - 2, -1, -1):
        new = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c
            new[i] -= xs[k] * c
        new[0] += coef[k]
        poly = new
    return [c.numerator if c.denominator == 1 else c for c in poly]


def _res_one_var(pc: list[ExactPoly], qc: list[ExactPoly], w: str) -> ExactPoly:
    pd = [c.univariate_coeffs(w) for c in pc]
    qd = [c.univariate_coeffs(w) for c in qc]
    m, n = len(pc) - 1, len(qc) - 1
    bound = max(len(c) - 1 for c in pd) * n + max(len(c) - 1 for c in qd) * m
    xs = list(range(bound + 1))
    ys = [bareiss_det(sylvester([_horner(c, x) for c in pd], [_horner(c, x) for c in qd])) for x in xs]
    return ExactPoly.from_coeffs(_newton_to_dense(xs, ys), w)


def _res(pc: list[ExactPoly], qc: list[ExactPoly]) -> ExactPoly:
    names = _live(pc + qc)
    if not names:
        return ExactPoly.const(bareiss_det(sylvester(_scalar_coeffs(pc), _scalar_coeffs(qc))))
    if len(names) == 1:
        return _res_one_var(pc, qc, names[0])
    w = names[-1]
    m, n = len(pc) - 1, len(qc) - 1
    dp = max(c.degree(w) for c in pc)
    dq = max(c.degree(w) for c in qc)
    bound = dp * n + dq * m
    xs = list(range(bound + 1))
    ys = []
    for x in xs:
        ys.append(_res([c.subs(**{w: x}) for c in pc], [c.subs(**{w: x}) for c in qc]))
    return _interpolate(xs, ys, w)


def resultant(p: ExactPoly, q: ExactPoly, var: str) -> ExactPoly:
    """``det Sylvester(p, q)`` in ``var``, rows of p first."""
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise DegreeZero(f"both polynomials need positive degree in {var}")
    return _res(p.coefficients_in(var), q.coefficients_in(var)).normalized()


def resultant_at(p: ExactPoly, q: ExactPoly, var: str, point: dict):
    """Resultant in ``var`` specialized at ``point`` (all other variables).

    Uses the formal degrees of p and q in ``var``, so the value equals the
    general resultant evaluated at ``point``.
    """
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise DegreeZero(f"both polynomials need positive degree in {var}")
    pc = [c.evaluate(point) for c in p.coefficients_in(var)]
    qc = [c.evaluate(point) for c in q.coefficients_in(var)]
    return bareiss_det(sylvester(pc, qc))


def univariate_resultant(p: list, q: list):
    """Resultant of two low-to-high coefficient lists (formal degrees)."""
    return bareiss_det(sylvester(list(p), list(q)))
