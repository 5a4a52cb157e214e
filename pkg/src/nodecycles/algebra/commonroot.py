"""Exclusion of common real roots of two polynomials inside a bounded box."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import ExactPoly
from .resultant import resultant
from .univariate import as_coeffs, gcd, isolate_roots, sign_at, square_free

U_WIDTH = Fraction(1, 2**60)
MAX_BOXES = 100_000


@dataclass(frozen=True)
class NoCommonRoot:
    resultant_degree: int
    outer_roots: int
    boxes: int
    notes: tuple[str, ...] = ()

    found = False


@dataclass(frozen=True)
class CandidateFound:
    witness: dict
    reason: str = "box could not be excluded"
    notes: tuple[str, ...] = field(default_factory=tuple)

    found = True


# -- exact interval arithmetic on rationals


def _imul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def _iadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _ipow(a, k):
    lo, hi = a
    if k == 0:
        return (Fraction(1), Fraction(1))
    if k % 2 == 1 or lo >= 0:
        return (lo**k, hi**k) if lo >= 0 or k % 2 == 1 else (hi**k, lo**k)
    if hi <= 0:
        return (hi**k, lo**k)
    return (Fraction(0), max(lo**k, hi**k))


def _ipoly(coeffs, box):
    """Enclosure of a dense univariate polynomial over an interval (term-wise)."""
    out = (Fraction(0), Fraction(0))
    for k, c in enumerate(coeffs):
        if c:
            out = _iadd(out, _imul((Fraction(c), Fraction(c)), _ipow(box, k)))
    return out


class _Enclosure:
    """Mean-value enclosure of p(U, V) in the inner variable, U fixed."""

    def __init__(self, inner_coeffs: list[list], ubox):
        self.c = [_ipoly(cu, ubox) for cu in inner_coeffs]
        self.dc = [_imul(self.c[j], (Fraction(j), Fraction(j))) for j in range(len(self.c))]

    def __call__(self, vbox):
        vc = (vbox[0] + vbox[1]) / 2
        r = (vbox[1] - vbox[0]) / 2
        a = (Fraction(0), Fraction(0))
        for j, cj in enumerate(self.c):
            p = vc**j
            a = _iadd(a, (cj[0] * p, cj[1] * p) if p >= 0 else (cj[1] * p, cj[0] * p))
        b = (Fraction(0), Fraction(0))
        for j in range(1, len(self.dc)):
            b = _iadd(b, _imul(self.dc[j], _ipow(vbox, j - 1)))
        mag = max(abs(b[0]), abs(b[1])) * r
        return (a[0] - mag, a[1] + mag)


def _contains_zero(iv) -> bool:
    return iv[0] <= 0 <= iv[1]


def _bound(x, default):
    if x is None or (isinstance(x, float) and math.isinf(x)):
        return default
    return Fraction(x)


def _univariate_case(p: ExactPoly, q: ExactPoly, name: str, region: dict):
    g = gcd(as_coeffs(p), as_coeffs(q))
    lo, hi = region.get(name, (None, None))
    lo = -math.inf if lo is None else lo
    hi = math.inf if hi is None else hi
    if len(g) <= 1:
        return NoCommonRoot(0, 0, 0, ("polynomials are coprime",))
    iso = isolate_roots(g, (lo, hi))
    if iso.intervals:
        a, b = iso.intervals[0]
        return CandidateFound({name: (a, b)}, "common factor has a root in the region")
    return NoCommonRoot(0, 0, 0, ("common factor has no root in the region",))


def common_root_check(p: ExactPoly, q: ExactPoly, region: dict, below: tuple[str, str] | None = None,
                      eliminate: str = "v"):
    """Decide whether p = q = 0 has a real solution inside an open box.

    ``region`` maps variable names to open ``(lo, hi)`` bounds; ``below=("v", "u")``
    adds v < u. For a bivariate pair, any common root has its outer coordinate
    among the roots of ``Res_eliminate(p, q)`` and its inner coordinate among the
    roots of ``Res_outer(p, q)``. Both are isolated inside the open ranges; every
    pairing is narrowed until exact interval enclosures show p or q nonzero.
    """
    live = sorted(p.normalized().variables + tuple(n for n in q.normalized().variables
                                                  if n not in p.normalized().variables))
    if len(live) == 1:
        return _univariate_case(p, q, live[0], region)
    if len(live) != 2 or eliminate not in live:
        raise ValueError(f"expected a bivariate pair containing {eliminate!r}, got {live}")
    outer = next(n for n in live if n != eliminate)
    olo, ohi = region[outer]
    if olo is None or ohi is None:
        raise ValueError("outer range must be bounded")
    olo, ohi = Fraction(olo), Fraction(ohi)

    ilo, ihi = region.get(eliminate, (None, None))
    if ilo is None or ihi is None:
        raise ValueError("inner range must be bounded")
    ilo, ihi = Fraction(ilo), Fraction(ihi)

    outer_core, deg_o = _resultant_core(p, q, eliminate, olo)
    inner_core, _ = _resultant_core(p, q, outer, ilo)
    if outer_core is None or inner_core is None:
        return CandidateFound({}, "resultant vanishes identically (common factor)")
    us = isolate_roots(outer_core, (olo, ohi)).intervals if len(outer_core) > 1 else ()
    vs = isolate_roots(inner_core, (ilo, ihi)).intervals if len(inner_core) > 1 else ()

    pin = _dense_table(p, eliminate, outer)
    qin = _dense_table(q, eliminate, outer)
    boxes = 0
    for ub in us:
        for vb in vs:
            if below == (eliminate, outer) and vb[0] >= ub[1]:
                continue
            if below == (outer, eliminate) and ub[0] >= vb[1]:
                continue
            ubox, vbox = ub, vb
            while True:
                boxes += 1
                if boxes > MAX_BOXES:
                    return CandidateFound({outer: ubox, eliminate: vbox}, "box budget exhausted")
                if below == (eliminate, outer) and vbox[0] >= ubox[1]:
                    break
                if below == (outer, eliminate) and ubox[0] >= vbox[1]:
                    break
                if not _contains_zero(_Enclosure(pin, ubox)(vbox)):
                    break
                if not _contains_zero(_Enclosure(qin, ubox)(vbox)):
                    break
                nu = _halve(outer_core, ubox)
                nv = _halve(inner_core, vbox)
                if nu == ubox and nv == vbox:
                    exact = ubox[0] == ubox[1] and vbox[0] == vbox[1]
                    reason = "common root at a rational point" if exact else "box could not be excluded"
                    return CandidateFound({outer: ubox, eliminate: vbox}, reason)
                ubox, vbox = nu, nv
    return NoCommonRoot(deg_o, len(us), boxes, (f"{len(vs)} candidate {eliminate}-roots",))


def _resultant_core(p, q, var, lo):
    """Square-free eliminant for the other variable.

    When one input does not involve ``var`` it is itself the eliminant. A
    power of the remaining variable is dropped when the range starts at 0 or above.
    """
    if p.degree(var) < 1 or q.degree(var) < 1:
        res = p if p.degree(var) < 1 else q
    else:
        res = resultant(p, q, var)
    if res.is_zero():
        return None, -1
    if res.is_constant():
        return [1], 0
    rc = as_coeffs(res)
    low = next(i for i, c in enumerate(rc) if c) if lo >= 0 else 0
    return square_free(rc[low:]), len(rc) - 1


def _dense_table(p: ExactPoly, inner: str, outer: str) -> list[list]:
    return [c.univariate_coeffs(outer) if c.terms else [] for c in p.coefficients_in(inner)]


def _halve(core, box, limit=U_WIDTH):
    a, b = box
    if a == b or b - a <= limit * max(1, abs(a)):
        return box
    m = (a + b) / 2
    sm = sign_at(core, m)
    if sm == 0:
        return (m, m)
    return (m, b) if sm == sign_at(core, a) else (a, m)


