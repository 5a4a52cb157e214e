"""Dense univariate integer polynomials: Sturm chains and root isolation.

Coefficient lists are low-to-high. Rational inputs are scaled to integer
coefficients first (a positive scale never moves roots or signs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from ..errors import ZeroPolynomial
from .poly import ExactPoly

INF = math.inf


def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def to_integer(coeffs) -> list[int]:
    """Positive rescaling to primitive integer coefficients."""
    coeffs = _trim(coeffs)
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    return primitive(ints)


def primitive(p: list[int]) -> list[int]:
    g = reduce(math.gcd, p, 0)
    return [c // g for c in p] if g > 1 else list(p)


def as_coeffs(p) -> list[int]:
    if isinstance(p, ExactPoly):
        return to_integer(p.univariate_coeffs())
    return to_integer(p)


def derivative(p: list[int]) -> list[int]:
    return [k * c for k, c in enumerate(p)][1:]


def prem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of |lc(b)|^(deg a - deg b + 1) * a by b; sign-safe pseudo-remainder."""
    a = list(a)
    lb = b[-1]
    scale = abs(lb)
    sgn = 1 if lb > 0 else -1
    db = len(b) - 1
    steps = len(a) - db
    for _ in range(max(steps, 0)):
        if len(a) - 1 < db:
            a = [c * scale for c in a]
            continue
        lead = a[-1]
        shift = len(a) - 1 - db
        a = [c * scale for c in a]
        q = lead * sgn
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a = _trim(a)
    return a


def gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = primitive(_trim(a)), primitive(_trim(b))
    while b:
        r = primitive(prem(a, b))
        a, b = b, r
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def exact_div(a: list[int], b: list[int]) -> list[int]:
    """Quotient of a by b when b divides a over Q; result scaled to primitive integers."""
    a = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        q = a[k + len(b) - 1] / b[-1]
        out[k] = q
        for i, c in enumerate(b):
            a[k + i] -= q * c
    if any(a):
        raise ArithmeticError("non-exact polynomial division")
    return to_integer(out)


def square_free(p: list[int]) -> list[int]:
    p = primitive(_trim(p))
    if len(p) <= 2:
        return p
    g = gcd(p, derivative(p))
    if len(g) <= 1:
        return p
    q = exact_div(p, g)
    return q if (q[-1] > 0) == (p[-1] > 0) else [-c for c in q]


def sign_at(p: list[int], x) -> int:
    """Sign of p at a rational point or at +-inf."""
    if not p:
        return 0
    if x == INF:
        return 1 if p[-1] > 0 else -1
    if x == -INF:
        s = 1 if p[-1] > 0 else -1
        return s if (len(p) - 1) % 2 == 0 else -s
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    # Horner on the homogenised form sum c_k n^k d^(deg-k)
    acc = 0
    dpow = 1
    for c in reversed(p):
        acc = acc * n + c * dpow
        dpow *= d
    total = acc
    return (total > 0) - (total < 0)


def value_at(p: list[int], x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_chain(p: list[int]) -> list[list[int]]:
    chain = [p, derivative(p)]
    while True:
        r = prem(chain[-2], chain[-1])
        if not r:
            break
        r = [-c for c in primitive(r)]
        chain.append(r)
    return [c for c in chain if c]


def _variations(chain, x) -> int:
    signs = [s for s in (sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _bound(x):
    if x is None:
        return None
    if isinstance(x, float) and math.isinf(x):
        return x
    return Fraction(x)


def sturm_count(p, interval=(-INF, INF)) -> int:
    """Distinct real roots in the half-open interval ``(a, b]``; ends may be +-inf."""
    q = as_coeffs(p)
    if not q:
        raise ZeroPolynomial("sturm_count of the zero polynomial")
    q = square_free(q)
    if len(q) == 1:
        return 0
    a, b = _bound(interval[0]), _bound(interval[1])
    if not a < b:
        return 0
    chain = sturm_chain(q)
    return _variations(chain, a) - _variations(chain, b)


def cauchy_bound(p: list[int]) -> Fraction:
    lead = abs(p[-1])
    return 1 + Fraction(max(abs(c) for c in p[:-1]), lead) if len(p) > 1 else Fraction(1)


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint rational intervals ``[lo, hi]``, one distinct real root in each.

    ``lo == hi`` marks an exactly rational root. ``multiplicity_free`` reports
    whether the input polynomial was already square-free.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicity_free: bool

    def __len__(self):
        return len(self.intervals)

    def midpoints(self) -> list[float]:
        return [float((lo + hi) / 2) for lo, hi in self.intervals]

    def widths(self) -> list[Fraction]:
        return [hi - lo for lo, hi in self.intervals]


MAX_WIDTH = Fraction(1, 1024)


def isolate_roots(p, interval=(-INF, INF), max_width=MAX_WIDTH) -> RootIsolation:
    """Isolate the distinct real roots in the open interval ``(a, b)``."""
    q0 = as_coeffs(p)
    if not q0:
        raise ZeroPolynomial("isolate_roots of the zero polynomial")
    q = square_free(q0)
    mfree = len(q) == len(q0)
    if len(q) == 1:
        return RootIsolation((), mfree)
    chain = sturm_chain(q)
    bound = cauchy_bound(q)
    a, b = _bound(interval[0]), _bound(interval[1])
    a = max(a, -bound) if a == -INF or a < -bound else a
    b = min(b, bound) if b == INF or b > bound else b
    a, b = Fraction(a), Fraction(b)
    max_width = Fraction(max_width)
    out: list = []

    def count_open(lo, hi):
        n = _variations(chain, lo) - _variations(chain, hi)
        return n - (1 if sign_at(q, hi) == 0 else 0)

    def refine(lo, hi):
        slo = sign_at(q, lo)
        while hi - lo > max_width:
            mid = (lo + hi) / 2
            sm = sign_at(q, mid)
            if sm == 0:
                return (mid, mid)
            if sm == slo:
                lo = mid
            else:
                hi = mid
        return (lo, hi)

    stack = [(a, b, count_open(a, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and sign_at(q, lo) != 0 and sign_at(q, hi) != 0:
            out.append(refine(lo, hi))
            continue
        mid = (lo + hi) / 2
        if sign_at(q, mid) == 0:
            out.append((mid, mid))
        stack.append((lo, mid, count_open(lo, mid)))
        stack.append((mid, hi, count_open(mid, hi)))
    out.sort()
    return RootIsolation(tuple(out), mfree)


# -- resultants


def bareiss_det(m: list[list]) -> Fraction | int:
    """Determinant by fraction-free (Bareiss) elimination; rows rescaled to integers."""
    n = len(m)
    if n == 0:
        return 1
    scale = Fraction(1)
    rows = []
    for row in m:
        den = 1
        for c in row:
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        rows.append([int(c * den) for c in row])
        scale /= den
    a = rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            ak = a[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * ak[j]) // prev
            ai[k] = 0
        prev = akk
    det = sign * a[n - 1][n - 1] * scale
    if isinstance(det, Fraction) and det.denominator == 1:
        return det.numerator
    return det


def sylvester(p: list, q: list) -> list[list]:
    """Sylvester matrix, rows of p first; coefficient lists low-to-high, formal degrees."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    ph, qh = p[::-1], q[::-1]
    for i in range(n):
        rows.append([0] * i + ph + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qh + [0] * (size - n - 1 - i))
    return rows


def resultant_coeffs(p: list, q: list):
    """Resultant of two coefficient lists taken at their formal degrees."""
    if len(p) < 2 or len(q) < 2:
        raise ValueError("resultant needs positive formal degree in both arguments")
    return bareiss_det(sylvester(p, q))
