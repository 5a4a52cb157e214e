"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

Scalar = int | Fraction


def _canon(c) -> Scalar:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _canon(Fraction(c))
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class ExactPoly:
    """Immutable polynomial ``sum c * prod(var**e)``; zero coefficients never stored.

    ``variables`` is an ordered tuple of names; ``terms`` maps exponent tuples
    (aligned with ``variables``) to ``int`` or ``Fraction`` coefficients.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables=(), terms=None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for variables {self.variables}")
            c = _canon(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    # -- construction

    @classmethod
    def var(cls, name: str) -> "ExactPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def const(cls, c, variables=()) -> "ExactPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def from_coeffs(cls, coeffs, name: str) -> "ExactPoly":
        """Univariate from low-to-high coefficient list."""
        return cls((name,), {(k,): c for k, c in enumerate(coeffs) if c})

    def _lift(self, variables) -> dict:
        if variables == self.variables:
            return self.terms
        idx = [variables.index(v) for v in self.variables]
        out = {}
        for exps, c in self.terms.items():
            full = [0] * len(variables)
            for i, e in zip(idx, exps):
                full[i] = e
            out[tuple(full)] = c
        return out

    @staticmethod
    def _union(a, b):
        names = list(a)
        for v in b:
            if v not in names:
                names.append(v)
        return tuple(names)

    def _coerce(self, other) -> "ExactPoly":
        if isinstance(other, ExactPoly):
            return other
        return ExactPoly.const(_canon(other))

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        names = self._union(self.variables, other.variables)
        out = dict(self._lift(names))
        for e, c in other._lift(names).items():
            out[e] = out.get(e, 0) + c
        return ExactPoly(names, out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        names = self._union(self.variables, other.variables)
        a, b = self._lift(names), other._lift(names)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return ExactPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = ExactPoly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "ExactPoly":
        c = _canon(c)
        return ExactPoly(self.variables, {e: v * c for e, v in self.terms.items()})

    def __truediv__(self, c):
        if isinstance(c, ExactPoly):
            raise TypeError("use exact_div for polynomial division")
        return self.scale(Fraction(1) / _canon(c))

    # -- comparison

    def normalized(self) -> "ExactPoly":
        """Drop variables that do not occur; sort nothing else."""
        used = [i for i in range(len(self.variables)) if any(e[i] for e in self.terms)]
        names = tuple(self.variables[i] for i in used)
        return ExactPoly(names, {tuple(e[i] for i in used): c for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ExactPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.normalized(), other.normalized()
        if set(a.variables) != set(b.variables):
            return False
        return a.terms == b._lift(a.variables)

    def __hash__(self):
        if self._hash is None:
            n = self.normalized()
            order = sorted(range(len(n.variables)), key=lambda i: n.variables[i])
            names = tuple(n.variables[i] for i in order)
            items = frozenset((tuple(e[i] for i in order), c) for e, c in n.terms.items())
            self._hash = hash((names, items))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    # -- structure

    def degree(self, name: str) -> int:
        if name not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficients_in(self, name: str) -> list["ExactPoly"]:
        """Coefficients (low to high) as polynomials in the remaining variables."""
        if name not in self.variables:
            return [self]
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        deg = max(buckets) if buckets else -1
        return [ExactPoly(rest, buckets.get(k, {})) for k in range(deg + 1)]

    def diff(self, name: str) -> "ExactPoly":
        if name not in self.variables:
            return ExactPoly(self.variables, {})
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return ExactPoly(self.variables, out)

    def subs(self, **values) -> "ExactPoly":
        """Substitute scalars or polynomials for variables (keyword per name)."""
        return self.substitute(values)

    def substitute(self, values: dict) -> "ExactPoly":
        todo = {k: v for k, v in values.items() if k in self.variables}
        if not todo:
            return self
        poly_vals = {k: v for k, v in todo.items() if isinstance(v, ExactPoly)}
        scal_vals = {k: _canon(v) for k, v in todo.items() if not isinstance(v, ExactPoly)}
        keep = [i for i, n in enumerate(self.variables) if n not in todo]
        keep_names = tuple(self.variables[i] for i in keep)
        sub_idx = [(i, n) for i, n in enumerate(self.variables) if n in todo]
        power_cache: dict = {}

        def pw(name, k):
            key = (name, k)
            if key not in power_cache:
                v = poly_vals[name] if name in poly_vals else scal_vals[name]
                power_cache[key] = v**k
            return power_cache[key]

        acc_scalar: dict = {}
        acc_poly: dict = {}
        for e, c in self.terms.items():
            factor = c
            poly_part = None
            for i, name in sub_idx:
                if not e[i]:
                    continue
                val = pw(name, e[i])
                if isinstance(val, ExactPoly):
                    poly_part = val if poly_part is None else poly_part * val
                else:
                    factor = factor * val
            rest = tuple(e[i] for i in keep)
            if poly_part is None:
                acc_scalar[rest] = acc_scalar.get(rest, 0) + factor
            else:
                acc_poly.setdefault(rest, []).append(poly_part.scale(factor))
        out = ExactPoly(keep_names, acc_scalar)
        for rest, parts in acc_poly.items():
            mono = ExactPoly(keep_names, {rest: 1})
            total = parts[0]
            for q in parts[1:]:
                total = total + q
            out = out + mono * total
        return out

    def evaluate(self, values: dict) -> Scalar:
        """Exact value at a full assignment of every variable."""
        missing = [n for n in self.variables if n in self._live_vars() and n not in values]
        if missing:
            raise ValueError(f"no value for {missing}")
        vals = [_canon(values.get(n, 0)) for n in self.variables]
        dens = [v.denominator if isinstance(v, Fraction) else 1 for v in vals]
        nums = [v.numerator if isinstance(v, Fraction) else v for v in vals]
        degs = [max((e[i] for e in self.terms), default=0) for i in range(len(vals))]
        npow = [[1] * (d + 1) for d in degs]
        dpow = [[1] * (d + 1) for d in degs]
        for i, d in enumerate(degs):
            for k in range(1, d + 1):
                npow[i][k] = npow[i][k - 1] * nums[i]
                dpow[i][k] = dpow[i][k - 1] * dens[i]
        total = 0
        coeff_den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                coeff_den = coeff_den * c.denominator // math.gcd(coeff_den, c.denominator)
        for e, c in self.terms.items():
            term = c * coeff_den
            for i, k in enumerate(e):
                term = term * npow[i][k] * dpow[i][degs[i] - k]
            total += term
        scale = coeff_den
        for i, d in enumerate(degs):
            scale *= dpow[i][d]
        return _canon(Fraction(int(total), scale))

    def _live_vars(self):
        return {n for i, n in enumerate(self.variables) if any(e[i] for e in self.terms)}

    def univariate_coeffs(self, name: str | None = None) -> list[Scalar]:
        """Dense low-to-high coefficient list of a polynomial in one variable."""
        live = self._live_vars()
        if name is None:
            if len(live) > 1:
                raise ValueError(f"not univariate: {sorted(live)}")
            name = next(iter(live), self.variables[0] if self.variables else "x")
        elif live - {name}:
            raise ValueError(f"not univariate in {name}: {sorted(live)}")
        if not self.terms:
            return []
        if name not in self.variables:
            return [self.constant_value()]
        i = self.variables.index(name)
        deg = max(e[i] for e in self.terms)
        out = [0] * (deg + 1)
        for e, c in self.terms.items():
            out[e[i]] += c
        return out

    # -- text form

    def to_text(self) -> str:
        """One term per line, ``coeff u^a v^b ...``, sorted lexicographically by exponents."""
        names = self.variables
        lines = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = " ".join(f"{n}^{k}" for n, k in zip(names, e))
            lines.append(f"{c} {mono}".rstrip())
        return "\n".join(lines) if lines else "0"

    @classmethod
    def from_text(cls, text: str, variables) -> "ExactPoly":
        variables = tuple(variables)
        terms = {}
        for line in text.strip().splitlines():
            parts = line.split()
            if parts == ["0"]:
                continue
            c = Fraction(parts[0])
            exps = [0] * len(variables)
            for tok in parts[1:]:
                n, k = tok.split("^")
                exps[variables.index(n)] = int(k)
            terms[tuple(exps)] = c
        return cls(variables, terms)

    def __repr__(self):
        if not self.terms:
            return "ExactPoly(0)"
        parts = []
        for e in sorted(self.terms, reverse=True)[:6]:
            mono = "*".join(f"{n}^{k}" if k > 1 else n for n, k in zip(self.variables, e) if k)
            parts.append(f"{self.terms[e]}" + (f"*{mono}" if mono else ""))
        more = " + ..." if len(self.terms) > 6 else ""
        return f"ExactPoly({' + '.join(parts)}{more})"


def variables(*names: str) -> tuple[ExactPoly, ...]:
    return tuple(ExactPoly.var(n) for n in names)
