"""Sparse multivariate polynomials with exact coefficients.

A polynomial carries a fixed variable registry (a tuple of names), a sparse
map from exponent vectors to coefficients, and a coefficient-domain tag:
"rational" (Fraction) or "cyclo12" (Cyclo12).  Zero coefficients are never
stored, so dict equality is polynomial equality.  Terms are ordered
graded-lexicographically for printing and serialization, which makes the
textual form canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .cyclo import Cyclo12
from .errors import IntegrityError

RATIONAL = "rational"
CYCLO = "cyclo12"


def _coerce(value, domain):
    if domain == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, Cyclo12):
            return value.rational_value()
        raise TypeError(f"cannot use {value!r} as a rational coefficient")
    if isinstance(value, Cyclo12):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclo12(value)
    raise TypeError(f"cannot use {value!r} as a cyclo12 coefficient")


class MPoly:
    __slots__ = ("vars", "terms", "domain")

    def __init__(self, vars: tuple, terms: dict, domain: str = RATIONAL):
        self.vars = tuple(vars)
        self.domain = domain
        self.terms = {e: c for e, c in terms.items() if c}

    # ------------------------------------------------------------- constructors

    @classmethod
    def zero(cls, vars, domain=RATIONAL) -> "MPoly":
        return cls(vars, {}, domain)

    @classmethod
    def const(cls, vars, value, domain=RATIONAL) -> "MPoly":
        vars = tuple(vars)
        c = _coerce(value, domain)
        return cls(vars, {(0,) * len(vars): c}, domain)

    @classmethod
    def variable(cls, vars, name, domain=RATIONAL) -> "MPoly":
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls(vars, {tuple(exp): _coerce(1, domain)}, domain)

    @classmethod
    def gens(cls, vars, domain=RATIONAL) -> "tuple[MPoly, ...]":
        vars = tuple(vars)
        return tuple(cls.variable(vars, name, domain) for name in vars)

    # --------------------------------------------------------------- arithmetic

    def _check(self, other: "MPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable registries differ: {self.vars} vs {other.vars}")
        if self.domain != other.domain:
            raise ValueError(f"coefficient domains differ: {self.domain} vs {other.domain}")

    def _wrap_scalar(self, value):
        if isinstance(value, MPoly):
            return value
        if isinstance(value, Cyclo12) and self.domain == RATIONAL:
            raise TypeError("cyclo12 scalar into a rational polynomial; promote with to_cyclo()")
        return MPoly.const(self.vars, value, self.domain)

    def __add__(self, other):
        if not isinstance(other, (MPoly, int, Fraction, Cyclo12)):
            return NotImplemented
        other = self._wrap_scalar(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MPoly(self.vars, out, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()}, self.domain)

    def __sub__(self, other):
        if not isinstance(other, (MPoly, int, Fraction, Cyclo12)):
            return NotImplemented
        return self + (-self._wrap_scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (MPoly, int, Fraction, Cyclo12)):
            return NotImplemented
        other = self._wrap_scalar(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MPoly(self.vars, out, self.domain)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = MPoly.const(self.vars, 1, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclo12)):
            other = self._wrap_scalar(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.domain == other.domain and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, self.domain, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------------- examinations

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in one variable.  The zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coeff_of(self, var: str, power: int) -> "MPoly":
        """The coefficient of var**power, as a polynomial with that slot zeroed."""
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                reduced = list(e)
                reduced[i] = 0
                out[tuple(reduced)] = c
        return MPoly(self.vars, out, self.domain)

    def constant_value(self):
        """The value of a constant polynomial, as a bare scalar."""
        if not self.terms:
            return Fraction(0) if self.domain == RATIONAL else Cyclo12(0)
        (e, c), = self.terms.items()
        if any(e):
            raise ValueError(f"not a constant polynomial: {self}")
        return c

    def eval(self, bindings: dict):
        """Evaluate at a full point.  Every registry variable must be bound."""
        missing = [v for v in self.vars if v not in bindings]
        if missing:
            raise ValueError(f"missing bindings for {missing}")
        values = [_coerce(bindings[v], self.domain) for v in self.vars]
        powers: list[dict] = [{0: _coerce(1, self.domain)} for _ in self.vars]
        total = _coerce(0, self.domain)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = values[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def subs(self, bindings: dict) -> "MPoly":
        """Partial substitution.  Values may be scalars or polynomials on the same registry."""
        idx = {}
        for name, value in bindings.items():
            i = self.vars.index(name)
            if isinstance(value, MPoly):
                self._check(value)
            else:
                value = MPoly.const(self.vars, value, self.domain)
            idx[i] = value
        result = MPoly.zero(self.vars, self.domain)
        cache: dict = {}
        for e, c in self.terms.items():
            term = MPoly.const(self.vars, c, self.domain)
            kept = list(e)
            for i, value in idx.items():
                k = e[i]
                kept[i] = 0
                if k:
                    if (i, k) not in cache:
                        cache[(i, k)] = value ** k
                    term = term * cache[(i, k)]
            term = term * MPoly(self.vars, {tuple(kept): _coerce(1, self.domain)}, self.domain)
            result = result + term
        return result

    def is_symmetric_in(self, group: Iterable[str]) -> bool:
        """True iff invariant under every adjacent transposition of the listed variables."""
        order = [self.vars.index(name) for name in group]
        for a, b in zip(order, order[1:]):
            swapped = {}
            for e, c in self.terms.items():
                le = list(e)
                le[a], le[b] = le[b], le[a]
                swapped[tuple(le)] = c
            if swapped != self.terms:
                return False
        return True

    # ------------------------------------------------------- domain conversions

    def to_cyclo(self) -> "MPoly":
        if self.domain == CYCLO:
            return self
        return MPoly(self.vars, {e: Cyclo12(c) for e, c in self.terms.items()}, CYCLO)

    def to_rational(self) -> "MPoly":
        """Demote cyclo12 coefficients; raises IntegrityError on irrational components."""
        if self.domain == RATIONAL:
            return self
        out = {}
        for e, c in self.terms.items():
            if not c.is_rational():
                raise IntegrityError(f"coefficient {c} of {e} is not rational")
            out[e] = c.rational_value()
        return MPoly(self.vars, out, RATIONAL)

    def project(self, new_vars) -> "MPoly":
        """Restrict to a sub-registry; dropped variables must not occur."""
        new_vars = tuple(new_vars)
        keep = [self.vars.index(v) for v in new_vars]
        dropped = [i for i in range(len(self.vars)) if i not in keep]
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in dropped):
                raise ValueError(f"variable {self.vars[[i for i in dropped if e[i]][0]]} still occurs")
            out[tuple(e[i] for i in keep)] = c
        return MPoly(new_vars, out, self.domain)

    def extend(self, new_vars) -> "MPoly":
        """Embed into a larger registry containing all current variables."""
        new_vars = tuple(new_vars)
        pos = [new_vars.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            big = [0] * len(new_vars)
            for i, k in enumerate(e):
                big[pos[i]] = k
            out[tuple(big)] = c
        return MPoly(new_vars, out, self.domain)

    # ---------------------------------------------------------- exact division

    def divexact(self, divisor: "MPoly") -> "MPoly":
        """Exact quotient self / divisor; raises ValueError when it does not divide."""
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        div_lead = max(divisor.terms, key=_grlex_key)
        div_c = divisor.terms[div_lead]
        remainder = dict(self.terms)
        quotient: dict = {}
        while remainder:
            lead = max(remainder, key=_grlex_key)
            diff = tuple(a - b for a, b in zip(lead, div_lead))
            if any(d < 0 for d in diff):
                raise ValueError("not exactly divisible")
            c = remainder[lead] / div_c
            quotient[diff] = c
            for e, dc in divisor.terms.items():
                te = tuple(a + b for a, b in zip(e, diff))
                s = remainder.get(te, None)
                s = -(c * dc) if s is None else s - c * dc
                if s:
                    remainder[te] = s
                elif te in remainder:
                    del remainder[te]
        return MPoly(self.vars, quotient, self.domain)

    # ------------------------------------------------------------ presentation

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            cs = str(c)
            if mono:
                parts.append(f"({cs})*{mono}" if ("/" in cs or "," in cs or cs.startswith("-")) else f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly({self})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "domain": self.domain,
            "terms": [[str(c), list(e)] for e, c in self.sorted_terms()],
        }


def _grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


def elementary_symmetric_poly(vars, names, k, domain=RATIONAL) -> MPoly:
    """e_k of the listed variable names, as a polynomial on the given registry."""
    n = len(names)
    if k < 0 or k > n:
        return MPoly.zero(vars, domain)
    # column DP over prefix products keeps intermediate sizes small
    rows = [MPoly.zero(vars, domain) for _ in range(k + 1)]
    rows[0] = MPoly.const(vars, 1, domain)
    for name in names:
        x = MPoly.variable(vars, name, domain)
        for j in range(min(k, n), 0, -1):
            rows[j] = rows[j] + rows[j - 1] * x
    return rows[k]
