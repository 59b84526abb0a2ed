"""Exact arithmetic in the cyclotomic field generated by a primitive twelfth root of unity.

An element is stored as c0 + c1*p + c2*p^2 + c3*p^3 with rational c_i, reduced
modulo the minimal polynomial p^4 - p^2 + 1.  Setting q := p^2 gives a primitive
sixth root of unity, so q^3 = -1 and q^2 - q + 1 = 0 hold identically, and p is
an exact square root of q.  This is the smallest field in which all weight
functions used here (including the ones carrying sqrt(q)) stay exact.
"""

from __future__ import annotations

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


class Cyclo12:
    """An element of Q(p), p a primitive twelfth root of unity (p^4 = p^2 - 1)."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @classmethod
    def from_rational(cls, value) -> "Cyclo12":
        return cls(Fraction(value))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, Cyclo12):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return None

    # ------------------------------------------------------------------ ring ops

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return Cyclo12(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return Cyclo12(-a[0], -a[1], -a[2], -a[3])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return Cyclo12(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        # convolve up to degree 6, then fold with p^4 = p^2 - 1, p^5 = p^3 - p, p^6 = -1
        d = [_F0] * 7
        for i in range(4):
            ai = a[i]
            if not ai:
                continue
            for j in range(4):
                if b[j]:
                    d[i + j] += ai * b[j]
        return Cyclo12(
            d[0] - d[4] - d[6],
            d[1] - d[5],
            d[2] + d[4],
            d[3] + d[5],
        )

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo12":
        """Multiplicative inverse, by solving the 4x4 linear system a*x = 1."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Cyclo12")
        # columns of the multiplication-by-self matrix in the basis 1, p, p^2, p^3
        cols = []
        basis = [Cyclo12(1), Cyclo12(0, 1), Cyclo12(0, 0, 1), Cyclo12(0, 0, 0, 1)]
        for e in basis:
            cols.append((self * e).c)
        m = [[cols[j][i] for j in range(4)] + [(_F1 if i == 0 else _F0)] for i in range(4)]
        # Gaussian elimination with exact rationals
        for col in range(4):
            piv = next(r for r in range(col, 4) if m[r][col])
            m[col], m[piv] = m[piv], m[col]
            inv = 1 / m[col][col]
            m[col] = [x * inv for x in m[col]]
            for r in range(4):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return Cyclo12(m[0][4], m[1][4], m[2][4], m[3][4])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo12(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------ comparisons etc.

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(("Cyclo12", self.c))

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not (self.c[1] or self.c[2] or self.c[3])

    def rational_value(self) -> Fraction:
        from .errors import IntegrityError

        if not self.is_rational():
            raise IntegrityError(f"{self!r} has irrational components")
        return self.c[0]

    def __repr__(self):
        return f"Cyclo12({self.c[0]}, {self.c[1]}, {self.c[2]}, {self.c[3]})"

    def __str__(self):
        return format_cyclo(self)


#: the generator p itself (a primitive twelfth root of unity)
P = Cyclo12(0, 1, 0, 0)
#: q = p^2, a primitive sixth root of unity with q^3 = -1
Q = P * P
ONE = Cyclo12(1)
ZERO = Cyclo12(0)


def q_power(n: int) -> Cyclo12:
    """q^n for any integer n (q has order 6, so only n mod 6 matters)."""
    return Q ** (n % 6)


def format_cyclo(x: Cyclo12) -> str:
    """Render as "[c0,c1,c2,c3]" with each entry in num/den form."""
    return "[" + ",".join(str(v) for v in x.c) + "]"


def parse_cyclo(text: str) -> Cyclo12:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"not a Cyclo12 literal: {text!r}")
    parts = body[1:-1].split(",")
    if len(parts) != 4:
        raise ValueError(f"expected 4 components: {text!r}")
    return Cyclo12(*(Fraction(part) for part in parts))
