"""Exact determinants for scalar and polynomial matrices."""

from __future__ import annotations

from fractions import Fraction


def det_cofactor(matrix) -> object:
    """Determinant by expansion over column subsets (no division).

    Works for any commutative ring elements: Fraction, Cyclo12, MPoly, int.
    Cost O(2^n * n^2); intended for n <= 8 and polynomial entries.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    # minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    minors = {0: None}
    prev = {}
    for cols_count in range(1, n + 1):
        cur = {}
        for mask in _masks(n, cols_count):
            r = cols_count - 1
            acc = None
            sign = 1
            for j in range(n):
                bit = 1 << j
                if not mask & bit:
                    continue
                sub = mask & ~bit
                entry = matrix[r][j]
                if cols_count == 1:
                    term = entry
                else:
                    term = prev[sub] * entry
                if sign < 0:
                    term = -term
                acc = term if acc is None else acc + term
                sign = -sign
            cur[mask] = acc
        prev = cur
    return prev[(1 << n) - 1]


def _masks(n: int, bits: int):
    # all n-bit masks with the given popcount, ascending
    mask = (1 << bits) - 1
    top = 1 << n
    while mask < top:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def det_bareiss(matrix) -> object:
    """Fraction-free (Bareiss) elimination; entries must support exact division."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            pivot = next((r for r in range(k + 1, n) if m[r][k]), None)
            if pivot is None:
                return m[k][k] * 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                if prev is not None:
                    value = _divexact(value, prev)
                m[i][j] = value
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign > 0 else -result


def _divexact(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact division in Bareiss elimination")
        return q
    return a / b


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                term = a[i][k] * b[k][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def identity_matrix(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]
