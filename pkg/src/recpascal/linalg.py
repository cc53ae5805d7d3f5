"""Exact linear algebra used as independent oracles.

Fraction-free (Bareiss) determinants, Gauss-Jordan inversion over the
rationals, and forward-substitution inversion for unit lower triangular
integer matrices.  Nothing here knows about the structured factorizations
in identities.py; keeping the two routes independent is what makes their
agreement meaningful.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .combinatorics import exact_div
from .matrices import from_rows


class BitGrowthMeter:
    """Records the largest numerator bit-length among observed values."""

    def __init__(self) -> None:
        self.max_bits = 0

    def observe(self, value) -> None:
        bits = value.numerator.bit_length()
        if bits > self.max_bits:
            self.max_bits = bits

    def observe_array(self, arr) -> None:
        for x in arr.flat:
            self.observe(x)


def _require_square(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")


def det_bareiss(m: np.ndarray) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rational input is first scaled row by row to integers (per-row lcm of
    the denominators) and the scaling divided back out at the end.  Every
    interior division the algorithm performs is exact by construction, and
    checked at runtime anyway.
    """
    _require_square(m)
    n = m.shape[0]
    work = []
    scale = 1
    for i in range(n):
        row = list(m[i])
        dens = [x.denominator for x in row if isinstance(x, Fraction)]
        f = lcm(*dens) if dens else 1
        if f != 1:
            row = [int(x * f) for x in row]
            scale *= f
        else:
            row = [int(x) if isinstance(x, Fraction) else x for x in row]
        work.append(row)

    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for r in range(k + 1, n):
                if work[r][k] != 0:
                    work[k], work[r] = work[r], work[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = work[k][k]
        row_k = work[k]
        for i in range(k + 1, n):
            row_i = work[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - lead * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * work[n - 1][n - 1], scale)


def invert_rational(m: np.ndarray, meter: BitGrowthMeter | None = None) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination over the rationals.

    The pivot is the first nonzero entry down each column: exact arithmetic
    needs no magnitude pivoting, and first-nonzero keeps the elimination
    order deterministic.  Raises ValueError naming the rank reached if the
    matrix turns out singular.
    """
    _require_square(m)
    n = m.shape[0]
    x = [[Fraction(v) for v in m[i]] for i in range(n)]
    y = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if x[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise ValueError(f"singular matrix: elimination stalled at rank {col} of {n}")
        if pivot_row != col:
            x[col], x[pivot_row] = x[pivot_row], x[col]
            y[col], y[pivot_row] = y[pivot_row], y[col]
        p = x[col][col]
        if p != 1:
            x[col] = [v / p for v in x[col]]
            y[col] = [v / p for v in y[col]]
        xc = x[col]
        yc = y[col]
        for r in range(n):
            if r == col:
                continue
            f = x[r][col]
            if f == 0:
                continue
            xr = x[r]
            yr = y[r]
            for j in range(n):
                xr[j] -= f * xc[j]
                yr[j] -= f * yc[j]
        if meter is not None:
            for row in x:
                for v in row:
                    meter.observe(v)
            for row in y:
                for v in row:
                    meter.observe(v)
    return from_rows(y)


def invert_unit_lower_triangular(l: np.ndarray) -> np.ndarray:
    """Exact inverse of a unit lower triangular integer matrix.

    Forward substitution column by column; the inverse of such a matrix is
    again unit lower triangular with integer entries, so everything stays
    in plain ints.
    """
    _require_square(l)
    n = l.shape[0]
    for i in range(n):
        for j in range(n):
            v = l[i, j]
            if not isinstance(v, int):
                raise ValueError(f"entry ({i}, {j}) = {v!r} is not a plain integer")
            if j > i and v != 0:
                raise ValueError(f"nonzero entry above the diagonal at ({i}, {j})")
            if j == i and v != 1:
                raise ValueError(f"diagonal entry ({i}, {i}) = {v}, must be 1")
    strict = [[l[i, j] for j in range(i)] for i in range(n)]
    out = [[0] * n for _ in range(n)]
    for j in range(n):
        out[j][j] = 1
        for i in range(j + 1, n):
            out[i][j] = -sum(strict[i][k] * out[k][j] for k in range(j, i))
    return from_rows(out)
