"""Executable checks for the factorization identities, plus the production
path that inverts the reciprocal Pascal matrix through its triangular and
diagonal factors.

Checks never raise on a mathematical failure; they return a CheckReport
carrying the first counterexample, so callers can aggregate and serialize
outcomes.  Genuine invariant violations (a non-integer where an integer is
claimed) raise ExactnessError instead.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .combinatorics import ExactnessError, binomial, super_catalan
from .linalg import BitGrowthMeter, det_bareiss, invert_rational, invert_unit_lower_triangular
from .matrices import (
    d_matrix,
    g_matrix,
    identity,
    l_matrix,
    matmul,
    reciprocal_pascal,
    super_catalan_matrix,
    to_integer,
)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check.

    counterexample is None exactly when the check passed; otherwise it is
    (i, j, expected, actual) for the first failing location.  Scalar checks
    use location (0, 0); sequence checks put the sequence index in i.
    """

    name: str
    n: int | tuple[int, int]
    passed: bool
    counterexample: tuple | None
    elapsed: float

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("passed must match the absence of a counterexample")

    def to_json(self) -> dict:
        ce = None
        if self.counterexample is not None:
            i, j, expected, actual = self.counterexample
            ce = {"i": i, "j": j, "expected": str(expected), "actual": str(actual)}
        return {
            "name": self.name,
            "n": list(self.n) if isinstance(self.n, tuple) else self.n,
            "passed": self.passed,
            "counterexample": ce,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


def _first_mismatch(expected, actual):
    """Row-major scan for the first differing entry; None when equal."""
    if expected.shape != actual.shape:
        raise ValueError(f"shape mismatch: {expected.shape} vs {actual.shape}")
    rows, cols = expected.shape
    for i in range(rows):
        for j in range(cols):
            if expected[i, j] != actual[i, j]:
                return (i, j, expected[i, j], actual[i, j])
    return None


def _sign(k: int) -> int:
    # (-1)**k is a float for negative k, so take the parity instead.
    return -1 if k & 1 else 1


def check_grg(n: int) -> CheckReport:
    """Super Catalan array against the central-binomial-scaled reciprocal array."""
    start = time.perf_counter()
    g = g_matrix(n)
    product = matmul(matmul(g, reciprocal_pascal(n)), g)
    mismatch = _first_mismatch(super_catalan_matrix(n), product)
    return CheckReport("grg", n, mismatch is None, mismatch, time.perf_counter() - start)


def check_ldl(n: int) -> CheckReport:
    """Super Catalan array against the triangular-diagonal-triangular product."""
    start = time.perf_counter()
    l = l_matrix(n)
    product = matmul(matmul(l, d_matrix(n)), l.T)
    mismatch = _first_mismatch(super_catalan_matrix(n), product)
    return CheckReport("ldl", n, mismatch is None, mismatch, time.perf_counter() - start)


def check_von_szily(m: int, n: int) -> CheckReport:
    """Alternating binomial convolution against the super Catalan value.

    Both the full two-sided sum and the folded one-sided form are evaluated;
    the report fails on whichever disagrees first.
    """
    if m < 0 or n < 0:
        raise ValueError(f"indices must be nonnegative, got ({m}, {n})")
    start = time.perf_counter()
    expected = super_catalan(m, n)
    bound = max(m, n)
    raw = sum(
        _sign(k) * binomial(2 * m, m + k) * binomial(2 * n, n - k)
        for k in range(-bound, bound + 1)
    )
    mismatch = None
    if raw != expected:
        mismatch = (m, n, expected, raw)
    else:
        folded = binomial(2 * m, m) * binomial(2 * n, n) + 2 * sum(
            _sign(k) * binomial(2 * m, m + k) * binomial(2 * n, n + k)
            for k in range(1, bound + 1)
        )
        if folded != expected:
            mismatch = (m, n, expected, folded)
    return CheckReport(
        "vonszily", (m, n), mismatch is None, mismatch, time.perf_counter() - start
    )


def check_von_szily_upto(n: int) -> CheckReport:
    """Every index pair below n, aggregated into a single report."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    start = time.perf_counter()
    mismatch = None
    for m in range(n):
        for k in range(n):
            sub = check_von_szily(m, k)
            if not sub.passed:
                mismatch = sub.counterexample
                break
        if mismatch is not None:
            break
    return CheckReport("vonszily", n, mismatch is None, mismatch, time.perf_counter() - start)


def _l_inverse_first_column(n: int) -> list:
    """Column 0 of the binomial triangle's inverse, by forward substitution."""
    l = l_matrix(n)
    col = [1]
    for i in range(1, n):
        col.append(-sum(l[i, k] * col[k] for k in range(i)))
    return col


def check_l_inverse_column(n: int) -> CheckReport:
    """First column of the triangle's inverse: a leading 1, even entries below
    it, and entrywise agreement with the alternating diagonal."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    start = time.perf_counter()
    col = _l_inverse_first_column(n)
    d = d_matrix(n).diag
    mismatch = None
    if col[0] != 1:
        mismatch = (0, 0, 1, col[0])
    else:
        for i in range(1, n):
            if col[i] % 2 != 0:
                mismatch = (i, 0, "an even value", col[i])
                break
            if col[i] != d[i]:
                mismatch = (i, 0, d[i], col[i])
                break
    return CheckReport("parity", n, mismatch is None, mismatch, time.perf_counter() - start)


def _r_inverse_rational(n: int, meter: BitGrowthMeter | None = None) -> np.ndarray:
    linv = invert_unit_lower_triangular(l_matrix(n))
    g = g_matrix(n)
    scaled = matmul(linv.T, d_matrix(n).inverse())
    mid = matmul(scaled, linv)
    out = matmul(matmul(g, mid), g)
    if meter is not None:
        meter.observe_array(linv)
        meter.observe_array(scaled)
        meter.observe_array(mid)
        meter.observe_array(out)
    return out


def r_inverse_via_factorization(n: int, meter: BitGrowthMeter | None = None) -> np.ndarray:
    """Integer inverse of the reciprocal Pascal matrix via its factors.

    Assembles central-binomial scalings around the inverted triangle and the
    reciprocal alternating diagonal, then demotes to integers through the
    checked conversion: a failed integrality claim aborts rather than rounds.
    """
    return to_integer(_r_inverse_rational(n, meter))


def r_inverse_00(n: int) -> int:
    """Top-left entry of the inverse, from the closed expression
    1 + sum of column0[i]^2 / d[i]; alternates between +1 and -1 with n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    col = _l_inverse_first_column(n)
    d = d_matrix(n).diag
    total = Fraction(1)
    for i in range(1, n):
        total += Fraction(col[i] * col[i], d[i])
    if total.denominator != 1:
        raise ExactnessError(f"closed expression gave a non-integer: {total}")
    return int(total)


def det_r_inverse_formula(n: int) -> Fraction:
    """Closed-form determinant of the integer inverse, evaluated verbatim:
    (-1)^(n(n+1)/2) / 2^(n-1) times the product of squared central binomials."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    prod = 1
    for c in g_matrix(n).diag:
        prod *= c * c
    sign = _sign(n * (n + 1) // 2)
    return Fraction(sign * prod, 2 ** (n - 1))


def det_comparison(n: int) -> dict:
    """Closed-form determinant next to the elimination oracle's value.

    Magnitude and sign agreement are reported separately: the magnitudes
    always agree, while the closed form's sign factor disagrees with the
    oracle for odd n.  Both values are kept exact so the discrepancy stays
    visible instead of being smoothed over.
    """
    formula = det_r_inverse_formula(n)
    oracle = det_bareiss(invert_rational(reciprocal_pascal(n)))
    return {
        "n": n,
        "formula": formula,
        "oracle": oracle,
        "magnitude_match": abs(formula) == abs(oracle),
        "sign_match": (formula > 0) == (oracle > 0),
    }


def check_integrality(n: int) -> CheckReport:
    """Factorization inverse is all-integer, matches the Gauss-Jordan oracle,
    multiplies back to the identity, and agrees with the closed expression
    at (0, 0)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    start = time.perf_counter()
    raw = _r_inverse_rational(n)
    mismatch = None
    for i in range(n):
        for j in range(n):
            if raw[i, j].denominator != 1:
                mismatch = (i, j, "an integer entry", raw[i, j])
                break
        if mismatch is not None:
            break
    if mismatch is None:
        rinv = to_integer(raw)
        r = reciprocal_pascal(n)
        mismatch = _first_mismatch(invert_rational(r), rinv)
        if mismatch is None:
            mismatch = _first_mismatch(identity(n), matmul(r, rinv))
        if mismatch is None:
            closed = r_inverse_00(n)
            if rinv[0, 0] != closed:
                mismatch = (0, 0, closed, rinv[0, 0])
    return CheckReport(
        "integrality", n, mismatch is None, mismatch, time.perf_counter() - start
    )
