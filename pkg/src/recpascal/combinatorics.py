"""Exact combinatorial kernels: binomials, central binomials, super Catalan numbers.

Integers are plain Python ints (arbitrary precision); rationals are
fractions.Fraction.  Every division performed here is exact and checked at
runtime, so a wrong intermediate can never round silently.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial


class ExactnessError(ArithmeticError):
    """An operation that must be exact left a remainder."""


def exact_div(a: int, b: int) -> int:
    """Divide a by b, insisting the division leaves no remainder."""
    q, r = divmod(a, b)
    if r:
        raise ExactnessError(f"{a} is not divisible by {b}")
    return q


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k falls outside [0, n].

    Uses the multiplicative recurrence with one exact division per step,
    which keeps intermediates no larger than the result itself.
    """
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = exact_div(out * (n - k + i), i)
    return out


def central_binomial(m: int) -> int:
    """Central binomial coefficient C(2m, m).  Even for every m > 0."""
    if m < 0:
        raise ValueError(f"central_binomial needs m >= 0, got {m}")
    return binomial(2 * m, m)


def super_catalan(m: int, n: int) -> int:
    """Super Catalan number (2m)! (2n)! / (m! n! (m+n)!).

    The quotient is an integer for all m, n >= 0; the division is checked
    so a regression cannot silently produce a wrong value.
    """
    if m < 0 or n < 0:
        raise ValueError(f"super_catalan needs m, n >= 0, got ({m}, {n})")
    return exact_div(
        factorial(2 * m) * factorial(2 * n),
        factorial(m) * factorial(n) * factorial(m + n),
    )


def rational(num: int, den: int = 1) -> Fraction:
    """Canonical fraction num/den: fully reduced, denominator positive."""
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)
