"""Exact integer kernels: integer roots and comparisons against rational powers.

Everything here works on Python ints and :class:`fractions.Fraction`; no
floating point is used to decide an ordering.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

DEFAULT_PRECISION_CAP = 4096
START_PRECISION = 128


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        return cls((a > b) - (a < b))


class UnresolvedComparison(ArithmeticError):
    """The precision cap was reached without separating the operands."""

    def __init__(self, d, m, alpha, beta, cap):
        super().__init__(
            f"cannot separate {d} from {m}^{alpha} + {m}^{beta} within {cap} bits")
        self.d, self.m, self.alpha, self.beta, self.cap = d, m, alpha, beta, cap


def iroot(n: int, q: int) -> int:
    """Largest r with r**q <= n, for n >= 0 and q >= 1."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    if q < 1:
        raise ValueError("root index must be positive")
    if q == 1 or n < 2:
        return n
    if q == 2:
        return math.isqrt(n)
    # power-of-two seed is >= the root, so Newton decreases monotonically
    bits = n.bit_length()
    r = 1 << (-(-bits // q))
    while True:
        y = ((q - 1) * r + n // r ** (q - 1)) // q
        if y >= r:
            break
        r = y
    while r ** q > n:
        r -= 1
    while (r + 1) ** q <= n:
        r += 1
    return r


def icbrt(n: int) -> int:
    """Largest r with r**3 <= n."""
    return iroot(n, 3)


def isqrt(n: int) -> int:
    return math.isqrt(n)


def exact_root(n: int, q: int):
    """Return r if n == r**q exactly, else None."""
    r = iroot(n, q)
    return r if r ** q == n else None


def pow_cmp(d: int, m: int, p: int, q: int) -> Ordering:
    """Order of d relative to m**(p/q), decided by comparing d**q with m**p."""
    if d < 1 or m < 1:
        raise ValueError("pow_cmp needs d >= 1 and m >= 1")
    if p < 1 or q < 1:
        raise ValueError("exponent parts must be positive")
    return Ordering.of(d ** q, m ** p)


def _power_bracket(m: int, e: Fraction, s: int):
    """floor(m**e * 2**s)."""
    return iroot(m ** e.numerator << (e.denominator * s), e.denominator)


def cmp_against_power_sum(d, m: int, alpha, beta,
                          precision_cap: int = DEFAULT_PRECISION_CAP) -> Ordering:
    """Order of ``d`` relative to ``m**alpha + m**beta``.

    Perfect-power endpoints are handled exactly.  Otherwise both powers are
    bracketed by integer roots of ``m**p * 2**(q*s)`` (floor below, floor+1
    above) at s = 128, 256, ... bits until the bracket of the sum excludes
    ``d``.  Raises :class:`UnresolvedComparison` if ``precision_cap`` is hit.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not (0 < alpha < 1 and 0 < beta < 1):
        raise ValueError("alpha and beta must lie in (0, 1)")
    if m < 2:
        raise ValueError("m must be at least 2")
    d = Fraction(d)

    a_exact = exact_root(m ** alpha.numerator, alpha.denominator)
    b_exact = exact_root(m ** beta.numerator, beta.denominator)
    if a_exact is not None and b_exact is not None:
        return Ordering.of(d, a_exact + b_exact)
    if a_exact is not None or b_exact is not None:
        # d vs c + m**e with c an integer and m**e irrational:
        # d - c vs m**e, and m**e > 0 is a q-th root so compare q-th powers.
        c, e = (a_exact, beta) if a_exact is not None else (b_exact, alpha)
        rest = d - c
        if rest <= 0:
            return Ordering.LESS
        lhs = rest.numerator ** e.denominator
        rhs = m ** e.numerator * rest.denominator ** e.denominator
        return Ordering.of(lhs, rhs)

    s = START_PRECISION
    while s <= precision_cap:
        ra = _power_bracket(m, alpha, s)
        rb = _power_bracket(m, beta, s)
        # both powers irrational: ra/2^s < m^alpha < (ra+1)/2^s, same for beta
        scaled_d = d * (1 << s)
        if scaled_d <= ra + rb:
            return Ordering.LESS
        if scaled_d >= ra + rb + 2:
            return Ordering.GREATER
        s *= 2
    raise UnresolvedComparison(d, m, alpha, beta, precision_cap)


def ceil_root_power(m: int, e: Fraction) -> int:
    """Smallest integer d with d >= m**e (e = p/q > 0)."""
    p, q = e.numerator, e.denominator
    x = m ** p
    r = iroot(x, q)
    return r if r ** q == x else r + 1


def floor_root_power(m: int, e: Fraction) -> int:
    """Largest integer d with d <= m**e."""
    return iroot(m ** e.numerator, e.denominator)
