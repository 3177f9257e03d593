"""Primality testing and integer factorization.

Miller-Rabin with the first twelve prime bases is deterministic below
3.3e24 (so in particular below 2**64); larger inputs get a Baillie-PSW test
(strong base-2 Miller-Rabin plus a strong Lucas test with Selfridge
parameters).  Factoring is trial division by small primes followed by
Brent's variant of Pollard rho.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact_arith import iroot

TRIAL_BOUND = 1 << 12
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [p for p in range(n + 1) if sieve[p]]


SMALL_PRIMES = _small_primes(TRIAL_BOUND)


def _strong_probable_prime(n, a):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a, n):
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n):
    # Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and math.isqrt(n) ** 2 == n:
            return False
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x):
        return (x + n) // 2 % n if x % 2 else x // 2 % n

    U, V, Qk = 0, 2, 1
    # left-to-right binary ladder over the bits of d
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    if n < 1 << 64:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def pollard_brent(n: int, c: int = 1) -> int:
    """A nontrivial factor of the odd composite n.

    Deterministic: starts at y = 2 with f(x) = x^2 + c and increments c when
    the cycle closes without a factor.
    """
    if n % 2 == 0:
        return 2
    while True:
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batched gcd overshot; walk back one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _perfect_power(n):
    """(r, e) with n == r**e for a prime e, or (n, 1); rho stalls on prime powers.

    Only called after trial division, so r >= TRIAL_BOUND bounds e.
    """
    for e in SMALL_PRIMES:
        if e * (TRIAL_BOUND.bit_length() - 1) > n.bit_length():
            break
        r = iroot(n, e)
        if r ** e == n:
            return r, e
    return n, 1


@dataclass(frozen=True)
class Factorization:
    factors: tuple  # ((prime, exponent), ...) with primes increasing

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    def num_divisors(self) -> int:
        return math.prod(e + 1 for _, e in self.factors)

    def __iter__(self):
        return iter(self.factors)


def factor(m: int) -> Factorization:
    if m < 1:
        raise ValueError("factor() needs m >= 1")
    counts = {}
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        n = stack.pop()
        if n < TRIAL_BOUND ** 2 or is_prime(n):
            # after trial division any n below TRIAL_BOUND**2 is prime
            counts[n] = counts.get(n, 0) + 1
            continue
        root, e = _perfect_power(n)
        if e > 1:
            stack.extend([root] * e)
            continue
        d = pollard_brent(n)
        stack.extend((d, n // d))
    return Factorization(tuple(sorted(counts.items())))
