"""Divisors in short intervals.

Two kinds of window are counted exactly:

* the cube-root window ``[M^(1/3) - delta, M^(1/3)]`` that contains ``u + v``
  for every representation ``m = u^3 + v^3`` with ``u, v in [N, N+k]``
  (here ``M = 4m`` and ``delta = k^2/N``);
* the exponent window ``[m^alpha, m^alpha + m^beta]`` for rational exponents.

The cube-root window needs only integer arithmetic.  The exponent window's
upper end goes through :func:`cmp_against_power_sum`, and divisors it cannot
separate from the endpoint are kept and tallied as ``unresolved``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ._parallel import pmap
from .cube_sets import CubeInterval
from .exact_arith import (DEFAULT_PRECISION_CAP, Ordering, UnresolvedComparison,
                          ceil_root_power, cmp_against_power_sum, floor_root_power,
                          icbrt)
from .primes import factor

# below this many candidates a window is scanned by trial division directly
DIRECT_SCAN_LIMIT = 4096


def divisors_in(m: int, lo: int, hi: int, factorization=None):
    """Sorted divisors d of m with lo <= d <= hi.

    Built from the prime factorization, abandoning partial products above hi.
    """
    if lo > hi:
        raise ValueError("empty range: lo > hi")
    if m < 1:
        raise ValueError("m must be positive")
    fs = list(factorization or factor(m))
    out = []

    def walk(i, d):
        if i == len(fs):
            if lo <= d <= hi:
                out.append(d)
            return
        p, e = fs[i]
        for _ in range(e + 1):
            if d > hi:
                break
            walk(i + 1, d)
            d *= p

    walk(0, 1)
    return sorted(out)


def _divisors_between(M, lo, hi):
    lo = max(lo, 1)
    if hi < lo:
        return []
    if hi - lo < DIRECT_SCAN_LIMIT:
        return [d for d in range(lo, hi + 1) if M % d == 0]
    return divisors_in(M, lo, hi)


@dataclass(frozen=True)
class WindowCount:
    m: int
    lo_desc: str
    hi_desc: str
    count: int
    divisors: tuple
    unresolved: int = 0


def window_count_below_cuberoot(M: int, delta, symmetric: bool = False) -> WindowCount:
    """#{d | M : M^(1/3) - delta <= d <= M^(1/3)}  (closed window).

    ``d <= M^(1/3)`` iff ``d^3 <= M``; ``d >= M^(1/3) - delta`` iff
    ``(d + delta)^3 >= M``.  With ``symmetric=True`` the window is extended to
    ``M^(1/3) + delta`` on the right (``(d - delta)^3 <= M``).
    """
    delta = Fraction(delta)
    if M < 1:
        raise ValueError("M must be positive")
    if delta < 0:
        raise ValueError("delta must be non-negative")
    c = icbrt(M)
    lo = max(1, math.floor(c - delta))
    while lo <= c and (lo + delta) ** 3 < M:
        lo += 1
    hi = c
    if symmetric:
        hi = math.floor(c + 1 + delta)
        while hi > c and (hi - delta) ** 3 > M:
            hi -= 1
    divs = _divisors_between(M, lo, hi)
    right = f"{M}^(1/3)" + (f" + {delta}" if symmetric else "")
    return WindowCount(M, f"{M}^(1/3) - {delta}", right, len(divs), tuple(divs))


def _upper_check(d, m, alpha, beta, cap):
    """True/False membership for the upper end, or None if unresolved."""
    try:
        return cmp_against_power_sum(d, m, alpha, beta, cap) <= Ordering.EQUAL
    except UnresolvedComparison:
        return None


def _float_upper(m, alpha, beta):
    return m ** float(alpha) + m ** float(beta)


def window_count_exponent(m: int, alpha, beta,
                          precision_cap: int = DEFAULT_PRECISION_CAP) -> WindowCount:
    """#{d | m : m^alpha <= d <= m^alpha + m^beta} with exact endpoint tests."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not (0 < alpha < 1 and 0 < beta < 1):
        raise ValueError("alpha and beta must lie in (0, 1)")
    if m < 2:
        raise ValueError("m must be at least 2")
    lo = ceil_root_power(m, alpha)
    # float estimate of the top plus a margin; every candidate is re-checked exactly
    approx = _float_upper(m, alpha, beta)
    hi = math.floor(approx * (1 + 1e-9)) + 2
    found, unresolved = [], 0
    for d in _divisors_between(m, lo, hi):
        inside = _upper_check(d, m, alpha, beta, precision_cap)
        if inside is None:
            unresolved += 1
            found.append(d)
        elif inside:
            found.append(d)
    return WindowCount(m, f"{m}^({alpha})", f"{m}^({alpha}) + {m}^({beta})",
                       len(found), tuple(found), unresolved)


def regime(alpha, beta) -> str:
    """'theorem' when beta < alpha^2, 'conjecture' when alpha^2 <= beta < alpha."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if beta < alpha * alpha:
        return "theorem"
    if beta < alpha:
        return "conjecture"
    raise ValueError("beta must be below alpha")


@dataclass
class ScanResult:
    m_from: int
    m_to: int
    alpha: Fraction
    beta: Fraction
    max_count: int
    argmax_m: Optional[int]
    histogram: dict
    unresolved: int = 0
    maxima: list = field(default_factory=list)  # (m, count) at each new running max

    @property
    def regime(self):
        return regime(self.alpha, self.beta)


def _smallest_m_reaching(d, alpha, beta):
    """Smallest m >= 2 with m^alpha + m^beta >= d, approximately (from below)."""
    lo, hi = 2, 2
    while _float_upper(hi, alpha, beta) < d:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _float_upper(mid, alpha, beta) < d:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _scan_counts(m_from, m_to, alpha, beta, cap):
    """Nonzero window counts for m in [m_from, m_to], driven by the divisor d.

    For fixed d the admissible m form an interval: m^alpha <= d gives
    m <= floor(d^(1/alpha)), and m^alpha + m^beta >= d (increasing in m)
    gives a lower end.  Only multiples of d in that interval are tested.
    """
    counts = Counter()
    unresolved = 0
    d_max = math.floor(_float_upper(m_to, alpha, beta) * (1 + 1e-9)) + 2
    inv = 1 / alpha
    for d in range(1, d_max + 1):
        top = min(m_to, floor_root_power(d, inv))
        if top < m_from:
            continue
        bottom = _smallest_m_reaching(d, alpha, beta)
        bottom = max(m_from, 2, math.floor(bottom * (1 - 1e-9)) - 2)
        first = -(-bottom // d) * d
        for m in range(first, top + 1, d):
            inside = _upper_check(d, m, alpha, beta, cap)
            if inside is None:
                unresolved += 1
                counts[m] += 1
            elif inside:
                counts[m] += 1
    return counts, unresolved


def _summarize(counts, m_from, m_to):
    hist = Counter(counts.values())
    hist[0] = (m_to - m_from + 1) - len(counts)
    if hist[0] == 0:
        del hist[0]
    maxima, best = [], 0
    for m in sorted(counts):
        if counts[m] > best:
            best = counts[m]
            maxima.append((m, best))
    return maxima, dict(sorted(hist.items()))


def thm22_scan(m_max: int, alpha, beta, *, m_from: int = 2, workers: int = 1,
               precision_cap: int = DEFAULT_PRECISION_CAP, chunks: Optional[int] = None
               ) -> ScanResult:
    """Scan window counts #{d | m : m^alpha <= d <= m^alpha + m^beta} over m.

    Returns the largest count, the smallest m attaining it and a histogram of
    counts over all m in ``[m_from, m_max]``.  The range is split into chunks
    merged by smallest-argmax, so the result does not depend on ``workers``.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    regime(alpha, beta)
    m_from = max(m_from, 2)
    if m_max < m_from:
        raise ValueError("empty scan range")
    chunks = chunks or max(1, workers)
    bounds = [m_from + (m_max - m_from + 1) * i // chunks for i in range(chunks + 1)]
    jobs = [(bounds[i], bounds[i + 1] - 1, alpha, beta, precision_cap)
            for i in range(chunks) if bounds[i] <= bounds[i + 1] - 1]
    counts, unresolved = Counter(), 0
    for part, unres in pmap(_scan_counts, jobs, workers):
        counts.update(part)
        unresolved += unres
    maxima, hist = _summarize(counts, m_from, m_max)
    if maxima:
        argmax, best = maxima[-1]
    else:
        argmax, best = None, 0
    return ScanResult(m_from, m_max, alpha, beta, best, argmax, hist, unresolved, maxima)


def merge_scans(results) -> ScanResult:
    """Fold scans over adjacent or disjoint m-ranges (smallest argmax wins ties)."""
    results = sorted(results, key=lambda r: r.m_from)
    if not results:
        raise ValueError("nothing to merge")
    first = results[0]
    for r in results[1:]:
        if (r.alpha, r.beta) != (first.alpha, first.beta):
            raise ValueError("cannot merge scans with different exponents")
    for a, b in zip(results, results[1:]):
        if b.m_from <= a.m_to:
            raise ValueError("scan ranges overlap")
    hist = Counter()
    for r in results:
        hist.update(r.histogram)
    best, argmax = 0, None
    maxima = []
    for r in results:
        for m, c in r.maxima:
            if c > best:
                best, argmax = c, m
                maxima.append((m, c))
    return ScanResult(first.m_from, results[-1].m_to, first.alpha, first.beta, best,
                      argmax, dict(sorted(hist.items())),
                      sum(r.unresolved for r in results), maxima)


@dataclass
class RepBoundReport:
    N: int
    k: int
    delta: Fraction
    symmetric: bool
    sums_checked: int
    max_ratio: Fraction          # max of rep_unordered(m) / window count
    argmax_ratio: Optional[int]
    violations: list             # [(m, reps, window_count)]
    reconstruction_failures: list  # [m]

    @property
    def ok(self):
        return not self.violations and not self.reconstruction_failures


def _reconstruct(m, d):
    """The pair (u, v), u >= v >= 0, with u + v = d and u^3 + v^3 = m, if any."""
    M = 4 * m
    if M % d:
        return None
    t = M // d - d * d
    if t < 0 or t % 3:
        return None
    s = math.isqrt(t // 3)
    if s * s != t // 3 or (d + s) % 2:
        return None
    u, v = (d + s) // 2, (d - s) // 2
    if v < 0 or u ** 3 + v ** 3 != m:
        return None
    return u, v


def _repbound_part(N, k, delta, symmetric, workers, part):
    reps = {}
    top = N + k
    for v in range(N, top + 1):
        v3 = v ** 3
        for u in range(v, top + 1):
            m = u ** 3 + v3
            if m % workers == part:
                reps.setdefault(m, []).append((u, v))
    checked, violations, failures = 0, [], []
    best, best_m = Fraction(0), None
    for m in sorted(reps):
        pairs = reps[m]
        checked += 1
        M = 4 * m
        for u, v in pairs:
            if (u + v) ** 3 > M:
                failures.append(m)
        w = window_count_below_cuberoot(M, delta, symmetric)
        if len(pairs) > w.count:
            violations.append((m, len(pairs), w.count))
            continue
        ratio = Fraction(len(pairs), w.count)
        if ratio > best:
            best, best_m = ratio, m
        # every counted divisor that is u+v for a pair in range must give that pair back
        rebuilt = set()
        for d in w.divisors:
            uv = _reconstruct(m, d)
            if uv is not None and N <= uv[1] and uv[0] <= top:
                rebuilt.add(uv)
        if rebuilt != set(pairs):
            failures.append(m)
    return checked, best, best_m, violations, failures


def rep_bound_check(N: int, k: int, *, symmetric: bool = False,
                    workers: int = 1) -> RepBoundReport:
    """Check rep_unordered(A, m) <= #{d | 4m in the cube-root window} for all sums.

    A = {n^3 : N <= n <= N+k} and the window width is k^2/N.  Also checks that
    every representation satisfies (u+v)^3 <= 4m and that the counted divisors
    reconstruct exactly the representations of m inside the interval.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    CubeInterval(N, k)
    delta = Fraction(k * k, N)
    parts = pmap(_repbound_part,
                 [(N, k, delta, symmetric, workers, p) for p in range(workers)], workers)
    checked, best, best_m, violations, failures = 0, Fraction(0), None, [], []
    for c, b, bm, viol, fail in parts:
        checked += c
        if b > best or (b == best and bm is not None and (best_m is None or bm < best_m)):
            best, best_m = b, bm
        violations.extend(viol)
        failures.extend(fail)
    return RepBoundReport(N, k, delta, symmetric, checked, best, best_m,
                          sorted(violations), sorted(set(failures)))
