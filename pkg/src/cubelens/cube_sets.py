"""Cube frequency sets, representation functions, additive energy and Sidon checks."""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from ._parallel import pmap


@dataclass(frozen=True)
class CubeInterval:
    """The set {n**3 : N <= n <= N + k}."""

    N: int
    k: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("interval start N must be >= 1")
        if self.k < 0:
            raise ValueError("interval length k must be >= 0")

    def bases(self):
        return range(self.N, self.N + self.k + 1)

    def elements(self):
        return [n ** 3 for n in self.bases()]

    def __len__(self):
        return self.k + 1


def elements(interval: CubeInterval):
    return interval.elements()


def _sorted_unique(A):
    A = sorted(A)
    if any(a == b for a, b in zip(A, A[1:])):
        raise ValueError("set contains duplicates")
    return A


def rep_ordered(A, m: int) -> int:
    """Number of ordered pairs (a, b) in A x A with a + b = m (two-pointer scan)."""
    A = _sorted_unique(A)
    i, j = 0, len(A) - 1
    count = 0
    while i <= j:
        s = A[i] + A[j]
        if s < m:
            i += 1
        elif s > m:
            j -= 1
        else:
            count += 1 if i == j else 2
            i += 1
            j -= 1
    return count


def rep_unordered(A, m: int) -> int:
    """Number of pairs {a, b} with a <= b in A and a + b = m."""
    A = _sorted_unique(A)
    diag = 1 if m % 2 == 0 and _contains(A, m // 2) else 0
    return (rep_ordered(A, m) + diag) // 2


def _contains(A, x):
    i = bisect_left(A, x)
    return i < len(A) and A[i] == x


@dataclass(frozen=True)
class RepProfile:
    counts: dict = field(repr=False)
    max_rep: tuple
    energy: int


def _profile_part(A, workers, part):
    counts = Counter()
    n = len(A)
    for i in range(n):
        a = A[i]
        for j in range(i, n):
            s = a + A[j]
            if s % workers == part:
                counts[s] += 1 if i == j else 2
    return counts


def rep_profile(A, workers: int = 1) -> RepProfile:
    """Ordered representation counts for every sum, their max and the energy.

    With ``workers > 1`` sums are split by residue modulo ``workers``; each
    sum lands in exactly one part so the merge is a disjoint union.
    """
    A = _sorted_unique(A)
    if not A:
        return RepProfile({}, (None, 0), 0)
    parts = pmap(_profile_part, [(A, workers, p) for p in range(workers)], workers)
    counts = {}
    for part in parts:
        counts.update(part)
    r_max = max(counts.values())
    m_star = min(m for m, r in counts.items() if r == r_max)
    energy = sum(r * r for r in counts.values())
    return RepProfile(counts, (m_star, r_max), energy)


@dataclass(frozen=True)
class SidonResult:
    is_sidon: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.is_sidon


def _sidon_part(A, workers, part):
    # returns (position of colliding pair, witness) or None
    seen = {}
    n = len(A)
    for i in range(n):
        a = A[i]
        for j in range(i, n):
            s = a + A[j]
            if s % workers != part:
                continue
            prev = seen.get(s)
            if prev is not None:
                return (i, j), (A[prev[0]], A[prev[1]], a, A[j])
            seen[s] = (i, j)
    return None


def is_sidon(A, workers: int = 1) -> SidonResult:
    """Check that every sum a + b (a <= b) occurs at most once.

    Pairs are scanned in lexicographic order of (smaller, larger); the witness
    is the first pair whose sum was already taken, together with that earlier
    pair.  Partitioned runs return the same witness as the serial run.
    """
    A = _sorted_unique(A)
    hits = [h for h in pmap(_sidon_part, [(A, workers, p) for p in range(workers)],
                            workers) if h is not None]
    if not hits:
        return SidonResult(True)
    return SidonResult(False, min(hits)[1])


def sidon_threshold(N: int, k_max: int):
    """Smallest k <= k_max for which {n**3 : N <= n <= N+k} is not Sidon, else None.

    The sum table is extended one cube at a time.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    sums = set()
    cubes = []
    for k in range(k_max + 1):
        c = (N + k) ** 3
        cubes.append(c)
        new = [a + c for a in cubes]
        # new sums are pairwise distinct, so only clashes with older sums matter
        if not sums.isdisjoint(new):
            return k
        sums.update(new)
    return None
