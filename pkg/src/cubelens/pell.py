"""Equal sums of two cubes from the Pell-type curve 7X^2 + 114 = Y^2.

Solutions come from X*sqrt(7) + Y = (sqrt(7) + 11) * (3*sqrt(7) + 8)^k.
Multiplying X*sqrt(7) + Y by 3*sqrt(7) + 8 gives the linear step
(X, Y) -> (8X + 3Y, 21X + 8Y), which preserves 7X^2 - Y^2 because
8^2 - 7*3^2 = 1.  Each solution yields four integers

    u1 = (X^2 - Y)/2 + 6,  u2 = (X^2 + Y)/2 + 6,
    u3 = (X^2 - X)/2 + 9,  u4 = (X^2 + X)/2 + 9,

with u1^3 + u2^3 = u3^3 + u4^3, all lying in [N, N + C*sqrt(N)] for
N = (X^2 - Y)/2.  The constant C tends to sqrt(14).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .cube_sets import is_sidon

D = 7
RHS = 114
SEED = (1, 11)
UNIT = (3, 8)  # 3*sqrt(7) + 8, norm 8^2 - 7*3^2 = 1


class InvariantError(AssertionError):
    """An exact identity that must hold by construction failed."""


def on_curve(X: int, Y: int) -> bool:
    return D * X * X + RHS == Y * Y


def step(X: int, Y: int):
    """(X*sqrt7 + Y) * (3*sqrt7 + 8)."""
    a, b = UNIT
    return b * X + a * Y, D * a * X + b * Y


@dataclass(frozen=True)
class PellSolution:
    k: int
    X: int
    Y: int


def pell_family(count: int):
    if count < 1:
        raise ValueError("count must be >= 1")
    X, Y = SEED
    out = []
    for k in range(count):
        if not on_curve(X, Y):
            raise InvariantError(f"7X^2 + 114 != Y^2 at k={k}")
        out.append(PellSolution(k, X, Y))
        X, Y = step(X, Y)
    return out


def pell_solution(k: int) -> PellSolution:
    return pell_family(k + 1)[-1]


@dataclass(frozen=True)
class RamanujanQuadruple:
    u1: int
    u2: int
    u3: int
    u4: int
    v: int
    N: int
    U: int

    @property
    def u(self):
        return (self.u1, self.u2, self.u3, self.u4)


def quadruple(sol: PellSolution) -> RamanujanQuadruple:
    X, Y = sol.X, sol.Y
    X2 = X * X
    if (X2 - Y) % 2:
        raise InvariantError("X^2 - Y is odd")
    u1 = (X2 - Y) // 2 + 6
    u2 = (X2 + Y) // 2 + 6
    u3 = (X2 - X) // 2 + 9
    u4 = (X2 + X) // 2 + 9
    v = X2 + 18
    N = (X2 - Y) // 2
    U = u1 ** 3 + u2 ** 3
    if u3 ** 3 + u4 ** 3 != U:
        raise InvariantError(f"cube sums differ at k={sol.k}")
    if 4 * U != (v - 6) * v * (v + 9):
        raise InvariantError(f"4U != (v-6) v (v+9) at k={sol.k}")
    if u1 + u2 != v - 6 or u3 + u4 != v:
        raise InvariantError(f"sum relations fail at k={sol.k}")
    return RamanujanQuadruple(u1, u2, u3, u4, v, N, U)


@dataclass(frozen=True)
class SharpnessReport:
    k: int
    N: int
    spread: int
    ratio: float


def sharpness_report(sol: PellSolution) -> SharpnessReport:
    """How wide an interval [N, N + C sqrt(N)] the non-Sidon quadruple needs."""
    q = quadruple(sol)
    if q.N <= 0:
        raise ValueError(f"N = {q.N} is not positive (k={sol.k}); need k >= 1")
    if min(q.u) < q.N:
        raise InvariantError("quadruple starts below N")
    spread = max(q.u) - q.N
    return SharpnessReport(sol.k, q.N, spread, spread / math.sqrt(q.N))


@dataclass(frozen=True)
class FamilyRow:
    solution: PellSolution
    quadruple: RamanujanQuadruple
    sharpness: Optional[SharpnessReport]
    witness: tuple


def verify_family(count: int):
    """Build and check rows k = 0 .. count-1.

    Each row's cube set {u_i^3} must fail the Sidon check with the witness
    (u1^3, u2^3, u3^3, u4^3).  Rows with k >= 1 also carry a sharpness report.
    """
    rows = []
    for sol in pell_family(count):
        q = quadruple(sol)
        cubes = [x ** 3 for x in q.u]
        res = is_sidon(cubes)
        expected = tuple(cubes)
        if res.is_sidon or res.witness != expected:
            raise InvariantError(f"k={sol.k}: Sidon check gave {res}, expected {expected}")
        sharp = sharpness_report(sol) if sol.k >= 1 else None
        rows.append(FamilyRow(sol, q, sharp, res.witness))
    return rows
