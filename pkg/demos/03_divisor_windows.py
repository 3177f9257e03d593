"""Divisors in short windows.

Part 1: u + v for a representation m = u^3 + v^3 with u, v in [N, N+k] is a
divisor of 4m just below (4m)^(1/3); the window has width k^2/N.
Part 2: counts of divisors in [m^alpha, m^alpha + m^beta] stay bounded.
"""
from fractions import Fraction

from cubelens import factor, rep_bound_check, thm22_scan, window_count_below_cuberoot, window_count_exponent

# %% 1729 = 9^3 + 10^3 = 1^3 + 12^3; 4 * 1729 = 6916
print(factor(6916))
print(window_count_below_cuberoot(6916, 1))

# %% the bound chain over every sum of two cubes in [N, N+k]
N = 10 ** 4
k = 184  # floor(N^(2/3 - 1/10))
rep = rep_bound_check(N, k)
print(f"N={N} k={k}: {rep.sums_checked} sums, ok={rep.ok}, max ratio {rep.max_ratio}")

# %% exponent windows
print(window_count_exponent(720720, Fraction(1, 3), Fraction(1, 5)))
for beta in (Fraction(1, 20), Fraction(1, 10), Fraction(1, 5), Fraction(3, 10)):
    r = thm22_scan(10 ** 5, Fraction(1, 3), beta)
    print(f"beta={beta}: regime={r.regime} max={r.max_count} at m={r.argmax_m} hist={r.histogram}")
