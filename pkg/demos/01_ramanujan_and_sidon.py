"""Representation counts and Sidon checks for cubes in short intervals.

Run: python demos/01_ramanujan_and_sidon.py
"""
from math import isqrt

from cubelens import CubeInterval, is_sidon, rep_ordered, rep_profile, rep_unordered, sidon_threshold

# %% The cubes 1^3 .. 12^3 and the taxicab number 1729
A = CubeInterval(1, 11).elements()
print("ordered reps of 1729:", rep_ordered(A, 1729))
print("unordered reps of 1729:", rep_unordered(A, 1729))
prof = rep_profile(A)
print("max ordered count:", prof.max_rep, " energy:", prof.energy)
print(is_sidon(A))

# %% Short intervals stay Sidon up to k ~ sqrt(N/2)
for N in (10, 100, 1000, 10 ** 4, 10 ** 5):
    k = isqrt(N // 2)
    t = sidon_threshold(N, 40 * k + 40)
    print(f"N={N:>6}  isqrt(N/2)={k:>4}  Sidon at that k: {is_sidon(CubeInterval(N, k).elements()).is_sidon}"
          f"  first non-Sidon k: {t}")

# %% The first clash for N = 9 needs k = 18
N, k = 9, sidon_threshold(9, 50)
print("N=9 threshold:", k, is_sidon(CubeInterval(N, k).elements()).witness)
