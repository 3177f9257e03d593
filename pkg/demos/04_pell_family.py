"""Infinitely many equal sums of two cubes in intervals of length ~ sqrt(14 N).

Solutions of 7X^2 + 114 = Y^2 give u1^3 + u2^3 = u3^3 + u4^3 with all u_i in
[N, N + C sqrt(N)]; C decreases to sqrt(14).
"""
import math

from cubelens import pell_family, quadruple, sharpness_report, verify_family

for sol in pell_family(6):
    q = quadruple(sol)
    print(f"k={sol.k} X={sol.X} Y={sol.Y} u={q.u} U={q.U}")

print()
for row in verify_family(12)[1:]:
    s = row.sharpness
    print(f"k={s.k:>2} N~{s.N:.3e} spread={s.spread} ratio={s.ratio:.9f} "
          f"(ratio - sqrt14 = {s.ratio - math.sqrt(14):.2e})")
