"""Exact L2 and L4 norms of polynomials with cube frequencies.

||f||_4^4 <= (max_m r(m)) * ||f||_2^4 holds for any frequency set; for cubes
in a short interval the max representation count is small, so the ratio
||f||_4 / ||f||_2 stays bounded.
"""
import random
from fractions import Fraction

from cubelens import CoeffPoly, CubeInterval, l4_fourth, lemma21_check, ratio_l4_l2, rep_profile

# %% all-ones polynomial on the Ramanujan support
f = CoeffPoly.ones([1, 729, 1000, 1728])
print(lemma21_check(f))
print("ratio ||f||_4/||f||_2 =", ratio_l4_l2(f))
print("energy:", rep_profile(f.support).energy, "== l4^4:", l4_fourth(f))

# %% random Gaussian-rational coefficients on a short cube interval
rng = random.Random(0)
N = 10 ** 4
support = CubeInterval(N, 40).elements()
g = CoeffPoly({n: (Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                   Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for n in support})
rep = lemma21_check(g)
print("max r(m) =", rep.max_rep, " holds:", rep.holds, " ratio:", ratio_l4_l2(g))

# %% the same support on the full cube range 1..41 contains 1729
h = CoeffPoly.ones(CubeInterval(1, 40).elements())
print("cubes 1..41: max r(m) =", lemma21_check(h).max_rep, " ratio:", ratio_l4_l2(h))
