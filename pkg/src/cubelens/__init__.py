"""Cubes in short intervals: representation counts, Sidon checks, exact L4 norms,
short-interval divisor windows and the Pell family of equal sums of two cubes."""

from .cube_sets import (CubeInterval, RepProfile, SidonResult, elements, is_sidon,
                        rep_ordered, rep_profile, rep_unordered, sidon_threshold)
from .divisor_windows import (RepBoundReport, ScanResult, WindowCount, divisors_in,
                              merge_scans, rep_bound_check, thm22_scan,
                              window_count_below_cuberoot, window_count_exponent)
from .exact_arith import (Ordering, UnresolvedComparison, cmp_against_power_sum, icbrt,
                          iroot, isqrt, pow_cmp)
from .l4_analysis import CoeffPoly, NormReport, l2_sq, l4_fourth, lemma21_check, ratio_l4_l2
from .pell import (PellSolution, RamanujanQuadruple, pell_family, quadruple,
                   sharpness_report, verify_family)
from .primes import Factorization, factor, is_prime

__version__ = "0.1.0"
