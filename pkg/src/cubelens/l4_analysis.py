"""Exact L2 / L4 norms of trigonometric polynomials sum a_n e(nx).

Coefficients are Gaussian rationals, so both ``||f||_2^2`` and ``||f||_4^4``
are exact fractions.  ``||f||_4^4`` is computed as ``||f^2||_2^2`` from the
sparse self-convolution of the coefficient map.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .cube_sets import rep_profile


@dataclass(frozen=True)
class CoeffPoly:
    """Finitely supported map frequency -> (re, im), zero coefficients dropped."""

    terms: dict

    def __init__(self, terms=None):
        clean = {}
        for n, c in (terms or {}).items():
            re, im = c if isinstance(c, tuple) else (c, 0)
            re, im = Fraction(re), Fraction(im)
            if re or im:
                clean[int(n)] = (re, im)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def ones(cls, support):
        return cls({n: (1, 0) for n in support})

    @property
    def support(self):
        return sorted(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def shifted(self, t: int) -> "CoeffPoly":
        return CoeffPoly({n + t: c for n, c in self.terms.items()})

    def scaled(self, lam) -> "CoeffPoly":
        lam = Fraction(lam)
        return CoeffPoly({n: (re * lam, im * lam) for n, (re, im) in self.terms.items()})

    def evaluate(self, x: float) -> complex:
        """Floating-point value of f(x); for plotting and numerical cross-checks."""
        return sum(complex(float(re), float(im)) * complex(math.cos(2 * math.pi * n * x),
                                                           math.sin(2 * math.pi * n * x))
                   for n, (re, im) in self.terms.items())

    @classmethod
    def from_json(cls, data):
        """Parse ``{"terms": [{"n": "<int>", "re": "p/q", "im": "p/q"}, ...]}``."""
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        terms = {}
        for t in data["terms"]:
            n = int(t["n"])
            if n in terms:
                raise ValueError(f"duplicate frequency {n}")
            terms[n] = (Fraction(t.get("re", "0")), Fraction(t.get("im", "0")))
        return cls(terms)

    def to_json(self):
        return {"terms": [{"n": str(n), "re": str(re), "im": str(im)}
                          for n, (re, im) in sorted(self.terms.items())]}


def _integer_form(f: CoeffPoly):
    """Scale coefficients to Gaussian integers: returns (D, [(n, re, im)])."""
    dens = [c.denominator for re, im in f.terms.values() for c in (re, im)]
    D = reduce(math.lcm, dens, 1)
    return D, [(n, int(re * D), int(im * D)) for n, (re, im) in sorted(f.terms.items())]


def _square(items):
    # each unordered pair once, off-diagonal doubled
    acc = {}
    for i, (n1, a1, b1) in enumerate(items):
        for n2, a2, b2 in items[i:]:
            re = a1 * a2 - b1 * b2
            im = a1 * b2 + a2 * b1
            if n1 != n2:
                re, im = 2 * re, 2 * im
            m = n1 + n2
            cur = acc.get(m)
            acc[m] = (re, im) if cur is None else (cur[0] + re, cur[1] + im)
    return acc


def l2_sq(f: CoeffPoly) -> Fraction:
    return sum((re * re + im * im for re, im in f.terms.values()), Fraction(0))


def self_convolution(f: CoeffPoly) -> dict:
    """Coefficients of f*f as {m: (re, im)} with m = n1 + n2, exact."""
    D, items = _integer_form(f)
    acc = _square(items)
    D2 = D * D
    return {m: (Fraction(re, D2), Fraction(im, D2)) for m, (re, im) in acc.items()}


def l4_fourth(f: CoeffPoly) -> Fraction:
    """||f||_4^4 = sum_m |c_m|^2 where c = coefficients of f^2."""
    D, items = _integer_form(f)
    acc = _square(items)
    total = sum(re * re + im * im for re, im in acc.values())
    return Fraction(total, D ** 4)


@dataclass(frozen=True)
class NormReport:
    l2_sq: Fraction
    l4_4: Fraction
    max_rep: int
    bound_rhs: Fraction
    holds: bool


def lemma21_check(f: CoeffPoly) -> NormReport:
    """Compare ||f||_4^4 with (max_m r(m)) * (||f||_2^2)^2 over the support of f."""
    l2 = l2_sq(f)
    l4 = l4_fourth(f)
    r = rep_profile(f.support).max_rep[1] if f else 0
    rhs = r * l2 * l2
    return NormReport(l2, l4, r, rhs, l4 <= rhs)


def ratio_l4_l2(f: CoeffPoly) -> float:
    """||f||_4 / ||f||_2 as a float (display value only)."""
    if not f:
        raise ValueError("ratio undefined for the zero polynomial")
    return float(l4_fourth(f)) ** 0.25 / float(l2_sq(f)) ** 0.5
