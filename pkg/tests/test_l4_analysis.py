from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubelens.cube_sets import rep_profile
from cubelens.l4_analysis import (CoeffPoly, l2_sq, l4_fourth, lemma21_check, ratio_l4_l2,
                                  self_convolution)

RAMANUJAN = [1, 729, 1000, 1728]


def grid_l4(f: CoeffPoly, n_points=None):
    """Independent oracle: mean of |f|^4 on a uniform grid of the circle.

    With more grid points than 4 * (frequency spread) the rule is exact for
    the trigonometric polynomial |f|^4, up to float rounding.
    """
    support = f.support
    lo = support[0]
    spread = support[-1] - lo
    n_points = n_points or 4 * spread + 8
    x = np.arange(n_points) / n_points
    vals = np.zeros(n_points, dtype=complex)
    for n, (re, im) in f.terms.items():
        vals += complex(float(re), float(im)) * np.exp(2j * np.pi * (n - lo) * x)
    return float(np.mean(np.abs(vals) ** 4))


def test_l2_examples():
    assert l2_sq(CoeffPoly({7: 1})) == 1
    assert l2_sq(CoeffPoly({3: 1, 5: 1})) == 2
    assert l2_sq(CoeffPoly({4: (Fraction(3, 2), Fraction(1, 2))})) == Fraction(5, 2)


def test_l4_examples_with_grid_oracle():
    two = CoeffPoly({3: 1, 5: 1})
    assert l4_fourth(CoeffPoly({7: 1})) == 1
    assert l4_fourth(two) == 6
    assert grid_l4(two) == pytest.approx(6, rel=1e-12)
    ram = CoeffPoly.ones(RAMANUJAN)
    assert l4_fourth(ram) == 36
    assert grid_l4(ram) == pytest.approx(36, rel=1e-10)


def test_self_convolution_two_terms():
    c = self_convolution(CoeffPoly({3: 1, 5: 1}))
    assert c == {6: (1, 0), 8: (2, 0), 10: (1, 0)}


def test_zero_coefficients_are_dropped():
    f = CoeffPoly({1: 1, 2: 0, 3: (0, 0), 4: (0, Fraction(1, 3))})
    assert f.support == [1, 4]
    assert l4_fourth(f) == l4_fourth(CoeffPoly({1: 1, 4: (0, Fraction(1, 3))}))


@pytest.mark.parametrize("support, l4, r, rhs", [
    (RAMANUJAN, 36, 4, 64),
    ([0], 1, 1, 1),
    ([1, 8, 27], 15, 2, 18),
])
def test_lemma21_examples(support, l4, r, rhs):
    rep = lemma21_check(CoeffPoly.ones(support))
    assert (rep.l4_4, rep.max_rep, rep.bound_rhs, rep.holds) == (l4, r, rhs, True)
    assert rep.bound_rhs == rep.max_rep * rep.l2_sq ** 2


def test_ratio_examples():
    assert ratio_l4_l2(CoeffPoly({7: 1})) == 1.0
    assert ratio_l4_l2(CoeffPoly.ones(RAMANUJAN)) == pytest.approx(36 ** 0.25 / 2, abs=1e-4)
    assert ratio_l4_l2(CoeffPoly({3: 1, 5: 1})) == pytest.approx(1.1067, abs=1e-4)
    with pytest.raises(ValueError):
        ratio_l4_l2(CoeffPoly())


gauss = st.tuples(st.fractions(-20, 20, max_denominator=20),
                  st.fractions(-20, 20, max_denominator=20))
polys = st.dictionaries(st.integers(-60, 60), gauss, min_size=1, max_size=12).map(
    CoeffPoly).filter(bool)


@given(polys)
def test_grid_oracle_agrees(f):
    exact = l4_fourth(f)
    assert grid_l4(f) == pytest.approx(float(exact), rel=1e-9, abs=1e-9)


@given(polys)
def test_power_mean_and_lemma(f):
    rep = lemma21_check(f)
    assert rep.holds
    assert rep.l4_4 >= rep.l2_sq ** 2


@given(polys, st.integers(-10 ** 6, 10 ** 6))
def test_translation_invariance(f, t):
    g = f.shifted(t)
    assert l2_sq(g) == l2_sq(f)
    assert l4_fourth(g) == l4_fourth(f)


@given(polys, st.fractions(-5, 5, max_denominator=9).filter(bool))
@settings(max_examples=50)
def test_scaling(f, lam):
    g = f.scaled(lam)
    assert l2_sq(g) == lam ** 2 * l2_sq(f)
    assert l4_fourth(g) == lam ** 4 * l4_fourth(f)


@given(st.sets(st.integers(-500, 500), min_size=1, max_size=30))
def test_energy_identity(support):
    assert l4_fourth(CoeffPoly.ones(support)) == rep_profile(support).energy


def test_json_round_trip():
    f = CoeffPoly({-3: (Fraction(1, 2), Fraction(-7, 3)), 10 ** 20: (5, 0)})
    assert CoeffPoly.from_json(f.to_json()) == f
    text = '{"terms": [{"n": "1", "re": "1", "im": "0"}, {"n": "729", "re": "1/2", "im": "1/3"}]}'
    g = CoeffPoly.from_json(text)
    assert g.terms[729] == (Fraction(1, 2), Fraction(1, 3))
    with pytest.raises(ValueError):
        CoeffPoly.from_json('{"terms": [{"n": "1", "re": "1"}, {"n": "1", "re": "2"}]}')
