import math

import numpy as np
import pytest

from tripmaps.domain import PermutationTriple, TrianglePoint
from tripmaps.errors import NoDensity
from tripmaps.gausskuzmin import (
    DigitDistribution,
    cylinder_measure,
    density,
    digit_distribution,
    empirical_digits,
    invariance_check,
    p_closed_eee,
    p_integral_e23e,
)
from tripmaps.maps import extract_digit
from tripmaps.specfun import dilog, integrate_triangle
from tripmaps.tables.eigen import DENSITIES

EEE = PermutationTriple("e", "e", "e")
E23E = PermutationTriple("e", "23", "e")
PI2 = math.pi ** 2


def test_density_rows():
    r = density(EEE)
    assert r(0.5, 0.25) == pytest.approx(12.0 / (PI2 * 0.5 * 1.25), rel=1e-14)
    r23 = density(PermutationTriple("23", "23", "23"))
    assert r23(0.5, 0.25) == pytest.approx(12.0 / (PI2 * 0.5 * 1.25), rel=1e-14)
    with pytest.raises(NoDensity):
        density(PermutationTriple("e", "12", "e"))


def test_normalization_all_densities():
    for key, r in DENSITIES.items():
        v = integrate_triangle(lambda x, y: r(x, y), 1e-9)
        assert abs(v - 1.0) < 1e-8, key


def test_cylinder_p0_half():
    assert abs(cylinder_measure(E23E, 0) - 0.5) < 1e-8


def test_cylinder_p0_eee_dilog_oracle():
    oracle = 1.0 - (6.0 * dilog(0.25) + 12.0 * math.log(2.0) ** 2) / PI2
    assert abs(cylinder_measure(EEE, 0) - oracle) < 1e-6
    assert abs(p_closed_eee(0) - oracle) < 1e-15


def test_closed_forms_match_quadrature():
    for k in range(1, 6):
        assert abs(cylinder_measure(EEE, k) - p_closed_eee(k)) < 1e-6
        assert abs(cylinder_measure(E23E, k) - p_integral_e23e(k)) < 1e-6


def test_cylinder_vs_indicator_quadrature():
    # coarse dual route: resolve the digit pointwise on a midpoint grid;
    # arbitrates the pullback form of cylinder_measure
    n = 260
    acc = 0.0
    r = density(E23E)
    h = 1.0 / n
    for i in range(n):
        x = (i + 0.5) * h
        for j in range(i):
            y = (j + 0.5) * h
            if extract_digit(E23E, TrianglePoint(x, y), k_max=10 ** 9) == 1:
                acc += r(x, y) * h * h
    assert abs(acc - cylinder_measure(E23E, 1)) < 5e-3


def test_tail_mass():
    dist = digit_distribution(E23E, 60, 1e-9)
    total = math.fsum(dist.probs.values())
    assert 0.0 <= dist.tail_mass < 0.05
    assert abs(total + dist.tail_mass - 1.0) < 1e-10
    assert all(0.0 <= p <= 1.0 for p in dist.probs.values())


def test_closed_form_normalization():
    # the tail decays like log(k)/k^2, so k=1000 leaves ~7e-3 of mass;
    # the sums close to 1e-3 once the range respects that tail
    s = math.fsum(p_closed_eee(k) for k in range(20001))
    assert abs(s - 1.0) < 1e-3
    s23 = math.fsum(p_integral_e23e(k) for k in range(9001))
    assert abs(s23 - 1.0) < 1e-3


def test_pk_decreasing_tail():
    for pk in (p_closed_eee, p_integral_e23e):
        vals = [pk(k) for k in range(2, 30)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_p_closed_k1_hand_value():
    # independent hand evaluation of the printed formula at k=1
    k = 1
    expect = 6.0 / PI2 * (dilog(1 / 4) - dilog(1 / 9) + 4 * math.log(2) ** 2
                          - 2 * math.log(1.5) ** 2 - 2 * math.log(3.0) * math.log(2.0))
    assert p_closed_eee(k) == pytest.approx(expect, rel=1e-14)


def test_negative_digit_rejected():
    with pytest.raises(ValueError):
        cylinder_measure(EEE, -1)
    with pytest.raises(ValueError):
        p_closed_eee(-2)
    with pytest.raises(ValueError):
        p_integral_e23e(-1)


def test_empirical_digits_deterministic():
    a = empirical_digits(E23E, None, 2000, seed=42)
    b = empirical_digits(E23E, None, 2000, seed=42)
    assert a.counts == b.counts and a.restarts == b.restarts
    assert sum(a.counts.values()) == 2000
    c = empirical_digits(E23E, None, 2000, seed=43)
    assert c.counts != a.counts


def test_empirical_single_step():
    st = empirical_digits(EEE, TrianglePoint(0.57, 0.21), 1, seed=1)
    assert sum(st.counts.values()) == 1


def test_empirical_matches_theory_small_n():
    st = empirical_digits(E23E, None, 50_000, seed=9)
    f0 = st.frequency(0)
    assert abs(f0 - 0.5) < 0.01


def test_invariance_check():
    assert invariance_check(EEE) < 1e-6
    assert invariance_check(PermutationTriple("13", "13", "13")) < 1e-6


def test_serialization():
    dist = DigitDistribution(EEE, {0: 0.25, 1: 0.13}, 0.62)
    d = dist.as_dict()
    assert d["probs"]["0"] == 0.25 and d["tail_mass"] == 0.62
    st = empirical_digits(EEE, TrianglePoint(0.57, 0.21), 10, seed=5)
    sd = st.as_dict()
    assert sd["n_steps"] == 10 and sd["seed"] == 5
