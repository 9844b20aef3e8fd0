import math

import numpy as np
import pytest

from hardyx.fn_repr import PolyCoeffs, sample_boundary, taylor_coeff
from hardyx.wiener import (
    inner_defect,
    sharpness_ratio,
    wiener_bound_check,
    wiener_coeffs,
    wiener_eval,
)

BINOMIAL4 = PolyCoeffs((1.0, 4.0, 6.0, 4.0, 1.0))


def test_wiener_coeffs_kills_off_multiples():
    out = wiener_coeffs(BINOMIAL4, 2)
    np.testing.assert_allclose(np.asarray(out.coeffs), [1, 0, 6, 0, 1], atol=0)
    lone = wiener_coeffs(PolyCoeffs((0.0, 1.0, 0.0)), 2)
    np.testing.assert_allclose(np.asarray(lone.coeffs), [0, 0, 0], atol=0)


def test_wiener_coeffs_fixed_point_and_idempotence():
    c = PolyCoeffs((1.0, 0.0, 0.0, 2.0j, 0.0, 0.0, -1.0))
    once = wiener_coeffs(c, 3)
    assert once.coeffs == c.coeffs
    twice = wiener_coeffs(wiener_coeffs(BINOMIAL4, 2), 2)
    assert twice.coeffs == wiener_coeffs(BINOMIAL4, 2).coeffs


def test_k_must_be_at_least_two():
    with pytest.raises(ValueError):
        wiener_coeffs(BINOMIAL4, 1)
    with pytest.raises(ValueError):
        wiener_eval(lambda z: z, 1, 0.5)


@pytest.mark.parametrize("k", [2, 3])
def test_wiener_eval_equality_example(k):
    f = lambda z: (1 + z**k) ** 2 - z * (1 - z**k) ** 2
    assert wiener_eval(f, k, 1.0) == pytest.approx(4.0, abs=1e-12)
    # the averaged function is (1+z^k)^2 everywhere, not only at z = 1
    z = 0.3 - 0.4j
    assert wiener_eval(f, k, z) == pytest.approx((1 + z**k) ** 2, abs=1e-12)


def test_wiener_eval_trivia():
    assert wiener_eval(lambda z: z, 2, 0.7) == pytest.approx(0.0, abs=1e-15)
    assert wiener_eval(lambda z: 3.5j, 5, 0.2) == pytest.approx(3.5j, abs=1e-15)


def test_projection_consistency_random_polys():
    rng = np.random.default_rng(17)
    for _ in range(8):
        deg = int(rng.integers(0, 33))
        poly = PolyCoeffs(tuple(rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)))
        k = int(rng.choice([2, 3, 5]))
        s = sample_boundary(lambda z: wiener_eval(poly, k, z), 64)
        want = wiener_coeffs(poly, k).coeffs
        for n in range(deg + 1):
            assert abs(taylor_coeff(s, n) - want[n]) < 1e-10


def test_bound_check_equality_at_p1():
    rep = wiener_bound_check(BINOMIAL4, 2, 1.0)
    assert rep.bound == 1.0
    assert rep.ratio == pytest.approx(1.0, abs=1e-7)
    assert rep.passed


def test_bound_check_fixed_point_at_p2():
    rep = wiener_bound_check(PolyCoeffs((0.0, 0.0, 1.0)), 2, 2.0)
    assert rep.ratio == pytest.approx(1.0, abs=1e-12)


def test_bound_check_strict_below_for_small_p():
    # powered convention: ratio is ||Wf||^p/||f||^p against k^{1-p}; the
    # plain-ratio reading of the same numbers sits strictly below k^{1/p-1}=2
    rep = wiener_bound_check(PolyCoeffs((1.0, 1.0)), 2, 0.5)
    assert rep.bound == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert rep.ratio < rep.bound * (1 - 1e-6)
    assert rep.ratio ** (1 / 0.5) < 2.0


def test_bound_check_rejects_zero_function():
    with pytest.raises(ValueError):
        wiener_bound_check(PolyCoeffs((0.0, 0.0)), 2, 1.0)


def test_sharpness_frozen_values():
    # fixed by a high-resolution adaptive quadrature oracle run before the
    # implementation was written
    assert sharpness_ratio(0.5, 2, 1.0) == pytest.approx(0.9652084300201208, abs=1e-9)
    assert sharpness_ratio(0.5, 2, 1e-2) == pytest.approx(1.1751050921447, abs=1e-9)
    assert sharpness_ratio(0.5, 2, 1e-3) == pytest.approx(1.2361023787521, abs=1e-9)


def test_sharpness_monotone_toward_limit():
    vals = [sharpness_ratio(0.5, 2, e) for e in (1e-2, 1e-3, 1e-4)]
    assert vals[0] < vals[1] < vals[2] < 2.0 ** 0.5


def test_sharpness_domain():
    with pytest.raises(ValueError):
        sharpness_ratio(1.5, 2, 1e-2)
    with pytest.raises(ValueError):
        sharpness_ratio(0.5, 2, 0.0)


def test_averaged_singular_family_closed_form():
    # for p = 1/2 the family is (z-a)^{-2}, and averaging over the two
    # square-root rotations gives (z^2+a^2)/(z^2-a^2)^2 exactly
    a = 1.5
    f = lambda z: (z - a) ** -2.0
    for z in (1.0, np.exp(0.7j), 0.3 + 0.1j, -1.0j):
        want = (z * z + a * a) / (z * z - a * a) ** 2
        assert wiener_eval(f, 2, z) == pytest.approx(want, abs=1e-12)


def test_inner_defect_blaschke_collapses():
    lam = 0.5
    b = lambda z: (lam - z) / (1 - lam * z)
    d = inner_defect(b, 2)
    assert d == pytest.approx(1.0, abs=1e-9)  # W_2 b vanishes at z = 1


def test_inner_defect_of_inner_fixed_points():
    assert inner_defect(lambda z: z * z, 2) < 1e-12
    assert inner_defect(lambda z: 1j, 3) < 1e-12


def test_inner_defect_requires_unimodular_input():
    with pytest.raises(ValueError):
        inner_defect(lambda z: 0.5 * z, 2)
