import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardyx.closed_form import (
    BOTH,
    MOEBIUS_OUTER,
    OUTER,
    ClosedFormResult,
    F_p,
    RootBracket,
    alpha1,
    alpha2,
    alpha_p,
    appendix_functions,
    beta_of_alpha,
    phi1,
    psi1,
    solve_alpha,
    solve_beta,
    t_p,
    t_star,
)

INF = math.inf


# ---------------------------------------------------------------------------
# implicit-parameter solvers
# ---------------------------------------------------------------------------

def test_solve_alpha_basics():
    assert solve_alpha(2.0, 0.0) == 0.0
    # near the top of the p = 1 branch the parameter approaches 1
    assert solve_alpha(1.0, 0.4999) > 0.95
    a = solve_alpha(0.5, 0.3)
    assert a * (1 + a * a) ** -2.0 == pytest.approx(0.3, abs=1e-12)


def test_solve_alpha_top_of_branch():
    assert solve_alpha(2.0, 2.0**-0.5) == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(ValueError):
        solve_alpha(2.0, 0.8)
    with pytest.raises(ValueError):
        solve_alpha(0.5, 0.5)  # above the increasing branch's reach


@settings(max_examples=60, deadline=None)
@given(
    p=st.floats(min_value=1.0, max_value=8.0),
    frac=st.floats(min_value=0.0, max_value=0.999),
)
def test_solve_alpha_forward_round_trip(p, frac):
    t = frac * 2.0 ** (-1.0 / p)
    a = solve_alpha(p, t)
    assert 0.0 <= a < 1.0
    assert a * (1 + a * a) ** (-1.0 / p) == pytest.approx(t, abs=1e-10)


def test_solve_beta_examples():
    assert solve_beta(0.7, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert solve_beta(1.0, 0.5) == pytest.approx(1.0, abs=1e-12)
    assert solve_beta(0.5, 0.81) == pytest.approx(1.0 / 3.0, abs=1e-13)
    with pytest.raises(ValueError):
        solve_beta(1.0, 0.4)  # would need beta > 1


# ---------------------------------------------------------------------------
# phi1
# ---------------------------------------------------------------------------

def test_phi1_pythagorean_instance():
    res = phi1(2.0, 0.6)
    assert res.value == pytest.approx(0.8, abs=1e-12)
    assert res.regime == MOEBIUS_OUTER
    assert res.alpha == pytest.approx(0.75, abs=1e-12)
    assert res.beta is None


def test_phi1_sup_norm_case():
    assert phi1(INF, 0.5).value == pytest.approx(0.75, abs=1e-14)
    assert phi1(INF, 1.0).value == 0.0


def test_phi1_peak_for_small_p():
    res = phi1(0.5, 0.5625)
    assert res.value == pytest.approx(1.299038105676658, abs=1e-12)
    assert res.value == pytest.approx(psi1(0.5), abs=1e-12)


@pytest.mark.parametrize("p", [0.5, 1.0, 2.0, INF])
def test_phi1_endpoints(p):
    assert phi1(p, 0.0).value == pytest.approx(1.0, abs=1e-12)
    assert phi1(p, 1.0).value == pytest.approx(0.0, abs=1e-12)


def test_phi1_outer_regime_tag():
    res = phi1(2.0, 0.9)
    assert res.regime == OUTER
    assert res.alpha is None and res.beta is not None


def test_phi1_both_regime_at_switch_point():
    p = 0.5
    res = phi1(p, t_p(p))
    assert res.regime == BOTH
    assert res.alpha is not None and res.beta is not None
    # continuity across the switch
    for h in (1e-9, -1e-9):
        assert phi1(p, t_p(p) + h).value == pytest.approx(res.value, abs=1e-6)


def test_phi1_domain():
    with pytest.raises(ValueError):
        phi1(0.0, 0.5)
    with pytest.raises(ValueError):
        phi1(2.0, 1.5)


# ---------------------------------------------------------------------------
# the implicit 0 < p < 1 machinery
# ---------------------------------------------------------------------------

def test_alpha1_frozen_and_consistency():
    a1 = alpha1(0.5)
    assert a1 == pytest.approx(0.2955977425220848, abs=1e-13)
    # the switch value it generates is exactly 2^{-1/p}
    assert a1 * (1 + a1 * a1) ** -2.0 == pytest.approx(0.25, abs=1e-14)
    assert 1 + a1 * a1 == pytest.approx(2 * math.sqrt(a1), abs=1e-13)


def test_alpha1_tiny_p():
    # the root collapses onto 2^{-1/p}: the correction factor (1 + a^2)^{1/p}
    # is 1 + O(p^{-1} 4^{-1/p}), far below double resolution here
    assert alpha1(0.002) == pytest.approx(2.0**-500, rel=1e-12)
    assert alpha1(1 / 257) == pytest.approx(2.0**-257, rel=1e-12)
    a = alpha1(0.002)
    assert abs(2 * a**0.002 - 1 - a * a) < 1e-13


def test_alpha2_value_and_stationarity():
    p = 0.5
    a2 = alpha2(p)
    assert a2 == pytest.approx(1 / math.sqrt(3.0), abs=1e-15)
    h = 1e-6
    deriv = (F_p(p, a2 + h) - F_p(p, a2 - h)) / (2 * h)
    # central-difference truncation leaves ~4e-10 here; F_p' is O(1) away
    # from the stationary point, so 5e-9 still pins it down
    assert abs(deriv) < 5e-9


def test_alpha_p_frozen_and_signs():
    p = 0.5
    ap = alpha_p(p)
    assert ap == pytest.approx(0.4795096879389884, abs=1e-12)
    assert alpha1(p) < ap < alpha2(p)
    assert abs(F_p(p, ap)) < 1e-12
    assert F_p(p, 0.9 * ap) > 0
    assert F_p(p, min(1.0, 1.1 * ap)) < 0


def test_F_p_boundary_values():
    for p in (0.2, 0.5, 0.8):
        assert abs(F_p(p, 1.0)) < 1e-13
        assert F_p(p, alpha2(p)) < 0
        assert F_p(p, alpha1(p)) > 0
    with pytest.raises(ValueError):
        F_p(1.5, 0.5)
    with pytest.raises(ValueError):
        F_p(0.5, 0.0)


def test_t_p_frozen_and_band():
    p = 0.5
    tp = t_p(p)
    assert tp == pytest.approx(0.31698369291482814, abs=1e-12)
    lower = 2.0 ** (-1.0 / p)
    upper = lower * math.sqrt(p) * (2 - p) ** (1 / p - 0.5)
    assert lower < tp < upper


def test_objective_equality_at_t_p():
    # both parameter branches reach the same derivative at the origin when
    # t = t_p: 1/a + a(2/p - 1) = 2 b / p
    for p in (0.3, 0.5, 0.7):
        ap = alpha_p(p)
        b = beta_of_alpha(p, ap)
        lhs = 1 / ap + ap * (2 / p - 1)
        assert lhs == pytest.approx(2 * b / p, abs=1e-10)


def test_beta_of_alpha_at_alpha1_is_one():
    for p in (0.2, 0.5, 0.8):
        assert beta_of_alpha(p, alpha1(p)) == pytest.approx(1.0, abs=1e-10)


@settings(max_examples=60, deadline=None)
@given(
    p=st.floats(min_value=0.05, max_value=0.95),
    alpha=st.floats(min_value=0.01, max_value=1.0),
)
def test_beta_reaches_the_same_origin_value(p, alpha):
    b = beta_of_alpha(p, alpha)
    t_from_alpha = alpha * (1 + alpha * alpha) ** (-1.0 / p)
    t_from_beta = (1 + b * b) ** (-1.0 / p)
    assert t_from_beta == pytest.approx(t_from_alpha, rel=1e-9)


def test_t_star_and_psi1():
    assert t_star(0.5) == pytest.approx(0.5625, abs=1e-15)
    assert psi1(0.5) == pytest.approx(1.125 * 2 / math.sqrt(3.0), abs=1e-14)


# ---------------------------------------------------------------------------
# appendix functions
# ---------------------------------------------------------------------------

def test_appendix_closed_points():
    # H(1/2) has the explicit radical form (16 - 7 * 3^{3/4}) / 8
    vals = appendix_functions(0.5, alpha2(0.5))
    assert vals.H == pytest.approx((16 - 7 * 3**0.75) / 8, abs=1e-14)
    assert vals.H > 0 and vals.K < 0

    # I vanishes nowhere on (0,1); at p = 1 - sqrt(6)/3 it takes the value
    # sqrt(6) + log(5 - 2 sqrt(6))
    p0 = 1 - math.sqrt(6.0) / 3
    vals0 = appendix_functions(p0, alpha2(p0))
    assert vals0.I == pytest.approx(math.sqrt(6.0) + math.log(5 - 2 * math.sqrt(6.0)), abs=1e-13)


def test_appendix_G_vanishes_with_Fp_derivative():
    for p in (0.3, 0.5, 0.7):
        a2 = alpha2(p)
        assert abs(appendix_functions(p, a2).G_p) < 1e-12


def test_appendix_J_sign_structure():
    for p in (0.3, 0.5, 0.7):
        at_min = p ** (1 / (2 - p))
        assert appendix_functions(p, at_min).J_p < 0
        assert abs(appendix_functions(p, alpha1(p)).J_p) < 1e-12


def test_appendix_domain():
    with pytest.raises(ValueError):
        appendix_functions(1.0, 0.5)
    with pytest.raises(ValueError):
        appendix_functions(0.5, 0.0)


# ---------------------------------------------------------------------------
# result and bracket containers
# ---------------------------------------------------------------------------

def test_root_bracket_validation():
    with pytest.raises(ValueError):
        RootBracket(1.0, 0.5, -1.0, 1.0)
    with pytest.raises(ValueError):
        RootBracket(0.0, 1.0, 1.0, 2.0)  # no sign change


def test_closed_form_result_validation():
    with pytest.raises(ValueError):
        ClosedFormResult(0.5, "bogus", alpha=0.1)
    with pytest.raises(ValueError):
        ClosedFormResult(-0.5, MOEBIUS_OUTER, alpha=0.1)
    with pytest.raises(ValueError):
        ClosedFormResult(0.5, MOEBIUS_OUTER)  # alpha missing
    with pytest.raises(ValueError):
        ClosedFormResult(0.5, OUTER, alpha=0.1, beta=0.2)
