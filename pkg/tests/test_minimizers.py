"""Case analysis of the shape minimization and the binomial argmin."""

import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meancross import (
    KIND_ATTAINED,
    KIND_INFIMUM,
    BinomialParams,
    DomainError,
    MinimizationResult,
    binomial_cdf,
    chvatal_argmin,
    grid_scan_min,
    h_pareto,
    h_weibull,
    minimize_pareto,
    minimize_weibull,
    nearest_to_two_thirds,
    pareto_prob_below_kappa_mean,
    phi_pareto,
    phi_weibull,
    weibull_prob_below_kappa_mean,
)
from oracles import binomial_cdf_exact

mp.mp.dps = 40

EULER_REF = 0.5772156649015329


# --------------------------------------------------------------------------
# Characteristic and transformed functions, Weibull

def test_phi_weibull_near_one_is_minus_log_kappa():
    for kappa in (0.5, 1.0, 2.0, 17.0):
        assert abs(phi_weibull(1.0 + 1e-9, kappa) + math.log(kappa)) < 1e-6


def test_phi_weibull_values():
    assert phi_weibull(2.0, 1.0) == pytest.approx(1.0 - EULER_REF, abs=1e-13)
    assert phi_weibull(2.0, 2.0) == pytest.approx(
        1.0 - EULER_REF - math.log(2.0), abs=1e-13)


def test_phi_weibull_domain():
    with pytest.raises(DomainError):
        phi_weibull(1.0, 2.0)
    with pytest.raises(DomainError):
        phi_weibull(2.0, -1.0)


def test_h_weibull_values():
    assert abs(h_weibull(1.0 + 1e-7, 1.0) + EULER_REF) < 1e-5
    assert h_weibull(2.0, 1.0) == 0.0
    assert h_weibull(3.0, 1.0) == pytest.approx(0.34657359027997264, abs=1e-14)


def test_phi_weibull_strictly_increasing():
    x = np.linspace(1.0 + 1e-6, 10.0, 2000)
    for kappa in (0.5, 1.0, 2.0, 10.0):
        assert np.all(np.diff(phi_weibull(x, kappa)) > 0.0)


# --------------------------------------------------------------------------
# Characteristic and transformed functions, Pareto

def test_phi_pareto_values():
    # at x = kappa (kappa < 1) the value is (kappa-1)/kappa
    assert phi_pareto(0.5, 0.5) == pytest.approx(-1.0, abs=1e-14)
    assert phi_pareto(1.0, math.e) == pytest.approx(1.0, abs=1e-14)
    assert phi_pareto(0.5, math.e) == pytest.approx(
        1.0 - 2.0 - math.log(0.5) + 1.0, abs=1e-14)


def test_phi_pareto_domain():
    with pytest.raises(DomainError):
        phi_pareto(0.6, 0.5)  # above kappa for kappa < 1
    with pytest.raises(DomainError):
        phi_pareto(1.5, 2.0)  # above 1 for kappa >= 1
    with pytest.raises(DomainError):
        phi_pareto(0.0, 2.0)


def test_h_pareto_values():
    assert h_pareto(0.5, 0.5) == 0.0
    assert abs(h_pareto(1.0 - 1e-7, 1.0) - 1.0) < 1e-6
    # direct evaluation of ln(x/kappa)/(x-1) at x=0.5, kappa=2
    assert h_pareto(0.5, 2.0) == pytest.approx(2.772588722239781, abs=1e-14)


def test_h_pareto_domain_excludes_one():
    with pytest.raises(DomainError):
        h_pareto(1.0, 2.0)
    with pytest.raises(DomainError):
        h_pareto(0.6, 0.5)


def test_phi_pareto_strictly_increasing():
    x = np.linspace(1e-3, 1.0 - 1e-6, 2000)
    for kappa in (1.0, 2.0, 10.0):
        assert np.all(np.diff(phi_pareto(x, kappa)) > 0.0)


# --------------------------------------------------------------------------
# minimize_weibull

def test_minimize_weibull_kappa_below_one():
    res = minimize_weibull(0.5)
    assert res.kind == KIND_INFIMUM
    assert res.value == 0.0
    assert res.argmin is None and res.root is None
    assert res.limit == "alpha -> infinity"


def test_minimize_weibull_kappa_one():
    res = minimize_weibull(1.0)
    assert res.kind == KIND_INFIMUM
    # high-precision evaluation of 1 - exp(-exp(-gamma))
    ref = float(1 - mp.exp(-mp.exp(-mp.euler)))
    assert res.value == pytest.approx(ref, abs=1e-15)
    assert res.value == pytest.approx(0.4296, abs=5e-5)


def test_minimize_weibull_kappa_two():
    res = minimize_weibull(2.0)
    assert res.kind == KIND_ATTAINED
    assert 2.0 < res.root.root < 3.0
    assert res.argmin == pytest.approx(1.0 / (res.root.root - 1.0), rel=1e-15)
    # coarse grid scan cannot find anything lower
    g_argmin, g_value = grid_scan_min("weibull", 2.0, 0.01, 50.0, 200_000)
    assert g_value >= res.value - 1e-8
    assert abs(g_argmin - res.argmin) <= (50.0 - 0.01) / 200_000


def test_minimize_weibull_near_one_treated_as_one():
    assert minimize_weibull(1.0 + 1e-16).kind == KIND_INFIMUM
    assert minimize_weibull(1.0 - 1e-16).kind == KIND_INFIMUM


def test_minimize_weibull_rejects_bad_kappa():
    with pytest.raises(DomainError):
        minimize_weibull(-1.0)
    with pytest.raises(DomainError):
        minimize_weibull(math.nan)


# --------------------------------------------------------------------------
# minimize_pareto

def test_minimize_pareto_kappa_below_one():
    res = minimize_pareto(0.5)
    assert res.kind == KIND_ATTAINED
    assert res.argmin == 2.0
    assert res.value == 0.0
    assert res.root is None
    assert pareto_prob_below_kappa_mean(res.argmin, 0.5) == 0.0


def test_minimize_pareto_kappa_one():
    res = minimize_pareto(1.0)
    assert res.kind == KIND_INFIMUM
    assert res.value == pytest.approx(0.6321205588285577, abs=1e-15)
    assert res.limit == "theta -> infinity"


def test_minimize_pareto_kappa_two():
    res = minimize_pareto(2.0)
    assert res.kind == KIND_ATTAINED
    assert 0.37 < res.root.root < 0.38
    assert 1.58 < res.argmin < 1.60
    g_argmin, g_value = grid_scan_min("pareto", 2.0, 1.0001, 50.0, 200_000)
    assert g_value >= res.value - 1e-8
    assert abs(g_argmin - res.argmin) <= (50.0 - 1.0001) / 200_000


# --------------------------------------------------------------------------
# Root residuals and local minimality

KAPPAS_ABOVE_ONE = (1.1, 1.5, 2.0, 5.0, 10.0, 100.0)


@pytest.mark.parametrize("kappa", KAPPAS_ABOVE_ONE)
def test_root_residuals(kappa):
    w = minimize_weibull(kappa)
    assert abs(phi_weibull(w.root.root, kappa)) < 1e-10
    p = minimize_pareto(kappa)
    assert 0.0 < p.root.root < 1.0
    assert abs(phi_pareto(p.root.root, kappa)) < 1e-10


@pytest.mark.parametrize("kappa", KAPPAS_ABOVE_ONE)
def test_local_minimality(kappa):
    w = minimize_weibull(kappa)
    p = minimize_pareto(kappa)
    for delta in (1e-3, 1e-2):
        for sign in (-1.0, 1.0):
            a = w.argmin * (1.0 + sign * delta)
            assert weibull_prob_below_kappa_mean(a, kappa) >= w.value
            t = p.argmin * (1.0 + sign * delta)
            assert pareto_prob_below_kappa_mean(t, kappa) >= p.value


# --------------------------------------------------------------------------
# Monotone cases (kappa <= 1)

@pytest.mark.parametrize("kappa", (0.5, 0.9, 1.0))
def test_weibull_objective_decreasing_for_small_kappa(kappa):
    alphas = np.arange(0.1, 50.0 + 1e-9, 0.1)
    vals = weibull_prob_below_kappa_mean(alphas, kappa)
    assert np.all(np.diff(vals) < 0.0)


@pytest.mark.parametrize("kappa", (0.5, 0.9, 1.0))
def test_pareto_objective_decreasing_for_small_kappa(kappa):
    hi = 1.0 / (1.0 - kappa) if kappa < 1.0 else 60.0
    thetas = np.linspace(1.001, hi, 500)
    vals = pareto_prob_below_kappa_mean(thetas, kappa)
    assert np.all(np.diff(vals) < 0.0)


def test_weibull_kappa_limit_convergence():
    # gap to the kappa = 1 infimum shrinks like sqrt(kappa - 1)
    limit = minimize_weibull(1.0).value
    assert abs(minimize_weibull(1.0 + 1e-6).value - limit) < 1e-3
    assert abs(minimize_weibull(1.0 + 1e-8).value - limit) < 1e-4


def test_pareto_kappa_limit_convergence():
    limit = minimize_pareto(1.0).value
    assert abs(minimize_pareto(1.0 + 1e-6).value - limit) < 1e-3
    assert abs(minimize_pareto(1.0 + 1e-8).value - limit) < 1e-4


# --------------------------------------------------------------------------
# Result type invariants

def test_result_type_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        MinimizationResult(KIND_ATTAINED, kappa=2.0, value=0.5)  # no argmin
    with pytest.raises(ValueError):
        MinimizationResult(KIND_INFIMUM, kappa=0.5, value=0.0,
                           argmin=2.0, limit="alpha -> infinity")
    with pytest.raises(ValueError):
        MinimizationResult(KIND_ATTAINED, kappa=2.0, value=1.5, argmin=1.0)
    with pytest.raises(ValueError):
        MinimizationResult("other", kappa=2.0, value=0.5, argmin=1.0)


# --------------------------------------------------------------------------
# Chvatal argmin

def test_chvatal_small_n_by_hand():
    r2 = chvatal_argmin(2)
    assert r2.m_star == 1
    assert np.allclose(r2.q_values, [1.0, 0.75, 1.0], atol=1e-14)
    assert r2.ties == (1,)

    r3 = chvatal_argmin(3)
    assert r3.m_star == 2
    assert r3.q_values[2] == pytest.approx(float(Fraction(19, 27)), abs=1e-14)
    assert r3.q_values[1] == pytest.approx(float(Fraction(20, 27)), abs=1e-14)

    assert chvatal_argmin(6).m_star == 4


def test_chvatal_matches_exact_enumeration():
    for n in (2, 3, 6, 11, 25):
        r = chvatal_argmin(n)
        for m in range(n + 1):
            exact = float(binomial_cdf_exact(n, Fraction(m, n), m))
            assert r.q_values[m] == pytest.approx(exact, abs=1e-12), (n, m)


def test_chvatal_q_vector_matches_binomial_cdf():
    for n in (4, 17, 60, 173):
        r = chvatal_argmin(n)
        for m in range(0, n + 1, max(1, n // 7)):
            direct = binomial_cdf(BinomialParams(n, m / n), m)
            assert r.q_values[m] == pytest.approx(direct, abs=1e-12), (n, m)


def test_chvatal_argmin_is_nearest_two_thirds_up_to_300():
    for n in range(2, 301):
        r = chvatal_argmin(n)
        assert r.m_star == nearest_to_two_thirds(n), n
        assert r.ties == (r.m_star,), n


def test_nearest_two_thirds_integer_arithmetic():
    for n in range(2, 2000):
        target = 2.0 * n / 3.0
        best = min(range(n + 1), key=lambda m: abs(3 * m - 2 * n))
        assert nearest_to_two_thirds(n) == best == round(target)


def test_chvatal_rejects_small_n():
    with pytest.raises(DomainError):
        chvatal_argmin(1)
    with pytest.raises(DomainError):
        chvatal_argmin(2.5)


# --------------------------------------------------------------------------
# Properties

@given(kappa=st.floats(min_value=1.0 + 1e-4, max_value=1e4))
@settings(max_examples=60, deadline=None)
def test_weibull_root_is_interior_zero(kappa):
    res = minimize_weibull(kappa)
    assert res.root.root > 1.0
    assert abs(phi_weibull(res.root.root, kappa)) < 1e-9


@given(kappa=st.floats(min_value=1.0 + 1e-4, max_value=1e4))
@settings(max_examples=60, deadline=None)
def test_pareto_root_is_interior_zero(kappa):
    res = minimize_pareto(kappa)
    assert 0.0 < res.root.root < 1.0
    assert abs(phi_pareto(res.root.root, kappa)) < 1e-9
    assert res.argmin > 1.0
