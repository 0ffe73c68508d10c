import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from benford_gengamma.analysis import (
    SweepGrid,
    bound_sweep,
    deviation_bound,
    empirical_digit_histogram,
    ks_statistic,
    ks_sweep,
    ks_test,
    lipschitz_constant,
    per_digit_deviation,
    sup_residual,
)
from benford_gengamma.benford import benford_probs
from benford_gengamma.errors import DomainError
from benford_gengamma.gengamma import GenGammaParams, make_rng
from benford_gengamma.wrapped_pdf import (
    DirectSumConfig,
    direct_pdf_grid,
    fourier_pdf_grid,
    min_terms,
)

from conftest import NINE_TRIPLES

BASE_PARAMS = GenGammaParams(1, 0.5, 0.5)


def test_sup_residual_zero_terms():
    assert tuple(sup_residual(BASE_PARAMS, 0))[:2] == (0.0, 0.0)


def test_sup_residual_validation():
    with pytest.raises(DomainError):
        sup_residual(BASE_PARAMS, 5, grid_points=32)
    with pytest.raises(DomainError):
        sup_residual(BASE_PARAMS, -1)


def test_sup_residual_scale_class():
    lhs = sup_residual(BASE_PARAMS, 26)
    rhs = sup_residual(BASE_PARAMS.replace(a=10.0), 26)
    assert lhs.sup == pytest.approx(rhs.sup, abs=1e-10)
    assert lhs.lipschitz_slack == pytest.approx(rhs.lipschitz_slack, abs=1e-15)


def test_sup_residual_two_resolutions():
    coarse = sup_residual(BASE_PARAMS, 26, 1024)
    fine = sup_residual(BASE_PARAMS, 26, 8192)
    assert abs(coarse.sup - fine.sup) <= coarse.lipschitz_slack


@pytest.mark.parametrize("params", NINE_TRIPLES)
def test_sup_is_certified(params):
    terms = min_terms(params, 0.01)
    res = sup_residual(params, terms, 256)
    u = np.arange(256 * 16) / (256 * 16)
    finer = np.max(np.abs(fourier_pdf_grid(u, params, terms) - 1))
    assert finer <= res.sup + res.lipschitz_slack
    assert res.sup >= finer - res.lipschitz_slack


def test_lipschitz_constant_bounds_derivative():
    for params in NINE_TRIPLES:
        terms = min_terms(params, 0.01)
        u = np.linspace(0, 1, 4001)
        slope = np.max(np.abs(fourier_pdf_grid(u, params, terms, derivative=True)))
        assert slope <= lipschitz_constant(params, terms) * (1 + 1e-12)


def test_deviation_bound_small_parameters():
    report = deviation_bound(GenGammaParams(1, 0.1, 0.1), 1e-3)
    assert report.bound < 0.01
    assert report.bound == pytest.approx(report.epsilon + report.sup_residual
                                         + report.lipschitz_slack, abs=0)


def test_deviation_bound_scale_class():
    for a in (10.0, 100.0):
        assert deviation_bound(BASE_PARAMS.replace(a=a), 0.01).bound == pytest.approx(
            deviation_bound(BASE_PARAMS, 0.01).bound, abs=1e-9)


def test_deviation_bound_fields():
    report = deviation_bound(BASE_PARAMS, 0.01)
    assert report.terms == 26
    assert report.grid_points == 1024
    assert 0 < report.bound < 1


def test_signed_digit_deviations_telescope():
    for params in NINE_TRIPLES:
        terms = min_terms(params, 1e-3)
        signed = [per_digit_deviation(params, j, terms, signed=True)
                  for j in range(1, params.base)]
        assert abs(sum(signed)) <= 1e-10


def test_digit_deviation_below_bound():
    for params in NINE_TRIPLES:
        report = deviation_bound(params, 0.01)
        for j in range(1, 10):
            assert per_digit_deviation(params, j, report.terms) <= report.bound


def test_digit_deviation_validation():
    with pytest.raises(DomainError):
        per_digit_deviation(BASE_PARAMS, 10, 5)
    with pytest.raises(DomainError):
        per_digit_deviation(BASE_PARAMS, 1, 5, method="simpson")


@pytest.mark.parametrize("params", NINE_TRIPLES[:5])
def test_antiderivative_matches_direct_quadrature(params):
    terms = min_terms(params, 1e-8)
    for j in range(1, 10):
        lo, hi = math.log10(j), math.log10(j + 1)
        integral, _ = integrate.quad(
            lambda u: direct_pdf_grid(np.array([u]), params, DirectSumConfig(1e-13))[0][0] - 1,
            lo, hi, epsabs=1e-12)
        assert per_digit_deviation(params, j, terms, signed=True) == pytest.approx(
            integral, abs=1e-6)


def test_quadrature_method_matches_antiderivative():
    for j in (1, 4, 9):
        assert per_digit_deviation(BASE_PARAMS, j, 26, method="quadrature") == pytest.approx(
            per_digit_deviation(BASE_PARAMS, j, 26), abs=1e-12)


@pytest.mark.slow
def test_digit_one_monte_carlo_exponential():
    params = GenGammaParams(1, 1, 1)
    n = 10**7
    hist = empirical_digit_histogram(params, n, seed=17)
    empirical = hist.frequencies[0] - math.log10(2)
    predicted = per_digit_deviation(params, 1, min_terms(params, 1e-6), signed=True)
    p = hist.frequencies[0]
    assert abs(empirical - predicted) <= 3 * math.sqrt(p * (1 - p) / n)


@pytest.mark.parametrize("values, expected", [
    ([0.5], 0.5),
    ([0.25, 0.75], 0.25),
])
def test_ks_statistic_values(values, expected):
    assert ks_statistic(values) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("n", [1, 7, 100])
def test_ks_statistic_stratified(n):
    values = (np.arange(1, n + 1) - 0.5) / n
    assert ks_statistic(values) == pytest.approx(1 / (2 * n), abs=1e-15)


@given(st.lists(st.floats(0, 1, exclude_max=True), min_size=1, max_size=50), st.randoms())
def test_ks_statistic_permutation_invariant(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    stat = ks_statistic(values)
    assert ks_statistic(shuffled) == stat
    assert 0 <= stat <= 1


@pytest.mark.parametrize("bad", [[], [1.0], [-0.1, 0.5], [math.nan]])
def test_ks_statistic_domain(bad):
    with pytest.raises(DomainError):
        ks_statistic(bad)


def test_ks_small_parameters_and_trend():
    small = [ks_test(GenGammaParams(1, 0.2, 0.2), 10**4, seed).statistic for seed in range(10)]
    large = [ks_test(GenGammaParams(1, 2, 2), 10**4, seed).statistic for seed in range(10)]
    assert max(small) < 0.05
    assert sum(s < l for s, l in zip(small, large)) >= 8


def test_ks_sweep_scale_class():
    axis = [0.2, 1.0, 2.0]
    one = ks_sweep(axis, axis, 1, 10, 10**4, seed=3)
    ten = ks_sweep(axis, axis, 10, 10, 10**4, seed=3)
    assert abs(np.median(one.cells) - np.median(ten.cells)) <= 0.01


def test_ks_sweep_deterministic_and_order_free():
    axis = [0.3, 1.1]
    serial = ks_sweep(axis, axis, 1, 10, 500, seed=8)
    threaded = ks_sweep(axis, axis, 1, 10, 500, seed=8, workers=4)
    assert np.array_equal(serial.cells, threaded.cells)
    assert serial.cells.shape == (2, 2)
    assert len(list(serial.rows())) == 4
    assert serial.metadata["seed"] == 8 and "warning" not in serial.metadata


def test_ks_sweep_small_sample_warning():
    grid = ks_sweep([1.0], [1.0], 1, 10, 10, seed=1)
    assert "warning" in grid.metadata


def test_ks_sweep_validation():
    with pytest.raises(DomainError):
        ks_sweep([], [1.0], 1, 10, 100, 1)
    with pytest.raises(DomainError):
        ks_sweep([1.0], [1.0], 1, 10, 0, 1)


@pytest.mark.parametrize("params", [GenGammaParams(1, 0.5, 0.5), GenGammaParams(1, 2, 2),
                                    GenGammaParams(3, 1, 0.5)])
def test_ks_within_dkw_band(params):
    n, alpha = 10**3, 0.01
    band = deviation_bound(params, 1e-3).bound + math.sqrt(math.log(2 / alpha) / (2 * n))
    inside = sum(ks_test(params, n, seed).statistic <= band for seed in range(100))
    assert inside >= 99


def test_bound_sweep_trends():
    values = np.arange(1, 21) / 10
    by_d = bound_sweep("d", values, GenGammaParams(1, 0.5, 0.5), 0.01)
    by_p = bound_sweep("p", values, GenGammaParams(1, 0.5, 0.5), 0.01)
    for grid in (by_d, by_p):
        assert grid.cells.shape == (20,)
        assert np.all(np.diff(grid.cells) >= -1e-12)
        assert grid.cells[-1] > 2 * grid.cells[0]
    assert len(by_d.reports) == 20 and by_d.reports[4].params.d == 0.5


def test_bound_sweep_over_scale():
    grid = bound_sweep("a", np.arange(1, 11), GenGammaParams(1, 0.5, 0.5), 0.01)
    assert np.ptp(grid.cells) <= 1e-9


def test_bound_sweep_validation():
    with pytest.raises(DomainError):
        bound_sweep("base", [2], BASE_PARAMS, 0.01)


def test_sweep_grid_shape_check():
    with pytest.raises(DomainError):
        SweepGrid([("d", [1, 2])], [1.0, 2.0, 3.0])


def test_empirical_histogram_reproducible():
    a = empirical_digit_histogram(BASE_PARAMS, 1000, 5)
    b = empirical_digit_histogram(BASE_PARAMS, 1000, 5)
    assert np.array_equal(a.counts, b.counts)
    assert a.total == 1000
    assert np.allclose(a.frequencies.sum(), 1.0)
    assert len(benford_probs(10)) == len(a.counts)


def test_make_rng_is_counter_based():
    assert isinstance(make_rng(1).bit_generator, np.random.Philox)
