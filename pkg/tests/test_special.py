import math

import numpy as np
import pytest
from scipy import integrate, optimize

from ringaf import (
    QuadratureResolutionError,
    QuadratureSpec,
    bessel_j,
    first_bessel_zero,
    sinc_fourier_coeffs,
)

# L_0(2) frozen from adaptive quadrature of the defining integral
# (scipy.integrate.quad, epsabs=1e-13; estimated error 2e-14).
L0_OF_2 = 0.12082588336451545


def j0_power_series(x):
    """Independent J_0 evaluation: plain power series (converges for the
    moderate arguments used here)."""
    total, term, m = 0.0, 1.0, 0
    while abs(term) > 1e-18 and m < 200:
        total += term
        m += 1
        term *= -(x * x / 4.0) / (m * m)
    return total


def test_bessel_trivial_values():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(1, 0.0) == 0.0
    assert bessel_j(7, 0.0) == 0.0


def test_bessel_first_zero_against_series_oracle():
    root = optimize.brentq(j0_power_series, 2.0, 3.0, xtol=1e-12)
    assert abs(bessel_j(0, root)) < 1e-10
    assert first_bessel_zero() == pytest.approx(root, abs=1e-10)
    assert first_bessel_zero() == pytest.approx(2.404826, abs=1e-5)


def test_bessel_against_series_on_grid():
    # series cancellation grows as (x/2)^(2m)/(m!)^2, keep x moderate
    for x in np.linspace(0.0, 10.0, 41):
        assert bessel_j(0, x) == pytest.approx(j0_power_series(x), abs=1e-10)


def test_bessel_parity_reductions_exact():
    for n, x in [(3, 2.5), (4, 2.5), (17, 40.0)]:
        assert bessel_j(-n, x) == (-1.0) ** n * bessel_j(n, x)
        assert bessel_j(n, -x) == (-1.0) ** n * bessel_j(n, x)
        assert bessel_j(-n, -x) == bessel_j(n, x)


def test_bessel_bounded_by_one():
    rng = np.random.default_rng(3)
    n = rng.integers(-60, 60, size=200)
    x = rng.uniform(-1e3, 1e3, size=200)
    assert np.all(np.abs(bessel_j(n, x)) <= 1.0)


def test_bessel_recurrence_residual():
    rng = np.random.default_rng(4)
    for _ in range(200):
        n = int(rng.integers(1, 41))
        x = rng.uniform(0.1, 100.0)
        res = bessel_j(n - 1, x) + bessel_j(n + 1, x) - (2.0 * n / x) * bessel_j(n, x)
        assert abs(res) < 1e-8


def test_bessel_argument_guard():
    with pytest.raises(ValueError):
        bessel_j(0, 2e7)


def test_bessel_noninteger_order_rejected():
    with pytest.raises(ValueError):
        bessel_j(0.5, 1.0)


def test_coeffs_rho_zero_is_delta():
    np.testing.assert_array_equal(sinc_fourier_coeffs(0.0, 3), [1.0, 0.0, 0.0, 0.0])


def test_coeffs_against_adaptive_quadrature():
    assert sinc_fourier_coeffs(2.0, 0)[0] == pytest.approx(L0_OF_2, abs=1e-8)
    # a few more orders, oracle evaluated here with scipy's adaptive quadrature
    for rho, l in [(2.0, 2), (5.0, 4), (0.7, 0)]:
        def integrand(theta):
            return np.sinc(rho * np.sin(theta)) * np.cos(l * theta)

        expected, _ = integrate.quad(integrand, 0.0, 2.0 * np.pi, limit=400)
        expected /= 2.0 * np.pi
        assert sinc_fourier_coeffs(rho, l)[l] == pytest.approx(expected, abs=1e-8)


def test_coeffs_odd_orders_vanish():
    coeffs = sinc_fourier_coeffs(5.0, 5)
    for l in (1, 3, 5):
        assert abs(coeffs[l]) < 1e-10


def test_coeffs_reconstruct_integrand():
    # inverse round trip: sum_l L_l exp(j*l*theta) == sinc(rho*sin(theta))
    # harmonic content extends to ~pi*rho (sharp spectral edge of the sinc)
    for rho in (0.5, 3.0, 20.0):
        l_max = int(np.ceil(np.pi * rho)) + 20
        coeffs = sinc_fourier_coeffs(rho, l_max)
        theta = np.linspace(0.0, 2.0 * np.pi, 97)
        ls = np.arange(-l_max, l_max + 1)
        recon = np.real(
            (coeffs[np.abs(ls)][:, None] * np.exp(1j * np.outer(ls, theta))).sum(axis=0)
        )
        assert np.max(np.abs(recon - np.sinc(rho * np.sin(theta)))) < 1e-6


def test_coeffs_magnitude_bounded():
    for rho in (0.3, 2.0, 7.0, 50.0):
        assert np.all(np.abs(sinc_fourier_coeffs(rho, 30)) <= 1.0)


def test_coeffs_l0_decays_with_rho():
    values = [sinc_fourier_coeffs(rho, 0)[0] for rho in (1.0, 5.0, 25.0, 125.0)]
    assert all(v > 0 for v in values)
    assert all(b < a for a, b in zip(values, values[1:]))


def test_coeffs_undersampling_guard():
    with pytest.raises(QuadratureResolutionError):
        sinc_fourier_coeffs(100.0, 64, QuadratureSpec(64))


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(100)  # not a power of two
    with pytest.raises(ValueError):
        QuadratureSpec(32)  # too small
