"""Bessel functions of the first kind and Fourier coefficients of the
periodic sinc kernel sinc(rho*sin(theta)).

The coefficient routine computes every order at once from one FFT over a
uniform grid, since an ambiguity-function sweep asks for hundreds of
(rho, l) pairs per grid point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

BESSEL_ARG_GUARD = 1e7


class QuadratureResolutionError(ValueError):
    """The uniform sample count cannot resolve the requested harmonics."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Uniform sampling of [0, 2*pi) used by FFT-based coefficient and
    ring-integral routines.  sample_count must be a power of two >= 64."""

    sample_count: int = 4096

    def __post_init__(self):
        n = self.sample_count
        if n < 64 or (n & (n - 1)) != 0:
            raise ValueError("sample_count must be a power of two >= 64")


def bessel_j(order, argument):
    """Integer-order Bessel function of the first kind J_n(x).

    Accepts scalars or arrays for either argument.  Parity identities
    J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x) hold exactly by
    reduction to non-negative order and argument.
    """
    n = np.asarray(order)
    if not np.issubdtype(n.dtype, np.integer):
        if not np.all(n == np.round(n)):
            raise ValueError("order must be integer")
        n = np.round(n).astype(np.int64)
    x = np.asarray(argument, dtype=float)
    if np.any(np.abs(x) >= BESSEL_ARG_GUARD):
        raise ValueError(f"|argument| must be < {BESSEL_ARG_GUARD:g}")
    sign = np.where((np.abs(n) % 2 == 1) & ((n < 0) ^ (x < 0)), -1.0, 1.0)
    out = sign * _sp.jv(np.abs(n), np.abs(x))
    if np.ndim(order) == 0 and np.ndim(argument) == 0:
        return float(out)
    return out


def min_sample_count(rho: float, l_max: int) -> int:
    """Smallest admissible power-of-two sample count for (rho, l_max)."""
    need = 8 * (l_max + math.ceil(rho))
    n = 64
    while n < need:
        n *= 2
    return n


def sinc_fourier_coeffs(rho: float, l_max: int, quad: QuadratureSpec | None = None):
    """Fourier coefficients L_l(rho) of sinc(rho*sin(theta)) for l = 0..l_max.

    L_l = (1/2pi) * integral over [0, 2pi) of sinc(rho*sin(theta)) *
    exp(-j*l*theta).  The coefficients are real and even in l, so only
    l >= 0 is returned; odd orders vanish by the pi-periodicity of the
    integrand.  For rho = 0 the result is exactly [1, 0, 0, ...].

    If quad is None a sufficient power-of-two sample count is chosen
    automatically; an explicit spec that undersamples the integrand raises
    QuadratureResolutionError.
    """
    if rho < 0 or not math.isfinite(rho):
        raise ValueError("rho must be finite and >= 0")
    if l_max < 0:
        raise ValueError("l_max must be >= 0")
    if rho == 0.0:
        out = np.zeros(l_max + 1)
        out[0] = 1.0
        return out
    if quad is None:
        quad = QuadratureSpec(min_sample_count(rho, l_max))
    elif quad.sample_count < 8 * (l_max + math.ceil(rho)):
        raise QuadratureResolutionError(
            f"sample_count {quad.sample_count} < 8*(l_max + ceil(rho)) = "
            f"{8 * (l_max + math.ceil(rho))}"
        )
    m = quad.sample_count
    theta = 2.0 * np.pi * np.arange(m) / m
    coeffs = np.fft.fft(np.sinc(rho * np.sin(theta))) / m
    sel = coeffs[: l_max + 1]
    imag_max = float(np.max(np.abs(sel.imag)))
    if imag_max >= 1e-10:
        raise AssertionError(f"imaginary leakage {imag_max:g} in L_l coefficients")
    return sel.real.copy()


def first_bessel_zero() -> float:
    """First positive zero of J_0, by root-finding on bessel_j."""
    from scipy import optimize

    return float(optimize.brentq(lambda x: bessel_j(0, x), 2.0, 3.0, xtol=1e-12))
