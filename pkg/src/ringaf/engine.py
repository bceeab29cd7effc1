"""Ambiguity-function / array-gain evaluators for the circular ring.

Four mutually validating routes to the same quantity:

* ``af_continuous_quadrature`` -- ring integral of the residual
  space-dispersive signal (periodic trapezoid, spectrally accurate).
* ``af_continuous_series`` -- Bessel x sinc-coefficient series; the
  spatial-frequency (Parseval) form of the same integral.
* ``af_discrete_direct`` -- exact sum over N antennas; ground truth for
  the finite ring.
* ``af_discrete_series`` -- aliased series with image index p; the
  analytic explanation of the finite-ring sum.

The MRT downlink array gain at an off-target user and the MRC uplink
response to an interferer are the same function of the displacement
between the two users, so ``array_gain_mrt`` simply converts positions to
a displacement and delegates.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .model import ArrayConfig, Displacement, UserPosition, Waveform, displacement
from .special import (
    QuadratureResolutionError,
    QuadratureSpec,
    bessel_j,
    min_sample_count,
    sinc_fourier_coeffs,
)

DB_FLOOR = -200.0

EVALUATORS = ("quadrature", "series", "direct", "aliased-series")


class TruncationWarning(UserWarning):
    """The last retained series term is not negligible."""


@dataclass(frozen=True)
class Truncation:
    """Series/quadrature truncation control.

    n_max bounds the Bessel order range [-n_max, n_max]; None selects the
    per-point rule ceil(k*R_ss) + 40, past which the terms decay
    super-exponentially.  l_max and p_max default to the values used for
    the reference plots (l <= 20, p <= 5).
    """

    n_max: int | None = None
    l_max: int = 20
    p_max: int = 5
    quad: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self):
        if self.n_max is not None and self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if self.l_max < 0 or self.p_max < 0:
            raise ValueError("l_max and p_max must be >= 0")

    def order_bound(self, k: float, radius: float) -> int:
        if self.n_max is not None:
            return self.n_max
        return int(math.ceil(k * radius)) + 40


@dataclass(frozen=True)
class AFValue:
    """Evaluator output: raw complex value plus the 0 dB reference
    (2*pi*R for the continuous ring, N for the finite one)."""

    raw: complex
    reference: float

    @property
    def magnitude(self) -> float:
        return abs(self.raw)

    @property
    def normalized_db(self) -> float:
        mag = abs(self.raw) / self.reference
        if mag <= 0.0:
            return DB_FLOOR
        return max(20.0 * math.log10(mag), DB_FLOOR)


def _require_continuous(array: ArrayConfig):
    if not array.is_continuous:
        raise ValueError("continuous evaluator requires a continuous array")


def _require_finite(array: ArrayConfig):
    if array.is_continuous:
        raise ValueError("discrete evaluator requires a finite antenna count")


def _series_weights(wf: Waveform, radius: float, n_abs_max: int):
    """L_|n| weights for orders 0..n_abs_max (L is even in the order)."""
    if wf.is_narrowband:
        out = np.zeros(n_abs_max + 1)
        out[0] = 1.0
        return out
    return sinc_fourier_coeffs(radius / wf.spatial_resolution, n_abs_max)


def _check_tail(terms: np.ndarray, total: complex, what: str):
    tail = max(abs(terms[0]), abs(terms[-1]))
    if tail > 1e-10 * max(abs(total), np.finfo(float).tiny):
        warnings.warn(
            f"{what}: last retained term {tail:g} exceeds 1e-10 of the sum "
            f"{abs(total):g}; increase the truncation",
            TruncationWarning,
            stacklevel=3,
        )


def af_continuous_quadrature(
    array: ArrayConfig,
    wf: Waveform,
    d: Displacement,
    quad: QuadratureSpec | None = None,
) -> AFValue:
    """Ring integral of exp(-j*k*R_ss*cos(z/R - theta_ss)) *
    sinc(R_ss*cos(z/R - theta_ss)/R_W) over z in [0, 2*pi*R]."""
    _require_continuous(array)
    k = array.wavenumber
    # oscillation scale ~ k*R_ss/(2*pi) periods plus sinc harmonics
    rho = 0.0 if wf.is_narrowband else d.radius / wf.spatial_resolution
    needed = min_sample_count(rho + k * d.radius / (2 * np.pi), 8)
    if quad is None:
        quad = QuadratureSpec(needed)
    elif quad.sample_count < needed:
        raise QuadratureResolutionError(
            f"sample_count {quad.sample_count} under-resolves the ring "
            f"integrand; need >= {needed}"
        )
    m = quad.sample_count
    phi = 2.0 * np.pi * np.arange(m) / m
    c = d.radius * np.cos(phi - d.angle)
    f = np.exp(-1j * k * c)
    if not wf.is_narrowband:
        f = f * np.sinc(c / wf.spatial_resolution)
    raw = array.ring_radius * (2.0 * np.pi / m) * f.sum()
    return AFValue(complex(raw), 2.0 * np.pi * array.ring_radius)


def af_continuous_series(
    array: ArrayConfig,
    wf: Waveform,
    d: Displacement,
    t: Truncation | None = None,
) -> AFValue:
    """2*pi*R * sum_n J_n(-k*R_ss) * L_n(R_ss/R_W).

    For the narrowband waveform L_n collapses to a delta at n = 0 and the
    result is exactly 2*pi*R*J_0(k*R_ss).
    """
    _require_continuous(array)
    if t is None:
        t = Truncation()
    k = array.wavenumber
    ref = 2.0 * np.pi * array.ring_radius
    if wf.is_narrowband:
        return AFValue(complex(ref * bessel_j(0, k * d.radius)), ref)
    n_max = t.order_bound(k, d.radius)
    ns = np.arange(-n_max, n_max + 1)
    weights = _series_weights(wf, d.radius, n_max)
    terms = bessel_j(ns, -k * d.radius) * weights[np.abs(ns)]
    raw = ref * terms.sum()
    _check_tail(ref * terms, raw, "af_continuous_series")
    return AFValue(complex(raw), ref)


def af_discrete_direct(array: ArrayConfig, wf: Waveform, d: Displacement) -> AFValue:
    """Exact sum over the N antennas at theta_i = 2*pi*i/N; no truncation,
    the reference evaluator for the finite ring."""
    _require_finite(array)
    k = array.wavenumber
    c = d.radius * np.cos(array.antenna_angles() - d.angle)
    f = np.exp(-1j * k * c)
    if not wf.is_narrowband:
        f = f * np.sinc(c / wf.spatial_resolution)
    return AFValue(complex(f.sum()), float(array.n_antennas))


def af_discrete_series(
    array: ArrayConfig,
    wf: Waveform,
    d: Displacement,
    t: Truncation | None = None,
) -> AFValue:
    """N * sum_{n,p} exp(j*p*N*(pi/2 - theta_ss)) * J_{n+pN}(-k*R_ss) *
    L_n(R_ss/R_W); the p != 0 image terms are the spatial aliases."""
    _require_finite(array)
    if t is None:
        t = Truncation()
    k = array.wavenumber
    n = array.n_antennas
    n_max = t.order_bound(k, d.radius)
    ns = np.arange(-n_max, n_max + 1)
    weights = _series_weights(wf, d.radius, n_max)[np.abs(ns)]
    total = 0.0 + 0.0j
    tail_terms = None
    for p in range(-t.p_max, t.p_max + 1):
        terms = bessel_j(ns + p * n, -k * d.radius) * weights
        total += np.exp(1j * p * n * (np.pi / 2.0 - d.angle)) * terms.sum()
        if p == 0:
            tail_terms = terms
    raw = n * total
    _check_tail(n * tail_terms, raw, "af_discrete_series")
    return AFValue(complex(raw), float(n))


_EVALUATOR_FUNCS = {
    "quadrature": lambda a, w, d, t: af_continuous_quadrature(a, w, d, t.quad if t else None),
    "series": af_continuous_series,
    "direct": lambda a, w, d, t: af_discrete_direct(a, w, d),
    "aliased-series": af_discrete_series,
}


def evaluate(
    evaluator: str,
    array: ArrayConfig,
    wf: Waveform,
    d: Displacement,
    t: Truncation | None = None,
) -> AFValue:
    """Dispatch to one of the four evaluators by name."""
    try:
        func = _EVALUATOR_FUNCS[evaluator]
    except KeyError:
        raise ValueError(f"unknown evaluator {evaluator!r}; expected one of {EVALUATORS}")
    return func(array, wf, d, t)


def array_gain_mrt(
    array: ArrayConfig,
    wf: Waveform,
    target: UserPosition,
    victim: UserPosition,
    evaluator: str = "direct",
    t: Truncation | None = None,
) -> AFValue:
    """Array gain seen at ``victim`` when the ring beampoints to ``target``
    with an MRT precoder.

    By reciprocity the MRC uplink combiner matched to ``target`` responds
    to an interferer at ``victim`` with the very same value, so this is
    also the uplink interference gain.
    """
    return evaluate(evaluator, array, wf, displacement(target, victim), t)
