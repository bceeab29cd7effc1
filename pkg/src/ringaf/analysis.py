"""Design metrics derived from the evaluators: resolution, Nyquist antenna
count, alias radius and alias attenuation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import Truncation, evaluate
from .model import ArrayConfig, Displacement, Waveform
from .special import first_bessel_zero


class WindowMissError(ValueError):
    """The sweep window does not bracket the alias radius."""


@dataclass(frozen=True)
class AliasReport:
    """Peak of the normalized AF in a window around the alias radius.

    mainlobe_reference_db is 0 by construction (self-normalized sweeps);
    attenuation_db = -alias_peak_db is how far the alias sits below it.
    """

    alias_radius: float
    alias_peak_radius: float
    alias_peak_db: float
    mainlobe_reference_db: float = 0.0

    @property
    def attenuation_db(self) -> float:
        return -self.alias_peak_db


def resolution(wavelength: float = 1.0) -> float:
    """Mainlobe half-width j_{0,1}*lambda/(2*pi), the displacement at the
    first zero of the narrowband ambiguity function (~0.38 lambda)."""
    return first_bessel_zero() * wavelength / (2.0 * math.pi)


def min_antennas(r_s_max: float, wavelength: float = 1.0) -> int:
    """Smallest antenna count strictly exceeding 4*pi*R_s,max/lambda, the
    spatial Nyquist bound for users inside radius R_s,max."""
    if r_s_max <= 0:
        raise ValueError("r_s_max must be > 0")
    return int(math.floor(4.0 * math.pi * r_s_max / wavelength)) + 1


def alias_radius(n_antennas: int, wavelength: float = 1.0) -> float:
    """Displacement N*lambda/(2*pi) at which the finite-ring AF repeats."""
    if n_antennas < 1:
        raise ValueError("n_antennas must be >= 1")
    return n_antennas * wavelength / (2.0 * math.pi)


def alias_attenuation(
    array: ArrayConfig,
    wf: Waveform,
    theta_ss: float,
    window: tuple[float, float] | None = None,
    evaluator: str = "direct",
    t: Truncation | None = None,
    step: float = 0.05,
) -> AliasReport:
    """Locate the alias peak of the normalized AF for a finite ring.

    The peak is searched within +/- 2 lambda of the nominal alias radius
    (grid step 0.05 lambda by default), clipped to ``window`` when given;
    a window that excludes the alias radius raises WindowMissError.
    """
    if array.is_continuous:
        raise ValueError("alias analysis requires a finite antenna count")
    nominal = alias_radius(array.n_antennas, array.wavelength)
    lo, hi = nominal - 2.0 * array.wavelength, nominal + 2.0 * array.wavelength
    if window is not None:
        if not (window[0] <= nominal <= window[1]):
            raise WindowMissError(
                f"window {window} excludes the alias radius {nominal:g}"
            )
        lo, hi = max(lo, window[0]), min(hi, window[1])
    radii = np.arange(lo, hi + step / 2.0, step)
    peak_db = -math.inf
    peak_r = lo
    for r in radii:
        db = evaluate(evaluator, array, wf, Displacement(float(r), theta_ss), t).normalized_db
        if db > peak_db:
            peak_db, peak_r = db, float(r)
    return AliasReport(nominal, peak_r, peak_db)
