"""Geometry and waveform types for a circular distributed antenna ring.

All lengths are expressed in units of the carrier wavelength (lambda = 1
by default), so the wavenumber is k = 2*pi and no speed-of-light constant
ever appears in a formula.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass


class ValidityWarning(UserWarning):
    """A user position is too far from the ring center for the first-order
    distance approximation to be trustworthy."""


@dataclass(frozen=True)
class ArrayConfig:
    """Circular ring of access points.

    ring_radius is the ring radius in wavelengths. n_antennas is the number
    of regularly spaced antennas, or None for the space-continuous ring.
    """

    ring_radius: float
    n_antennas: int | None = None
    wavelength: float = 1.0

    def __post_init__(self):
        if self.ring_radius <= 0:
            raise ValueError("ring_radius must be > 0")
        if self.n_antennas is not None and self.n_antennas < 1:
            raise ValueError("n_antennas must be >= 1")
        if self.wavelength <= 0:
            raise ValueError("wavelength must be > 0")

    @property
    def is_continuous(self) -> bool:
        return self.n_antennas is None

    @property
    def wavenumber(self) -> float:
        return 2.0 * math.pi / self.wavelength

    def antenna_angles(self):
        """Angular positions theta_i = 2*pi*i/N of the N antennas."""
        import numpy as np

        if self.n_antennas is None:
            raise ValueError("continuous array has no discrete antenna angles")
        return 2.0 * np.pi * np.arange(self.n_antennas) / self.n_antennas


@dataclass(frozen=True)
class Waveform:
    """Transmit pulse described by its spatial resolution R_W = c/W.

    spatial_resolution is in wavelengths; math.inf means a narrowband
    (zero-bandwidth) carrier.  The pulse is sqrt(W)*sinc(W*t), whose
    autocorrelation sinc(W*t) is the only thing the evaluators ever use.
    """

    spatial_resolution: float = math.inf

    def __post_init__(self):
        if self.spatial_resolution <= 0:
            raise ValueError("spatial_resolution must be > 0")

    @classmethod
    def narrowband(cls) -> "Waveform":
        return cls(math.inf)

    @property
    def is_narrowband(self) -> bool:
        return math.isinf(self.spatial_resolution)

    @property
    def bandwidth(self) -> float:
        """Bandwidth W in units where c = 1 (0 for the narrowband case)."""
        if self.is_narrowband:
            return 0.0
        return 1.0 / self.spatial_resolution


def _normalize_angle(angle: float) -> float:
    a = math.fmod(angle, 2.0 * math.pi)
    if a < 0:
        a += 2.0 * math.pi
    # fmod can return 2*pi - eps rounding back up to 2*pi
    if a >= 2.0 * math.pi:
        a = 0.0
    return a


@dataclass(frozen=True)
class Displacement:
    """Polar form (R_ss, theta_ss) of the difference vector between two
    user positions.  Angle is normalized to [0, 2*pi)."""

    radius: float
    angle: float = 0.0

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be >= 0")
        object.__setattr__(self, "angle", _normalize_angle(self.angle))


@dataclass(frozen=True)
class UserPosition:
    """User position (R_s, theta_s) relative to the ring center."""

    radius: float
    angle: float = 0.0

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be >= 0")

    @property
    def x(self) -> float:
        return self.radius * math.cos(self.angle)

    @property
    def y(self) -> float:
        return self.radius * math.sin(self.angle)

    def check_validity(self, array: ArrayConfig, threshold: float = 0.1) -> bool:
        """Warn unless R_s <= threshold * ring_radius (near-center regime)."""
        ok = self.radius <= threshold * array.ring_radius
        if not ok:
            warnings.warn(
                f"user radius {self.radius:g} exceeds {threshold:g} * ring radius "
                f"{array.ring_radius:g}; first-order distance expansion degrades",
                ValidityWarning,
                stacklevel=2,
            )
        return ok


def displacement(a: UserPosition, b: UserPosition) -> Displacement:
    """Polar coordinates of the Cartesian difference vector a - b.

    A zero difference yields radius 0 with angle 0 by convention.
    """
    dx = a.x - b.x
    dy = a.y - b.y
    r = math.hypot(dx, dy)
    if r == 0.0:
        return Displacement(0.0, 0.0)
    return Displacement(r, math.atan2(dy, dx))


def approx_distance(array: ArrayConfig, ap_angle: float, user: UserPosition) -> float:
    """First-order distance R - R_s*cos(theta - theta_s) from the AP at
    ring angle ap_angle to the user, in wavelengths."""
    user.check_validity(array)
    return array.ring_radius - user.radius * math.cos(ap_angle - user.angle)
