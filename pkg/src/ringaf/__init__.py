"""Ambiguity function and MRT/MRC array gain of a circular cell-free
antenna ring: mutually validating evaluators plus resolution, Nyquist
antenna count and alias-suppression analysis."""

from .analysis import (
    AliasReport,
    alias_attenuation,
    alias_radius,
    min_antennas,
    resolution,
)
from .engine import (
    AFValue,
    Truncation,
    TruncationWarning,
    af_continuous_quadrature,
    af_continuous_series,
    af_discrete_direct,
    af_discrete_series,
    array_gain_mrt,
    evaluate,
)
from .model import (
    ArrayConfig,
    Displacement,
    UserPosition,
    ValidityWarning,
    Waveform,
    approx_distance,
    displacement,
)
from .special import (
    QuadratureResolutionError,
    QuadratureSpec,
    bessel_j,
    first_bessel_zero,
    sinc_fourier_coeffs,
)
from .sweep import PRESETS, SweepConfig, SweepResult, run_sweep, write_csv
from .timedomain import (
    GridTooShortError,
    TimeGrid,
    closed_form_residual,
    matched_combine_residual,
    synth_received,
)

__version__ = "0.1.0"

__all__ = [
    "AFValue",
    "AliasReport",
    "ArrayConfig",
    "Displacement",
    "GridTooShortError",
    "PRESETS",
    "QuadratureResolutionError",
    "QuadratureSpec",
    "SweepConfig",
    "SweepResult",
    "TimeGrid",
    "Truncation",
    "TruncationWarning",
    "UserPosition",
    "ValidityWarning",
    "Waveform",
    "af_continuous_quadrature",
    "af_continuous_series",
    "af_discrete_direct",
    "af_discrete_series",
    "alias_attenuation",
    "alias_radius",
    "approx_distance",
    "array_gain_mrt",
    "bessel_j",
    "closed_form_residual",
    "displacement",
    "evaluate",
    "first_bessel_zero",
    "matched_combine_residual",
    "min_antennas",
    "resolution",
    "run_sweep",
    "sinc_fourier_coeffs",
    "synth_received",
    "write_csv",
]
