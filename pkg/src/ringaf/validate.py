"""Cross-evaluator validation suites behind the ``validate`` command.

Each suite pits two independent routes to the same number against each
other and reports the worst relative (or absolute) error over its grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import alias_radius
from .engine import (
    af_continuous_quadrature,
    af_continuous_series,
    af_discrete_direct,
    af_discrete_series,
)
from .model import ArrayConfig, Displacement, UserPosition, Waveform
from .timedomain import TimeGrid, closed_form_residual, matched_combine_residual

THETA_FIG = 3.0 * math.pi / 37.0


@dataclass(frozen=True)
class SuiteResult:
    name: str
    max_error: float
    tolerance: float
    cases: int
    worst_case: str

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), np.finfo(float).tiny)


def parseval_suite(level: str = "fast") -> SuiteResult:
    """Continuous series vs continuous quadrature."""
    radii = [0.1, 5.0, 100.0] if level == "fast" else [0.1, 1.0, 5.0, 20.0, 100.0]
    angles = [0.0, THETA_FIG] if level == "fast" else [0.0, THETA_FIG, math.pi]
    array = ArrayConfig(ring_radius=100.0)
    worst, worst_case, cases = 0.0, "", 0
    for r in radii:
        for rw in (1.5, 11.5, math.inf):
            wf = Waveform(rw)
            for th in angles:
                d = Displacement(r, th)
                err = _rel(
                    af_continuous_series(array, wf, d).raw,
                    af_continuous_quadrature(array, wf, d).raw,
                )
                cases += 1
                if err > worst:
                    worst, worst_case = err, f"R_ss={r} R_W={rw} theta_ss={th:g}"
    return SuiteResult("parseval", worst, 1e-6, cases, worst_case)


def discrete_suite(level: str = "fast") -> SuiteResult:
    """Aliased series vs the exact antenna sum."""
    counts = [16, 64] if level == "fast" else [16, 64, 256]
    radii = [0.1, 1.0, 5.0, 20.0, 100.0]
    worst, worst_case, cases = 0.0, "", 0
    for n in counts:
        array = ArrayConfig(ring_radius=100.0, n_antennas=n)
        for r in radii:
            if r > alias_radius(n):
                continue
            for rw in (1.5, 11.5, math.inf):
                wf = Waveform(rw)
                d = Displacement(r, THETA_FIG)
                err = _rel(
                    af_discrete_series(array, wf, d).raw,
                    af_discrete_direct(array, wf, d).raw,
                )
                cases += 1
                if err > worst:
                    worst, worst_case = err, f"N={n} R_ss={r} R_W={rw}"
    return SuiteResult("discrete", worst, 1e-6, cases, worst_case)


def td_oracle_suite(level: str = "fast") -> SuiteResult:
    """Time-domain matched combiner vs the closed-form residual."""
    draws = 6 if level == "fast" else 50
    rng = np.random.default_rng(20240807)
    array = ArrayConfig(ring_radius=100.0)
    worst, worst_case, cases = 0.0, "", 0
    for i in range(draws):
        rw = float(rng.choice([1.5, 11.5]))
        wf = Waveform(rw)
        grid = TimeGrid.for_waveform(wf)
        target = UserPosition(float(rng.uniform(0, 3)), float(rng.uniform(0, 2 * np.pi)))
        interferer = UserPosition(float(rng.uniform(0, 3)), float(rng.uniform(0, 2 * np.pi)))
        ap = float(rng.uniform(0, 2 * np.pi))
        err = abs(
            matched_combine_residual(array, wf, target, interferer, ap, grid)
            - closed_form_residual(array, wf, target, interferer, ap)
        )
        cases += 1
        if err > worst:
            worst, worst_case = err, f"draw={i} R_W={rw}"
    return SuiteResult("td-oracle", worst, 1e-3, cases, worst_case)


def run_validation(level: str = "fast") -> list[SuiteResult]:
    if level not in ("fast", "full"):
        raise ValueError("level must be 'fast' or 'full'")
    return [parseval_suite(level), discrete_suite(level), td_oracle_suite(level)]
