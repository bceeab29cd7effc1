"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report lines.
"""

import math

import numpy as np
import pytest

from ringaf import (
    ArrayConfig,
    Displacement,
    TimeGrid,
    UserPosition,
    Waveform,
    af_continuous_quadrature,
    af_continuous_series,
    af_discrete_direct,
    af_discrete_series,
    alias_radius,
    bessel_j,
    closed_form_residual,
    matched_combine_residual,
    resolution,
)
from ringaf.sweep import PRESETS, run_sweep

K = 2.0 * math.pi
THETA_FIG = 3.0 * math.pi / 37.0
RING = ArrayConfig(ring_radius=100.0)


def report(name: str, ok: bool, detail: str):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_narrowband_closed_form():
    nb = Waveform.narrowband()
    worst = 0.0
    for r in np.linspace(0.0, 100.0, 1000):
        got = af_continuous_series(RING, nb, Displacement(float(r), 0.3)).raw
        want = 2.0 * math.pi * 100.0 * bessel_j(0, K * r)
        worst = max(worst, abs(got - want) / max(abs(want), 1e-300))
    report("1 narrowband closed form", worst <= 1e-10, f"max rel err {worst:.2e}")


def test_criterion_2_parseval_equivalence():
    worst = 0.0
    for r in (0.1, 1.0, 5.0, 20.0, 100.0):
        for rw in (1.5, 11.5, math.inf):
            wf = Waveform(rw)
            for th in (0.0, THETA_FIG, math.pi):
                d = Displacement(r, th)
                a = af_continuous_series(RING, wf, d).raw
                b = af_continuous_quadrature(RING, wf, d).raw
                worst = max(worst, abs(a - b) / abs(b))
    report("2 Parseval equivalence", worst <= 1e-6, f"max rel err {worst:.2e}")


def test_criterion_3_discrete_series_vs_ground_truth():
    worst = 0.0
    for n in (16, 64, 256):
        array = ArrayConfig(100.0, n)
        limit = alias_radius(n)
        for r in (0.1, 1.0, 5.0, 20.0, 100.0):
            if r > limit:
                continue
            for rw in (1.5, 11.5, math.inf):
                wf = Waveform(rw)
                for th in (0.0, THETA_FIG, math.pi):
                    d = Displacement(r, th)
                    a = af_discrete_series(array, wf, d).raw
                    b = af_discrete_direct(array, wf, d).raw
                    worst = max(worst, abs(a - b) / abs(b))
    report("3 discrete series vs direct", worst <= 1e-6, f"max rel err {worst:.2e}")


def test_criterion_4_alias_location_n4096():
    array = ArrayConfig(1000.0, 4096)
    nb = Waveform.narrowband()
    radii = np.arange(600.0, 700.0 + 1e-9, 0.1)
    mags = np.array(
        [abs(af_discrete_direct(array, nb, Displacement(float(r), THETA_FIG)).raw) for r in radii]
    )
    peak = float(radii[int(np.argmax(mags))])
    nominal = 4096 / (2.0 * math.pi)
    report(
        "4 alias location N=4096",
        abs(peak - nominal) <= 2.0,
        f"peak at {peak:.1f} lambda vs nominal {nominal:.1f}",
    )


def test_criterion_5_bandwidth_suppression_n256():
    array = ArrayConfig(100.0, 256)
    nominal = alias_radius(256)
    radii = np.arange(nominal - 2.0, nominal + 2.0 + 1e-9, 0.05)

    def window_peak_db(wf):
        return max(
            af_discrete_direct(array, wf, Displacement(float(r), THETA_FIG)).normalized_db
            for r in radii
        )

    wide = window_peak_db(Waveform(1.5))
    narrow = window_peak_db(Waveform.narrowband())
    ok = wide <= -10.0 and narrow >= -3.0
    report(
        "5 bandwidth suppression N=256",
        ok,
        f"R_W=1.5 peak {wide:.1f} dB (hard bound -10), narrowband peak "
        f"{narrow:.1f} dB (sanity bound -3)",
    )


def test_criterion_6_resolution():
    res = resolution()
    value = abs(af_continuous_series(RING, Waveform.narrowband(), Displacement(res, 0.0)).raw)
    ok = abs(res - 0.3827) <= 1e-4 and value / (2 * math.pi * 100.0) < 1e-6
    report("6 resolution", ok, f"res {res:.5f} lambda, |AF|/2piR {value / (2 * math.pi * 100.0):.1e}")


def test_criterion_7_time_domain_oracle():
    rng = np.random.default_rng(20240824)
    worst = 0.0
    for _ in range(50):
        wf = Waveform(float(rng.choice([1.5, 11.5])))
        grid = TimeGrid.for_waveform(wf, oversampling=8.0)
        target = UserPosition(float(rng.uniform(0, 3)), float(rng.uniform(0, 2 * np.pi)))
        interf = UserPosition(float(rng.uniform(0, 3)), float(rng.uniform(0, 2 * np.pi)))
        ap = float(rng.uniform(0, 2 * np.pi))
        got = matched_combine_residual(RING, wf, target, interf, ap, grid)
        want = closed_form_residual(RING, wf, target, interf, ap)
        worst = max(worst, abs(got - want))
    report("7 time-domain oracle", worst <= 1e-3, f"max abs err {worst:.2e} over 50 draws")


def test_criterion_8_fig2_preset_reproduction():
    result = run_sweep(PRESETS["fig2"])
    nominal = alias_radius(256)
    in_window = (result.radii >= nominal - 2.0) & (result.radii <= nominal + 2.0)

    def window_peak(label):
        return float(np.max(result.db[label][in_window]))

    narrow_peak_r = float(result.radii[in_window][np.argmax(result.db["inf"][in_window])])
    peaks = {lab: window_peak(lab) for lab in ("inf", "21.5", "11.5", "1.5")}
    ok = (
        abs(narrow_peak_r - nominal) <= 2.0
        and peaks["inf"] >= peaks["21.5"] - 0.5
        and peaks["21.5"] >= peaks["11.5"] - 0.5
        and peaks["11.5"] >= peaks["1.5"] - 0.5
    )
    report(
        "8 fig2 preset reproduction",
        ok,
        f"alias near {narrow_peak_r:.1f} lambda; window peaks dB "
        + ", ".join(f"{k}:{v:.1f}" for k, v in peaks.items()),
    )


def test_criterion_9_rotation_invariance():
    wf = Waveform(1.5)
    mags = [
        abs(af_continuous_quadrature(RING, wf, Displacement(7.3, th)).raw)
        for th in (0.0, 1.0, 2.0, 3.0)
    ]
    spread = (max(mags) - min(mags)) / max(mags)
    report("9 rotation invariance", spread <= 1e-8, f"relative spread {spread:.2e}")
