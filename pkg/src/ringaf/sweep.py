"""Sweep configuration, execution and delimited output.

A sweep evaluates one AF evaluator over a uniform grid of displacement
radii for several waveform settings, and writes one dB column per R_W
value.  Output is deterministic: fixed column order, fixed formatting
(9 significant digits, LF line endings).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .engine import EVALUATORS, Truncation, evaluate
from .model import ArrayConfig, Displacement, Waveform
from .special import QuadratureSpec

THETA_FIG = 3.0 * math.pi / 37.0

DEFAULT_RW_LIST = (1.5, 11.5, 21.5, 31.5, math.inf)


def rw_label(rw: float) -> str:
    return "inf" if math.isinf(rw) else f"{rw:g}"


@dataclass(frozen=True)
class SweepConfig:
    n_antennas: int | None = 256  # None means the continuous ring
    rw_list: tuple[float, ...] = DEFAULT_RW_LIST
    theta_ss: float = THETA_FIG
    r_max: float = 100.0
    grid_points: int = 2001
    evaluator: str = "direct"
    ring_radius: float = 100.0
    truncation: Truncation | None = None

    def __post_init__(self):
        if self.grid_points < 2:
            raise ValueError("grid_points must be >= 2")
        if self.r_max <= 0:
            raise ValueError("r_max must be > 0")
        if self.evaluator not in EVALUATORS:
            raise ValueError(f"evaluator must be one of {EVALUATORS}")
        continuous_needed = self.evaluator in ("quadrature", "series")
        if continuous_needed and self.n_antennas is not None:
            raise ValueError(f"evaluator {self.evaluator!r} requires a continuous array")
        if not continuous_needed and self.n_antennas is None:
            raise ValueError(f"evaluator {self.evaluator!r} requires a finite antenna count")
        if not self.rw_list:
            raise ValueError("rw_list must not be empty")

    @property
    def array(self) -> ArrayConfig:
        return ArrayConfig(ring_radius=self.ring_radius, n_antennas=self.n_antennas)

    def radii(self) -> np.ndarray:
        return np.linspace(0.0, self.r_max, self.grid_points)


PRESETS = {
    "fig1": SweepConfig(
        n_antennas=4096,
        rw_list=(1.5, 11.5, 21.5, math.inf),
        theta_ss=THETA_FIG,
        r_max=1000.0,
        grid_points=2001,
        evaluator="direct",
    ),
    "fig2": SweepConfig(
        n_antennas=256,
        rw_list=(1.5, 11.5, 21.5, math.inf),
        theta_ss=THETA_FIG,
        r_max=100.0,
        grid_points=2001,
        evaluator="direct",
    ),
}


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    radii: np.ndarray
    raw: dict[str, np.ndarray] = field(repr=False)  # label -> complex values
    db: dict[str, np.ndarray] = field(repr=False)  # label -> normalized dB

    @property
    def labels(self) -> list[str]:
        return [rw_label(rw) for rw in self.config.rw_list]


def run_sweep(config: SweepConfig) -> SweepResult:
    """Evaluate the configured evaluator over the radius grid, one column
    per waveform setting."""
    array = config.array
    radii = config.radii()
    raw: dict[str, np.ndarray] = {}
    db: dict[str, np.ndarray] = {}
    for rw in config.rw_list:
        wf = Waveform(rw)
        label = rw_label(rw)
        values = np.empty(len(radii), dtype=complex)
        dbs = np.empty(len(radii))
        for i, r in enumerate(radii):
            out = evaluate(
                config.evaluator, array, wf, Displacement(float(r), config.theta_ss), config.truncation
            )
            values[i] = out.raw
            dbs[i] = out.normalized_db
        raw[label] = values
        db[label] = dbs
    return SweepResult(config, radii, raw, db)


def write_csv(result: SweepResult, path) -> None:
    """Write "r_ss_lambda,rw_<RW>_db,..." rows; 9 significant digits,
    '.' decimal point, ',' separator, LF endings."""
    labels = result.labels
    lines = ["r_ss_lambda," + ",".join(f"rw_{lab}_db" for lab in labels)]
    for i, r in enumerate(result.radii):
        cells = [f"{r:.9g}"] + [f"{result.db[lab][i]:.9g}" for lab in labels]
        lines.append(",".join(cells))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_csv(path):
    """Parse a sweep CSV back into (radii, {label: db column})."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        labels = [h[len("rw_") : -len("_db")] for h in header[1:]]
        rows = [line.strip().split(",") for line in fh if line.strip()]
    radii = np.array([float(row[0]) for row in rows])
    cols = {
        lab: np.array([float(row[j + 1]) for row in rows]) for j, lab in enumerate(labels)
    }
    return radii, cols


def _parse_rw(value) -> float:
    if isinstance(value, str):
        if value.lower() in ("inf", "infinity", "narrowband"):
            return math.inf
        return float(value)
    return float(value)


def config_from_dict(data: dict, base: SweepConfig | None = None) -> SweepConfig:
    """Build a SweepConfig from a JSON-style mapping, overriding ``base``.

    Keys mirror the SweepConfig field names; "inf" is accepted in rw_list
    and "continuous" for n_antennas; truncation is a nested mapping with
    n_max/l_max/p_max/quad_samples.
    """
    cfg = base or SweepConfig()
    known = {
        "n_antennas",
        "rw_list",
        "theta_ss",
        "r_max",
        "grid_points",
        "evaluator",
        "ring_radius",
        "truncation",
    }
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    updates = {}
    if "n_antennas" in data:
        n = data["n_antennas"]
        if isinstance(n, str) and n.lower() == "continuous":
            updates["n_antennas"] = None
        else:
            updates["n_antennas"] = None if n is None else int(n)
    if "rw_list" in data:
        updates["rw_list"] = tuple(_parse_rw(v) for v in data["rw_list"])
    for key in ("theta_ss", "r_max", "ring_radius"):
        if key in data:
            updates[key] = float(data[key])
    if "grid_points" in data:
        updates["grid_points"] = int(data["grid_points"])
    if "evaluator" in data:
        updates["evaluator"] = str(data["evaluator"])
    if "truncation" in data:
        t = data["truncation"]
        kwargs = {}
        if t.get("n_max") is not None:
            kwargs["n_max"] = int(t["n_max"])
        if t.get("l_max") is not None:
            kwargs["l_max"] = int(t["l_max"])
        if t.get("p_max") is not None:
            kwargs["p_max"] = int(t["p_max"])
        if t.get("quad_samples") is not None:
            kwargs["quad"] = QuadratureSpec(int(t["quad_samples"]))
        updates["truncation"] = Truncation(**kwargs)
    return replace(cfg, **updates)


def load_config(path, base: SweepConfig | None = None) -> SweepConfig:
    with open(path) as fh:
        return config_from_dict(json.load(fh), base)
