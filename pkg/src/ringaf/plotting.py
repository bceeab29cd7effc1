"""Figure rendering for sweep results (matplotlib, file output only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .sweep import SweepResult


def plot_sweep(result: SweepResult, path, db_min: float = -80.0) -> None:
    """Render the sweep's dB columns against displacement radius."""
    fig, ax = plt.subplots(figsize=(8, 5))
    for label in result.labels:
        name = "narrowband" if label == "inf" else f"$R_W = {label}\\lambda$"
        ax.plot(result.radii, result.db[label], lw=1.0, label=name)
    cfg = result.config
    antennas = "continuous" if cfg.n_antennas is None else f"N = {cfg.n_antennas}"
    ax.set_xlabel(r"$R_{s\tilde s}/\lambda$")
    ax.set_ylabel("normalized gain [dB]")
    ax.set_title(f"Ambiguity function / array gain ({antennas}, {cfg.evaluator})")
    ax.set_ylim(bottom=db_min, top=2.0)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper right", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
