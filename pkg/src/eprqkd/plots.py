"""Figure rendering for the report path.

Each function draws one figure from a campaign payload (the loaded
report.json dict) or from the closed forms, saves it as PNG, and returns the
path. The Agg backend is forced so everything works headless.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import analytics

_STYLE = {
    "figure.figsize": (6.4, 4.0),
    "figure.dpi": 130,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "font.size": 10,
    "legend.frameon": False,
}


def _new_axes():
    fig, ax = plt.subplots()
    return fig, ax


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def render_security_curve(path: Path, n_points: int = 201) -> Path:
    """Both information curves against the attack fraction, with the
    threshold marked."""
    curve = analytics.SecurityCurve.compute(n_points=n_points)
    f_star, e_max = analytics.security_threshold()
    with plt.rc_context(_STYLE):
        fig, ax = _new_axes()
        ax.plot(curve.f, curve.i_ab, label="I(A:B) = 1 - H[3f/8]", color="tab:blue")
        ax.plot(curve.f, curve.i_ae, label="I(A:E) = 5f/8", color="tab:red")
        ax.axvline(f_star, color="gray", linestyle="--", linewidth=1)
        ax.annotate(
            f"f* = {f_star:.6f}\ne_max = {e_max:.4f}",
            xy=(f_star, analytics.eve_info(f_star)),
            xytext=(f_star + 0.04, 0.75),
            fontsize=9,
        )
        ax.set_xlabel("attacked fraction f")
        ax.set_ylabel("bits")
        ax.set_title("Security margin of the one-step block scheme")
        ax.legend()
        return _save(fig, path)


def render_detection_rates(payload: dict, path: Path) -> Path:
    """Empirical per-attacked-block detection rate with its CI, next to the
    corrected 3/8 and the refuted 15/16 figures."""
    metric = payload["metrics"]["detection_rate"]
    contrast = payload["claimed_rate_contrast"]
    values = [metric["target"], metric["estimate"], contrast["claimed_incorrect_rate"]]
    labels = ["corrected\n3/8", "empirical", "claimed\n15/16"]
    colors = ["tab:blue", "tab:green", "tab:red"]
    with plt.rc_context(_STYLE):
        fig, ax = _new_axes()
        bars = ax.bar(labels, values, color=colors, width=0.6)
        err = [
            metric["estimate"] - metric["ci95_lo"],
            metric["ci95_hi"] - metric["estimate"],
        ]
        ax.errorbar(
            [1], [metric["estimate"]], yerr=[[err[0]], [err[1]]],
            fmt="none", ecolor="black", capsize=6,
        )
        for bar, value in zip(bars, values):
            ax.text(
                bar.get_x() + bar.get_width() / 2, value + 0.02,
                f"{value:.4f}", ha="center", fontsize=9,
            )
        ax.set_ylim(0, 1.05)
        ax.set_ylabel("P(receiver error | block attacked)")
        ax.set_title("Detection probability per attacked block")
        return _save(fig, path)


def render_eve_histogram(payload: dict, path: Path) -> Path:
    """Observed outcome-deviation counts against the {5/8, 1/8 x3} law."""
    histogram = payload["eve_outcome_histogram"]
    observed = np.asarray(histogram["deviation_counts"], dtype=float)
    expected = np.asarray(histogram["expected_counts"], dtype=float)
    positions = np.arange(4)
    labels = ["correct", "alt 1", "alt 2", "alt 3"]
    with plt.rc_context(_STYLE):
        fig, ax = _new_axes()
        ax.bar(positions - 0.2, observed, width=0.4, label="observed", color="tab:green")
        ax.bar(positions + 0.2, expected, width=0.4, label="expected", color="tab:gray")
        ax.set_xticks(positions, labels)
        ax.set_ylabel("attacked blocks")
        p_value = histogram["p_value"]
        ax.set_title(f"Eavesdropper outcomes (chi-square p = {p_value:.3f})")
        ax.legend()
        return _save(fig, path)


def render_pop_scaling(
    path: Path,
    n_values: Sequence[int] = (4, 8, 16, 32, 64, 128),
    empirical: Optional[dict[int, float]] = None,
) -> Path:
    """Pick probability and leakage against the sequence length, log scale.
    ``empirical`` maps N to a measured pick probability, when available."""
    n_arr = np.asarray(sorted(n_values))
    pick = np.array([float(analytics.pop_eve_info(1, n)) / 1.25 for n in n_arr])
    leak = np.array([float(analytics.pop_eve_info(1, n)) for n in n_arr])
    matching = 1.0 / (n_arr - 1.0)
    with plt.rc_context(_STYLE):
        fig, ax = _new_axes()
        ax.plot(n_arr, pick, "o-", label="targeted pick 4/(N(N-1))", color="tab:blue")
        ax.plot(n_arr, matching, "s--", label="any-pair match 1/(N-1)", color="tab:orange")
        ax.plot(n_arr, leak, "^-", label="leakage 5f/(N(N-1)) at f=1", color="tab:red")
        if empirical:
            ns = sorted(empirical)
            ax.plot(
                ns, [empirical[n] for n in ns], "kx", markersize=9,
                label="empirical pick rate",
            )
        ax.set_xscale("log", base=2)
        ax.set_yscale("log")
        ax.set_xlabel("sequence length N (qubits)")
        ax.set_ylabel("probability / bits")
        ax.set_title("Permuted-order scaling")
        ax.legend(fontsize=8)
        return _save(fig, path)


def render_all(payload: dict, outdir: Path, empirical_pop: Optional[dict[int, float]] = None) -> list[Path]:
    """Render every figure applicable to the campaign payload."""
    outdir = Path(outdir)
    paths = [render_security_curve(outdir / "security_curve.png")]
    if payload.get("protocol") == "p2" and "detection_rate" in payload.get("metrics", {}):
        paths.append(render_detection_rates(payload, outdir / "detection_rates.png"))
        if payload["eve_outcome_histogram"]["p_value"] is not None:
            paths.append(render_eve_histogram(payload, outdir / "eve_histogram.png"))
    paths.append(render_pop_scaling(outdir / "pop_scaling.png", empirical=empirical_pop))
    return paths
