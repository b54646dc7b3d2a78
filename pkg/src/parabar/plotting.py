"""Figure rendering for the CLI report paths.

Figures are written next to the CSV output; nothing here is interactive.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

_RC = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "savefig.dpi": 150,
    # reproducible SVG output
    "svg.hashsalt": "parabar",
}


def _figure(width=6.0, height=None):
    golden = (np.sqrt(5.0) - 1.0) / 2.0
    return plt.subplots(figsize=(width, height or width * golden))


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)


def plot_field(x, values, path, xlabel="x", title=None):
    """Real/imaginary parts (complex data) or the value itself (real data)."""
    with plt.rc_context(_RC):
        fig, ax = _figure()
        values = np.asarray(values)
        if np.iscomplexobj(values):
            ax.plot(x, values.real, lw=1.2, label="Re")
            ax.plot(x, values.imag, lw=1.2, ls="--", label="Im")
            ax.plot(x, np.abs(values), lw=0.8, color="0.4", label="|·|")
            ax.legend(loc="best")
        else:
            ax.plot(x, values, lw=1.2)
        ax.set_xlabel(xlabel)
        if title:
            ax.set_title(title)
        _save(fig, path)


def plot_spectrum(E, density, path, reference=None, title=None):
    """Line shape, optionally overlaid with a reference curve."""
    with plt.rc_context(_RC):
        fig, ax = _figure()
        ax.plot(E, density, lw=1.4, label="density")
        if reference is not None:
            ax.plot(E, reference, lw=1.0, ls=":", color="k", label="Breit-Wigner")
            ax.legend(loc="upper right")
        ax.set_xlabel("E")
        ax.set_ylabel("probability density")
        if title:
            ax.set_title(title)
        _save(fig, path)


def plot_lifetimes(n, t_spread, path):
    with plt.rc_context(_RC):
        fig, ax = _figure()
        ax.plot(n, t_spread, "o-", ms=4)
        ax.set_xlabel("n")
        ax.set_ylabel("mean lifetime Δt")
        ax.set_yscale("log")
        _save(fig, path)
