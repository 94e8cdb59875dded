"""Figure rendering for the CLI report paths.

Only the Agg backend is used; every function writes a single file and closes
its figure.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "figure.figsize": (7.0, 4.3),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 10,
    "lines.linewidth": 1.0,
    "savefig.dpi": 150,
}


def plot_envelope(x, envelope, overlays: dict, path, title: str = ""):
    """Envelope as a pair of curves +-E with the overlay polynomials."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ax.plot(x, envelope, color="k", lw=1.6, label="envelope")
        ax.plot(x, -np.asarray(envelope), color="k", lw=1.6)
        for label, y in overlays.items():
            ax.plot(x, y, label=label)
        ax.set_xlabel("x")
        ax.set_title(title)
        ax.legend(loc="best", frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)


def plot_zeros(zeros, path, title: str = ""):
    zeros = np.asarray(zeros, dtype=complex)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ax.axhline(0, color="0.6", lw=0.8)
        ax.plot([-1, 1], [0, 0], color="C3", lw=3, alpha=0.4, label="[-1, 1]")
        ax.plot(zeros.real, zeros.imag, "o", ms=3, label="zeros")
        ax.set_xlabel("Re x")
        ax.set_ylabel("Im x")
        ax.set_title(title)
        ax.legend(loc="best", frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)


def plot_salem(indices, residuals, path, title: str = ""):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        res = np.asarray(residuals, dtype=float)
        ax.semilogy(indices, np.where(res > 0, res, np.nan), "o-", ms=3)
        ax.set_xlabel("index")
        ax.set_ylabel("|tau - q|")
        ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
