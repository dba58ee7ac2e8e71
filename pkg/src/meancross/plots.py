"""Figure rendering for sweep and enumeration reports.

Used by the CLI to drop a PNG/PDF next to the delimited output; the
Agg backend keeps this headless-safe.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_sweep_figure(records, path: str, log_x: bool = False) -> None:
    """Two panels over kappa: the minimum probability and, where the
    minimum is attained, the minimizing shape parameter."""
    kappas = [r.kappa for r in records]
    values = [r.value for r in records]
    attained = [(r.kappa, r.argmin) for r in records if r.argmin is not None]

    fig, (ax_val, ax_arg) = plt.subplots(1, 2, figsize=(9.0, 3.6))
    ax_val.plot(kappas, values, marker=".", lw=1.0, color="tab:blue")
    ax_val.set_xlabel(r"$\kappa$")
    ax_val.set_ylabel("minimum probability")
    ax_val.grid(alpha=0.3)

    if attained:
        ax_arg.plot(*zip(*attained), marker=".", lw=1.0, color="tab:orange")
    ax_arg.set_xlabel(r"$\kappa$")
    ax_arg.set_ylabel("minimizing shape")
    ax_arg.grid(alpha=0.3)
    if log_x:
        ax_val.set_xscale("log")
        ax_arg.set_xscale("log")

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_chvatal_figure(rows, path: str) -> None:
    """Argmin m* against the 2n/3 reference line, plus the minimal
    probability, over n.  Rows are (n, m_star, nearest, q_min, match)."""
    ns = [r[0] for r in rows]
    m_stars = [r[1] for r in rows]
    q_mins = [r[3] for r in rows]

    fig, (ax_m, ax_q) = plt.subplots(1, 2, figsize=(9.0, 3.6))
    ax_m.plot(ns, [2.0 * n / 3.0 for n in ns], lw=1.0, color="0.6", label="2n/3")
    ax_m.plot(ns, m_stars, ".", ms=3, color="tab:blue", label="argmin m")
    ax_m.set_xlabel("n")
    ax_m.set_ylabel("m")
    ax_m.legend(frameon=False)
    ax_m.grid(alpha=0.3)

    ax_q.plot(ns, q_mins, lw=1.0, color="tab:green")
    ax_q.set_xlabel("n")
    ax_q.set_ylabel("minimal probability")
    ax_q.grid(alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
