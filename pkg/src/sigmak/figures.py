"""Optional matplotlib renderings of portraits and profiles (PNG report
path alongside the delimited outputs)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_CLASS_COLORS = {
    "Periodic": "tab:blue",
    "ArcToAlphaAxis": "tab:green",
    "ArcBiInfinite": "tab:purple",
    "ConstantKLine": "tab:orange",
    "HomoclinicToOrigin": "tab:cyan",
    "Stationary": "black",
    "Truncated": "tab:gray",
}


def portrait_png(path, alpha_range, k_range, title, orbits, nullclines,
                 critical_lines, stationary_points, dpi=150):
    fig, ax = plt.subplots(figsize=(6.5, 6.5))
    for pts in nullclines:
        if len(pts) > 1:
            ax.plot([p[0] for p in pts], [p[1] for p in pts],
                    ls=":", lw=1.0, color="tab:red")
    for k_line in critical_lines:
        ax.axhline(k_line, ls="--", lw=1.0, color="tab:orange")
    seen = set()
    for kind, pts in orbits:
        if len(pts) < 2:
            continue
        label = kind if kind not in seen else None
        seen.add(kind)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], lw=0.7,
                color=_CLASS_COLORS.get(kind, "tab:gray"), label=label)
    if stationary_points:
        ax.plot([p[0] for p in stationary_points],
                [p[1] for p in stationary_points], "ko", ms=5)
    ax.set_xlim(*alpha_range)
    ax.set_ylim(*k_range)
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$k$")
    ax.set_title(title)
    if seen:
        ax.legend(loc="upper right", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)


def profile_png(path, profile, title, dpi=150):
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4.5))
    rs = [row[1] for row in profile.samples]
    ts = [row[2] for row in profile.samples]
    ax1.plot(rs, ts, lw=1.0)
    ax1.set_xlabel("r")
    ax1.set_ylabel("t")
    ax1.set_title("profile (r, t)")
    ax2.plot([row[3] for row in profile.samples],
             [row[4] for row in profile.samples], lw=1.0)
    ax2.set_xlabel(r"$\alpha$")
    ax2.set_ylabel("k")
    ax2.set_title("phase orbit")
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
