"""Figure rendering: PNG/SVG companions to the text reports.

Kept separate from the text renderers so matplotlib stays an optional
import path for library users.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .paths import LatticePath, PathSystemConfig  # noqa: E402


def save_config_figure(config: PathSystemConfig,
                       family: list[LatticePath] | None = None,
                       out: str = "paths.png") -> str:
    """Draw a path-system configuration (and optionally one family)."""
    pts = list(config.starts) + list(config.ends)
    for p in family or []:
        pts.extend(p.points())
    xmin = min(p.x for p in pts) - 1
    xmax = max(p.x for p in pts) + 1
    ymin = min(p.y for p in pts) - 1
    ymax = max(p.y for p in pts) + 1

    fig, ax = plt.subplots(figsize=(7, 5))
    gx = [x for x in range(xmin, xmax + 1) for _ in range(ymin, ymax + 1)]
    gy = [y for _ in range(xmin, xmax + 1) for y in range(ymin, ymax + 1)]
    ax.scatter(gx, gy, s=4, color="0.8", zorder=1)

    if config.mu is not None:
        ax.plot([xmin, xmax], [xmin / config.mu, xmax / config.mu],
                color="tab:red", lw=1, ls="--", zorder=2,
                label=f"x = {config.mu}y")

    for i, p in enumerate(family or []):
        xs = [q.x for q in p.points()]
        ys = [q.y for q in p.points()]
        ax.plot(xs, ys, lw=2, zorder=3, label=f"P{i}")

    ax.scatter([p.x for p in config.starts], [p.y for p in config.starts],
               marker="o", s=60, color="tab:blue", zorder=4)
    ax.scatter([p.x for p in config.ends], [p.y for p in config.ends],
               marker="s", s=60, color="tab:green", zorder=4)
    for i, p in enumerate(config.starts):
        ax.annotate(f"S{i}", (p.x, p.y), textcoords="offset points",
                    xytext=(-12, 4), fontsize=8)
    for i, p in enumerate(config.ends):
        ax.annotate(f"E{i}", (p.x, p.y), textcoords="offset points",
                    xytext=(4, 4), fontsize=8)

    ax.axhline(0, color="0.6", lw=0.8, zorder=1)
    ax.axvline(0, color="0.6", lw=0.8, zorder=1)
    ax.set_xlim(xmin - 0.5, xmax + 0.5)
    ax.set_ylim(ymin - 0.5, ymax + 0.5)
    ax.set_aspect("equal")
    ax.set_title(f"path system ({config.source})")
    if config.mu is not None or family:
        ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return str(out)


def save_bench_figure(rows, out: str = "bench.png") -> str:
    """Median runtime per engine as a function of the matrix order."""
    engines = sorted({r.engine for r in rows})
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for engine in engines:
        pts = sorted((r.n, r.median_ms) for r in rows if r.engine == engine)
        ax.plot([p[0] for p in pts], [p[1] for p in pts],
                marker="o", label=engine)
    ax.set_xlabel("matrix order n")
    ax.set_ylabel("median time (ms)")
    ax.set_yscale("log")
    families = sorted({r.family for r in rows})
    ax.set_title("determinant engines: " + ", ".join(families))
    ax.grid(True, which="both", lw=0.3, alpha=0.5)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return str(out)
