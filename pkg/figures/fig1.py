#!/usr/bin/env python3
"""Three stacked panels of the spectral enclosure, one per threshold case.

Each panel shades the enclosure (yellow), draws the dashed boundary curve
from the per-case CSV, and marks the imaginary segment.  Everything plotted
comes straight from the figure-data bundle.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import matplotlib.pyplot as plt

from _common import FigureInputError, floats, read_csv, resolve, run


def render(spec):
    panels = spec.get("panels")
    if not panels or len(panels) != 3:
        raise FigureInputError("fig1 spec needs exactly three panels")
    window = spec["window"]
    fig, axes = plt.subplots(3, 1, figsize=(6.5, 8.5), sharex=True)
    for ax, panel in zip(axes, panels):
        rows = read_csv(resolve(spec, panel["boundary_csv"]), ["re", "im", "branch"])
        strip_lo, strip_hi = panel["strip"]
        xmax = window["re"][1]
        for branch, edge in ((1, xmax), (-1, -xmax)):
            pts = sorted(
                (float(r[1]), float(r[0])) for r in rows if int(r[2]) == branch
            )
            if not pts:
                continue
            ims = [p[0] for p in pts]
            res = [p[1] for p in pts]
            # enclosure: from the curve outward to the window edge
            ax.fill_betweenx(ims, res, [edge] * len(res), color="gold", alpha=0.6, lw=0)
            ax.plot(res, ims, "k--", lw=1.2)
            # below the deepest curve sample the strip is filled wall to wall
            if min(ims) > strip_lo:
                ax.fill_betweenx(
                    [strip_lo, min(ims)],
                    [0.0, 0.0] if branch == 1 else [-xmax, -xmax],
                    [xmax, xmax] if branch == 1 else [0.0, 0.0],
                    color="gold",
                    alpha=0.6,
                    lw=0,
                )
        ax.plot([0.0, 0.0], [-panel["q"], 0.0], color="goldenrod", lw=3)
        ax.axhline(0.0, color="gray", lw=0.5)
        ax.axvline(0.0, color="gray", lw=0.5)
        ax.set_xlim(window["re"])
        ax.set_ylim(window["im"])
        ax.set_ylabel("Im $\\omega$")
        ax.set_title(
            f"case {panel['case']}  (gap radius {panel['gap_radius']:.3f})", fontsize=9
        )
    axes[-1].set_xlabel("Re $\\omega$")
    fig.tight_layout()
    return fig


def main(argv=None):
    return run(argv, "fig1", render)


if __name__ == "__main__":
    sys.exit(main())
