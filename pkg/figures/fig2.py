#!/usr/bin/env python3
"""Resolvent-bound level curves over the lower half-plane window.

The grid CSV carries one bound per point; empty fields mean no bound is
available there and render as blank.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import matplotlib.pyplot as plt
import numpy as np

from _common import FigureInputError, read_csv, resolve, run


def render(spec):
    rows = read_csv(resolve(spec, spec["grid_csv"]), ["re", "im", "bound"])
    xs = sorted({float(r[0]) for r in rows})
    ys = sorted({float(r[1]) for r in rows})
    if len(rows) != len(xs) * len(ys):
        raise FigureInputError("grid CSV is not a full rectangular grid")
    ix = {v: i for i, v in enumerate(xs)}
    iy = {v: j for j, v in enumerate(ys)}
    vals = np.full((len(ys), len(xs)), np.nan)
    for r in rows:
        vals[iy[float(r[1])], ix[float(r[0])]] = float(r[2]) if r[2] else np.nan

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    mesh = ax.pcolormesh(xs, ys, vals, cmap="viridis", shading="nearest")
    fig.colorbar(mesh, ax=ax, label="resolvent bound")
    cs = ax.contour(xs, ys, vals, levels=spec["levels"], colors="white", linewidths=0.9)
    ax.clabel(cs, fontsize=7, fmt="%g")
    ax.set_xlim(spec["window"]["re"])
    ax.set_ylim(spec["window"]["im"])
    ax.set_xlabel("Re $\\omega$")
    ax.set_ylabel("Im $\\omega$")
    ax.set_title("resolvent-norm upper bound", fontsize=10)
    fig.tight_layout()
    return fig


def main(argv=None):
    return run(argv, "fig2", render)


if __name__ == "__main__":
    sys.exit(main())
