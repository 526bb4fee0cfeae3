#!/usr/bin/env python3
"""Truncated-domain eigenvalues with a zoom panel near the first real ray.

Top panel: full window.  Bottom panel: the zoom rectangle from the spec,
showing how truncated eigenvalues line up below the essential spectrum.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import matplotlib.pyplot as plt

from _common import add_spectrum_legend, draw_spectrum_panel, read_csv, resolve, run

ROOTS_HEADER = ["re", "im", "mult", "c", "n2", "n3", "sign", "residual"]


def render(spec):
    eig_rows = read_csv(resolve(spec, spec["eigs_csv"]), ROOTS_HEADER)
    boundary_rows = read_csv(resolve(spec, spec["boundary_csv"]), ["re", "im", "branch"])
    with open(resolve(spec, spec["essential_json"])) as fh:
        essential = json.load(fh)
    fig, (ax_full, ax_zoom) = plt.subplots(
        2, 1, figsize=(7.5, 6.5), height_ratios=[2, 1]
    )
    draw_spectrum_panel(ax_full, spec, spec["window"], eig_rows, essential, boundary_rows)
    ax_full.set_title(f"truncated domain, X = {spec['X']:g}", fontsize=10)
    add_spectrum_legend(ax_full)
    draw_spectrum_panel(ax_zoom, spec, spec["zoom"], eig_rows, essential, boundary_rows)
    ax_zoom.set_title("zoom", fontsize=9)
    fig.tight_layout()
    return fig


def main(argv=None):
    return run(argv, "fig4", render)


if __name__ == "__main__":
    sys.exit(main())
