#!/usr/bin/env python3
"""Spectrum of the half-cylinder problem: eigenvalues, essential set, enclosure.

Blue scatter for the eigenvalue CSV, red for the essential spectrum, yellow
for the enclosure region, matching the caption color coding.
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
    fig, ax = plt.subplots(figsize=(7.5, 3.8))
    draw_spectrum_panel(ax, spec, spec["window"], eig_rows, essential, boundary_rows)
    ax.set_title("spectrum on the semi-infinite cylinder", fontsize=10)
    add_spectrum_legend(ax)
    fig.tight_layout()
    return fig


def main(argv=None):
    return run(argv, "fig3", render)


if __name__ == "__main__":
    sys.exit(main())
