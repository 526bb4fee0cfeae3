"""Shared plumbing for the figure scripts: spec loading, CSV parsing, saving.

The scripts draw only what the data files contain; every number comes from
the CSV/JSON bundles, never from formulas evaluated here.
"""

import csv
import json
import os
import sys

import matplotlib

matplotlib.use("Agg")

SCHEMA_VERSION = 1


class FigureInputError(Exception):
    """Missing or malformed figure-data input."""


def load_spec(config_path: str, figure: str) -> dict:
    try:
        with open(config_path) as fh:
            spec = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FigureInputError(f"cannot read config {config_path}: {exc}") from exc
    if spec.get("schema") != SCHEMA_VERSION:
        raise FigureInputError(
            f"config {config_path}: expected \"schema\": {SCHEMA_VERSION}"
        )
    if spec.get("figure") != figure:
        raise FigureInputError(
            f"config {config_path}: figure is {spec.get('figure')!r}, expected {figure!r}"
        )
    spec["_base"] = os.path.dirname(os.path.abspath(config_path))
    return spec


def resolve(spec: dict, path: str) -> str:
    """Input path as written, else relative to the config file's directory."""
    if os.path.exists(path):
        return path
    cand = os.path.join(spec["_base"], os.path.basename(path))
    if os.path.exists(cand):
        return cand
    raise FigureInputError(f"input file not found: {path}")


def read_csv(path: str, header: list[str]) -> list[list[str]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != header:
        raise FigureInputError(f"{path}: expected header {','.join(header)}")
    return rows[1:]


def floats(rows: list[list[str]], col: int) -> list[float]:
    return [float(r[col]) for r in rows]


def save(fig, spec: dict) -> str:
    out = spec["output"]
    os.makedirs(os.path.dirname(os.path.abspath(out)), exist_ok=True)
    fig.savefig(out, dpi=150, bbox_inches="tight")
    return out


def draw_spectrum_panel(ax, spec, window, eig_rows, essential, boundary_rows):
    """Eigenvalue scatter + essential spectrum + enclosure, caption colors.

    Returns the scatter artist so callers can attach structural assertions.
    """
    xmin, xmax = window["re"]
    # enclosure (yellow): dashed boundary curves with outward fill per branch
    for branch, edge in ((1, xmax), (-1, xmin)):
        pts = sorted(
            (float(r[1]), float(r[0])) for r in boundary_rows if int(r[2]) == branch
        )
        if not pts:
            continue
        ims = [p[0] for p in pts]
        res = [p[1] for p in pts]
        ax.fill_betweenx(ims, res, [edge] * len(res), color="gold", alpha=0.5, lw=0)
        ax.plot(res, ims, "k--", lw=1.0)
    # essential spectrum (red): real rays clipped to the window, then points
    for lo, hi in essential.get("real", []):
        a = xmin if lo == "-inf" else max(float(lo), xmin)
        b = xmax if hi == "inf" else min(float(hi), xmax)
        if a < b:
            ax.plot([a, b], [0.0, 0.0], color="red", lw=2.0, zorder=3)
    for lo, hi in essential.get("imag", []):
        ax.plot([0.0, 0.0], [float(lo), float(hi)], color="red", lw=2.0, zorder=3)
    if essential.get("points"):
        ax.plot(
            [p[0] for p in essential["points"]],
            [p[1] for p in essential["points"]],
            "o",
            color="red",
            ms=4,
            zorder=4,
        )
    # eigenvalues (blue)
    scatter = ax.scatter(
        [float(r[0]) for r in eig_rows],
        [float(r[1]) for r in eig_rows],
        s=12,
        color="tab:blue",
        zorder=5,
        label="eigenvalues",
    )
    ax.set_xlim(window["re"])
    ax.set_ylim(window["im"])
    ax.set_xlabel("Re $\\omega$")
    ax.set_ylabel("Im $\\omega$")
    return scatter


def add_spectrum_legend(ax):
    """Legend with the caption colors: enclosure, essential set, eigenvalues."""
    from matplotlib.lines import Line2D
    from matplotlib.patches import Patch

    handles = [
        Patch(facecolor="gold", alpha=0.5, label="enclosure"),
        Line2D([], [], color="red", lw=2.0, label="essential spectrum"),
        Line2D(
            [], [], marker="o", ls="", color="tab:blue", ms=5, label="eigenvalues"
        ),
    ]
    ax.legend(handles=handles, loc="lower right", fontsize=8, framealpha=0.9)


def run(argv, figure: str, render):
    """argparse + render + save wrapper shared by every script."""
    import argparse

    ap = argparse.ArgumentParser(description=f"render {figure} from figure-data outputs")
    ap.add_argument("--config", required=True, help="figure spec JSON")
    args = ap.parse_args(argv)
    try:
        spec = load_spec(args.config, figure)
        fig = render(spec)
    except FigureInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = save(fig, spec)
    print(out)
    return 0
