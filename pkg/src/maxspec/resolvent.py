"""Resolvent-norm upper bounds in the lower half plane and level-curve grids."""

from __future__ import annotations

import csv

import numpy as np

from .enclosure import MaterialBounds
from .rootfind import SearchRect


def resolvent_bound(omega: complex, b: MaterialBounds) -> float | None:
    """Upper bound for the resolvent norm at omega, or None where not covered.

    With q = sigma_max/eps_min and m = min(eps_min, mu_min):
    below the half-strip line Im < -q/2 (and Re != 0) the bound
    (1/m) * (1/(|Im| - q/2)) * (1 + (q/2)^2/Re^2) applies; below Im < -q the
    numerical-range bound (1/m) * 1/(|Im| - q) also applies.  The minimum of
    the available candidates is returned.
    """
    q = b.q
    m = min(b.eps_min, b.mu_min)
    x, y = omega.real, omega.imag
    candidates = []
    if x != 0.0 and y < -0.5 * q:
        # t*t rather than **2 or (q/2)^2/x^2: x^2 can underflow and float
        # exponentiation raises on overflow where multiplication yields inf
        t = 0.5 * q / x
        candidates.append((1.0 / m) / (abs(y) - 0.5 * q) * (1.0 + t * t))
    if y < -q:
        candidates.append((1.0 / m) / (abs(y) - q))
    return min(candidates) if candidates else None


def resolvent_levelgrid(
    b: MaterialBounds,
    window: SearchRect,
    nx: int,
    ny: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate resolvent_bound on a regular nx-by-ny grid over window.

    Returns (xs, ys, vals) with vals[j, i] the bound at (xs[i], ys[j]); grid
    points without a guaranteed bound are NaN.
    """
    if nx < 2 or ny < 2:
        raise ValueError("nx and ny must be >= 2")
    xs = np.linspace(window.re_lo, window.re_hi, nx)
    ys = np.linspace(window.im_lo, window.im_hi, ny)
    vals = np.full((ny, nx), np.nan)
    for j, y in enumerate(ys):
        for i, x in enumerate(xs):
            v = resolvent_bound(complex(x, y), b)
            if v is not None:
                vals[j, i] = v
    return xs, ys, vals


def write_levelgrid_csv(path: str, xs: np.ndarray, ys: np.ndarray, vals: np.ndarray) -> None:
    """Export a level grid as CSV ``re,im,bound`` with empty field for absent."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["re", "im", "bound"])
        for j, y in enumerate(ys):
            for i, x in enumerate(xs):
                v = vals[j, i]
                w.writerow(
                    [f"{x:.12g}", f"{y:.12g}", "" if np.isnan(v) else f"{v:.12g}"]
                )
