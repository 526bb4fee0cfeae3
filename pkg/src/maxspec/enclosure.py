"""Non-convex spectral enclosure, gap/threshold corollaries, boundary curves."""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass

from .errors import EmptyRange


@dataclass(frozen=True)
class MaterialBounds:
    """Scalar coefficient bounds feeding the enclosure and resolvent bounds."""

    eps_min: float
    eps_max: float
    mu_min: float
    mu_max: float
    sigma_min: float
    sigma_max: float
    lambda_min: float = 0.0
    lambda_e_min: float = 0.0

    def __post_init__(self):
        if not (0 < self.eps_min <= self.eps_max):
            raise ValueError("need 0 < eps_min <= eps_max")
        if not (0 < self.mu_min <= self.mu_max):
            raise ValueError("need 0 < mu_min <= mu_max")
        if not (0 <= self.sigma_min <= self.sigma_max):
            raise ValueError("need 0 <= sigma_min <= sigma_max")
        if not (0 <= self.lambda_min <= self.lambda_e_min or self.lambda_e_min == 0):
            raise ValueError("need lambda_min <= lambda_e_min")

    @property
    def q(self) -> float:
        """sigma_max / eps_min, the width scale of the dissipative strip."""
        return self.sigma_max / self.eps_min


class ThresholdCase(enum.Enum):
    BELOW_I = "below_i"
    CASE_I = "case_i"
    CASE_II = "case_ii"
    CASE_III = "case_iii"


def enclosure_contains(omega: complex, b: MaterialBounds, boundary_tol: float = 1e-8) -> bool:
    """Membership in the closed spectral enclosure for the Maxwell pencil.

    The enclosure is the imaginary segment i[-sigma_max/eps_min, 0] together
    with the non-imaginary points in the horizontal strip
    Im in [-sigma_max/(2 eps_min), -sigma_min/(2 eps_max)] satisfying
    (Re w)^2 - 3 (Im w)^2 + 2 q |Im w| >= lambda_min/(eps_max mu_max).
    """
    q = b.q
    x, y = omega.real, omega.imag
    if abs(x) <= boundary_tol and -q - boundary_tol <= y <= boundary_tol:
        return True
    if x == 0.0:
        return False
    lo = -0.5 * q
    hi = -0.5 * b.sigma_min / b.eps_max
    if not (lo - boundary_tol <= y <= hi + boundary_tol):
        return False
    lhs = x * x - 3.0 * y * y + 2.0 * q * abs(y)
    return lhs >= b.lambda_min / (b.eps_max * b.mu_max) - boundary_tol


def spectral_free_gap(b: MaterialBounds) -> float:
    """Radius sqrt(lambda_min/(eps_max mu_max)) of the guaranteed real gap at 0."""
    return math.sqrt(b.lambda_min / (b.eps_max * b.mu_max))


def threshold_case(b: MaterialBounds) -> ThresholdCase:
    """Which accumulation-exclusion regime the bounds fall in."""
    base = b.sigma_max**2 * b.eps_max * b.mu_max / b.eps_min**2
    if b.lambda_min > base / 3.0:
        return ThresholdCase.CASE_III
    if b.lambda_min > base / 4.0:
        return ThresholdCase.CASE_II
    if b.lambda_min > 0.0:
        return ThresholdCase.CASE_I
    return ThresholdCase.BELOW_I


def enclosure_constant(
    omega: complex,
    eps_inf: float,
    sigma_inf: float,
    mu_max: float,
    lambda_min: float,
    boundary_tol: float = 1e-8,
) -> bool:
    """Enclosure for constant-multiple-of-identity coefficients.

    Away from the imaginary axis the spectrum collapses onto the line
    Im = -sigma_inf/(2 eps_inf) with (Re w)^2 + sigma_inf^2/(4 eps_inf^2)
    >= lambda_min/(eps_inf mu_max).
    """
    if eps_inf <= 0 or sigma_inf < 0:
        raise ValueError("need eps_inf > 0 and sigma_inf >= 0")
    x, y = omega.real, omega.imag
    q = sigma_inf / eps_inf
    if abs(x) <= boundary_tol and -q - boundary_tol <= y <= boundary_tol:
        return True
    if x == 0.0:
        return False
    if abs(y + 0.5 * q) > boundary_tol:
        return False
    return x * x + 0.25 * q * q >= lambda_min / (eps_inf * mu_max) - boundary_tol


def enclosure_boundary_samples(
    b: MaterialBounds,
    im_range: tuple[float, float],
    n_samples: int,
) -> list[tuple[float, float, int]]:
    """Sample the boundary curve of the strip part of the enclosure.

    For each y in the intersection of im_range with the admissible strip, the
    curve is |x| = sqrt(lambda_min/(eps_max mu_max) + 3 y^2 - 2 q |y|) where
    the radicand is nonnegative; both branches are emitted as
    (x, y, +1) / (-x, y, -1) pairs.
    """
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2")
    q = b.q
    lo = max(im_range[0], -0.5 * q)
    hi = min(im_range[1], -0.5 * b.sigma_min / b.eps_max)
    if lo > hi:
        raise EmptyRange("im_range does not intersect the enclosure strip")
    out: list[tuple[float, float, int]] = []
    lam = b.lambda_min / (b.eps_max * b.mu_max)
    for i in range(n_samples):
        y = lo + (hi - lo) * i / (n_samples - 1)
        rad = lam + 3.0 * y * y - 2.0 * q * abs(y)
        if rad < 0.0:
            continue
        x = math.sqrt(rad)
        out.append((x, y, 1))
        out.append((-x, y, -1))
    return out


def write_boundary_csv(path: str, samples: list[tuple[float, float, int]]) -> None:
    """Export boundary samples as CSV with header ``re,im,branch``."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["re", "im", "branch"])
        for x, y, branch in samples:
            w.writerow([f"{x:.12g}", f"{y:.12g}", branch])
