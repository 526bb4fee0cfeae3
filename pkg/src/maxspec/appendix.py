"""Concrete checks behind the essential-spectrum computation.

Three independent verifications: the sign pattern of the interface
Dirichlet-to-Neumann combination at omega = -i*nu, the decay rate of the
Weyl singular sequence at omega = -i/2, and the 6x6 Fourier-symbol
determinant identity for the zero-conductivity pencil.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import QuadratureFailure


@dataclass(frozen=True)
class DtNEntry:
    """Diagonal entry kappa*((1-nu)*coth(kappa) - nu) of the interface operator."""

    kappa: float
    value: float


def _coth(x: float) -> float:
    return 1.0 / math.tanh(x)


def _coth_minus_one(x: float) -> float:
    # coth(x) - 1 = 2/(e^{2x} - 1), stable for large x
    return 2.0 / math.expm1(2.0 * x)


def _transverse_kappas(L2: float, L3: float, n_modes: int) -> list[float]:
    """First n_modes transverse frequencies kappa (n2, n3 >= 1), ascending."""
    cap = math.pi * math.hypot(1.0 / L2, 1.0 / L3) * max(2.0, math.sqrt(n_modes))
    while True:
        vals: list[float] = []
        n2 = 1
        while math.pi * n2 / L2 < cap:
            n3 = 1
            while True:
                kappa = math.hypot(math.pi * n2 / L2, math.pi * n3 / L3)
                if kappa > cap:
                    break
                vals.append(kappa)
                n3 += 1
            n2 += 1
        if len(vals) >= n_modes:
            vals.sort()
            return vals[:n_modes]
        cap *= 1.5


def dtn_entries(nu: float, L2: float, L3: float, n_modes: int) -> list[DtNEntry]:
    """Interface DtN diagonal at omega = -i*nu over the first n_modes modes."""
    if not 0.0 < nu < 1.0:
        raise ValueError("nu must lie in (0, 1)")
    out = []
    for kappa in _transverse_kappas(L2, L3, n_modes):
        out.append(DtNEntry(kappa, kappa * ((1.0 - nu) * _coth(kappa) - nu)))
    return out


class SignPattern(enum.Enum):
    ALL_POSITIVE = "all_positive"
    ONE_SIGN_CHANGE = "one_sign_change"
    OTHER = "other"


def dtn_sign_pattern(entries: list[DtNEntry]) -> SignPattern:
    """Classify the sign sequence of the DtN values along increasing kappa.

    The diagonal family kappa*((1-nu)*coth(kappa) - nu) extends continuously
    to kappa -> 0 with the positive limit 1 - nu, so the sequence is anchored
    by a positive sign below the first sampled kappa; an all-negative sample
    therefore still witnesses exactly one sign change.
    """
    signs = [1 if e.value > 0 else (-1 if e.value < 0 else 0) for e in entries]
    if all(s > 0 for s in signs):
        return SignPattern.ALL_POSITIVE
    anchored = [1] + signs
    changes = sum(1 for a, b in zip(anchored, anchored[1:]) if a != b)
    if changes == 1 and anchored[-1] < 0:
        return SignPattern.ONE_SIGN_CHANGE
    return SignPattern.OTHER


def weyl_decay_ratio(kappa: float, L2: float = 1.0, L3: float = 2.0) -> float:
    """Decay ratio of the singular sequence at omega = -i/2 for one kappa.

    Numerator: (1/kappa_1) * L2-norm over x1 in (0,1) of the explicit profile
    2*kappa^2*(coth(kappa)-1)*cosh(kappa*x1)/sinh(kappa) (transverse factor
    normalized).  Denominator: the closed-form gradient norm of the tail
    u = exp(-kappa*(x1-1)) on x1 > 1, which equals sqrt(kappa).
    """
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    kappa1 = math.hypot(math.pi / L2, math.pi / L3)
    amp = 2.0 * kappa**2 * _coth_minus_one(kappa)

    def profile_sq(x: float) -> float:
        # (cosh(kappa x)/sinh(kappa))^2 without overflow
        r = (math.exp(kappa * (x - 1.0)) + math.exp(-kappa * (x + 1.0))) / (
            1.0 - math.exp(-2.0 * kappa)
        )
        return r * r

    val, err = quad(profile_sq, 0.0, 1.0, epsrel=1e-10, epsabs=0.0, limit=200)
    if val <= 0.0 or err > 1e-9 * val:
        raise QuadratureFailure("adaptive quadrature missed rel 1e-10 target")
    laplacian_norm = amp * math.sqrt(val)
    grad_lower = math.sqrt(kappa)
    return laplacian_norm / (kappa1 * grad_lower)


def fourier_symbol_matrix(
    omega: complex, xi: float, n2: int, n3: int, L2: float, L3: float
) -> np.ndarray:
    """The explicit 6x6 Fourier symbol of the zero-conductivity pencil."""
    a = math.pi * n2 / L2
    b = math.pi * n3 / L3
    iw = 1j * omega
    # rows 1-3: -i*omega*E_hat + curl H_hat, rows 4-6: curl E_hat + i*omega*H_hat,
    # in the mixed sin/cos Fourier basis that diagonalizes curl blockwise
    return np.array(
        [
            [-iw, 0, 0, 0, b, -a],
            [0, -iw, 0, -b, 0, xi],
            [0, 0, -iw, a, -xi, 0],
            [0, -b, a, iw, 0, 0],
            [b, 0, -xi, 0, iw, 0],
            [-a, xi, 0, 0, 0, iw],
        ],
        dtype=complex,
    )


def _det_lu(m: np.ndarray) -> complex:
    """Determinant by Gaussian elimination with partial pivoting.

    The matrix is normalized by its largest entry first so that denormal
    inputs do not drive intermediate pivots into underflow.
    """
    scale = float(np.max(np.abs(m)))
    # |det| <= n! * scale^n, far below underflow for tiny scale; and complex
    # division by a denormal scale would overflow
    if scale < 1e-50:
        return 0j
    if not math.isfinite(scale):
        return complex("nan")
    a = m.astype(complex, copy=True) / scale
    n = a.shape[0]
    det = complex(scale) ** n
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        # pivot floor: dividing by a near-denormal pivot overflows, and the
        # resulting determinant is zero to double precision anyway
        if abs(a[p, k]) < 1e-100:
            return 0j
        if p != k:
            a[[k, p]] = a[[p, k]]
            det = -det
        det *= a[k, k]
        a[k + 1 :, k:] -= np.outer(a[k + 1 :, k] / a[k, k], a[k, k:])
    return complex(det)


def fourier_symbol_det(
    omega: complex, xi: float, n2: int, n3: int, L2: float, L3: float
) -> tuple[complex, complex]:
    """(numeric, closed_form) determinant of the 6x6 Fourier symbol.

    numeric is computed by LU elimination with partial pivoting and serves as
    the oracle for closed_form = omega^2 * (xi^2 + c - omega^2)^2.
    """
    numeric = _det_lu(fourier_symbol_matrix(omega, xi, n2, n3, L2, L3))
    c = (math.pi * n2 / L2) ** 2 + (math.pi * n3 / L3) ** 2
    closed = omega**2 * (xi**2 + c - omega**2) ** 2
    return numeric, complex(closed)
