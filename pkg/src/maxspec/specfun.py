"""Branch-stable special functions and per-mode dispersion relations.

All functions accept either Python/numpy complex scalars or numpy arrays of
complex values and are vectorised in the obvious way.  The spectral parameter
is a dimensionless angular frequency ``omega``; ``c`` denotes the transverse
mode constant pi^2 n2^2/L2^2 + pi^2 n3^2/L3^2 of the rectangular cross
section.
"""

from __future__ import annotations

import numpy as np

from .errors import PoleProximity

# Switch to the Taylor series of z*coth(z) in s = z^2 below this |s|; the
# series truncation error at the switch radius is ~1e-17, and the direct
# w/tanh(w) formula has no cancellation for |z| >= 0.25.
S_SWITCH = 0.0625

# Taylor coefficients of z*coth(z) in s = z^2: 4^n B_{2n} / (2n)!
_SERIES = (
    1.0,
    1.0 / 3.0,
    -1.0 / 45.0,
    2.0 / 945.0,
    -1.0 / 4725.0,
    2.0 / 93555.0,
    -1382.0 / 638512875.0,
    4.0 / 18243225.0,
)

# Exclusion radius around the poles s = -(k pi)^2 in the s-plane.
POLE_EXCLUSION = 1e-8


def _asarray(z) -> tuple[np.ndarray, bool]:
    arr = np.asarray(z, dtype=complex)
    scalar = arr.ndim == 0
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite value passed to specfun operation")
    return arr, scalar


def _ret(arr: np.ndarray, scalar: bool):
    return complex(arr[()]) if scalar else arr


def sqrt_nonneg_re(z):
    """Square root branch with Re >= 0; ties (Re = 0) resolved to Im >= 0."""
    arr, scalar = _asarray(z)
    w = np.sqrt(arr)
    # numpy honours the sign of a negative zero imaginary part, which would
    # yield -i*sqrt(|z|) on the negative real axis; fold that back.
    w = np.where((w.real == 0.0) & (w.imag < 0.0), -w, w)
    return _ret(w, scalar)


def _check_poles(s: np.ndarray) -> None:
    mag = np.abs(s)
    k0 = np.floor(np.sqrt(mag) / np.pi).astype(int)
    for dk in (0, 1, 2):
        k = np.maximum(k0 + dk, 1)
        if np.any(np.abs(s + (k * np.pi) ** 2) < POLE_EXCLUSION):
            raise PoleProximity(
                "argument within %g of a pole of z*coth(z)" % POLE_EXCLUSION
            )


def zcothz_of_square(s):
    """Analytic continuation g(s) = sqrt(s)*coth(sqrt(s)) of z*coth(z), z^2 = s.

    g is analytic in s away from the simple poles s = -(k pi)^2, k >= 1;
    the square-root branch drops out because z*coth(z) is even.
    """
    arr, scalar = _asarray(s)
    _check_poles(arr)
    out = np.empty_like(arr)
    small = np.abs(arr) < S_SWITCH
    if np.any(small):
        ssm = arr[small]
        acc = np.full_like(ssm, _SERIES[-1])
        for coeff in _SERIES[-2::-1]:
            acc = acc * ssm + coeff
        out[small] = acc
    if np.any(~small):
        w = np.sqrt(arr[~small])
        out[~small] = w / np.tanh(w)
    return _ret(out, scalar)


def scaled_coth_of_square(s, length: float):
    """sqrt(s)*coth(sqrt(s)*length), analytic in s; equals g(s*length^2)/length."""
    if length <= 0.0:
        raise ValueError("length must be positive")
    arr, scalar = _asarray(s)
    out = zcothz_of_square(arr * length**2) / length
    return _ret(np.asarray(out, dtype=complex), scalar)


def alpha_sq(omega, c: float):
    """c - omega*(omega + i), the square of the slab-side decay rate."""
    arr, scalar = _asarray(omega)
    return _ret(c - arr * (arr + 1j), scalar)


def beta_sq(omega, c: float):
    """c - omega^2, the square of the outer decay rate."""
    arr, scalar = _asarray(omega)
    return _ret(c - arr * arr, scalar)


def alpha_sq_permittivity(omega, c: float, delta: float):
    """c - (1+delta)*omega^2, slab-side rate square for the permittivity slab."""
    arr, scalar = _asarray(omega)
    return _ret(c - (1.0 + delta) * arr * arr, scalar)


def dispersion_truncated(omega, c: float, X: float):
    """Truncated-domain dispersion: g(alpha^2) + sqrt(b)*coth(sqrt(b)*(X-1)).

    Meromorphic in omega; its zeros are the truncated-cylinder eigenvalues
    contributed by mode constant ``c``.
    """
    if X <= 1.0:
        raise ValueError("truncation length X must exceed 1 (slab is (0,1))")
    arr, scalar = _asarray(omega)
    val = zcothz_of_square(alpha_sq(arr, c)) + scaled_coth_of_square(
        beta_sq(arr, c), X - 1.0
    )
    return _ret(np.asarray(val, dtype=complex), scalar)


def dispersion_true(omega, c: float, sign: int):
    """One sign branch g(alpha^2) + sign*sqrt(beta^2) of the half-cylinder relation."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    arr, scalar = _asarray(omega)
    val = zcothz_of_square(alpha_sq(arr, c)) + sign * sqrt_nonneg_re(beta_sq(arr, c))
    return _ret(np.asarray(val, dtype=complex), scalar)


def dispersion_true_sq(omega, c: float):
    """Branch-free combination g(alpha^2)^2 - beta^2.

    Meromorphic in omega (double poles at the coth poles); its zero set is the
    union of the zeros of both sign branches of the half-cylinder relation.
    """
    arr, scalar = _asarray(omega)
    g = zcothz_of_square(alpha_sq(arr, c))
    val = g * g - beta_sq(arr, c)
    return _ret(np.asarray(val, dtype=complex), scalar)


def dispersion_selfadjoint_sq(omega, c: float, delta: float):
    """Branch-free dispersion g(c-(1+delta)*omega^2)^2 - (c-omega^2)."""
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    arr, scalar = _asarray(omega)
    g = zcothz_of_square(alpha_sq_permittivity(arr, c, delta))
    val = g * g - beta_sq(arr, c)
    return _ret(np.asarray(val, dtype=complex), scalar)
