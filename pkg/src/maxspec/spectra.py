"""Exact set representations of waveguide spectra: rays, segments, points.

Interval endpoints are stored symbolically as coeff * pi^p * sqrt(arg) with
rational coeff and arg, so that builders can report endpoints like pi/L
exactly rather than as rounded floats.  Infinite endpoints use the float
infinities as sentinels.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

MEMBERSHIP_TOL = 1e-9


@dataclass(frozen=True)
class SymbolicReal:
    """coeff * pi^pi_pow * sqrt(sqrt_arg), evaluated lazily."""

    coeff: Fraction
    pi_pow: int = 0
    sqrt_arg: Fraction = Fraction(1)

    def value(self) -> float:
        return float(self.coeff) * math.pi**self.pi_pow * math.sqrt(float(self.sqrt_arg))

    def __neg__(self) -> "SymbolicReal":
        return SymbolicReal(-self.coeff, self.pi_pow, self.sqrt_arg)

    def __float__(self) -> float:
        return self.value()

    @staticmethod
    def of(x) -> "SymbolicReal":
        return SymbolicReal(Fraction(x))


Endpoint = Union[SymbolicReal, float]  # float only for +-inf


def endpoint_value(e: Endpoint) -> float:
    return float(e)


Interval = tuple[Endpoint, Endpoint]


def _norm_intervals(intervals: list[Interval]) -> list[Interval]:
    """Sort by value and merge overlapping closed intervals (idempotent)."""
    ivs = sorted(intervals, key=lambda iv: (endpoint_value(iv[0]), endpoint_value(iv[1])))
    out: list[Interval] = []
    for lo, hi in ivs:
        if endpoint_value(lo) > endpoint_value(hi):
            raise ValueError("interval endpoints out of order")
        if out and endpoint_value(lo) <= endpoint_value(out[-1][1]):
            plo, phi = out[-1]
            if endpoint_value(hi) > endpoint_value(phi):
                out[-1] = (plo, hi)
        else:
            out.append((lo, hi))
    return out


def _interval_distance(lo: Endpoint, hi: Endpoint, t: float) -> float:
    a, b = endpoint_value(lo), endpoint_value(hi)
    if t < a:
        return a - t
    if t > b:
        return t - b
    return 0.0


@dataclass(frozen=True)
class SpectrumSet:
    """Finite union of real intervals, imaginary-axis intervals and points.

    ``real_parts`` live on the real axis (endpoints are real coordinates),
    ``imag_parts`` on the imaginary axis (endpoints are imaginary
    coordinates), ``points`` are arbitrary complex numbers.
    """

    real_parts: tuple[Interval, ...] = ()
    imag_parts: tuple[Interval, ...] = ()
    points: tuple[complex, ...] = ()

    def normalized(self) -> "SpectrumSet":
        return SpectrumSet(
            tuple(_norm_intervals(list(self.real_parts))),
            tuple(_norm_intervals(list(self.imag_parts))),
            tuple(sorted(set(self.points), key=lambda p: (p.real, p.imag))),
        )

    def contains(self, omega: complex, tol: float = MEMBERSHIP_TOL) -> bool:
        return self.distance(omega) <= tol

    def distance(self, omega: complex) -> float:
        """Euclidean distance from omega to the set (inf for the empty set)."""
        best = math.inf
        for lo, hi in self.real_parts:
            d = math.hypot(_interval_distance(lo, hi, omega.real), omega.imag)
            best = min(best, d)
        for lo, hi in self.imag_parts:
            d = math.hypot(omega.real, _interval_distance(lo, hi, omega.imag))
            best = min(best, d)
        for p in self.points:
            best = min(best, abs(omega - p))
        return best

    def mirrored(self) -> "SpectrumSet":
        """Image under omega -> -conj(omega) (left-right mirror)."""
        return SpectrumSet(
            tuple((-hi, -lo) for lo, hi in self.real_parts),
            self.imag_parts,
            tuple(complex(-p.real, p.imag) for p in self.points),
        ).normalized()

    def json_dict(self) -> dict:
        def enc(e: Endpoint):
            v = endpoint_value(e)
            if v == math.inf:
                return "inf"
            if v == -math.inf:
                return "-inf"
            return v

        return {
            "real": [[enc(lo), enc(hi)] for lo, hi in self.real_parts],
            "imag": [[enc(lo), enc(hi)] for lo, hi in self.imag_parts],
            # avoid -0.0 leaking into serialized output
            "points": [[p.real or 0.0, p.imag or 0.0] for p in self.points],
        }

    def to_json(self) -> str:
        return json.dumps(self.json_dict())


def set_contains(s: SpectrumSet, omega: complex, tol: float = MEMBERSHIP_TOL) -> bool:
    return s.contains(omega, tol)


def set_distance(s: SpectrumSet, omega: complex) -> float:
    return s.distance(omega)


def _pi_over(L: float) -> SymbolicReal:
    return SymbolicReal(Fraction(1) / Fraction(L), 1)


def essential_spectrum_conductive(L2: float, L3: float) -> SpectrumSet:
    """(-inf, -pi/L] u [pi/L, inf) on R plus the points {0, -i/2, -i}."""
    if L2 <= 0 or L3 <= 0:
        raise ValueError("cross-section lengths must be positive")
    e = _pi_over(max(L2, L3))
    return SpectrumSet(
        real_parts=((-math.inf, -e), (e, math.inf)),
        points=(0j, -0.5j, -1j),
    ).normalized()


def essential_spectrum_selfadjoint(L2: float, L3: float) -> SpectrumSet:
    """(-inf, -pi/L] u {0} u [pi/L, inf) for the zero-conductivity pencil."""
    if L2 <= 0 or L3 <= 0:
        raise ValueError("cross-section lengths must be positive")
    e = _pi_over(max(L2, L3))
    return SpectrumSet(
        real_parts=((-math.inf, -e), (e, math.inf)),
        points=(0j,),
    ).normalized()


def pollution_enclosure(eps_inf: float, mu_inf: float, lambda_e_min: float) -> SpectrumSet:
    """Real rays beyond +-sqrt(lambda_e_min/(eps_inf mu_inf)) confining pollution."""
    if eps_inf <= 0 or mu_inf <= 0 or lambda_e_min < 0:
        raise ValueError("need eps_inf, mu_inf > 0 and lambda_e_min >= 0")
    if lambda_e_min == 0.0:
        return SpectrumSet(real_parts=((-math.inf, math.inf),))
    arg = Fraction(lambda_e_min) / (Fraction(eps_inf) * Fraction(mu_inf))
    r = SymbolicReal(Fraction(1), 0, arg)
    return SpectrumSet(real_parts=((-math.inf, -r), (r, math.inf))).normalized()


def imaginary_interval(sigma_max: float, eps_min: float) -> SpectrumSet:
    """The segment i[-sigma_max/eps_min, 0] of the imaginary axis."""
    q = SymbolicReal(Fraction(sigma_max) / Fraction(eps_min))
    return SpectrumSet(imag_parts=((-q, SymbolicReal.of(0)),))


def safe_zone(
    pollution: SpectrumSet,
    sigma_max: float,
    eps_min: float,
    tol: float = MEMBERSHIP_TOL,
) -> Callable[[complex], bool]:
    """Predicate for points where isolated eigenvalues are safely approximated.

    True at omega iff omega lies neither in the pollution enclosure nor in the
    imaginary segment i[-sigma_max/eps_min, 0].
    """
    imag = imaginary_interval(sigma_max, eps_min)

    def pred(omega: complex) -> bool:
        return not pollution.contains(omega, tol) and not imag.contains(omega, tol)

    return pred
