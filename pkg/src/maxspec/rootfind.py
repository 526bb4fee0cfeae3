"""Zeros of meromorphic functions in a rectangle by the argument principle.

The winding number of f along the rectangle boundary is obtained by adaptive
continuous phase tracking (no derivative evaluations on the contour), the
rectangle is subdivided until each cell isolates a single zero, and candidates
are polished by damped Newton iteration with central-difference derivatives.
Poles must be supplied analytically; the counter then reports zeros rather
than zeros-minus-poles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import BoundaryHit, NonConvergence, PoleProximity

CLUSTER_SIZE = 1e-6
RESIDUAL_TOL = 1e-10
CLEARANCE_REL = 1e-9
MAX_NEWTON_ITER = 100

# Deterministic split fractions tried when a subdivision line hits a feature;
# deliberately irrational-looking so splits never pass through roots sitting
# on round coordinates (e.g. the real axis).
_SPLIT_FRACTIONS = (0.5136871, 0.4863129, 0.5273743, 0.4726257, 0.5547486, 0.4452514)


@dataclass(frozen=True)
class SearchRect:
    """Closed axis-aligned rectangle in the spectral plane."""

    re_lo: float
    re_hi: float
    im_lo: float
    im_hi: float

    def __post_init__(self):
        if not (self.re_lo < self.re_hi and self.im_lo < self.im_hi):
            raise ValueError("degenerate SearchRect (need re_lo<re_hi, im_lo<im_hi)")

    @property
    def width(self) -> float:
        return self.re_hi - self.re_lo

    @property
    def height(self) -> float:
        return self.im_hi - self.im_lo

    @property
    def diameter(self) -> float:
        return math.hypot(self.width, self.height)

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.re_lo + self.re_hi), 0.5 * (self.im_lo + self.im_hi))

    def contains(self, z: complex, margin: float = 0.0) -> bool:
        return (
            self.re_lo - margin <= z.real <= self.re_hi + margin
            and self.im_lo - margin <= z.imag <= self.im_hi + margin
        )

    def corners(self) -> list[complex]:
        return [
            complex(self.re_lo, self.im_lo),
            complex(self.re_hi, self.im_lo),
            complex(self.re_hi, self.im_hi),
            complex(self.re_lo, self.im_hi),
        ]


@dataclass
class Root:
    """A located zero together with its bookkeeping."""

    location: complex
    multiplicity: int
    residual: float
    sign_branch: int | None = None
    modes: tuple[tuple[int, int], ...] = ()
    c: float | None = None


Pole = tuple[complex, int]  # (location, order)


def _eval(f, zs: np.ndarray) -> np.ndarray:
    """Evaluate f on an array of points, falling back to a scalar loop."""
    try:
        out = np.asarray(f(zs), dtype=complex)
        if out.shape == zs.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([complex(f(complex(z))) for z in zs], dtype=complex)


def _boundary_param(rect: SearchRect, ts: np.ndarray) -> np.ndarray:
    """Map parameters in [0,1) to boundary points, counterclockwise."""
    corners = rect.corners()
    w, h = rect.width, rect.height
    per = 2.0 * (w + h)
    d = ts * per
    z = np.empty(ts.shape, dtype=complex)
    m0 = d < w
    m1 = (~m0) & (d < w + h)
    m2 = (~m0) & (~m1) & (d < 2 * w + h)
    m3 = ~(m0 | m1 | m2)
    z[m0] = corners[0] + d[m0]
    z[m1] = corners[1] + 1j * (d[m1] - w)
    z[m2] = corners[2] - (d[m2] - w - h)
    z[m3] = corners[3] - 1j * (d[m3] - 2 * w - h)
    return z


def _boundary_nearest_t(rect: SearchRect, p: complex) -> tuple[float, float]:
    """(t, distance) of the boundary point nearest to p, in arc parameter."""
    w, h = rect.width, rect.height
    per = 2.0 * (w + h)
    x = min(max(p.real, rect.re_lo), rect.re_hi)
    y = min(max(p.imag, rect.im_lo), rect.im_hi)
    # nearest point on each edge and its arc parameter (counterclockwise)
    cands = [
        (math.hypot(p.real - x, p.imag - rect.im_lo), (x - rect.re_lo) / per),
        (math.hypot(p.real - rect.re_hi, p.imag - y), (w + (y - rect.im_lo)) / per),
        (math.hypot(p.real - x, p.imag - rect.im_hi), (w + h + (rect.re_hi - x)) / per),
        (math.hypot(p.real - rect.re_lo, p.imag - y), (2 * w + h + (rect.im_hi - y)) / per),
    ]
    d_edge, t = min(cands, key=lambda c: c[0])
    return t % 1.0, d_edge


def _pole_seed_ts(rect: SearchRect, poles: list[Pole]) -> np.ndarray:
    """Extra boundary parameters clustered around poles near the contour.

    A pole just outside the contour paired with a nearby zero just inside
    forms a dipole whose phase swing is confined to a boundary window of the
    order of the pole distance; uniform sampling aliases it away.  Seeding a
    geometric ladder of points around the projection of each nearby pole
    forces the adaptive refinement to see the swing.
    """
    per = 2.0 * (rect.width + rect.height)
    seeds: list[float] = []
    for p, _order in poles:
        t0, dist = _boundary_nearest_t(rect, p)
        rel = dist / per
        if rel > 0.02:
            continue
        base = max(rel, 1e-13)
        seeds.append(t0)
        off = 0.3 * base
        while off < 0.05:
            seeds.append((t0 + off) % 1.0)
            seeds.append((t0 - off) % 1.0)
            off *= 2.0
    return np.array(seeds, dtype=float)


def winding_count(
    f,
    rect: SearchRect,
    clearance_rel: float = CLEARANCE_REL,
    seed_ts: np.ndarray | None = None,
) -> int:
    """Number of zeros minus poles of f inside rect, by boundary phase tracking.

    The boundary is sampled adaptively: any segment whose phase increment
    reaches pi/2 is bisected until all increments are safely small.  Raises
    BoundaryHit if |f| collapses on the contour (feature too close to it) or
    if the required resolution cannot be reached.
    """
    ts = np.linspace(0.0, 1.0, 257, endpoint=False)
    if seed_ts is not None and len(seed_ts):
        ts = np.unique(np.concatenate([ts, seed_ts % 1.0]))
    try:
        fz = _eval(f, _boundary_param(rect, ts))
    except PoleProximity as exc:
        raise BoundaryHit("pole within exclusion radius of contour") from exc

    min_dt = 2.0 ** -46
    last_clean: int | None = None
    clean_streak = 0
    for _ in range(64):
        scale = float(np.median(np.abs(fz)))
        if scale == 0.0 or np.min(np.abs(fz)) < clearance_rel * scale:
            raise BoundaryHit("|f| below clearance threshold on contour")
        fnext = np.roll(fz, -1)
        dphi = np.angle(fnext / fz)
        ratio = np.abs(fnext) / np.abs(fz)
        # A large modulus jump betrays an unresolved feature even when the
        # phase increment aliases to something small.
        bad = (np.abs(dphi) >= 0.5 * math.pi) | (ratio > 4.0) | (ratio < 0.25)
        t_next = np.roll(ts, -1)
        t_next[-1] += 1.0
        dt = t_next - ts
        if not np.any(bad):
            total = float(np.sum(dphi))
            n = total / (2.0 * math.pi)
            if abs(n - round(n)) > 0.25:
                raise BoundaryHit("phase tracking did not close to an integer")
            if last_clean == int(round(n)):
                clean_streak += 1
                if clean_streak >= 2:
                    return last_clean
            else:
                clean_streak = 0
            # Verification passes: a symmetric alias can hide a full turn, so
            # global bisections must reproduce the same integer twice.
            last_clean = int(round(n))
            mid = (ts + 0.5 * dt) % 1.0
        else:
            last_clean = None
            clean_streak = 0
            if np.min(dt[bad]) < min_dt:
                raise BoundaryHit("feature on contour: refinement floor reached")
            mid = (ts[bad] + 0.5 * dt[bad]) % 1.0
        try:
            fmid = _eval(f, _boundary_param(rect, mid))
        except PoleProximity as exc:
            raise BoundaryHit("pole within exclusion radius of contour") from exc
        ts = np.concatenate([ts, mid])
        fz = np.concatenate([fz, fmid])
        order = np.argsort(ts, kind="stable")
        ts, fz = ts[order], fz[order]
    raise BoundaryHit("phase tracking failed to converge")


def dispersion_poles(c: float, X: float | None, rect: SearchRect) -> list[Pole]:
    """All poles of the (truncated) dispersion relation for mode constant c in rect.

    The slab-side coth factor blows up where omega*(omega+i) = c + (k pi)^2,
    i.e. at omega = +-sqrt(c + k^2 pi^2 - 1/4) - i/2; with a truncation X the
    outer factor adds real poles at omega = +-sqrt(c + k^2 pi^2/(X-1)^2).
    All are simple.
    """
    poles: list[Pole] = []
    r_max = max(abs(rect.re_lo), abs(rect.re_hi)) + 1.0
    k_max = int(math.ceil(math.sqrt(max(r_max**2 + 0.25, 1.0)) / math.pi)) + 1
    for k in range(1, k_max + 1):
        r = math.sqrt(c + (k * math.pi) ** 2 - 0.25)
        for s in (1.0, -1.0):
            p = complex(s * r, -0.5)
            if rect.contains(p):
                poles.append((p, 1))
    if X is not None:
        if X <= 1.0:
            raise ValueError("X must exceed 1")
        k_max_b = (
            int(math.ceil(r_max * (X - 1.0) / math.pi)) + 1
        )
        for k in range(1, k_max_b + 1):
            v = c + (k * math.pi / (X - 1.0)) ** 2
            r = math.sqrt(v)
            for s in (1.0, -1.0):
                p = complex(s * r, 0.0)
                if rect.contains(p):
                    poles.append((p, 1))
    return _dedupe_poles(poles)


def _dedupe_poles(poles: list[Pole]) -> list[Pole]:
    out: list[Pole] = []
    for p, order in sorted(poles, key=lambda q: (q[0].real, q[0].imag)):
        if out and abs(out[-1][0] - p) < 10 * np.finfo(float).eps * (1 + abs(p)):
            out[-1] = (out[-1][0], out[-1][1] + order)
        else:
            out.append((p, order))
    return out


def _jittered_winding(f, rect: SearchRect, poles: list[Pole], retries: int = 5) -> int:
    eps = 1e-6
    last: BoundaryHit | None = None
    for attempt in range(retries + 1):
        if attempt == 0:
            r = rect
        else:
            sgn = 1.0 if attempt % 2 else -1.0
            d = sgn * eps * ((attempt + 1) // 2)
            r = SearchRect(rect.re_lo - d, rect.re_hi + d, rect.im_lo - d, rect.im_hi + d)
        try:
            return winding_count(f, r, seed_ts=_pole_seed_ts(r, poles))
        except BoundaryHit as exc:
            last = exc
    raise last  # type: ignore[misc]


def _zero_count(f, rect: SearchRect, poles: list[Pole]) -> int:
    w = _jittered_winding(f, rect, poles)
    inside = sum(order for p, order in poles if rect.contains(p))
    n = w + inside
    if n < 0:
        raise NonConvergence(
            "negative zero count: pole list inconsistent with winding number"
        )
    return n


def _newton(f, z0: complex, tol: float, mult: int = 1) -> tuple[complex, float] | None:
    """Damped Newton with central-difference derivative.

    ``mult`` is the argument-principle count of the enclosing cell; steps are
    scaled by it so that a multiple root converges quadratically rather than
    linearly.  The difference step h shrinks with the Newton step: a fixed h
    would stall the derivative estimate once |z - root| drops below it.
    Keeps iterating after |f| < tol while the step still shrinks, so that
    roots are located accurately and not merely to the residual target.
    """
    z = z0
    try:
        fz = complex(f(z))
    except PoleProximity:
        return None
    best_z, best_r = z, abs(fz)
    h_rel = 1e-7
    for _ in range(MAX_NEWTON_ITER):
        if abs(fz) == 0.0:
            return z, 0.0
        h = h_rel * max(1.0, abs(z))
        # A proposed step smaller than h means the iterate sits closer to the
        # root than the difference step resolves (the O(h^2) term then swamps
        # the true derivative); shrink h to the step scale and recompute.
        try:
            for _ in range(4):
                df = (complex(f(z + h)) - complex(f(z - h))) / (2.0 * h)
                if df == 0:
                    break
                step = -mult * fz / df
                if abs(step) >= h or step == 0:
                    break
                h = max(abs(step), 1e-12 * max(1.0, abs(z)))
        except PoleProximity:
            break
        if df == 0:
            break
        # Damping: never accept an increase of |f|.
        accepted = False
        for _ in range(30):
            try:
                f_new = complex(f(z + step))
            except PoleProximity:
                f_new = None
            if f_new is not None and abs(f_new) <= abs(fz):
                accepted = True
                break
            step *= 0.5
        if not accepted:
            # a rejected step usually means h is comparable to the distance
            # to a multiple root, which corrupts the derivative's phase
            if h_rel > 1e-11:
                h_rel = max(1e-3 * h_rel, 1e-11)
                continue
            break
        z += step
        fz = f_new
        h_rel = min(1e-7, max(abs(step) / max(1.0, abs(z)), 1e-10))
        if abs(fz) < best_r:
            best_z, best_r = z, abs(fz)
        if abs(step) < 1e-12 * max(1.0, abs(z)) and best_r < tol:
            break
    return (best_z, best_r) if best_r < tol else None


def _subdivide(rect: SearchRect, frac: float) -> tuple[SearchRect, SearchRect]:
    if rect.width >= rect.height:
        mid = rect.re_lo + frac * rect.width
        return (
            SearchRect(rect.re_lo, mid, rect.im_lo, rect.im_hi),
            SearchRect(mid, rect.re_hi, rect.im_lo, rect.im_hi),
        )
    mid = rect.im_lo + frac * rect.height
    return (
        SearchRect(rect.re_lo, rect.re_hi, rect.im_lo, mid),
        SearchRect(rect.re_lo, rect.re_hi, mid, rect.im_hi),
    )


def find_roots(
    f,
    rect: SearchRect,
    tol: float = RESIDUAL_TOL,
    poles: list[Pole] | None = None,
    cluster_size: float = CLUSTER_SIZE,
) -> list[Root]:
    """All zeros of f inside rect, polished to |f| < tol, with multiplicities.

    ``poles`` must list every pole of f inside rect with its order; the
    argument-principle count is corrected by them.  Subdivision is binary on
    the longer side and fully deterministic.
    """
    poles = poles or []
    candidates: list[tuple[complex, int, float]] = []

    def process(cell: SearchRect, n: int) -> None:
        if n == 0:
            return
        if n >= 1 and (n == 1 or cell.diameter < cluster_size):
            polished = _newton(f, cell.center, tol, mult=n)
            if polished is None and cell.diameter < cluster_size:
                # last resort: start from the corners of the tiny cell
                for corner in cell.corners():
                    polished = _newton(f, corner, tol, mult=n)
                    if polished is not None:
                        break
            if polished is not None and cell.contains(polished[0], margin=cluster_size):
                candidates.append((polished[0], n, polished[1]))
                return
            if cell.diameter < cluster_size:
                raise NonConvergence(
                    "Newton failed to polish a counted zero near %r" % (cell.center,)
                )
        for frac in _SPLIT_FRACTIONS:
            a, b = _subdivide(cell, frac)
            try:
                na = _zero_count(f, a, poles)
                nb = _zero_count(f, b, poles)
            except BoundaryHit:
                continue
            if na + nb == n:
                process(a, na)
                process(b, nb)
                return
        raise NonConvergence("could not split cell %r conservatively" % (cell,))

    process(rect, _zero_count(f, rect, poles))

    # Merge candidates within cluster_size, summing multiplicities.
    candidates.sort(key=lambda t: (t[0].real, t[0].imag))
    roots: list[Root] = []
    for z, n, res in candidates:
        merged = False
        for r in roots:
            if abs(r.location - z) < cluster_size:
                r.multiplicity += n
                if res < r.residual:
                    r.location, r.residual = z, res
                merged = True
                break
        if not merged:
            roots.append(Root(location=z, multiplicity=n, residual=res))
    roots.sort(key=lambda r: (r.location.real, r.location.imag))
    return roots
