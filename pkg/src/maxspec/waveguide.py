"""End-to-end eigenvalue computations for the rectangular half-cylinder.

Covers both coefficient variants: the conductive slab (sigma = 1 on
x1 in (0,1), dissipative pencil) and the permittivity slab
(eps = 1 + delta on x1 in (0,1), self-adjoint pencil).  Eigenvalues come
from per-mode transcendental dispersion relations; the non-truncated ones
are solved in their branch-free squared form and the vanishing sign branch
is reported per root.
"""

from __future__ import annotations

import csv
import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from . import specfun
from .errors import AmbiguousMatchWarning, NoQualifyingRoots
from .rootfind import (
    CLUSTER_SIZE,
    Pole,
    Root,
    SearchRect,
    dispersion_poles,
    find_roots,
)
from .spectra import SpectrumSet

CONDUCTIVE = "conductive"
PERMITTIVITY = "permittivity"


@dataclass(frozen=True)
class WaveguideModel:
    """Cross-section lengths plus the slab coefficient variant."""

    L2: float
    L3: float
    variant: str = CONDUCTIVE
    delta: float | None = None
    truncation: float | None = None

    def __post_init__(self):
        if self.L2 <= 0 or self.L3 <= 0:
            raise ValueError("cross-section lengths must be positive")
        if self.variant not in (CONDUCTIVE, PERMITTIVITY):
            raise ValueError("variant must be 'conductive' or 'permittivity'")
        if self.variant == PERMITTIVITY and (self.delta is None or self.delta <= 0):
            raise ValueError("permittivity variant requires delta > 0")
        if self.truncation is not None and self.truncation <= 1.0:
            raise ValueError("truncation length X must exceed 1 (slab is (0,1))")


@dataclass(frozen=True)
class ModeGroup:
    """Transverse modes sharing one mode constant c (degeneracy group)."""

    c: float
    members: tuple[tuple[int, int], ...]

    @property
    def degeneracy(self) -> int:
        return len(self.members)


def _pool_size() -> int:
    env = os.environ.get("MAXSPEC_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _map_groups(fn, items):
    workers = _pool_size()
    if workers == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def modes_up_to(model: WaveguideModel, c_max: float) -> list[ModeGroup]:
    """All (n2, n3) in N0^2 \\ {(0,0)} with mode constant <= c_max, grouped by c."""
    a2 = (math.pi / model.L2) ** 2
    a3 = (math.pi / model.L3) ** 2
    pairs: list[tuple[float, tuple[int, int]]] = []
    n2 = 0
    while n2 * n2 * a2 <= c_max:
        n3 = 0
        while n2 * n2 * a2 + n3 * n3 * a3 <= c_max:
            if (n2, n3) != (0, 0):
                pairs.append((n2 * n2 * a2 + n3 * n3 * a3, (n2, n3)))
            n3 += 1
        n2 += 1
    pairs.sort(key=lambda t: (t[0], t[1]))
    groups: list[ModeGroup] = []
    for c, nn in pairs:
        if groups and abs(c - groups[-1].c) <= 1e-12 * max(1.0, abs(c)):
            groups[-1] = ModeGroup(groups[-1].c, groups[-1].members + (nn,))
        else:
            groups.append(ModeGroup(c, (nn,)))
    return groups


def default_c_max(model: WaveguideModel, rect: SearchRect) -> float:
    """Heuristic cutoff: modes with larger c cannot vanish anywhere in rect.

    Their slab-side dispersion term has positive real part throughout, so the
    relation cannot balance.  Overridable by passing c_max explicitly.
    """
    m = max(abs(complex(x, y)) for x in (rect.re_lo, rect.re_hi) for y in (rect.im_lo, rect.im_hi))
    factor = 1.0 + (model.delta or 0.0) if model.variant == PERMITTIVITY else 1.0
    return factor * m * m + m + 1.0


def _dispersion_sq(model: WaveguideModel, c: float):
    if model.variant == CONDUCTIVE:
        return lambda w: specfun.dispersion_true_sq(w, c)
    return lambda w: specfun.dispersion_selfadjoint_sq(w, c, model.delta)


def _dispersion_trunc(model: WaveguideModel, c: float, X: float):
    if model.variant == CONDUCTIVE:
        return lambda w: specfun.dispersion_truncated(w, c, X)

    def f(w):
        g = specfun.zcothz_of_square(specfun.alpha_sq_permittivity(w, c, model.delta))
        return g + specfun.scaled_coth_of_square(specfun.beta_sq(w, c), X - 1.0)

    return f


def _slab_poles(model: WaveguideModel, c: float, rect: SearchRect, order: int) -> list[Pole]:
    """Poles of the slab-side coth factor, with the given order per pole."""
    poles: list[Pole] = []
    r_max = max(abs(rect.re_lo), abs(rect.re_hi)) + 1.0
    if model.variant == CONDUCTIVE:
        for p, _ in dispersion_poles(c, None, rect):
            poles.append((p, order))
        return poles
    scale = 1.0 + model.delta
    k_max = int(math.ceil(math.sqrt(max(scale * r_max**2, 1.0)) / math.pi)) + 1
    for k in range(1, k_max + 1):
        r = math.sqrt((c + (k * math.pi) ** 2) / scale)
        for s in (1.0, -1.0):
            p = complex(s * r, 0.0)
            if rect.contains(p):
                poles.append((p, order))
    return poles


def _outer_poles(c: float, X: float, rect: SearchRect) -> list[Pole]:
    poles: list[Pole] = []
    r_max = max(abs(rect.re_lo), abs(rect.re_hi)) + 1.0
    k_max = int(math.ceil(r_max * (X - 1.0) / math.pi)) + 1
    for k in range(1, k_max + 1):
        r = math.sqrt(c + (k * math.pi / (X - 1.0)) ** 2)
        for s in (1.0, -1.0):
            p = complex(s * r, 0.0)
            if rect.contains(p):
                poles.append((p, 1))
    return poles


def _sign_branch(model: WaveguideModel, c: float, w: complex) -> int:
    """Sign s minimizing |g(alpha^2) + s*sqrt(beta^2)| at a located root."""
    if model.variant == CONDUCTIVE:
        g = specfun.zcothz_of_square(specfun.alpha_sq(w, c))
    else:
        g = specfun.zcothz_of_square(specfun.alpha_sq_permittivity(w, c, model.delta))
    b = specfun.sqrt_nonneg_re(specfun.beta_sq(w, c))
    return 1 if abs(g + b) <= abs(g - b) else -1


def _interior_sq(model: WaveguideModel, c: float, w: complex) -> complex:
    if model.variant == CONDUCTIVE:
        return complex(specfun.alpha_sq(w, c))
    return complex(specfun.alpha_sq_permittivity(w, c, model.delta))


def select_guided(model: WaveguideModel, roots: list[Root]) -> list[Root]:
    """Keep one sign family out of a squared-dispersion root list.

    The squared relation vanishes on both sign branches.  For the conductive
    variant the kept branch is +1, the one matching an exterior solution that
    decays; finite-difference cross-checks of the truncated operator confirm
    it as the spectrum.  For the permittivity variant the kept family is the
    branch -1 roots whose slab interior oscillates (Re of the interior
    square < 0), the modes trapped by the high-permittivity slab.
    """
    out: list[Root] = []
    for r in roots:
        if model.variant == CONDUCTIVE:
            keep = r.sign_branch == 1
        else:
            keep = (
                r.sign_branch == -1
                and r.c is not None
                and _interior_sq(model, r.c, r.location).real < 0.0
            )
        if keep:
            out.append(r)
    return out


def _merge_roots(roots: list[Root], cluster: float = CLUSTER_SIZE) -> list[Root]:
    roots = sorted(roots, key=lambda r: (r.location.real, r.location.imag))
    out: list[Root] = []
    for r in roots:
        if out and abs(out[-1].location - r.location) < cluster:
            prev = out[-1]
            prev.multiplicity += r.multiplicity
            prev.modes = prev.modes + r.modes
            if r.residual < prev.residual:
                prev.location, prev.residual = r.location, r.residual
        else:
            out.append(r)
    return out


def _group_roots_true(
    model: WaveguideModel, group: ModeGroup, rect: SearchRect, tol: float
) -> list[Root]:
    f = _dispersion_sq(model, group.c)
    poles = _slab_poles(model, group.c, rect, order=2)
    found = find_roots(f, rect, tol=tol, poles=poles)
    out = []
    for r in found:
        out.append(
            Root(
                location=r.location,
                multiplicity=r.multiplicity * group.degeneracy,
                residual=r.residual,
                sign_branch=_sign_branch(model, group.c, r.location),
                modes=group.members,
                c=group.c,
            )
        )
    return out


def eigenvalues_true(
    model: WaveguideModel,
    rect: SearchRect,
    c_max: float | None = None,
    tol: float = 1e-10,
) -> list[Root]:
    """Eigenvalues of the non-truncated problem inside rect.

    Solves the branch-free squared dispersion per mode group; multiplicity is
    (group degeneracy) x (analytic multiplicity), merged across groups.
    """
    if model.truncation is not None:
        raise ValueError("model.truncation must be absent for the true problem")
    if c_max is None:
        c_max = default_c_max(model, rect)
    groups = modes_up_to(model, c_max)
    results = _map_groups(
        lambda g: _group_roots_true(model, g, rect, tol), groups
    )
    return _merge_roots([r for rs in results for r in rs])


def _group_roots_truncated(
    model: WaveguideModel, group: ModeGroup, X: float, rect: SearchRect, tol: float
) -> list[Root]:
    f = _dispersion_trunc(model, group.c, X)
    poles = _slab_poles(model, group.c, rect, order=1) + _outer_poles(group.c, X, rect)
    found = find_roots(f, rect, tol=tol, poles=poles)
    out = []
    for r in found:
        out.append(
            Root(
                location=r.location,
                multiplicity=r.multiplicity * group.degeneracy,
                residual=r.residual,
                sign_branch=None,
                modes=group.members,
                c=group.c,
            )
        )
    return out


def eigenvalues_truncated(
    model: WaveguideModel,
    rect: SearchRect,
    c_max: float | None = None,
    tol: float = 1e-10,
) -> list[Root]:
    """Eigenvalues of the truncated problem (X from model.truncation) in rect."""
    X = model.truncation
    if X is None:
        raise ValueError("model.truncation must be set for the truncated problem")
    if c_max is None:
        c_max = default_c_max(model, rect)
    groups = modes_up_to(model, c_max)
    results = _map_groups(
        lambda g: _group_roots_truncated(model, g, X, rect, tol), groups
    )
    return _merge_roots([r for rs in results for r in rs])


@dataclass
class Trajectory:
    """One root of one mode group followed across the truncation lengths."""

    c: float
    modes: tuple[tuple[int, int], ...]
    points: list[tuple[float, complex]] = field(default_factory=list)

    @property
    def limit(self) -> complex:
        return self.points[-1][1]

    @property
    def start_X(self) -> float:
        return self.points[0][0]

    def true_residual(self, model: WaveguideModel) -> float:
        return abs(_dispersion_sq(model, self.c)(self.limit))


@dataclass
class SweepResult:
    model: WaveguideModel
    X_list: tuple[float, ...]
    trajectories: list[Trajectory]
    warnings: list[str] = field(default_factory=list)


def truncation_sweep(
    model: WaveguideModel,
    X_list: list[float],
    rect: SearchRect,
    c_max: float | None = None,
    tol: float = 1e-10,
) -> SweepResult:
    """Follow truncated-problem roots across an ascending list of lengths X.

    Roots are matched between consecutive X values by nearest neighbour
    within a per-group match radius (0.1 x the minimal root gap at the first
    X); ambiguous matches are reported as warnings, unmatched roots start or
    end trajectories.
    """
    if len(X_list) < 2:
        raise ValueError("X_list must contain at least two truncation lengths")
    if sorted(X_list) != list(X_list):
        raise ValueError("X_list must be ascending")
    if c_max is None:
        c_max = default_c_max(model, rect)
    groups = modes_up_to(model, c_max)
    notes: list[str] = []
    trajectories: list[Trajectory] = []

    def sweep_group(group: ModeGroup) -> tuple[list[Trajectory], list[str]]:
        per_X = [
            _group_roots_truncated(model, group, X, rect, tol) for X in X_list
        ]
        local_notes: list[str] = []
        first = per_X[0]
        if len(first) >= 2:
            gaps = [
                abs(a.location - b.location)
                for i, a in enumerate(first)
                for b in first[i + 1 :]
            ]
            match_radius = 0.1 * min(gaps)
        else:
            match_radius = 0.1 * rect.diameter
        trajs = [
            Trajectory(c=group.c, modes=group.members, points=[(X_list[0], r.location)])
            for r in first
        ]
        open_trajs = list(trajs)
        for X, roots in zip(X_list[1:], per_X[1:]):
            claimed: dict[int, Trajectory] = {}
            still_open: list[Trajectory] = []
            for tr in open_trajs:
                best_i, best_d = None, match_radius
                for i, r in enumerate(roots):
                    d = abs(r.location - tr.points[-1][1])
                    if d < best_d:
                        best_i, best_d = i, d
                if best_i is None:
                    continue
                if best_i in claimed:
                    msg = (
                        "ambiguous match at X=%g near %r (mode c=%g)"
                        % (X, roots[best_i].location, group.c)
                    )
                    local_notes.append(msg)
                    warnings.warn(msg, AmbiguousMatchWarning)
                    continue
                claimed[best_i] = tr
                tr.points.append((X, roots[best_i].location))
                still_open.append(tr)
            for i, r in enumerate(roots):
                if i not in claimed:
                    t = Trajectory(c=group.c, modes=group.members, points=[(X, r.location)])
                    trajs.append(t)
                    still_open.append(t)
            open_trajs = still_open
        return trajs, local_notes

    for trajs, local_notes in _map_groups(sweep_group, groups):
        trajectories.extend(trajs)
        notes.extend(local_notes)
    trajectories.sort(key=lambda t: (t.c, t.points[0][1].real, t.points[0][1].imag))
    return SweepResult(model, tuple(X_list), trajectories, notes)


class TrajectoryClass(Enum):
    CONVERGED_TO_EIGENVALUE = "CONVERGED_TO_EIGENVALUE"
    IN_ESSENTIAL = "IN_ESSENTIAL"
    POLLUTION_CANDIDATE = "POLLUTION_CANDIDATE"
    VIOLATION = "VIOLATION"


@dataclass
class TrajectoryReport:
    trajectory: Trajectory
    classification: TrajectoryClass
    distance_to_true: float
    distance_to_essential: float


def pollution_report(
    sweep: SweepResult,
    true_roots: list[Root],
    sigma_e: SpectrumSet,
    pollution: SpectrumSet,
    imag_interval: SpectrumSet,
    tol: float = 1e-3,
) -> list[TrajectoryReport]:
    """Classify each trajectory limit against the admissible limit sets.

    A limit within tol of a true eigenvalue is CONVERGED_TO_EIGENVALUE; within
    tol of the essential spectrum IN_ESSENTIAL; otherwise it must lie in the
    pollution enclosure or the imaginary interval (POLLUTION_CANDIDATE), and
    anything else is a VIOLATION (a limit outside every admissible set).
    """
    if not sweep.trajectories:
        raise ValueError("sweep contains no trajectories")
    final_X = sweep.X_list[-1]
    reports = []
    for tr in sweep.trajectories:
        # Only trajectories alive at the largest X are limit candidates; a
        # trajectory that lost its continuation earlier has no limit to
        # classify.
        if tr.points[-1][0] != final_X:
            continue
        lim = tr.limit
        d_true = min(
            (abs(lim - r.location) for r in true_roots), default=math.inf
        )
        d_ess = sigma_e.distance(lim)
        if d_true <= tol:
            cls = TrajectoryClass.CONVERGED_TO_EIGENVALUE
        elif d_ess <= tol:
            cls = TrajectoryClass.IN_ESSENTIAL
        elif pollution.contains(lim, tol) or imag_interval.contains(lim, tol):
            cls = TrajectoryClass.POLLUTION_CANDIDATE
        else:
            cls = TrajectoryClass.VIOLATION
        reports.append(TrajectoryReport(tr, cls, d_true, d_ess))
    return reports


def _root_row(r: Root) -> list:
    n2, n3 = r.modes[0] if r.modes else ("", "")
    return [
        f"{r.location.real:.12g}",
        f"{r.location.imag:.12g}",
        r.multiplicity,
        "" if r.c is None else f"{r.c:.12g}",
        n2,
        n3,
        "" if r.sign_branch is None else r.sign_branch,
        f"{r.residual:.12g}",
    ]


def write_roots_csv(path: str, roots: list[Root]) -> None:
    """Export a root list as CSV ``re,im,mult,c,n2,n3,sign,residual``.

    For a degeneracy group the (n2, n3) columns carry the lowest member; the
    full member list stays on the Root objects.
    """
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["re", "im", "mult", "c", "n2", "n3", "sign", "residual"])
        for r in roots:
            w.writerow(_root_row(r))


def write_sweep_csv(path: str, per_X: list[tuple[float, list[Root]]]) -> None:
    """Export per-truncation-length root lists with a trailing X column."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["re", "im", "mult", "c", "n2", "n3", "sign", "residual", "X"])
        for X, roots in per_X:
            for r in roots:
                w.writerow(_root_row(r) + [f"{X:.12g}"])


def branch_asymptote_check(roots: list[Root], re_min: float) -> float:
    """Max |Im w + 1/2| over roots with |Re w| >= re_min."""
    if re_min <= 0:
        raise ValueError("re_min must be positive")
    qual = [r for r in roots if abs(r.location.real) >= re_min]
    if not qual:
        raise NoQualifyingRoots("no root with |Re| >= %g" % re_min)
    return max(abs(r.location.imag + 0.5) for r in qual)
