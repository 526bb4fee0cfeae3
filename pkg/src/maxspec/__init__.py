"""Spectral computations for dissipative Maxwell pencils on rectangular
half-cylinders: dispersion-relation eigenvalue solving, spectral enclosures,
resolvent bounds, essential spectra, and domain-truncation diagnostics.
"""

from .enclosure import (
    MaterialBounds,
    ThresholdCase,
    enclosure_boundary_samples,
    enclosure_constant,
    enclosure_contains,
    spectral_free_gap,
    threshold_case,
    write_boundary_csv,
)
from .errors import (
    AmbiguousMatchWarning,
    BoundaryHit,
    EmptyRange,
    MaxspecError,
    NoQualifyingRoots,
    NonConvergence,
    PoleProximity,
    QuadratureFailure,
)
from .resolvent import resolvent_bound, resolvent_levelgrid, write_levelgrid_csv
from .rootfind import Root, SearchRect, dispersion_poles, find_roots, winding_count
from .spectra import (
    SpectrumSet,
    SymbolicReal,
    essential_spectrum_conductive,
    essential_spectrum_selfadjoint,
    imaginary_interval,
    pollution_enclosure,
    safe_zone,
    set_contains,
    set_distance,
)
from .waveguide import (
    ModeGroup,
    SweepResult,
    Trajectory,
    TrajectoryClass,
    TrajectoryReport,
    WaveguideModel,
    branch_asymptote_check,
    default_c_max,
    eigenvalues_true,
    eigenvalues_truncated,
    modes_up_to,
    pollution_report,
    select_guided,
    truncation_sweep,
    write_roots_csv,
    write_sweep_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousMatchWarning",
    "BoundaryHit",
    "EmptyRange",
    "MaterialBounds",
    "MaxspecError",
    "ModeGroup",
    "NoQualifyingRoots",
    "NonConvergence",
    "PoleProximity",
    "QuadratureFailure",
    "Root",
    "SearchRect",
    "SpectrumSet",
    "SweepResult",
    "SymbolicReal",
    "ThresholdCase",
    "Trajectory",
    "TrajectoryClass",
    "TrajectoryReport",
    "WaveguideModel",
    "branch_asymptote_check",
    "default_c_max",
    "dispersion_poles",
    "eigenvalues_true",
    "eigenvalues_truncated",
    "enclosure_boundary_samples",
    "enclosure_constant",
    "enclosure_contains",
    "essential_spectrum_conductive",
    "essential_spectrum_selfadjoint",
    "find_roots",
    "imaginary_interval",
    "modes_up_to",
    "pollution_enclosure",
    "pollution_report",
    "resolvent_bound",
    "resolvent_levelgrid",
    "safe_zone",
    "select_guided",
    "set_contains",
    "set_distance",
    "spectral_free_gap",
    "threshold_case",
    "truncation_sweep",
    "winding_count",
    "write_boundary_csv",
    "write_levelgrid_csv",
    "write_roots_csv",
    "write_sweep_csv",
]
