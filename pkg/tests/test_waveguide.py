"""Tests for the end-to-end waveguide eigenvalue computations.

Frozen oracle values were established independently: the permittivity gap
eigenvalues by bisection of the one-dimensional dispersion relation on the
real axis, the conductive roots by finite-difference discretizations of the
slab problem and by residual checks of the vanishing sign branch.
"""

import csv
import math

import pytest

from maxspec import specfun
from maxspec.errors import NoQualifyingRoots
from maxspec.rootfind import SearchRect
from maxspec.spectra import (
    essential_spectrum_conductive,
    essential_spectrum_selfadjoint,
    imaginary_interval,
    pollution_enclosure,
)
from maxspec.waveguide import (
    TrajectoryClass,
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

COND = WaveguideModel(L2=1.0, L3=2.0, variant="conductive")
PERM = WaveguideModel(L2=1.0, L3=2.0, variant="permittivity", delta=10.0)

GAP_RECT = SearchRect(0.01, math.pi / 2 - 1e-6, -1e-6, 1e-6)
COND_RECT = SearchRect(0.05, 8.0, -0.55, -0.005)

# conductive guided eigenvalues in COND_RECT, frozen after cross-validation
COND_ORACLE = [
    (3.7368008985 - 0.0378677092j, 2),
    (4.0695306138 - 0.0879679015j, 1),
    (4.9275219313 - 0.1796737536j, 1),
    (5.1801379098 - 0.1998170219j, 1),
    (6.0812526782 - 0.2559568918j, 1),
    (6.6741939367 - 0.2834680269j, 2),
    (6.8599951249 - 0.2909721272j, 1),
    (7.3884130212 - 0.3099735910j, 2),
]


class TestModel:
    def test_rejects_bad_lengths(self):
        with pytest.raises(ValueError):
            WaveguideModel(L2=0.0, L3=1.0)

    def test_rejects_unknown_variant(self):
        with pytest.raises(ValueError):
            WaveguideModel(L2=1.0, L3=1.0, variant="magnetic")

    def test_permittivity_needs_delta(self):
        with pytest.raises(ValueError):
            WaveguideModel(L2=1.0, L3=1.0, variant="permittivity")

    def test_truncation_must_exceed_slab(self):
        with pytest.raises(ValueError):
            WaveguideModel(L2=1.0, L3=1.0, truncation=0.5)


class TestModes:
    def test_brute_force_oracle(self):
        c_max = 60.0
        groups = modes_up_to(COND, c_max)
        # independent enumeration
        want = {}
        for n2 in range(0, 10):
            for n3 in range(0, 20):
                if (n2, n3) == (0, 0):
                    continue
                c = (math.pi * n2) ** 2 + (math.pi * n3 / 2.0) ** 2
                if c <= c_max:
                    want.setdefault(round(c, 9), []).append((n2, n3))
        assert len(groups) == len(want)
        for g in groups:
            members = want[round(g.c, 9)]
            assert sorted(g.members) == sorted(members)
            assert g.degeneracy == len(members)

    def test_lowest_mode(self):
        groups = modes_up_to(COND, 3.0)
        assert groups[0].c == pytest.approx((math.pi / 2) ** 2)
        assert groups[0].members == ((0, 1),)

    def test_degenerate_group(self):
        # (0,2) and (1,0) share c = pi^2
        groups = modes_up_to(COND, 10.0)
        g = [x for x in groups if abs(x.c - math.pi**2) < 1e-9]
        assert len(g) == 1 and g[0].degeneracy == 2

    def test_default_c_max_covers_rect(self):
        # any mode beyond the cutoff has Re(g(alpha^2)) > 0 everywhere in the
        # rect, so it cannot contribute roots
        rect = SearchRect(0.1, 3.0, -0.5, -0.01)
        c = default_c_max(COND, rect) + 1.0
        for x in (0.1, 1.5, 3.0):
            for y in (-0.5, -0.25, -0.01):
                g = specfun.zcothz_of_square(specfun.alpha_sq(complex(x, y), c))
                assert g.real > 0.0


class TestPermittivityGap:
    def test_guided_gap_eigenvalues(self):
        roots = select_guided(PERM, eigenvalues_true(PERM, GAP_RECT))
        assert len(roots) == 2
        vals = sorted(
            ((r.location, r.multiplicity) for r in roots), key=lambda t: t[0].real
        )
        assert abs(vals[0][0] - 1.4621377867) < 1e-8
        assert vals[0][1] == 1
        assert abs(vals[1][0] - 1.5643630435) < 1e-8
        assert vals[1][1] == 2

    def test_gap_roots_real(self):
        roots = eigenvalues_true(PERM, GAP_RECT)
        assert all(abs(r.location.imag) < 1e-9 for r in roots)

    def test_guided_roots_oscillate_in_slab(self):
        for r in select_guided(PERM, eigenvalues_true(PERM, GAP_RECT)):
            assert specfun.alpha_sq_permittivity(r.location, r.c, 10.0).real < 0.0

    def test_residuals(self):
        for r in eigenvalues_true(PERM, GAP_RECT):
            assert r.residual < 1e-10

    def test_truncation_flag_enforced(self):
        with pytest.raises(ValueError):
            eigenvalues_true(
                WaveguideModel(L2=1, L3=2, variant="conductive", truncation=10.0),
                GAP_RECT,
            )
        with pytest.raises(ValueError):
            eigenvalues_truncated(COND, GAP_RECT)


class TestConductiveTrue:
    def test_frozen_oracle(self):
        roots = select_guided(COND, eigenvalues_true(COND, COND_RECT))
        assert len(roots) == len(COND_ORACLE)
        got = sorted(roots, key=lambda r: r.location.real)
        for r, (loc, mult) in zip(got, COND_ORACLE):
            assert abs(r.location - loc) < 1e-8
            assert r.multiplicity == mult

    def test_guided_branch_vanishes(self):
        # kept roots satisfy the +1 sign branch of the unsquared relation
        for r in select_guided(COND, eigenvalues_true(COND, COND_RECT)):
            assert abs(specfun.dispersion_true(r.location, r.c, 1)) < 1e-7

    def test_mirror_symmetry(self):
        left = SearchRect(-8.0, -0.05, -0.55, -0.005)
        roots_l = select_guided(COND, eigenvalues_true(COND, left))
        roots_r = select_guided(COND, eigenvalues_true(COND, COND_RECT))
        assert len(roots_l) == len(roots_r)
        mirrored = sorted(
            (-r.location.conjugate() for r in roots_l), key=lambda z: z.real
        )
        rights = sorted((x.location for x in roots_r), key=lambda z: z.real)
        for m, r in zip(mirrored, rights):
            assert abs(m - r) < 1e-8


class TestTruncated:
    def test_roots_approach_essential_ray(self):
        # truncated eigenvalues near the real axis behave like Im ~ -1/X
        rect = SearchRect(1.6, 3.1, -0.3, -1e-4)
        model = WaveguideModel(L2=1, L3=2, variant="conductive", truncation=40.0)
        roots = eigenvalues_truncated(model, rect)
        assert roots
        assert all(-0.2 < r.location.imag < 0.0 for r in roots)

    def test_permittivity_truncated_matches_true_in_gap(self):
        model = WaveguideModel(
            L2=1, L3=2, variant="permittivity", delta=10.0, truncation=50.0
        )
        trunc = eigenvalues_truncated(model, GAP_RECT)
        true = eigenvalues_true(PERM, GAP_RECT)
        for t in trunc:
            assert min(abs(t.location - r.location) for r in true) < 1e-3


class TestSweepAndPollution:
    @pytest.fixture(scope="class")
    @classmethod
    def perm_sweep(cls):
        rect = SearchRect(0.01, math.pi / 2 - 1e-6, -0.02, 0.02)
        return truncation_sweep(PERM, [10.0, 20.0, 40.0], rect)

    def test_sweep_shape(self, perm_sweep):
        assert perm_sweep.X_list == (10.0, 20.0, 40.0)
        assert perm_sweep.trajectories
        for tr in perm_sweep.trajectories:
            xs = [x for x, _ in tr.points]
            assert xs == sorted(xs)

    def test_sweep_converges(self, perm_sweep):
        true = eigenvalues_true(PERM, GAP_RECT)
        for tr in perm_sweep.trajectories:
            if tr.points[-1][0] != 40.0:
                continue
            dists = [
                min(abs(z - r.location) for r in true) for _, z in tr.points
            ]
            assert dists[-1] <= dists[0] + 1e-12

    def test_pollution_report_selfadjoint_clean(self, perm_sweep):
        true = eigenvalues_true(PERM, GAP_RECT)
        reports = pollution_report(
            perm_sweep,
            true,
            essential_spectrum_selfadjoint(1.0, 2.0),
            pollution_enclosure(1.0, 1.0, (math.pi / 2) ** 2),
            imaginary_interval(0.0, 1.0),
        )
        assert reports
        assert all(
            r.classification is TrajectoryClass.CONVERGED_TO_EIGENVALUE
            for r in reports
        )

    def test_sweep_validates_input(self):
        with pytest.raises(ValueError):
            truncation_sweep(PERM, [10.0], GAP_RECT)
        with pytest.raises(ValueError):
            truncation_sweep(PERM, [20.0, 10.0], GAP_RECT)

    def test_report_requires_trajectories(self, perm_sweep):
        import dataclasses

        empty = dataclasses.replace(perm_sweep, trajectories=[])
        with pytest.raises(ValueError):
            pollution_report(
                empty,
                [],
                essential_spectrum_selfadjoint(1.0, 2.0),
                pollution_enclosure(1.0, 1.0, 1.0),
                imaginary_interval(0.0, 1.0),
            )


def deep_curve(roots):
    """Deepest root ladder: one root per mode group just beyond its branch
    point sqrt(c); the other two ladders sit at larger offsets (~0.5, ~1.2)."""
    return [r for r in roots if r.location.real - math.sqrt(r.c) < 0.35]


class TestAsymptote:
    def test_deviation_shrinks_with_re(self):
        # the deepest root ladder approaches Im = -1/2 like 1/Re
        band = lambda lo, hi: SearchRect(lo, hi, -0.4999, -0.35)
        r1 = deep_curve(eigenvalues_true(COND, band(15.0, 20.0)))
        r2 = deep_curve(eigenvalues_true(COND, band(30.0, 35.0)))
        assert r1 and r2
        d1 = max(abs(r.location.imag + 0.5) for r in r1)
        d2 = max(abs(r.location.imag + 0.5) for r in r2)
        assert d2 < d1

    def test_no_qualifying_roots(self):
        roots = eigenvalues_true(COND, COND_RECT)
        with pytest.raises(NoQualifyingRoots):
            branch_asymptote_check(roots, 100.0)
        with pytest.raises(ValueError):
            branch_asymptote_check(roots, -1.0)

    def test_check_value(self):
        roots = select_guided(COND, eigenvalues_true(COND, COND_RECT))
        got = branch_asymptote_check(roots, 7.0)
        want = max(
            abs(r.location.imag + 0.5)
            for r in roots
            if r.location.real >= 7.0
        )
        assert got == want


class TestCsvWriters:
    def test_roots_csv(self, tmp_path):
        roots = eigenvalues_true(PERM, GAP_RECT)
        path = tmp_path / "roots.csv"
        write_roots_csv(str(path), roots)
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["re", "im", "mult", "c", "n2", "n3", "sign", "residual"]
        assert len(rows) == 1 + len(roots)
        for row, r in zip(rows[1:], roots):
            assert float(row[0]) == pytest.approx(r.location.real, rel=1e-11)
            assert int(row[2]) == r.multiplicity
            assert (int(row[4]), int(row[5])) == r.modes[0]

    def test_sweep_csv(self, tmp_path):
        model = WaveguideModel(
            L2=1, L3=2, variant="permittivity", delta=10.0, truncation=10.0
        )
        roots = eigenvalues_truncated(model, GAP_RECT)
        path = tmp_path / "sweep.csv"
        write_sweep_csv(str(path), [(10.0, roots)])
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0][-1] == "X"
        assert all(row[-1] == "10" for row in rows[1:])
