"""Tests for the exact spectrum-set representations and builders."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxspec.spectra import (
    SpectrumSet,
    SymbolicReal,
    endpoint_value,
    essential_spectrum_conductive,
    essential_spectrum_selfadjoint,
    imaginary_interval,
    pollution_enclosure,
    safe_zone,
    set_contains,
    set_distance,
)


class TestSymbolicReal:
    def test_pi_over_two_is_exact(self):
        e = SymbolicReal(Fraction(1, 2), 1)
        assert e.value() == math.pi / 2

    def test_sqrt(self):
        e = SymbolicReal(Fraction(3), 0, Fraction(2))
        assert e.value() == 3.0 * math.sqrt(2.0)

    def test_negation_and_float(self):
        e = SymbolicReal.of(Fraction(5, 4))
        assert float(-e) == -1.25


class TestEssentialSpectra:
    def test_conductive_exact_endpoints(self):
        s = essential_spectrum_conductive(1.0, 2.0)
        (lo1, hi1), (lo2, hi2) = s.real_parts
        assert endpoint_value(lo1) == -math.inf
        # endpoints are stored symbolically as pi/L, not as a rounded float
        assert isinstance(hi1, SymbolicReal) and hi1.value() == -math.pi / 2
        assert isinstance(lo2, SymbolicReal) and lo2.value() == math.pi / 2
        assert endpoint_value(hi2) == math.inf
        assert set(s.points) == {0j, -0.5j, -1j}

    def test_selfadjoint_points(self):
        s = essential_spectrum_selfadjoint(1.0, 2.0)
        assert set(s.points) == {0j}
        assert s.real_parts[1][0].value() == math.pi / 2

    def test_threshold_uses_larger_length(self):
        s = essential_spectrum_conductive(3.0, 2.0)
        assert s.real_parts[1][0].value() == math.pi / 3

    def test_rejects_bad_lengths(self):
        with pytest.raises(ValueError):
            essential_spectrum_conductive(0.0, 1.0)


class TestPollutionEnclosure:
    def test_exact_sqrt_endpoint(self):
        s = pollution_enclosure(1.0, 1.0, 2.0)
        r = s.real_parts[1][0]
        assert isinstance(r, SymbolicReal)
        assert r.value() == math.sqrt(2.0)

    def test_scaling(self):
        s = pollution_enclosure(2.0, 2.0, 8.0)
        assert s.real_parts[1][0].value() == pytest.approx(math.sqrt(2.0), rel=1e-15)

    def test_zero_threshold_covers_line(self):
        s = pollution_enclosure(1.0, 1.0, 0.0)
        assert s.contains(123.456)
        assert not s.contains(1.0 - 1.0j)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            pollution_enclosure(0.0, 1.0, 1.0)


class TestDistanceAndMembership:
    def test_distance_to_ray(self):
        s = essential_spectrum_conductive(1.0, 2.0)
        # pi/2 away horizontally from the right ray start
        assert s.distance(math.pi / 2 + 1.0) == 0.0
        assert s.distance(complex(math.pi / 2, -0.3)) == pytest.approx(0.3)

    def test_distance_to_point(self):
        s = essential_spectrum_conductive(1.0, 2.0)
        assert s.distance(0.1 - 0.5j) == pytest.approx(0.1)

    def test_distance_nearest_feature_wins(self):
        s = essential_spectrum_conductive(1.0, 2.0)
        z = 1.3 - 0.05j  # inside the gap, near the right ray
        brute = min(
            abs(z - (math.pi / 2 + t)) for t in [k * 1e-4 for k in range(10000)]
        )
        brute = min(brute, abs(z), abs(z + 0.5j), abs(z + 1j), abs(z - (-math.pi / 2)))
        assert s.distance(z) == pytest.approx(brute, abs=1e-6)

    def test_imaginary_interval(self):
        s = imaginary_interval(1.0, 1.0)
        assert s.contains(-0.7j)
        assert not s.contains(-1.1j)
        assert s.distance(0.2 - 0.5j) == pytest.approx(0.2)

    def test_membership_tolerance(self):
        s = essential_spectrum_selfadjoint(1.0, 2.0)
        assert set_contains(s, math.pi / 2 - 1e-10)
        assert not set_contains(s, math.pi / 2 - 1e-3)

    @given(
        st.complex_numbers(max_magnitude=50.0, allow_nan=False, allow_infinity=False)
    )
    @settings(max_examples=200)
    def test_distance_oracle_property(self, z):
        s = essential_spectrum_conductive(1.0, 2.0)
        e = math.pi / 2
        # the two rays are reflection-symmetric: nearest ray point is at
        # Re = max(|Re z|, e) on the side of z
        want = min(
            math.hypot(max(0.0, e - abs(z.real)), z.imag),
            abs(z),
            abs(z + 0.5j),
            abs(z + 1j),
        )
        assert s.distance(z) == pytest.approx(want, abs=1e-12)


class TestSetAlgebra:
    def test_normalized_merges_overlaps(self):
        a = SymbolicReal.of(0)
        b = SymbolicReal.of(2)
        c = SymbolicReal.of(1)
        d = SymbolicReal.of(3)
        s = SpectrumSet(real_parts=((a, b), (c, d))).normalized()
        assert len(s.real_parts) == 1
        assert endpoint_value(s.real_parts[0][1]) == 3.0

    def test_normalized_idempotent(self):
        s = essential_spectrum_conductive(1.0, 2.0)
        assert s.normalized().json_dict() == s.json_dict()

    def test_mirrored_symmetric_set_unchanged(self):
        s = essential_spectrum_conductive(1.0, 2.0)
        assert s.mirrored().json_dict() == s.json_dict()

    def test_mirrored_flips_points(self):
        s = SpectrumSet(points=(1.0 - 2.0j,)).mirrored()
        assert s.points == (-1.0 - 2.0j,)

    def test_rejects_inverted_interval(self):
        with pytest.raises(ValueError):
            SpectrumSet(
                real_parts=((SymbolicReal.of(1), SymbolicReal.of(0)),)
            ).normalized()

    def test_json_roundtrip(self):
        s = essential_spectrum_conductive(1.0, 2.0)
        d = json.loads(s.to_json())
        assert d["real"][0] == ["-inf", -math.pi / 2]
        assert [0.0, -0.5] in d["points"]


class TestSafeZone:
    def test_predicate(self):
        pol = pollution_enclosure(1.0, 1.0, (math.pi / 2) ** 2)
        pred = safe_zone(pol, 1.0, 1.0)
        assert pred(1.0 - 0.3j)  # in the gap, off the imaginary axis
        assert not pred(3.0)  # on the pollution ray
        assert not pred(-0.5j)  # on the imaginary segment

    def test_distance_helper(self):
        s = imaginary_interval(2.0, 1.0)
        assert set_distance(s, -3.0j) == pytest.approx(1.0)
