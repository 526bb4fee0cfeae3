"""Tests for the interface, decay, and symbol checks behind the essential
spectrum computation."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxspec.appendix import (
    SignPattern,
    DtNEntry,
    dtn_entries,
    dtn_sign_pattern,
    fourier_symbol_det,
    fourier_symbol_matrix,
    weyl_decay_ratio,
)

mpmath.mp.dps = 40


class TestDtNEntries:
    def test_formula_against_mpmath(self):
        entries = dtn_entries(0.3, 1.0, 2.0, 20)
        for e in entries:
            want = e.kappa * (0.7 * mpmath.coth(e.kappa) - 0.3)
            assert e.value == pytest.approx(float(want), rel=1e-13)

    def test_sorted_and_counted(self):
        entries = dtn_entries(0.3, 1.0, 2.0, 50)
        assert len(entries) == 50
        kappas = [e.kappa for e in entries]
        assert kappas == sorted(kappas)

    def test_first_kappa(self):
        # smallest transverse frequency for L2=1, L3=2 with both indices >= 1
        entries = dtn_entries(0.5, 1.0, 2.0, 1)
        assert entries[0].kappa == pytest.approx(math.pi * math.hypot(1.0, 0.5))

    def test_rejects_nu_outside(self):
        for nu in (0.0, 1.0, -0.1, 2.0):
            with pytest.raises(ValueError):
                dtn_entries(nu, 1.0, 2.0, 10)

    def test_spot_value(self):
        # kappa = pi/2 is not in the mode set here, but the formula itself is
        # checked at a hand value
        e = DtNEntry(math.pi / 2, 0.0)
        want = (math.pi / 2) * (0.7 / math.tanh(math.pi / 2) - 0.3)
        assert want == pytest.approx(0.728, abs=2e-3)


class TestSignPattern:
    @pytest.mark.parametrize("nu", [0.05 * k for k in range(1, 10)])
    def test_all_positive_below_half(self, nu):
        pat = dtn_sign_pattern(dtn_entries(nu, 1.0, 2.0, 200))
        assert pat is SignPattern.ALL_POSITIVE

    @pytest.mark.parametrize("nu", [0.05 * k for k in range(11, 20)])
    def test_one_change_above_half(self, nu):
        pat = dtn_sign_pattern(dtn_entries(nu, 1.0, 2.0, 200))
        assert pat is SignPattern.ONE_SIGN_CHANGE

    def test_synthetic_positive(self):
        entries = [DtNEntry(float(k), 1.0) for k in range(1, 5)]
        assert dtn_sign_pattern(entries) is SignPattern.ALL_POSITIVE

    def test_synthetic_alternating_is_other(self):
        entries = [DtNEntry(1.0, 1.0), DtNEntry(2.0, -1.0), DtNEntry(3.0, 1.0)]
        assert dtn_sign_pattern(entries) is SignPattern.OTHER


class TestWeylDecay:
    def test_order_bound(self):
        kappas = np.arange(2.0, 20.5, 0.5)
        ratios = [weyl_decay_ratio(k) for k in kappas]
        envelope = [k**1.5 * (2.0 / math.expm1(2.0 * k)) for k in kappas]
        consts = [r / e for r, e in zip(ratios, envelope)]
        C = max(consts)
        assert all(r <= C * e + 1e-300 for r, e in zip(ratios, envelope))
        # the fitted constant is genuinely order-one, not drifting
        assert C < 1.0

    def test_decreasing(self):
        ratios = [weyl_decay_ratio(k) for k in np.arange(2.0, 20.5, 1.0)]
        assert all(a > b for a, b in zip(ratios, ratios[1:]))

    def test_tail_value(self):
        assert weyl_decay_ratio(20.0) < 1e-8
        assert weyl_decay_ratio(20.0) / weyl_decay_ratio(2.0) < 1e-12

    def test_quadrature_oracle(self):
        # independent high-precision recomputation of the defining quotient
        kappa = 3.0
        amp = 2.0 * kappa**2 * (mpmath.coth(kappa) - 1.0)
        norm_sq = mpmath.quad(
            lambda x: (mpmath.cosh(kappa * x) / mpmath.sinh(kappa)) ** 2, [0, 1]
        )
        kappa1 = math.pi * math.hypot(1.0, 0.5)
        want = float(amp * mpmath.sqrt(norm_sq) / (kappa1 * mpmath.sqrt(kappa)))
        assert weyl_decay_ratio(kappa) == pytest.approx(want, rel=1e-9)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            weyl_decay_ratio(0.0)


class TestFourierSymbol:
    def test_matrix_blocks(self):
        m = fourier_symbol_matrix(2.0 - 1.0j, 0.7, 1, 2, 1.0, 2.0)
        assert m.shape == (6, 6)
        # diagonal carries -i*omega on the first block, +i*omega on the second
        assert np.allclose(np.diag(m)[:3], -1j * (2.0 - 1.0j))
        assert np.allclose(np.diag(m)[3:], 1j * (2.0 - 1.0j))
        # the curl blocks are transposes of each other up to sign structure:
        # determinant must be basis-independent, checked below

    def test_mpmath_determinant_oracle(self):
        for om, xi, n2, n3 in [
            (1.3 - 0.4j, 0.9, 1, 2),
            (-2.0 + 1.0j, -1.5, 0, 3),
            (0.5j, 2.0, 2, 0),
        ]:
            m = fourier_symbol_matrix(om, xi, n2, n3, 1.0, 2.0)
            want = complex(mpmath.det(mpmath.matrix(m.tolist())))
            num, closed = fourier_symbol_det(om, xi, n2, n3, 1.0, 2.0)
            scale = max(1.0, abs(want))
            assert abs(num - want) < 1e-10 * scale
            assert abs(closed - want) < 1e-10 * scale

    def test_spot_value(self):
        num, closed = fourier_symbol_det(1.0, 0.0, 1, 0, 1.0, 1.0)
        want = (math.pi**2 - 1.0) ** 2
        assert num == pytest.approx(want, rel=1e-12)
        assert closed == pytest.approx(want, rel=1e-12)

    def test_zero_at_omega_zero(self):
        num, closed = fourier_symbol_det(0.0, 1.0, 1, 1, 1.0, 2.0)
        assert abs(num) < 1e-12 and closed == 0.0

    def test_zero_on_dispersion_surface(self):
        c = (math.pi) ** 2 + (math.pi / 2) ** 2
        xi = 0.8
        om = math.sqrt(xi**2 + c)
        num, closed = fourier_symbol_det(om, xi, 1, 1, 1.0, 2.0)
        assert abs(closed) < 1e-9
        assert abs(num) < 1e-9 * max(1.0, abs(om) ** 6)

    @given(
        st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False),
        st.floats(-10.0, 10.0),
        st.integers(0, 5),
        st.integers(0, 5),
    )
    @settings(max_examples=300)
    def test_identity_property(self, om, xi, n2, n3):
        num, closed = fourier_symbol_det(om, xi, n2, n3, 1.0, 2.0)
        assert abs(num - closed) / (1.0 + abs(closed)) < 1e-10
