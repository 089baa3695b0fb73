import numpy as np
import pytest

from qvdw import (
    DimensionLimitError,
    FullModelConfig,
    IdentificationError,
    NearResonanceError,
    build_h0,
    build_hint,
    dispersive_single_mode,
    dressed_transition,
    refractive_modulation,
    transition_shift,
)


def single_mode_cfg(omega=1.0, mode=5.0, g=0.05, n_max=30):
    return FullModelConfig(omega, (mode,), (), (g,), (), n_max)


class TestConfig:

    def test_coupling_count_mismatch(self):
        with pytest.raises(ValueError):
            FullModelConfig(1.0, (5.0,), (), (), (), 4)

    def test_dipole_matrix_shape_mismatch(self):
        with pytest.raises(ValueError):
            FullModelConfig(1.0, (5.0,), (3.0,), (0.1,), ((0.1, 0.2),), 4)

    def test_nonpositive_frequency(self):
        with pytest.raises(ValueError):
            FullModelConfig(1.0, (0.0,), (), (0.1,), (), 4)

    def test_n_max_too_small(self):
        with pytest.raises(ValueError):
            FullModelConfig(1.0, (), (), (), (), 1)

    def test_dim(self):
        cfg = FullModelConfig(1.0, (5.0,), (3.0,), (0.1,), ((0.1,),), 14)
        assert cfg.dim == 2 * 14 * 14


class TestBuildH0:

    def test_single_mode_diagonal(self):
        cfg = single_mode_cfg(omega=1.0, mode=1.0, g=0.0, n_max=2)
        h0 = build_h0(cfg)
        assert np.array_equal(np.diag(h0.entries).real, [-0.5, 0.5, 0.5, 1.5])
        assert np.array_equal(h0.entries, np.diag(np.diag(h0.entries)))

    def test_bare_qubit(self):
        cfg = FullModelConfig(2.0, (), (), (), (), 4)
        h0 = build_h0(cfg)
        assert np.array_equal(h0.entries.real, np.diag([-1.0, 1.0]))

    def test_trace_is_sum_of_level_energies(self):
        cfg = FullModelConfig(1.0, (5.0,), (3.0,), (0.1,), ((0.2,),), 3)
        h0 = build_h0(cfg)
        assert np.trace(h0.entries).real == pytest.approx(
            np.sum(np.diag(h0.entries).real), abs=0)

    def test_dimension_guard(self):
        cfg = FullModelConfig(1.0, (5.0,), (3.0,), (0.1,), ((0.2,),), 70)
        with pytest.raises(DimensionLimitError):
            build_h0(cfg)


class TestBuildHint:

    def test_zero_couplings_give_zero_matrix(self):
        cfg = single_mode_cfg(g=0.0, n_max=4)
        assert not np.any(build_hint(cfg).entries)

    def test_diagonal_vanishes(self):
        # every interaction term changes an excitation number
        cfg = FullModelConfig(1.0, (5.0,), (3.0,), (0.1,), ((0.3,),), 4)
        assert np.array_equal(np.diag(build_hint(cfg).entries), np.zeros(cfg.dim))

    def test_single_flip_matrix_element(self):
        # <0_q 1_f| H_int |1_q 0_f> = g for g sigma_x (a + a^dag)
        cfg = single_mode_cfg(g=0.1, n_max=2)
        hi = build_hint(cfg).entries
        assert hi[1, 2].real == pytest.approx(0.1, abs=0)

    def test_total_hamiltonian_exactly_hermitian(self):
        cfg = FullModelConfig(1.0, (5.0,), (3.0,), (0.1,), ((0.3,),), 5)
        h = build_h0(cfg).entries + build_hint(cfg).entries
        assert np.array_equal(h, h.conj().T)


class TestDressedTransition:

    def test_decoupled_shift_is_zero(self):
        cfg = FullModelConfig(1.0, (5.0,), (3.0,), (0.0,), ((0.0,),), 6)
        report = dressed_transition(cfg)
        assert abs(report.shift) <= 1e-12
        assert report.overlap_ground == pytest.approx(1.0, abs=1e-12)
        assert report.overlap_excited == pytest.approx(1.0, abs=1e-12)
        assert report.converged
        assert report.shift == report.dressed_transition - report.bare_transition

    def test_matches_perturbation_engine(self):
        cfg = single_mode_cfg(omega=1.0, mode=5.0, g=0.05, n_max=30)
        report = dressed_transition(cfg)
        pert = dispersive_single_mode(1.0, 5.0, 0.05, n_max=30)
        assert report.shift == pytest.approx(pert, abs=1e-6)

    def test_dipole_changes_the_shift(self):
        with_dipole = FullModelConfig(1.0, (5.0,), (3.0,), (0.05,), ((0.3,),), 10)
        without = FullModelConfig(1.0, (5.0,), (3.0,), (0.05,), ((0.0,),), 10)
        delta = dressed_transition(with_dipole).shift - dressed_transition(without).shift
        assert abs(delta) > 1e-8

    def test_identification_fails_at_strong_coupling(self):
        cfg = FullModelConfig(1.0, (1.0,), (), (2.0,), (), 12)
        with pytest.raises(IdentificationError):
            dressed_transition(cfg)

    def test_perturbative_consistency_quartic(self):
        # residual against second order drops ~16x when g is halved
        def residual(g):
            cfg = single_mode_cfg(omega=1.0, mode=5.0, g=g, n_max=20)
            exact = dressed_transition(cfg).shift
            h0 = np.diag(build_h0(cfg).entries).real
            pert = transition_shift(h0, build_hint(cfg), cfg.n_max, 0)
            return abs(exact - pert)

        ratio = residual(0.01) / residual(0.005)
        assert 16.0 * 0.7 <= ratio <= 16.0 * 1.3

    def test_truncation_is_cauchy(self):
        # successive truncation differences shrink until they reach the
        # double-precision noise floor
        noise_floor = 1e-13
        shifts = {}
        for n in range(8, 18, 2):
            cfg = FullModelConfig(1.0, (1.3,), (), (0.5,), (), n)
            shifts[n] = dressed_transition(cfg).dressed_transition
        diffs = [abs(shifts[n + 2] - shifts[n]) for n in range(8, 16, 2)]
        assert all(d < 1e-8 for d in diffs)
        for previous, current in zip(diffs, diffs[1:]):
            assert current < previous or current <= noise_floor


class TestDispersiveSingleMode:

    def test_zero_coupling(self):
        assert dispersive_single_mode(1.0, 5.0, 0.0) == 0.0

    def test_quadratic_scaling(self):
        small = dispersive_single_mode(1.0, 5.0, 0.01)
        double = dispersive_single_mode(1.0, 5.0, 0.02)
        assert double == pytest.approx(4.0 * small, rel=0.01)

    def test_near_resonance_rejected(self):
        with pytest.raises(NearResonanceError):
            dispersive_single_mode(1.0, 1.0, 0.01)

    def test_sign_for_mode_above_qubit(self):
        # mode above the qubit frequency pushes the transition down
        assert dispersive_single_mode(1.0, 5.0, 0.05) < 0.0


class TestRefractiveModulation:

    def test_vacuum(self):
        assert refractive_modulation(1.0, 1.0) == 1.0

    def test_modulated_value(self):
        assert refractive_modulation(1.0, 1.25) == pytest.approx(0.8, abs=0)

    def test_shift_negative_above_unity(self):
        for index in (1.1, 1.5, 2.0, 10.0):
            assert refractive_modulation(1.0, index) - 1.0 < 0.0

    def test_invalid_index(self):
        with pytest.raises(ValueError):
            refractive_modulation(1.0, 0.9)
