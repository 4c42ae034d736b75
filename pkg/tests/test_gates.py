import numpy as np
import pytest

from dipising.errors import NotHighestWeightError, ZeroCouplingError
from dipising.physics.constants import HBAR, MU_B
from dipising.physics.dipolar import CouplingGeometry, directed_qubit, spin_half_qubit
from dipising.physics.gates import (
    DiagonalPropagator,
    brute_force_propagator,
    canonicalize,
    controlled_phase,
    controlled_phase_gate_time,
    controlled_phase_rate,
    cz_fidelity,
    phase_distance,
    propagate,
    t_cz,
)
from tests.conftest import draw_directed_instance

RB = directed_qubit(2, -4.4e10, 4, 4.4e10)
BH2 = directed_qubit(0, -3.8e7, 4, -3.8e7)
NV = directed_qubit(2, 2.3 * MU_B / HBAR, 0, 0.0)


def test_propagate_at_zero_time_is_identity():
    assert propagate(RB, RB, CouplingGeometry(1e-7), 0.0).phases == (0.0, 0.0, 0.0, 0.0)


@pytest.mark.parametrize("t", [1e-3, 1.0, 1e4])
def test_j_zero_levels_only_evolve_last_phase(t):
    phases = propagate(BH2, BH2, CouplingGeometry(1e-7), t).phases
    assert phases[:3] == (0.0, 0.0, 0.0)
    assert phases[3] > 0


def test_phases_are_reported_in_unit_circle_range():
    phases = propagate(RB, RB, CouplingGeometry(1e-7), 0.123).phases
    assert all(0 <= phase < 2 * np.pi for phase in phases)


def test_propagate_requires_highest_weight():
    qubit = spin_half_qubit(1e10)
    with pytest.raises(NotHighestWeightError):
        propagate(qubit, qubit, CouplingGeometry(1e-7), 1.0)


def test_controlled_phase_reaches_pi_at_t_cz():
    geometry = CouplingGeometry(1e-7)
    result = t_cz(RB, RB, geometry)
    phi = controlled_phase(propagate(RB, RB, geometry, result.t_cz))
    assert phase_distance(phi, np.pi) <= 1e-9


def test_controlled_phase_at_zero_time():
    assert controlled_phase(propagate(RB, RB, CouplingGeometry(1e-7), 0.0)) == 0.0


def test_rb_phase_rate():
    geometry = CouplingGeometry(1e-7)
    assert controlled_phase_rate(RB, RB, geometry) == pytest.approx(3.675e2, rel=5e-3)
    phi = controlled_phase(propagate(RB, RB, geometry, 1e-3))
    assert phi == pytest.approx(0.3675, rel=5e-3)


@pytest.mark.parametrize(
    "qubit,d,expected",
    [
        (BH2, 1e-7, 26010.0),
        (RB, 1e-6, 8.5),
        (RB, 1e-7, 8.5e-3),
        (NV, 1e-8, 3.6e-6),
    ],
)
def test_gate_times_of_case_studies(qubit, d, expected):
    result = t_cz(qubit, qubit, CouplingGeometry(d))
    assert result.t_cz == pytest.approx(expected, rel=0.02)
    assert result.phase_rate == pytest.approx(np.pi / result.t_cz, rel=1e-15)
    assert result.fidelity_at_tcz == pytest.approx(1.0, abs=1e-10)


def test_zero_coupling_is_rejected():
    qubit = directed_qubit(2, 2e10, 4, 1e10)
    with pytest.raises(ZeroCouplingError):
        t_cz(qubit, qubit, CouplingGeometry(1e-7))


@pytest.mark.parametrize(
    "phi,expected",
    [(np.pi, 1.0), (0.0, 0.5), (np.pi / 2, np.sqrt(10) / 4)],
)
def test_cz_fidelity(phi, expected):
    assert cz_fidelity(DiagonalPropagator((0.0, 0.0, 0.0, phi))) == pytest.approx(expected, abs=1e-12)


def test_cz_fidelity_ignores_local_phases():
    u = DiagonalPropagator((0.3, 0.3 + 1.1, 0.3 + 0.4, 0.3 + 1.1 + 0.4 + np.pi))
    assert cz_fidelity(u) == pytest.approx(1.0, abs=1e-12)
    assert canonicalize(u).phases[:3] == (0.0, 0.0, 0.0)
    assert phase_distance(canonicalize(u).phases[3], np.pi) <= 1e-12


def test_diagonal_propagator_from_matrix():
    phases = (0.1, 1.0, 4.0, 6.0)
    u = DiagonalPropagator.from_matrix(np.diag(np.exp(1j * np.array(phases))))
    for expected, actual in zip(phases, u.phases):
        assert phase_distance(expected, actual) <= 1e-12
        assert 0 <= actual < 2 * np.pi


def test_diagonal_propagator_matrix_is_unitary_diagonal():
    matrix = DiagonalPropagator((0.0, 0.5, 1.5, np.pi)).matrix
    assert np.allclose(matrix @ matrix.conj().T, np.eye(4), atol=1e-15)
    assert matrix[3, 3] == pytest.approx(-1.0)


def test_phase_is_linear_in_time():
    geometry = CouplingGeometry(1e-7)
    for t in (1e-4, 3.3e-3, 2e-2):
        phi_t = controlled_phase(propagate(RB, RB, geometry, t))
        phi_2t = controlled_phase(propagate(RB, RB, geometry, 2 * t))
        assert phase_distance(phi_2t, 2 * phi_t) <= 1e-10


def test_gate_time_is_cubic_in_distance():
    d = 1e-7
    ratio = t_cz(RB, RB, CouplingGeometry(2.5 * d)).t_cz / t_cz(RB, RB, CouplingGeometry(d)).t_cz
    assert ratio == pytest.approx(2.5**3, rel=1e-12)


def test_larger_n_shortens_gate_time():
    geometry = CouplingGeometry(1e-7)
    single = directed_qubit(0, 1e9, 2, 1e9)
    double = directed_qubit(0, 1e9, 4, 1e9)
    ratio = t_cz(single, single, geometry).t_cz / t_cz(double, double, geometry).t_cz
    assert ratio == pytest.approx(4.0, rel=1e-12)


def test_controlled_phase_gate_time_generalizes_t_cz():
    geometry = CouplingGeometry(1e-7)
    assert controlled_phase_gate_time(RB, RB, geometry, np.pi) == pytest.approx(t_cz(RB, RB, geometry).t_cz, rel=1e-12)
    assert controlled_phase_gate_time(RB, RB, geometry, np.pi / 4) == pytest.approx(
        t_cz(RB, RB, geometry).t_cz / 4, rel=1e-12
    )


def test_closed_form_matches_brute_force_propagator(rng):
    for _ in range(100):
        qubit, geometry = draw_directed_instance(rng)
        gate_time = t_cz(qubit, qubit, geometry).t_cz
        t = rng.uniform(0, 2 * gate_time)
        closed_form = propagate(qubit, qubit, geometry, t)
        brute = brute_force_propagator(qubit, qubit, geometry, t)
        brute_phases = np.angle(np.diag(brute.restricted))
        for expected, actual in zip(closed_form.phases, brute_phases):
            assert phase_distance(expected, actual) <= 1e-9
        assert np.max(np.abs(brute.restricted - np.diag(np.diag(brute.restricted)))) <= 1e-10
        assert brute.leakage <= 1e-10


def test_fidelity_is_one_at_t_cz_on_random_instances(rng):
    for _ in range(50):
        qubit, geometry = draw_directed_instance(rng)
        assert t_cz(qubit, qubit, geometry).fidelity_at_tcz == pytest.approx(1.0, abs=1e-10)


def test_spin_half_brute_force_swaps_excitation():
    qubit = spin_half_qubit(4.4e10)
    geometry = CouplingGeometry(1e-7)
    brute = brute_force_propagator(qubit, qubit, geometry, 0.1)
    assert abs(brute.restricted[1, 2]) ** 2 > 0.1
    assert brute.leakage == pytest.approx(0.0, abs=1e-12)
