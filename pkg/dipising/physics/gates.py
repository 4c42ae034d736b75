"""
Two-qubit dynamics generated by the Ising form of the dipolar coupling: diagonal propagators, the
controlled phase and the controlled-Z gate time.

Phase convention: the diagonal entries of U(t) = exp(-i H t / hbar) are written exp(i phi_k), so
phi_k = -lambda_k t / hbar, reported in [0, 2 pi).
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from dipising.errors import ZeroCouplingError
from dipising.physics.cmatrix import ComplexMatrix, expm_hermitian, operator_norm
from dipising.physics.constants import HBAR, MU_0
from dipising.physics.dipolar import (
    CouplingGeometry,
    QubitChoice,
    dipole_hamiltonian,
    eta,
    ising_eigenvalues,
    qubit_subspace_indices,
)

log = logging.getLogger(__name__)

TWO_PI = 2 * np.pi
CZ = np.diag([1, 1, 1, -1]).astype(np.complex128)


def wrap_phase(phase):
    """
    Reduces angles to [0, 2 pi); works on scalars and arrays.
    """
    wrapped = np.mod(phase, TWO_PI)
    return np.where(wrapped >= TWO_PI, 0.0, wrapped)


def phase_distance(a: float, b: float) -> float:
    """
    Shortest distance between two angles on the circle.
    """
    difference = abs(float(wrap_phase(a - b)))
    return min(difference, TWO_PI - difference)


@dataclass(frozen=True)
class DiagonalPropagator:
    """
    diag(exp(i phi1), ..., exp(i phi4)) in the basis |dd>, |du>, |ud>, |uu>.
    """

    phases: tuple[float, float, float, float]

    def __post_init__(self):
        phases = tuple(float(phase) for phase in wrap_phase(np.asarray(self.phases, dtype=float)))
        if len(phases) != 4:
            raise ValueError(f"a two-qubit diagonal propagator needs 4 phases, got {len(phases)}")
        object.__setattr__(self, "phases", phases)

    @classmethod
    def from_matrix(cls, u: ComplexMatrix) -> "DiagonalPropagator":
        return cls(tuple(np.angle(np.diag(u))))

    @property
    def matrix(self) -> ComplexMatrix:
        return np.diag(np.exp(1j * np.asarray(self.phases)))


@dataclass(frozen=True)
class GateResult:
    t_cz: float
    phase_rate: float
    fidelity_at_tcz: float


class BruteForceEvolution(NamedTuple):
    """
    Full product-space propagator restricted to the qubit subspace, with the spectral norm of its
    block leading out of the subspace.
    """

    restricted: ComplexMatrix
    leakage: float


def propagate(qa: QubitChoice, qb: QubitChoice, g: CouplingGeometry, t: float) -> DiagonalPropagator:
    eigenvalues = np.asarray(ising_eigenvalues(qa, qb, g))
    return DiagonalPropagator(tuple(-eigenvalues * t / HBAR))


def brute_force_propagator(qa: QubitChoice, qb: QubitChoice, g: CouplingGeometry, t: float) -> BruteForceEvolution:
    """
    Exponentiates the full dipolar Hamiltonian; valid for any qubit choice, highest-weight or not.
    """
    h = dipole_hamiltonian(qa.space, qb.space, g)
    u = expm_hermitian(h, -t / HBAR)
    inside = qubit_subspace_indices(qa, qb)
    outside = np.setdiff1d(np.arange(h.shape[0]), inside)
    leakage = operator_norm(u[np.ix_(outside, inside)]) if outside.size else 0.0
    return BruteForceEvolution(u[np.ix_(inside, inside)], leakage)


def controlled_phase(u: DiagonalPropagator) -> float:
    phi1, phi2, phi3, phi4 = u.phases
    return float(wrap_phase(phi4 - phi3 - phi2 + phi1))


def canonicalize(u: DiagonalPropagator) -> DiagonalPropagator:
    """
    Removes the global phase and the single-qubit z phases, leaving diag(1, 1, 1, exp(i phi)).
    """
    return DiagonalPropagator((0.0, 0.0, 0.0, controlled_phase(u)))


def cz_fidelity(u: DiagonalPropagator) -> float:
    """
    |Tr(CZ^dagger U)| / 4 for the canonicalized propagator, i.e. |3 - exp(i phi)| / 4.
    """
    return float(abs(np.trace(CZ.conj().T @ canonicalize(u).matrix)) / 4)


def coupling_difference(q: QubitChoice) -> float:
    """
    gamma_up (J + n) - gamma_down J in rad/(s T); the controlled phase grows with its square.
    """
    return q.gamma_up * q.m_up - q.gamma_down * q.m_down


def controlled_phase_rate(qa: QubitChoice, qb: QubitChoice, g: CouplingGeometry) -> float:
    """
    d phi / dt = eta hbar [gamma_up (J + n) - gamma_down J]^2 in rad/s.
    """
    ising_eigenvalues(qa, qb, g)
    return eta(g) * HBAR * coupling_difference(qa) ** 2


def controlled_phase_gate_time(qa: QubitChoice, qb: QubitChoice, g: CouplingGeometry, phi: float) -> float:
    """
    Interaction time after which the controlled phase equals phi (radians, phi > 0).
    """
    rate = controlled_phase_rate(qa, qb, g)
    if rate == 0:
        raise ZeroCouplingError("gamma_up (J + n) equals gamma_down J, the controlled phase never accumulates")
    return phi / rate


def t_cz(qa: QubitChoice, qb: QubitChoice, g: CouplingGeometry) -> GateResult:
    ising_eigenvalues(qa, qb, g)
    difference = coupling_difference(qa)
    if difference == 0:
        raise ZeroCouplingError("gamma_up (J + n) equals gamma_down J, the controlled phase never accumulates")
    gate_time = 2 * np.pi**2 * g.d**3 / (MU_0 * HBAR * difference**2)
    fidelity = cz_fidelity(propagate(qa, qb, g, gate_time))
    log.debug("t_cz=%.6e s at d=%.3e m (fidelity %.12f)", gate_time, g.d, fidelity)
    return GateResult(t_cz=gate_time, phase_rate=np.pi / gate_time, fidelity_at_tcz=fidelity)
