"""
Magnetic dipole-dipole coupling of two angular momentum carriers.

A particle is modelled as a direct sum of multiplets (sectors), each with its own gyromagnetic
ratio, so mu = gamma_s * hbar * J holds inside every sector. Two particles sit on the laboratory
z-axis at distance d. When both qubit levels are highest-weight states |j, j> the coupling restricted
to the qubit subspace is exactly of Ising form.
"""

import logging
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from dipising.errors import (
    BadRangeError,
    IndexOutOfSpaceError,
    InvalidSpaceError,
    NotHighestWeightError,
    SpeciesMismatchError,
)
from dipising.physics.angmom import (
    AngularMomentumLabel,
    jminus_matrix,
    jplus_matrix,
    jx_matrix,
    jy_matrix,
    jz_matrix,
)
from dipising.physics.cmatrix import ComplexMatrix, kron, operator_norm
from dipising.physics.constants import HBAR, MU_0

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sector:
    """
    One multiplet of a particle with gyromagnetic ratio gamma in rad/(s T).
    """

    j: AngularMomentumLabel
    gamma: float

    def __post_init__(self):
        if not np.isfinite(self.gamma):
            raise InvalidSpaceError(f"gyromagnetic ratio must be finite, got {self.gamma}")
        object.__setattr__(self, "gamma", float(self.gamma))

    @property
    def dim(self) -> int:
        return self.j.dim


@dataclass(frozen=True)
class ParticleSpace:
    """
    Direct sum of sectors; the basis is the concatenation of the sector bases in order.
    """

    sectors: tuple[Sector, ...]

    def __post_init__(self):
        sectors = tuple(self.sectors)
        if not sectors:
            raise InvalidSpaceError("a particle space needs at least one sector")
        if len(set(sectors)) != len(sectors):
            raise InvalidSpaceError(f"duplicate (j, gamma) sectors in {sectors}")
        object.__setattr__(self, "sectors", sectors)

    @property
    def dim(self) -> int:
        return sum(sector.dim for sector in self.sectors)

    @property
    def offsets(self) -> list[int]:
        offsets = np.cumsum([0] + [sector.dim for sector in self.sectors[:-1]])
        return [int(offset) for offset in offsets]

    def basis_index(self, sector: int, two_m: int) -> int:
        if not 0 <= sector < len(self.sectors):
            raise IndexOutOfSpaceError(f"sector {sector} outside a space with {len(self.sectors)} sectors")
        try:
            position = self.sectors[sector].j.index_of(two_m)
        except ValueError as e:
            raise IndexOutOfSpaceError(str(e)) from e
        return self.offsets[sector] + position


class Level(NamedTuple):
    sector: int
    two_m: int


@dataclass(frozen=True)
class QubitChoice:
    """
    The two levels |down> and |up> of a qubit selected inside a particle space.
    """

    space: ParticleSpace
    down: Level
    up: Level

    def __post_init__(self):
        object.__setattr__(self, "down", Level(*self.down))
        object.__setattr__(self, "up", Level(*self.up))
        if self.index_down == self.index_up:
            raise InvalidSpaceError("qubit levels must address distinct basis states")

    @property
    def index_down(self) -> int:
        return self.space.basis_index(*self.down)

    @property
    def index_up(self) -> int:
        return self.space.basis_index(*self.up)

    def _is_highest(self, level: Level) -> bool:
        return level.two_m == self.space.sectors[level.sector].j.two_j

    @property
    def highest_weight(self) -> bool:
        return self._is_highest(self.down) and self._is_highest(self.up)

    @property
    def gamma_down(self) -> float:
        return self.space.sectors[self.down.sector].gamma

    @property
    def gamma_up(self) -> float:
        return self.space.sectors[self.up.sector].gamma

    @property
    def m_down(self) -> float:
        return self.down.two_m / 2

    @property
    def m_up(self) -> float:
        return self.up.two_m / 2


@dataclass(frozen=True)
class CouplingGeometry:
    """
    Centre-to-centre distance d (metres) of two dipoles placed on the z-axis.
    """

    d: float

    def __post_init__(self):
        if not (np.isfinite(self.d) and self.d > 0):
            raise BadRangeError(f"distance must be positive, got {self.d}")
        object.__setattr__(self, "d", float(self.d))


class IsingEigenvalues(NamedTuple):
    """
    Energies (joules) of |dd>, |du>, |ud>, |uu> under the Ising form of the coupling.
    """

    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float


def directed_qubit(two_j_down: int, gamma_down: float, two_j_up: int, gamma_up: float) -> QubitChoice:
    """
    Builds the qubit |down> = |J, J>, |up> = |J+n, J+n> on a two-sector particle space.
    """
    space = ParticleSpace(
        (
            Sector(AngularMomentumLabel(two_j_down), gamma_down),
            Sector(AngularMomentumLabel(two_j_up), gamma_up),
        )
    )
    return QubitChoice(space, Level(0, two_j_down), Level(1, two_j_up))


def spin_half_qubit(gamma: float) -> QubitChoice:
    """
    Pure spin-1/2 qubit, |down> = |1/2, -1/2>, |up> = |1/2, 1/2>. It is not a highest-weight choice.
    """
    space = ParticleSpace((Sector(AngularMomentumLabel(1), gamma),))
    return QubitChoice(space, Level(0, -1), Level(0, 1))


def _sector_operator(
    p: ParticleSpace,
    builder: Callable[[AngularMomentumLabel], ComplexMatrix],
    weight: Callable[[Sector], float],
) -> ComplexMatrix:
    matrix = np.zeros((p.dim, p.dim), dtype=np.complex128)
    for offset, sector in zip(p.offsets, p.sectors):
        block = slice(offset, offset + sector.dim)
        matrix[block, block] = weight(sector) * builder(sector.j)
    return matrix


def _moment_weight(sector: Sector) -> float:
    return sector.gamma * HBAR


def moment_z(p: ParticleSpace) -> ComplexMatrix:
    return _sector_operator(p, jz_matrix, _moment_weight)


def moment_plus(p: ParticleSpace) -> ComplexMatrix:
    return _sector_operator(p, jplus_matrix, _moment_weight)


def moment_minus(p: ParticleSpace) -> ComplexMatrix:
    return _sector_operator(p, jminus_matrix, _moment_weight)


def moment_x(p: ParticleSpace) -> ComplexMatrix:
    return _sector_operator(p, jx_matrix, _moment_weight)


def moment_y(p: ParticleSpace) -> ComplexMatrix:
    return _sector_operator(p, jy_matrix, _moment_weight)


def angular_momentum_z(p: ParticleSpace) -> ComplexMatrix:
    """
    Jz over all sectors in units of hbar, without gyromagnetic weighting.
    """
    return _sector_operator(p, jz_matrix, lambda sector: 1.0)


def eta(g: CouplingGeometry) -> float:
    return MU_0 / (2 * np.pi * g.d**3)


def dipole_hamiltonian(pa: ParticleSpace, pb: ParticleSpace, g: CouplingGeometry) -> ComplexMatrix:
    """
    Dipole-dipole Hamiltonian in joules on the product space of pa and pb, written with ladder operators:
    mu0 / (4 pi d^3) * [-2 mu_az mu_bz + (mu_a+ mu_b- + mu_a- mu_b+) / 2].
    """
    prefactor = MU_0 / (4 * np.pi * g.d**3)
    ising = kron(moment_z(pa), moment_z(pb))
    flip_flop = kron(moment_plus(pa), moment_minus(pb)) + kron(moment_minus(pa), moment_plus(pb))
    log.debug("dipole hamiltonian on %d x %d product space, d=%.3e m", pa.dim, pb.dim, g.d)
    return prefactor * (-2 * ising + 0.5 * flip_flop)


def dipole_hamiltonian_vector_form(pa: ParticleSpace, pb: ParticleSpace, g: CouplingGeometry) -> ComplexMatrix:
    """
    Same Hamiltonian from Cartesian components: mu0 / (4 pi d^3) * [mu_a . mu_b - 3 mu_az mu_bz].
    """
    prefactor = MU_0 / (4 * np.pi * g.d**3)
    dot = (
        kron(moment_x(pa), moment_x(pb))
        + kron(moment_y(pa), moment_y(pb))
        + kron(moment_z(pa), moment_z(pb))
    )
    return prefactor * (dot - 3 * kron(moment_z(pa), moment_z(pb)))


def qubit_subspace_indices(qa: QubitChoice, qb: QubitChoice) -> list[int]:
    """
    Product-space indices of |dd>, |du>, |ud>, |uu> (particle a first).
    """
    dim_b = qb.space.dim
    return [
        ia * dim_b + ib
        for ia in (qa.index_down, qa.index_up)
        for ib in (qb.index_down, qb.index_up)
    ]


def _check_shape(h: ComplexMatrix, qa: QubitChoice, qb: QubitChoice):
    dim = qa.space.dim * qb.space.dim
    if h.shape != (dim, dim):
        raise IndexOutOfSpaceError(f"operator of shape {h.shape} does not act on a {dim}-dimensional product space")


def qubit_projection(h: ComplexMatrix, qa: QubitChoice, qb: QubitChoice) -> ComplexMatrix:
    _check_shape(h, qa, qb)
    indices = qubit_subspace_indices(qa, qb)
    return h[np.ix_(indices, indices)]


def leakage_norm(h: ComplexMatrix, qa: QubitChoice, qb: QubitChoice) -> float:
    """
    Spectral norm of Q H P, P the projector on the qubit subspace and Q = 1 - P.
    Zero means the qubit subspace is invariant under h.
    """
    _check_shape(h, qa, qb)
    inside = qubit_subspace_indices(qa, qb)
    outside = np.setdiff1d(np.arange(h.shape[0]), inside)
    if outside.size == 0:
        return 0.0
    return operator_norm(h[np.ix_(outside, inside)])


def flip_flop_element(h: ComplexMatrix, qa: QubitChoice, qb: QubitChoice) -> complex:
    """
    Matrix element <du| h |ud> exchanging the excitation between the two qubits.
    """
    return complex(qubit_projection(h, qa, qb)[1, 2])


def ising_eigenvalues(qa: QubitChoice, qb: QubitChoice, g: CouplingGeometry) -> IsingEigenvalues:
    if not (qa.highest_weight and qb.highest_weight):
        raise NotHighestWeightError("closed-form eigenvalues need |j, j> qubit levels on both particles")
    if qa != qb:
        raise SpeciesMismatchError("closed-form eigenvalues assume both qubits are the same physical system")
    coupling = eta(g) * HBAR**2
    j_down, j_up = qa.m_down, qa.m_up
    gamma_down, gamma_up = qa.gamma_down, qa.gamma_up
    mixed = -coupling * gamma_down * gamma_up * j_down * j_up
    return IsingEigenvalues(
        -coupling * gamma_down**2 * j_down**2,
        mixed,
        mixed,
        -coupling * gamma_up**2 * j_up**2,
    )
