"""
Time evolution of two identical qubits coupled by the dipolar interaction.

Every row compares the closed-form diagonal propagator (phases, controlled phase, CZ fidelity) with the
brute-force propagator of the full product space: its controlled phase is reported next to the closed-form
one and its off-subspace block as leakage.
With spin_half_demo the same evolution is run on two pure spin-1/2 qubits, where the flip-flop term
survives and swaps |ud> and |du>.
"""

import logging
import sys

import hydra
import numpy as np
import pandas as pd
from omegaconf import DictConfig

from dipising.data.catalog import PhysicalSystem
from dipising.errors import BadRangeError, DipolarError, ZeroCouplingError
from dipising.modeling.utils import require_positive, resolve_system, setup_environment
from dipising.output.writers import ResultWriter
from dipising.physics import gates
from dipising.physics.constants import HBAR, MU_0
from dipising.physics.dipolar import (
    CouplingGeometry,
    dipole_hamiltonian,
    flip_flop_element,
    leakage_norm,
    spin_half_qubit,
)

log = logging.getLogger(__name__)


def _time_grid(system: PhysicalSystem, geometry: CouplingGeometry, t: float | None, until_cz: bool, steps: int):
    if int(steps) != steps or steps < 1:
        raise BadRangeError(f"steps must be a positive integer, got {steps}")
    if until_cz == (t is not None):
        raise BadRangeError("give exactly one of t=<seconds> or until_cz=true")
    if until_cz:
        if system.coupling_difference == 0:
            raise ZeroCouplingError(f"{system.name}: the controlled phase never reaches pi")
        qubit = system.qubit_choice()
        horizon = gates.t_cz(qubit, qubit, geometry).t_cz
    else:
        horizon = float(t)
        if not horizon >= 0:
            raise BadRangeError(f"t must be non-negative, got {t}")
    return np.linspace(0.0, horizon, int(steps) + 1)


def _ising_rows(system: PhysicalSystem, geometry: CouplingGeometry, times: np.ndarray) -> pd.DataFrame:
    qubit = system.qubit_choice()
    rows = []
    for t in times:
        u = gates.propagate(qubit, qubit, geometry, t)
        brute = gates.brute_force_propagator(qubit, qubit, geometry, t)
        brute_diagonal = gates.DiagonalPropagator.from_matrix(brute.restricted)
        rows.append(
            {
                "t_s": t,
                "phi1": u.phases[0],
                "phi2": u.phases[1],
                "phi3": u.phases[2],
                "phi4": u.phases[3],
                "phi": gates.controlled_phase(u),
                "phi_brute_force": gates.controlled_phase(brute_diagonal),
                "cz_fidelity": gates.cz_fidelity(u),
                "leakage": brute.leakage,
            }
        )
    return pd.DataFrame(rows)


def _spin_half_rows(system: PhysicalSystem, geometry: CouplingGeometry, times: np.ndarray) -> pd.DataFrame:
    gamma = system.gamma_down
    qubit = spin_half_qubit(gamma)
    h = dipole_hamiltonian(qubit.space, qubit.space, geometry)
    flip_flop = abs(flip_flop_element(h, qubit, qubit))
    expected = MU_0 * gamma**2 * HBAR**2 / (8 * np.pi * geometry.d**3)
    log.info("spin-1/2 flip-flop element %.6e J (expected %.6e J)", flip_flop, expected)
    rows = []
    for t in times:
        brute = gates.brute_force_propagator(qubit, qubit, geometry, t)
        rows.append(
            {
                "t_s": t,
                "flip_flop_J": flip_flop,
                "expected_flip_flop_J": expected,
                "swap_probability": abs(brute.restricted[1, 2]) ** 2,
                "leakage": leakage_norm(h, qubit, qubit),
            }
        )
    return pd.DataFrame(rows)


def cmd_evolve(
    system: PhysicalSystem,
    d: float,
    writer: ResultWriter,
    t: float | None = None,
    until_cz: bool = False,
    steps: int = 10,
    spin_half_demo: bool = False,
) -> str:
    geometry = CouplingGeometry(d)
    times = _time_grid(system, geometry, t, until_cz, steps)
    if spin_half_demo:
        frame = _spin_half_rows(system, geometry, times)
    else:
        frame = _ising_rows(system, geometry, times)
        log.info("%s: max leakage %.3e over %d steps", system.name, frame["leakage"].max(), len(frame) - 1)
    return writer.render(frame)


@hydra.main(config_path="../../configs", config_name="evolve", version_base="1.3")
def main(cfg: DictConfig):
    setup_environment()
    try:
        d = require_positive("d", cfg.d)
        system = resolve_system(cfg)
        writer: ResultWriter = hydra.utils.instantiate(cfg.format)
        sys.stdout.write(
            cmd_evolve(
                system,
                d,
                writer,
                t=cfg.t,
                until_cz=cfg.until_cz,
                steps=cfg.steps,
                spin_half_demo=cfg.spin_half_demo,
            )
        )
    except DipolarError as e:
        log.error("evolve failed: %s", e)
        sys.exit(1)


if __name__ == "__main__":
    main()
