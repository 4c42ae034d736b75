import numpy as np
import pytest

from dipising.physics.dipolar import CouplingGeometry, directed_qubit


def _signed_gamma(rng: np.random.Generator) -> float:
    return rng.choice([-1.0, 1.0]) * 10 ** rng.uniform(7, 11)


def draw_directed_instance(rng: np.random.Generator, d_max: float = 1e-6):
    """
    Random highest-weight qubit with J <= 3, 0 < |n| <= 3, J + n >= 0, and a random distance.
    """
    while True:
        two_j_down = int(rng.integers(0, 7))
        n = int(rng.choice([-3, -2, -1, 1, 2, 3]))
        two_j_up = two_j_down + 2 * n
        if two_j_up < 0:
            continue
        gamma_down, gamma_up = _signed_gamma(rng), _signed_gamma(rng)
        if gamma_up * two_j_up == gamma_down * two_j_down:
            continue
        qubit = directed_qubit(two_j_down, gamma_down, two_j_up, gamma_up)
        geometry = CouplingGeometry(10 ** rng.uniform(-9, np.log10(d_max)))
        return qubit, geometry


@pytest.fixture
def rng():
    return np.random.default_rng(20140117)
