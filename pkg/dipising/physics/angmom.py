"""
Angular momentum operators of a single multiplet |j, m>, in units of hbar.

Basis order is fixed to m = j, j-1, ..., -j, so the highest-weight state |j, j> is always
the first basis vector of a multiplet.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from dipising.physics.cmatrix import ComplexMatrix


@dataclass(frozen=True, order=True)
class AngularMomentumLabel:
    """
    Quantum number j stored as the integer 2j so half-integers stay exact.
    """

    two_j: int

    def __post_init__(self):
        if int(self.two_j) != self.two_j or self.two_j < 0:
            raise ValueError(f"two_j must be a non-negative integer, got {self.two_j}")
        object.__setattr__(self, "two_j", int(self.two_j))

    @classmethod
    def from_j(cls, j: float | Fraction) -> "AngularMomentumLabel":
        two_j = 2 * float(j)
        if not two_j.is_integer():
            raise ValueError(f"j must be an integer or half-integer, got {j}")
        return cls(int(two_j))

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def dim(self) -> int:
        return self.two_j + 1

    @property
    def two_m_values(self) -> list[int]:
        return list(range(self.two_j, -self.two_j - 1, -2))

    def index_of(self, two_m: int) -> int:
        """
        Position of |j, m> in the highest-first basis order.
        """
        if abs(two_m) > self.two_j or (self.two_j - two_m) % 2:
            raise ValueError(f"2m = {two_m} is not a valid projection for 2j = {self.two_j}")
        return (self.two_j - two_m) // 2

    def __str__(self):
        return str(Fraction(self.two_j, 2))


def jz_matrix(label: AngularMomentumLabel) -> ComplexMatrix:
    m = np.array(label.two_m_values, dtype=float) / 2
    return np.diag(m).astype(np.complex128)


def jplus_matrix(label: AngularMomentumLabel) -> ComplexMatrix:
    two_j = label.two_j
    # <j, m+1| J+ |j, m> for the lower state m of each adjacent pair
    two_m = np.array(label.two_m_values[1:], dtype=float)
    elements = np.sqrt((two_j * (two_j + 2) - two_m * (two_m + 2)) / 4)
    return np.diag(elements, k=1).astype(np.complex128)


def jminus_matrix(label: AngularMomentumLabel) -> ComplexMatrix:
    return jplus_matrix(label).conj().T


def jx_matrix(label: AngularMomentumLabel) -> ComplexMatrix:
    jp = jplus_matrix(label)
    return 0.5 * (jp + jp.conj().T)


def jy_matrix(label: AngularMomentumLabel) -> ComplexMatrix:
    jp = jplus_matrix(label)
    return -0.5j * (jp - jp.conj().T)
